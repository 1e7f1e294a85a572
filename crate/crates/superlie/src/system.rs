//! A generalized root system in exact coordinates: the root set, the
//! bilinear form, reflections, root strings, the distinguished base, and the
//! axiom checker.

use crate::linalg;
use crate::rational::{self, Rat};
use crate::root::Root;
use crate::space::AmbientSpace;
use crate::{Error, Result};
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

/// The α-string through β: `down = m_α⁻(β)`, `up = m_α⁺(β)`. Both count one
/// past the last step that stays inside R, so an isolated β has `(1, 1)`.
/// Zero is never a string point: the string through β along β itself stops
/// at β in both directions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RootString {
    pub down: u32,
    pub up: u32,
}

/// One violated axiom clause with a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub clause: AxiomClause,
    pub detail: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AxiomClause {
    /// R spans a subspace on which the form is non-degenerate.
    SpanNondegenerate,
    /// R = −R and 0 ∉ R.
    NegationClosure,
    /// (β,α∨) ∈ ℤ for real α.
    RealIntegrality,
    /// r_α(β) ∈ R for real α.
    RealReflectionClosure,
    /// Exactly one of β±α ∈ R for isotropic α with (β,α) ≠ 0, and the induced
    /// map is a bijection of R.
    IsotropicReflection,
    /// Base is independent and every root has a uniform-sign integer
    /// decomposition.
    BaseDecomposition,
    /// Stored positive set equals the decomposition-positive set.
    PositivePartition,
    /// Stored parity equals the intrinsic parity rule.
    ParityConsistency,
}

impl fmt::Display for AxiomClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            AxiomClause::SpanNondegenerate => "span-nondegenerate",
            AxiomClause::NegationClosure => "negation-closure",
            AxiomClause::RealIntegrality => "real-integrality",
            AxiomClause::RealReflectionClosure => "real-reflection-closure",
            AxiomClause::IsotropicReflection => "isotropic-reflection",
            AxiomClause::BaseDecomposition => "base-decomposition",
            AxiomClause::PositivePartition => "positive-partition",
            AxiomClause::ParityConsistency => "parity-consistency",
        };
        f.write_str(name)
    }
}

/// Result of `check_axioms`: empty ⇔ valid GRS with valid base.
#[derive(Clone, Debug, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has_clause(&self, clause: AxiomClause) -> bool {
        self.violations.iter().any(|v| v.clause == clause)
    }
}

/// Immutable generalized root system with a distinguished base. All derived
/// tables are computed at construction; every operation afterwards is a pure
/// function, safe to share across threads.
#[derive(Clone, Debug)]
pub struct GrsSystem {
    space: AmbientSpace,
    roots: Vec<Root>,
    index: BTreeMap<Root, usize>,
    base: Vec<usize>,
    base_coords: Vec<Vec<i64>>,
    positive: Vec<bool>,
    height: Vec<i64>,
    isotropic: Vec<bool>,
    parity: Vec<u8>,
    /// Per base index: the normalization κ of the isotropic pairing
    /// κ·(·,αᵢ) used by the operator coefficients (None on real indices).
    iso_scale: Vec<Option<Rat>>,
    family_tag: String,
}

impl GrsSystem {
    /// Builds a system from an explicit root set and base. The roots are
    /// stored in canonical (lexicographic) order. Construction requires that
    /// every root decomposes over the base with integer coefficients of one
    /// sign — axiom conformance beyond that is left to `check_axioms`, so
    /// deliberately broken systems can still be constructed and diagnosed.
    pub fn from_roots(
        space: AmbientSpace,
        roots: Vec<Root>,
        base: Vec<Root>,
        family_tag: String,
    ) -> Result<GrsSystem> {
        let dim = space.dim();
        let mut sorted = roots;
        sorted.sort();
        sorted.dedup();
        if sorted.iter().any(|r| r.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: sorted
                    .iter()
                    .map(Root::dim)
                    .find(|d| *d != dim)
                    .unwrap_or(0),
            });
        }
        if sorted.iter().any(Root::is_zero) {
            return Err(Error::NotARoot("zero vector listed as a root".into()));
        }
        let index: BTreeMap<Root, usize> = sorted
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i))
            .collect();

        let mut base_ids = Vec::with_capacity(base.len());
        for b in &base {
            let id = index
                .get(b)
                .copied()
                .ok_or_else(|| Error::InvalidBase(format!("base root {b:?} not in R")))?;
            base_ids.push(id);
        }

        // decompose every root over the base
        let base_cols: Vec<Vec<Rat>> = base.iter().map(|b| b.coords().to_vec()).collect();
        let mut base_coords = Vec::with_capacity(sorted.len());
        let mut positive = Vec::with_capacity(sorted.len());
        let mut height = Vec::with_capacity(sorted.len());
        for r in &sorted {
            let sol = linalg::solve_unique(&base_cols, r.coords()).ok_or_else(|| {
                Error::InvalidBase(format!("root {r:?} has no unique base decomposition"))
            })?;
            let mut ints = Vec::with_capacity(sol.len());
            for c in &sol {
                match rational::to_i64(c) {
                    Some(k) => ints.push(k),
                    None => {
                        return Err(Error::InvalidBase(format!(
                            "root {r:?} has non-integer coefficient {}",
                            rational::format(c)
                        )))
                    }
                }
            }
            let pos = ints.iter().all(|&k| k >= 0);
            let neg = ints.iter().all(|&k| k <= 0);
            if !pos && !neg {
                return Err(Error::InvalidBase(format!(
                    "root {r:?} has mixed-sign coefficients {ints:?}"
                )));
            }
            height.push(ints.iter().sum());
            positive.push(pos);
            base_coords.push(ints);
        }

        let isotropic: Vec<bool> = sorted.iter().map(|r| space.form(r, r).is_zero()).collect();
        let mut parity = Vec::with_capacity(sorted.len());
        for (i, r) in sorted.iter().enumerate() {
            let doubled = r.add(r);
            let odd = isotropic[i] || index.contains_key(&doubled);
            parity.push(u8::from(odd));
        }

        // normalization of each isotropic simple pairing: along a string
        // γ, γ+αᵢ with both ends real, the generator products force the
        // eigenvalue of [eᵢ,fᵢ] on v_γ to be sgn(γ); matching that against
        // the bilinear value κ·(γ,αᵢ) pins κ. Systems without such strings
        // leave κ free up to rescaling; use −1, which matches the pinned
        // families on their overlap.
        let mut iso_scale: Vec<Option<Rat>> = Vec::with_capacity(base_ids.len());
        for &bid in &base_ids {
            if !isotropic[bid] {
                iso_scale.push(None);
                continue;
            }
            let alpha_i = &sorted[bid];
            let mut kappa: Option<Rat> = None;
            for (gid, gamma) in sorted.iter().enumerate() {
                if isotropic[gid] {
                    continue;
                }
                let val = space.form(gamma, alpha_i);
                if val.is_zero() {
                    continue;
                }
                let up = gamma.add(alpha_i);
                if let Some(uid) = index.get(&up) {
                    if !isotropic[*uid] {
                        let sgn = if positive[gid] { 1 } else { -1 };
                        let k = rational::rat_int(sgn) / val;
                        kappa.get_or_insert(k);
                    }
                }
            }
            iso_scale.push(Some(kappa.unwrap_or_else(|| -rational::one())));
        }

        Ok(GrsSystem {
            space,
            roots: sorted,
            index,
            base: base_ids,
            base_coords,
            positive,
            height,
            isotropic,
            parity,
            iso_scale,
            family_tag,
        })
    }

    pub fn space(&self) -> &AmbientSpace {
        &self.space
    }

    pub fn family_tag(&self) -> &str {
        &self.family_tag
    }

    /// All roots in canonical order.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn root(&self, id: usize) -> &Root {
        &self.roots[id]
    }

    pub fn root_id(&self, r: &Root) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn contains(&self, r: &Root) -> bool {
        self.index.contains_key(r)
    }

    /// Base size (the index set I).
    pub fn base_len(&self) -> usize {
        self.base.len()
    }

    /// Ids of the base roots α₁…α_n in base order.
    pub fn base_ids(&self) -> &[usize] {
        &self.base
    }

    pub fn base_root(&self, i: usize) -> &Root {
        &self.roots[self.base[i]]
    }

    pub fn is_positive_id(&self, id: usize) -> bool {
        self.positive[id]
    }

    pub fn is_isotropic_id(&self, id: usize) -> bool {
        self.isotropic[id]
    }

    pub fn parity_id(&self, id: usize) -> u8 {
        self.parity[id]
    }

    pub fn height_id(&self, id: usize) -> i64 {
        self.height[id]
    }

    pub fn base_coords_id(&self, id: usize) -> &[i64] {
        &self.base_coords[id]
    }

    /// Parity of the base root αᵢ.
    pub fn base_parity(&self, i: usize) -> u8 {
        self.parity[self.base[i]]
    }

    pub fn positive_ids(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.roots.len()).filter(move |&i| self.positive[i])
    }

    /// sgn(α): +1 on R⁺, −1 on R⁻.
    pub fn sgn(&self, id: usize) -> i64 {
        if self.positive[id] {
            1
        } else {
            -1
        }
    }

    // ----- §-level operations -----------------------------------------------

    /// The bilinear form (β, α).
    pub fn pairing(&self, beta: &Root, alpha: &Root) -> Result<Rat> {
        self.space.pairing(beta, alpha)
    }

    /// (β, α∨): `2(β,α)/(α,α)` for real α, `(β,α)` for isotropic α. For real
    /// α and β ∈ R the value must be an integer; a non-integer is reported as
    /// an axiom violation.
    pub fn coroot_pairing(&self, beta: &Root, alpha: &Root) -> Result<Rat> {
        let alpha_id = self
            .root_id(alpha)
            .ok_or_else(|| Error::NotARoot(format!("{alpha:?}")))?;
        let val = self.space.pairing(beta, alpha)?;
        if self.isotropic[alpha_id] {
            return Ok(val);
        }
        let norm = self.space.form(alpha, alpha);
        let out = rational::rat_int(2) * val / norm;
        if self.contains(beta) && !out.is_integer() {
            return Err(Error::AxiomViolation(format!(
                "(β,α∨) = {} not an integer for real α={alpha:?}, β={beta:?}",
                rational::format(&out)
            )));
        }
        Ok(out)
    }

    /// The sign convention for pairings against an isotropic simple root:
    /// 0 when (α, αᵢ) = 0, otherwise sgn(α). This value — not the raw form
    /// value — feeds the operator coefficients.
    pub fn isotropic_simple_pairing(&self, alpha: &Root, i: usize) -> Result<i64> {
        let bid = self.base[i];
        if !self.isotropic[bid] {
            return Err(Error::Contract(format!(
                "base root α_{} is not isotropic",
                i + 1
            )));
        }
        let aid = self
            .root_id(alpha)
            .ok_or_else(|| Error::NotARoot(format!("{alpha:?}")))?;
        let val = self.space.form(alpha, self.base_root(i));
        if val.is_zero() {
            Ok(0)
        } else {
            Ok(self.sgn(aid))
        }
    }

    /// (α, αᵢ∨) as used by the operator coefficients and weights: the
    /// ordinary coroot pairing for real αᵢ; for isotropic αᵢ the scaled form
    /// value κᵢ·(α, αᵢ). Bilinearity in α is essential here — it is what
    /// makes the adjoint action of hᵢ scalar on each root space. On simple
    /// roots the value agrees in sign with the sign convention.
    pub fn simple_coroot_pairing(&self, alpha: &Root, i: usize) -> Result<Rat> {
        let bid = self.base[i];
        if self.isotropic[bid] {
            let kappa = self.iso_scale[i]
                .clone()
                .ok_or_else(|| Error::Contract(format!("no scale for base index {i}")))?;
            Ok(kappa * self.space.pairing(alpha, self.base_root(i))?)
        } else {
            self.coroot_pairing(alpha, self.base_root(i))
        }
    }

    /// κᵢ for an isotropic base index (None on real indices).
    pub fn isotropic_scale(&self, i: usize) -> Option<&Rat> {
        self.iso_scale[i].as_ref()
    }

    /// (is_real, parity) of a root.
    pub fn classify(&self, alpha: &Root) -> Result<(bool, u8)> {
        let id = self
            .root_id(alpha)
            .ok_or_else(|| Error::NotARoot(format!("{alpha:?}")))?;
        Ok((!self.isotropic[id], self.parity[id]))
    }

    /// r_α(β) = β − (β,α∨)α for real α. The result must be a root.
    pub fn real_reflection(&self, alpha: &Root, beta: &Root) -> Result<Root> {
        let aid = self
            .root_id(alpha)
            .ok_or_else(|| Error::NotARoot(format!("{alpha:?}")))?;
        if self.isotropic[aid] {
            return Err(Error::Contract(format!("r_α needs real α, got {alpha:?}")));
        }
        if !self.contains(beta) {
            return Err(Error::NotARoot(format!("{beta:?}")));
        }
        let c = self.coroot_pairing(beta, alpha)?;
        let image = beta.sub(&alpha.scaled(&c));
        if !self.contains(&image) {
            return Err(Error::AxiomViolation(format!(
                "r_α(β) = {image:?} ∉ R for α={alpha:?}, β={beta:?}"
            )));
        }
        Ok(image)
    }

    /// r_α for isotropic α: fixes β when (β,α) = 0, otherwise moves it to the
    /// unique one of β ± α inside R. Both or neither being a root is an axiom
    /// violation.
    pub fn isotropic_reflection(&self, alpha: &Root, beta: &Root) -> Result<Root> {
        let aid = self
            .root_id(alpha)
            .ok_or_else(|| Error::NotARoot(format!("{alpha:?}")))?;
        if !self.isotropic[aid] {
            return Err(Error::Contract(format!(
                "isotropic reflection needs isotropic α, got {alpha:?}"
            )));
        }
        if !self.contains(beta) {
            return Err(Error::NotARoot(format!("{beta:?}")));
        }
        if self.space.form(beta, alpha).is_zero() {
            return Ok(beta.clone());
        }
        let plus = beta.add(alpha);
        let minus = beta.sub(alpha);
        match (self.contains(&plus), self.contains(&minus)) {
            (true, false) => Ok(plus),
            (false, true) => Ok(minus),
            (true, true) => Err(Error::AxiomViolation(format!(
                "both β±α ∈ R for α={alpha:?}, β={beta:?}"
            ))),
            (false, false) => Err(Error::AxiomViolation(format!(
                "neither β±α ∈ R for α={alpha:?}, β={beta:?}"
            ))),
        }
    }

    /// The maximal unbroken α-string through β. Both arguments must be roots
    /// (a zero direction would never terminate).
    pub fn root_string(&self, beta: &Root, alpha: &Root) -> RootString {
        assert!(
            self.contains(beta) && self.contains(alpha),
            "root_string arguments must be roots of the system"
        );
        let mut down = 1u32;
        let mut cur = beta.sub(alpha);
        while self.contains(&cur) {
            down += 1;
            cur = cur.sub(alpha);
        }
        let mut up = 1u32;
        let mut cur = beta.add(alpha);
        while self.contains(&cur) {
            up += 1;
            cur = cur.add(alpha);
        }
        RootString { down, up }
    }

    /// String extents along the base root αᵢ.
    pub fn simple_string(&self, beta: &Root, i: usize) -> RootString {
        self.root_string(beta, self.base_root(i))
    }

    /// Integer coefficients of α over the base Π, all of one sign.
    pub fn decompose_in_base(&self, alpha: &Root) -> Result<Vec<i64>> {
        let id = self
            .root_id(alpha)
            .ok_or_else(|| Error::NotARoot(format!("{alpha:?}")))?;
        Ok(self.base_coords[id].clone())
    }

    /// Looks up a root by its base coefficients.
    pub fn root_by_base_coords(&self, coords: &[i64]) -> Option<usize> {
        // base_coords is small; a linear scan keeps no extra index around
        self.base_coords.iter().position(|c| c.as_slice() == coords)
    }

    // ----- axiom checker ----------------------------------------------------

    /// Checks every GRS axiom clause and the base conditions, reporting all
    /// violations with witnesses. Empty report ⇔ valid system.
    pub fn check_axioms(&self) -> ValidationReport {
        let mut report = ValidationReport::default();

        // span of R carries a non-degenerate restricted form
        let mut span = linalg::Echelon::new();
        let mut span_basis: Vec<&Root> = Vec::new();
        for r in &self.roots {
            if span.insert(&linalg::SparseVec::from_dense(r.coords())) {
                span_basis.push(r);
            }
        }
        let gram_restricted: Vec<Vec<Rat>> = span_basis
            .iter()
            .map(|a| span_basis.iter().map(|b| self.space.form(a, b)).collect())
            .collect();
        if linalg::rank_dense(&gram_restricted) != span_basis.len() {
            report.violations.push(Violation {
                clause: AxiomClause::SpanNondegenerate,
                detail: format!("form restricted to span(R) has rank < {}", span_basis.len()),
            });
        }

        // R = −R
        for r in &self.roots {
            if !self.contains(&r.neg()) {
                report.violations.push(Violation {
                    clause: AxiomClause::NegationClosure,
                    detail: format!("−({r:?}) missing"),
                });
            }
        }

        // axiom (2): integrality and closure under real reflections
        for (aid, alpha) in self.roots.iter().enumerate() {
            if self.isotropic[aid] {
                continue;
            }
            let norm = self.space.form(alpha, alpha);
            for beta in &self.roots {
                let c = rational::rat_int(2) * self.space.form(beta, alpha) / norm.clone();
                if !c.is_integer() {
                    report.violations.push(Violation {
                        clause: AxiomClause::RealIntegrality,
                        detail: format!(
                            "(β,α∨) = {} for α={alpha:?}, β={beta:?}",
                            rational::format(&c)
                        ),
                    });
                    continue;
                }
                let image = beta.sub(&alpha.scaled(&c));
                if !self.contains(&image) {
                    report.violations.push(Violation {
                        clause: AxiomClause::RealReflectionClosure,
                        detail: format!("r_α(β) ∉ R for α={alpha:?}, β={beta:?}"),
                    });
                }
            }
        }

        // axiom (3): isotropic reflections exist, are unambiguous, and induce
        // a bijection
        for (aid, alpha) in self.roots.iter().enumerate() {
            if !self.isotropic[aid] {
                continue;
            }
            let mut images: Vec<Root> = Vec::with_capacity(self.roots.len());
            let mut ok = true;
            for beta in &self.roots {
                if self.space.form(beta, alpha).is_zero() {
                    images.push(beta.clone());
                    continue;
                }
                let plus = beta.add(alpha);
                let minus = beta.sub(alpha);
                match (self.contains(&plus), self.contains(&minus)) {
                    (true, false) => images.push(plus),
                    (false, true) => images.push(minus),
                    (both, _) => {
                        ok = false;
                        report.violations.push(Violation {
                            clause: AxiomClause::IsotropicReflection,
                            detail: format!(
                                "{} of β±α in R for α={alpha:?}, β={beta:?}",
                                if both { "both" } else { "neither" }
                            ),
                        });
                    }
                }
            }
            if ok {
                let mut image_set = images.clone();
                image_set.sort();
                image_set.dedup();
                if image_set.len() != self.roots.len() {
                    report.violations.push(Violation {
                        clause: AxiomClause::IsotropicReflection,
                        detail: format!("r_α not injective for α={alpha:?}"),
                    });
                }
            }
        }

        // base: independent, and the stored decompositions are genuine
        let base_rows: Vec<Vec<Rat>> = self
            .base
            .iter()
            .map(|&id| self.roots[id].coords().to_vec())
            .collect();
        if linalg::rank_dense(&base_rows) != self.base.len() {
            report.violations.push(Violation {
                clause: AxiomClause::BaseDecomposition,
                detail: "base roots are linearly dependent".into(),
            });
        }
        for (id, r) in self.roots.iter().enumerate() {
            let mut recomposed = Root::new(vec![Rat::zero(); self.space.dim()]);
            for (i, &k) in self.base_coords[id].iter().enumerate() {
                recomposed = recomposed.add(&self.base_root(i).scaled(&rational::rat_int(k)));
            }
            if &recomposed != r {
                report.violations.push(Violation {
                    clause: AxiomClause::BaseDecomposition,
                    detail: format!("stored decomposition of {r:?} does not recompose"),
                });
            }
        }

        // positive partition: base-positive ⇔ stored positive, R⁺ ⊔ −R⁺ = R
        for (id, r) in self.roots.iter().enumerate() {
            let pos = self.base_coords[id].iter().all(|&k| k >= 0);
            if pos != self.positive[id] {
                report.violations.push(Violation {
                    clause: AxiomClause::PositivePartition,
                    detail: format!("positivity of {r:?} disagrees with decomposition"),
                });
            }
            if let Some(nid) = self.root_id(&r.neg()) {
                if self.positive[id] == self.positive[nid] {
                    report.violations.push(Violation {
                        clause: AxiomClause::PositivePartition,
                        detail: format!("{r:?} and its negation share a sign"),
                    });
                }
            }
        }

        // parity: odd ⇔ isotropic or real with 2α ∈ R
        for (id, r) in self.roots.iter().enumerate() {
            let odd = self.isotropic[id] || self.contains(&r.add(r));
            if u8::from(odd) != self.parity[id] {
                report.violations.push(Violation {
                    clause: AxiomClause::ParityConsistency,
                    detail: format!("parity of {r:?} disagrees with the intrinsic rule"),
                });
            }
        }

        report
    }
}
