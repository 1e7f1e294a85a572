//! Exhaustive per-instance checks of the combinatorial and algebraic
//! identities underlying the construction, reported lemma by lemma with
//! explicit witnesses for any failure.

use crate::catalog::{self, FamilySpec};
use crate::linalg::SparseVec;
use crate::operators::{self, ChevalleyOps};
use crate::rational::{self, Rat};
use crate::root::Root;
use crate::superalgebra::{self, SuperBasis};
use crate::system::GrsSystem;
use crate::Result;
use num_traits::Zero;

/// One identity checked over one instance.
#[derive(Clone, Debug)]
pub struct LemmaReport {
    pub lemma_id: String,
    pub instance: String,
    pub cases_checked: usize,
    pub failures: Vec<String>,
}

impl LemmaReport {
    fn new(lemma_id: &str, instance: &str) -> LemmaReport {
        LemmaReport {
            lemma_id: lemma_id.to_string(),
            instance: instance.to_string(),
            cases_checked: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Line-oriented rendering, e.g. `L3.1e: pass (cases=24)`.
    pub fn render(&self) -> String {
        if self.passed() {
            format!("{}: pass (cases={})", self.lemma_id, self.cases_checked)
        } else {
            format!(
                "{}: FAIL (cases={}, failures={}) first: {}",
                self.lemma_id,
                self.cases_checked,
                self.failures.len(),
                self.failures.first().map(String::as_str).unwrap_or("")
            )
        }
    }
}

fn describe(sys: &GrsSystem, r: &Root) -> String {
    r.pretty(sys.space().labels())
}

// ----- root-multiple and string lemmas --------------------------------------

/// Scalar-multiple constraints, coroot values and string bounds for pairs of
/// roots: proportionality (isotropic k = ±1, real k ∈ {±1/2, ±1, ±2}),
/// the ∓1/∓2 coroot values, string lengths 2/3, reflection non-orthogonality,
/// and the ≤ 2 bounds.
pub fn verify_string_lemmas(sys: &GrsSystem) -> Vec<LemmaReport> {
    let tag = sys.family_tag().to_string();
    let mut l21 = LemmaReport::new("L2.1", &tag);
    let mut l22 = LemmaReport::new("L2.2", &tag);
    let mut l23 = LemmaReport::new("L2.3", &tag);
    let mut c24 = LemmaReport::new("C2.4", &tag);
    let mut l25 = LemmaReport::new("L2.5", &tag);
    let mut l26 = LemmaReport::new("L2.6", &tag);
    let mut l27 = LemmaReport::new("L2.7", &tag);

    let half = rational::rat(1, 2);
    let one = rational::one();
    let two = rational::rat_int(2);

    for aid in 0..sys.len() {
        let alpha = sys.root(aid).clone();
        let alpha_iso = sys.is_isotropic_id(aid);

        for bid in 0..sys.len() {
            let beta = sys.root(bid).clone();

            // multiples of α inside R
            if let Some(k) = beta.ratio_to(&alpha) {
                if alpha_iso {
                    l21.cases_checked += 1;
                    if k != one && k != -one.clone() {
                        l21.failures.push(format!(
                            "{} = {}·{}",
                            describe(sys, &beta),
                            rational::format(&k),
                            describe(sys, &alpha)
                        ));
                    }
                } else {
                    l22.cases_checked += 1;
                    let ok = [&half, &one, &two]
                        .iter()
                        .any(|m| k == **m || k == -(*m).clone());
                    if !ok {
                        l22.failures.push(format!(
                            "{} = {}·{}",
                            describe(sys, &beta),
                            rational::format(&k),
                            describe(sys, &alpha)
                        ));
                    }
                }
            }

            let pair = sys.space().form(&beta, &alpha);

            // α isotropic, β real, (β,α) ≠ 0
            if alpha_iso && !sys.is_isotropic_id(bid) && !pair.is_zero() {
                for s in [1i64, -1] {
                    let shifted = if s == 1 {
                        beta.add(&alpha)
                    } else {
                        beta.sub(&alpha)
                    };
                    let Some(sid) = sys.root_id(&shifted) else {
                        continue;
                    };
                    let coroot = sys.coroot_pairing(&alpha, &beta).unwrap();
                    let expected =
                        rational::rat_int(-s) * if sys.is_isotropic_id(sid) { &one } else { &two };
                    l23.cases_checked += 1;
                    if coroot != expected {
                        l23.failures.push(format!(
                            "(α,β∨) = {} for α={}, β={}, β{}α",
                            rational::format(&coroot),
                            describe(sys, &alpha),
                            describe(sys, &beta),
                            if s == 1 { "+" } else { "−" }
                        ));
                    }

                    // β-string through α bound: 2 when the shift stays
                    // isotropic, 3 when it turns real
                    let string = sys.root_string(&alpha, &beta);
                    let m = if s == 1 { string.up } else { string.down };
                    let want = if sys.is_isotropic_id(sid) { 2 } else { 3 };
                    c24.cases_checked += 1;
                    if m != want {
                        c24.failures.push(format!(
                            "m_β^{}(α) = {m}, expected {want} for α={}, β={}",
                            if s == 1 { "+" } else { "−" },
                            describe(sys, &alpha),
                            describe(sys, &beta)
                        ));
                    }
                }

                // L2.7: the α-string through β stays within length 2
                let string = sys.root_string(&beta, &alpha);
                l27.cases_checked += 1;
                if string.down > 2 || string.up > 2 {
                    l27.failures.push(format!(
                        "m_α^±(β) = ({},{}) for α={}, β={}",
                        string.down,
                        string.up,
                        describe(sys, &alpha),
                        describe(sys, &beta)
                    ));
                }
            }

            // L2.5: isotropic reflections never land orthogonal
            if alpha_iso && !pair.is_zero() {
                let image = sys.isotropic_reflection(&alpha, &beta);
                l25.cases_checked += 1;
                match image {
                    Err(e) => l25
                        .failures
                        .push(format!("r_α undefined at β={}: {e}", describe(sys, &beta))),
                    Ok(img) => {
                        if sys.space().form(&img, &alpha).is_zero() {
                            l25.failures.push(format!(
                                "(r_α(β),α) = 0 for α={}, β={}",
                                describe(sys, &alpha),
                                describe(sys, &beta)
                            ));
                        }
                        if sys.is_isotropic_id(bid) {
                            if sys.space().form(&img, &img).is_zero() {
                                l25.failures.push(format!(
                                    "r_α(β) isotropic for α={}, β={}",
                                    describe(sys, &alpha),
                                    describe(sys, &beta)
                                ));
                            }
                            if sys.space().form(&img, &beta).is_zero() {
                                l25.failures.push(format!(
                                    "(r_α(β),β) = 0 for α={}, β={}",
                                    describe(sys, &alpha),
                                    describe(sys, &beta)
                                ));
                            }
                        }
                    }
                }
            }

            // L2.6: isotropic pair with (α,β) ≠ 0
            if alpha_iso && sys.is_isotropic_id(bid) && !pair.is_zero() {
                l26.cases_checked += 1;
                // multiples β + kα stay within k = ±1
                for gid in 0..sys.len() {
                    let gamma = sys.root(gid);
                    let diff = gamma.sub(&beta);
                    if let Some(k) = diff.ratio_to(&alpha) {
                        if !k.is_zero() && k != one && k != -one.clone() {
                            l26.failures.push(format!(
                                "β+kα ∈ R with k={} for α={}, β={}",
                                rational::format(&k),
                                describe(sys, &alpha),
                                describe(sys, &beta)
                            ));
                        }
                    }
                }
                // exactly one of β ± α is a root
                let plus = sys.contains(&beta.add(&alpha));
                let minus = sys.contains(&beta.sub(&alpha));
                if plus == minus {
                    l26.failures.push(format!(
                        "{} of β±α in R for α={}, β={}",
                        if plus { "both" } else { "neither" },
                        describe(sys, &alpha),
                        describe(sys, &beta)
                    ));
                }
                // symmetric string data, bounded by 2
                let ab = sys.root_string(&beta, &alpha);
                let ba = sys.root_string(&alpha, &beta);
                if ab.up != ba.up || ab.down != ba.down || ab.up > 2 || ab.down > 2 {
                    l26.failures.push(format!(
                        "string data ({},{}) vs ({},{}) for α={}, β={}",
                        ab.down,
                        ab.up,
                        ba.down,
                        ba.up,
                        describe(sys, &alpha),
                        describe(sys, &beta)
                    ));
                }
            }
        }
    }

    vec![l21, l22, l23, c24, l25, l26, l27]
}

/// Admissible square contexts: (α, i, j) with i ≠ j, α ∉ {±α_i, ±α_j} and
/// α + α_i − α_j ∈ R.
pub(crate) fn square_contexts(sys: &GrsSystem) -> Vec<(usize, usize, usize)> {
    let n = sys.base_len();
    let mut out = Vec::new();
    for aid in 0..sys.len() {
        let alpha = sys.root(aid);
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let ai = sys.base_root(i);
                let aj = sys.base_root(j);
                if alpha == ai || alpha == aj || *alpha == ai.neg() || *alpha == aj.neg() {
                    continue;
                }
                let corner = alpha.add(ai).sub(aj);
                if sys.contains(&corner) {
                    out.push((aid, i, j));
                }
            }
        }
    }
    out
}

/// The complete-square family of identities: the square lemma itself, its
/// two parity corollaries, and the string-multiplicity identities.
pub fn verify_square_lemmas(sys: &GrsSystem) -> Vec<LemmaReport> {
    let tag = sys.family_tag().to_string();
    let mut l29 = LemmaReport::new("L2.9", &tag);
    let mut c210 = LemmaReport::new("C2.10", &tag);
    let mut c211 = LemmaReport::new("C2.11", &tag);
    let mut l212 = LemmaReport::new("L2.12", &tag);
    let mut l213 = LemmaReport::new("L2.13", &tag);
    let mut l214 = LemmaReport::new("L2.14", &tag);

    for (aid, i, j) in square_contexts(sys) {
        let alpha = sys.root(aid).clone();
        let ai = sys.base_root(i).clone();
        let aj = sys.base_root(j).clone();
        let up = alpha.add(&ai);
        let down = alpha.sub(&aj);
        let up_in = sys.root_id(&up);
        let down_in = sys.root_id(&down);

        let witness = || {
            format!(
                "α={}, α_{}={}, α_{}={}",
                describe(sys, &alpha),
                i + 1,
                describe(sys, &ai),
                j + 1,
                describe(sys, &aj)
            )
        };

        l29.cases_checked += 1;
        if up_in.is_some() != down_in.is_some() {
            l29.failures
                .push(format!("α+α_i ∈ R xor α−α_j ∈ R at {}", witness()));
        }

        let ai_real = !sys.is_isotropic_id(sys.base_ids()[i]);
        let aj_real = !sys.is_isotropic_id(sys.base_ids()[j]);
        let alpha_real = !sys.is_isotropic_id(aid);
        let alpha_odd = sys.parity_id(aid) == 1;

        if ai_real && aj_real && alpha_real {
            c210.cases_checked += 1;
            if let (Some(u), Some(d)) = (up_in, down_in) {
                if sys.is_isotropic_id(u) && sys.is_isotropic_id(d) {
                    c210.failures
                        .push(format!("both shifts isotropic at {}", witness()));
                }
            }
        }

        if ai_real && aj_real && alpha_odd {
            c211.cases_checked += 1;
            if let (Some(u), Some(d)) = (up_in, down_in) {
                if !sys.is_isotropic_id(u) && !sys.is_isotropic_id(d) {
                    c211.failures
                        .push(format!("both shifts real at {}", witness()));
                }
            }
        }

        if ai_real && aj_real && alpha_odd && up_in.is_some() && down_in.is_some() {
            l212.cases_checked += 1;
            let lhs = u64::from(sys.simple_string(&alpha, i).down)
                * u64::from(sys.simple_string(&up, j).up);
            let rhs = u64::from(sys.simple_string(&alpha, j).up)
                * u64::from(sys.simple_string(&down, i).down);
            if lhs != rhs {
                l212.failures
                    .push(format!("{lhs} ≠ {rhs} at {}", witness()));
            }
        }

        if ai_real && !aj_real && alpha_real && down_in.is_some() {
            l213.cases_checked += 1;
            let lhs = sys.simple_string(&down, i).down;
            let rhs = sys.simple_string(&alpha, i).down;
            if lhs != rhs {
                l213.failures
                    .push(format!("{lhs} ≠ {rhs} at {}", witness()));
            }
        }

        if ai_real && !aj_real && !alpha_real && down_in.is_some() {
            l214.cases_checked += 1;
            let got = sys.simple_string(&down, i).down;
            if got != 1 {
                l214.failures
                    .push(format!("m_i^−(α−α_j) = {got} at {}", witness()));
            }
        }
    }

    vec![l29, c210, c211, l212, l213, l214]
}

// ----- operator relations ----------------------------------------------------

/// The generator relations and the ω conjugation identities, as exact matrix
/// identities.
pub fn verify_operator_relations(sys: &GrsSystem) -> Result<Vec<LemmaReport>> {
    let ops = operators::build_all(sys)?;
    Ok(verify_operator_relations_on(sys, &ops))
}

/// Same checks against caller-supplied operators (used for fault injection).
pub fn verify_operator_relations_on(sys: &GrsSystem, ops: &ChevalleyOps) -> Vec<LemmaReport> {
    let tag = sys.family_tag().to_string();
    let n = sys.base_len();
    let module = crate::superspace::ModuleBasis::from_system(sys);

    let mut a = LemmaReport::new("L3.1a", &tag);
    for i in 0..n {
        let deg = sys.base_parity(i);
        a.cases_checked += 3;
        if ops.e[i].degree() != deg || !ops.e[i].is_homogeneous(&module) {
            a.failures
                .push(format!("e_{} not homogeneous of degree {deg}", i + 1));
        }
        if ops.f[i].degree() != deg || !ops.f[i].is_homogeneous(&module) {
            a.failures
                .push(format!("f_{} not homogeneous of degree {deg}", i + 1));
        }
        if ops.h[i].degree() != 0 || !ops.h[i].is_homogeneous(&module) {
            a.failures
                .push(format!("h_{} not homogeneous of degree 0", i + 1));
        }
    }

    let mut b = LemmaReport::new("L3.1b", &tag);
    for i in 0..n {
        for j in 0..n {
            b.cases_checked += 1;
            if !operators::super_commutator(&ops.h[i], &ops.h[j]).is_zero() {
                b.failures.push(format!("[h_{},h_{}] ≠ 0", i + 1, j + 1));
            }
        }
    }

    let mut c = LemmaReport::new("L3.1c", &tag);
    let mut d = LemmaReport::new("L3.1d", &tag);
    for i in 0..n {
        for j in 0..n {
            let pairing = sys
                .simple_coroot_pairing(sys.base_root(j), i)
                .expect("base roots pair");
            c.cases_checked += 1;
            let lhs = operators::super_commutator(&ops.h[i], &ops.e[j]);
            if lhs != ops.e[j].scale(&pairing) {
                c.failures.push(format!(
                    "[h_{},e_{}] ≠ (α_{},α_{}∨)e_{}",
                    i + 1,
                    j + 1,
                    j + 1,
                    i + 1,
                    j + 1
                ));
            }
            d.cases_checked += 1;
            let lhs = operators::super_commutator(&ops.h[i], &ops.f[j]);
            if lhs != ops.f[j].scale(&-pairing.clone()) {
                d.failures.push(format!(
                    "[h_{},f_{}] ≠ −(α_{},α_{}∨)f_{}",
                    i + 1,
                    j + 1,
                    j + 1,
                    i + 1,
                    j + 1
                ));
            }
        }
    }

    let mut e = LemmaReport::new("L3.1e", &tag);
    for i in 0..n {
        e.cases_checked += 1;
        if operators::super_commutator(&ops.e[i], &ops.f[i]) != ops.h[i] {
            e.failures
                .push(format!("[e_{},f_{}] ≠ h_{}", i + 1, i + 1, i + 1));
        }
    }

    let mut f = LemmaReport::new("L3.1f", &tag);
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            f.cases_checked += 1;
            if !operators::super_commutator(&ops.e[i], &ops.f[j]).is_zero() {
                f.failures.push(format!("[e_{},f_{}] ≠ 0", i + 1, j + 1));
            }
        }
    }

    let mut w = LemmaReport::new("L3.8", &tag);
    for i in 0..n {
        w.cases_checked += 3;
        let conj_e = operators::conjugate_by_omega(ops, &ops.e[i]);
        if conj_e != ops.f[i].neg() {
            w.failures.push(format!("ω e_{} ω⁻¹ ≠ −f_{}", i + 1, i + 1));
        }
        let conj_f = operators::conjugate_by_omega(ops, &ops.f[i]);
        let expect = if sys.base_parity(i) == 1 {
            ops.e[i].clone()
        } else {
            ops.e[i].neg()
        };
        if conj_f != expect {
            w.failures
                .push(format!("ω f_{} ω⁻¹ ≠ −(−1)^ī e_{}", i + 1, i + 1));
        }
        let conj_h = operators::conjugate_by_omega(ops, &ops.h[i]);
        if conj_h != ops.h[i].neg() {
            w.failures.push(format!("ω h_{} ω⁻¹ ≠ −h_{}", i + 1, i + 1));
        }
    }

    vec![a, b, c, d, e, f, w]
}

// ----- generated-algebra checks ----------------------------------------------

/// End-to-end checks on the generated algebra: weight containment,
/// triangular decomposition, one-dimensional root spaces, the ω̃ conjugation
/// automorphism, faithfulness, the graded bracket identities, submodule
/// generation and simplicity, plus the dimension count.
pub fn verify_algebra(sys: &GrsSystem) -> Result<Vec<LemmaReport>> {
    let basis = superalgebra::generate(sys)?;
    verify_algebra_on(sys, &basis)
}

pub fn verify_algebra_on(sys: &GrsSystem, basis: &SuperBasis) -> Result<Vec<LemmaReport>> {
    let tag = sys.family_tag().to_string();
    let n = sys.base_len();
    let mut reports = Vec::new();

    // dimension
    let mut dims = LemmaReport::new("L4.dim", &tag);
    dims.cases_checked = 1;
    let expected = sys.len() + n;
    if basis.dim() != expected {
        dims.failures.push(format!(
            "dim 𝔤 = {}, expected |R|+|Π| = {expected}",
            basis.dim()
        ));
    }
    reports.push(dims);

    // weight containment for the generated monomials
    let mut l41 = LemmaReport::new("L4.1", &tag);
    for (k, elem) in basis.elements.iter().enumerate() {
        l41.cases_checked += 1;
        let pos = elem.weight.iter().all(|&x| x >= 0);
        let neg = elem.weight.iter().all(|&x| x <= 0);
        if !pos && !neg {
            l41.failures.push(format!(
                "element {k} has mixed-sign weight {:?}",
                elem.weight
            ));
        }
    }
    reports.push(l41);

    // triangular decomposition
    let mut l42 = LemmaReport::new("L4.2", &tag);
    let (nm, h, np) = superalgebra::triangular_decomposition(basis);
    let pos_count = sys.positive_ids().count();
    l42.cases_checked = 1;
    if h.len() != n || np.len() != pos_count || nm.len() != pos_count {
        l42.failures.push(format!(
            "dims (𝔫⁻,𝔥,𝔫⁺) = ({},{},{}), expected ({pos_count},{n},{pos_count})",
            nm.len(),
            h.len(),
            np.len()
        ));
    }
    // generators land in the right pieces
    for i in 0..n {
        let mut unit = vec![0i64; n];
        unit[i] = 1;
        if !np.iter().any(|&k| basis.elements[k].weight == unit) {
            l42.failures.push(format!("e_{} missing from 𝔫⁺", i + 1));
        }
        let neg_unit: Vec<i64> = unit.iter().map(|x| -x).collect();
        if !nm.iter().any(|&k| basis.elements[k].weight == neg_unit) {
            l42.failures.push(format!("f_{} missing from 𝔫⁻", i + 1));
        }
    }
    reports.push(l42);

    // root spaces: 𝔥 = 𝔤⁰ of dim |Π| and dim 𝔤^α = 1
    let mut l43 = LemmaReport::new("L4.3", &tag);
    let spaces = superalgebra::root_space_decomposition(sys, basis)?;
    l43.cases_checked = 1 + sys.len();
    if spaces.cartan.len() != n {
        l43.failures
            .push(format!("dim 𝔤⁰ = {}, expected {n}", spaces.cartan.len()));
    }
    for id in 0..sys.len() {
        let w = sys.base_coords_id(id).to_vec();
        match spaces.by_weight.get(&w) {
            Some(v) if v.len() == 1 => {}
            Some(v) => l43.failures.push(format!(
                "dim 𝔤^α = {} for α={}",
                v.len(),
                describe(sys, sys.root(id))
            )),
            None => l43.failures.push(format!(
                "no root space for α={}",
                describe(sys, sys.root(id))
            )),
        }
    }
    for w in spaces.by_weight.keys() {
        if sys.root_by_base_coords(w).is_none() {
            l43.failures
                .push(format!("weight {w:?} is not a root of the system"));
        }
    }
    reports.push(l43);

    // structure table, super-antisymmetry, Jacobi, weight grading
    let table = superalgebra::structure_constants(sys, basis)?;
    let mut tbl = LemmaReport::new("L4.tbl", &tag);
    tbl.cases_checked = table.dim * table.dim * (table.dim + 1);
    tbl.failures.extend(table.check_super_antisymmetry());
    tbl.failures.extend(table.check_super_jacobi());
    tbl.failures.extend(table.check_weight_additivity());
    reports.push(tbl);

    // ω̃: squares to the grading involution, fourth power is the identity
    let mut r44 = LemmaReport::new("R4.4", &tag);
    r44.cases_checked = basis.dim();
    match superalgebra::omega_tilde(basis) {
        Err(e) => r44.failures.push(format!("ω̃ not defined on 𝔤: {e}")),
        Ok(mat) => {
            let sq = superalgebra::mat_mul(&mat, &mat);
            for (j, col) in sq.iter().enumerate() {
                let want = if basis.elements[j].parity == 0 {
                    rational::one()
                } else {
                    -rational::one()
                };
                for (i, v) in col.iter().enumerate() {
                    let expect = if i == j { want.clone() } else { Rat::zero() };
                    if *v != expect {
                        r44.failures.push(format!("ω̃² wrong at ({i},{j})"));
                    }
                }
            }
            let fourth = superalgebra::mat_mul(&sq, &sq);
            for (j, col) in fourth.iter().enumerate() {
                for (i, v) in col.iter().enumerate() {
                    let expect = if i == j { rational::one() } else { Rat::zero() };
                    if *v != expect {
                        r44.failures.push(format!("ω̃⁴ ≠ id at ({i},{j})"));
                    }
                }
            }
        }
    }
    reports.push(r44);

    // graded bracket relations and faithfulness
    let rel = superalgebra::check_bracket_relations(&table);
    let mut r47 = LemmaReport::new("R4.7", &tag);
    r47.cases_checked = rel.odd_dim * rel.odd_dim;
    if !rel.odd_generates_even() {
        r47.failures.push(format!(
            "dim [𝔤₁,𝔤₁] = {}, expected {}",
            rel.odd_bracket_rank, rel.even_dim
        ));
    }
    reports.push(r47);

    let mut l48 = LemmaReport::new("L4.8", &tag);
    l48.cases_checked = rel.even_dim * rel.odd_dim;
    if !rel.even_acts_onto_odd() {
        l48.failures.push(format!(
            "dim [𝔤₀,𝔤₁] = {}, expected {}",
            rel.mixed_bracket_rank, rel.odd_dim
        ));
    }
    reports.push(l48);

    let mut l45 = LemmaReport::new("L4.5", &tag);
    l45.cases_checked = rel.even_dim;
    if !rel.faithful {
        l45.failures
            .push("𝔤₀ acts on 𝔤₁ with nonzero kernel".to_string());
    }
    reports.push(l45);

    // every odd root vector generates, as a 𝔤₀-submodule, something whose
    // bracket with 𝔤₁ is all of 𝔤₀
    let mut l46 = LemmaReport::new("L4.6", &tag);
    let even = table.even_indices();
    let odd = table.odd_indices();
    for &x in &odd {
        l46.cases_checked += 1;
        let mut submodule = crate::linalg::Echelon::new();
        let mut queue = vec![SparseVec::unit(x)];
        submodule.insert(&queue[0]);
        while let Some(v) = queue.pop() {
            for &g in &even {
                let w = table.bracket_left(g, &v);
                if !w.is_zero() && submodule.insert(&w) {
                    queue.push(w);
                }
            }
        }
        let mut image = crate::linalg::Echelon::new();
        for &y in &odd {
            for row in submodule.rows() {
                let w = table.bracket_left(y, row);
                image.insert(&w);
            }
        }
        if image.rank() != even.len() {
            l46.failures.push(format!(
                "[𝔤₁, submodule of x_{x}] has dim {} ≠ {}",
                image.rank(),
                even.len()
            ));
        }
    }
    reports.push(l46);

    // simplicity: every basis element generates the whole algebra as an ideal
    let mut l49 = LemmaReport::new("L4.9", &tag);
    l49.cases_checked = table.dim;
    for k in 0..table.dim {
        let closure = table.ideal_closure(k);
        if closure.rank() != table.dim {
            l49.failures.push(format!(
                "ideal from {} has dim {} ≠ {}",
                table.labels[k],
                closure.rank(),
                table.dim
            ));
        }
    }
    if !table.is_simple() {
        l49.failures.push("is_simple returned false".to_string());
    }
    reports.push(l49);

    Ok(reports)
}

/// Runs the full battery on one instance.
pub fn verify_instance(spec: &FamilySpec) -> Result<Vec<LemmaReport>> {
    let sys = catalog::build(spec)?;
    let mut reports = Vec::new();

    let axioms = sys.check_axioms();
    let mut ax = LemmaReport::new("axioms", &spec.label());
    ax.cases_checked = sys.len();
    ax.failures.extend(
        axioms
            .violations
            .iter()
            .map(|v| format!("{}: {}", v.clause, v.detail)),
    );
    reports.push(ax);

    reports.extend(verify_string_lemmas(&sys));
    reports.extend(verify_square_lemmas(&sys));
    reports.extend(verify_operator_relations(&sys)?);
    reports.extend(verify_algebra(&sys)?);
    Ok(reports)
}

/// Runs the default instance set; reports are ordered by instance then
/// lemma, regardless of how the work is scheduled.
pub fn verify_default_set() -> Result<Vec<LemmaReport>> {
    let mut reports = Vec::new();
    for spec in catalog::default_instances() {
        reports.extend(verify_instance(&spec)?);
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root::Root;

    fn get<'a>(reports: &'a [LemmaReport], id: &str) -> &'a LemmaReport {
        reports.iter().find(|r| r.lemma_id == id).unwrap()
    }

    #[test]
    fn string_lemmas_pass_on_b22() {
        let sys = catalog::build(&FamilySpec::B { m: 2, n: 2 }).unwrap();
        for r in verify_string_lemmas(&sys) {
            assert!(r.passed(), "{}", r.render());
            assert!(r.cases_checked > 0, "{} vacuous", r.lemma_id);
        }
    }

    #[test]
    fn string_length_three_witness_exists_in_b11() {
        // the ε₁-string through δ₁−ε₁ reaches δ₁+ε₁: a length-3 string whose
        // bound comes from the real-root case
        let sys = catalog::build(&FamilySpec::B { m: 1, n: 1 }).unwrap();
        let beta = Root::from_ints(&[-1, 1]);
        let eps = Root::from_ints(&[1, 0]);
        let s = sys.root_string(&beta, &eps);
        assert_eq!((s.down, s.up), (1, 3));
        let reports = verify_string_lemmas(&sys);
        assert!(get(&reports, "C2.4").cases_checked > 0);
        assert!(get(&reports, "C2.4").passed());
    }

    #[test]
    fn square_context_filter_on_hand_picked_roots() {
        // A(2,1): base (ε₁−ε₂, ε₂−ε₃, ε₃−δ₁, δ₁−δ₂); the square at
        // α = ε₁−ε₃ with i = 3 (iso), j = 1: α+α₃ = ε₁−δ₁, α−α₁ = ε₂−ε₃,
        // α+α₃−α₁ = ε₂−δ₁ — all roots, so the tuple must be admissible
        let sys = catalog::build(&FamilySpec::A { m: 2, n: 1 }).unwrap();
        let contexts = square_contexts(&sys);
        let alpha_id = sys.root_id(&Root::from_ints(&[1, 0, -1, 0, 0])).unwrap();
        assert!(contexts.contains(&(alpha_id, 2, 0)));
        // every admissible tuple respects the exclusion rules
        for (aid, i, j) in &contexts {
            let alpha = sys.root(*aid);
            let corner = alpha.add(sys.base_root(*i)).sub(sys.base_root(*j));
            assert!(sys.contains(&corner));
            assert_ne!(i, j);
            assert_ne!(alpha, sys.base_root(*i));
            assert_ne!(alpha, sys.base_root(*j));
            assert_ne!(*alpha, sys.base_root(*i).neg());
            assert_ne!(*alpha, sys.base_root(*j).neg());
        }
        // α = α_j is excluded even when the corner is a root: ε₂−ε₃ = α₂
        // with i = 3, j = 2 has corner ε₂−δ₁ ∈ R but must not appear
        let a2_id = sys.root_id(&Root::from_ints(&[0, 1, -1, 0, 0])).unwrap();
        assert!(!contexts.contains(&(a2_id, 2, 1)));
    }

    #[test]
    fn square_lemmas_pass_on_a21_and_b21() {
        for spec in [FamilySpec::A { m: 2, n: 1 }, FamilySpec::B { m: 2, n: 1 }] {
            let sys = catalog::build(&spec).unwrap();
            for r in verify_square_lemmas(&sys) {
                assert!(r.passed(), "{} {}", spec.label(), r.render());
            }
        }
    }

    #[test]
    fn lemma_2_12_values_stay_in_the_expected_set() {
        let mut seen = Vec::new();
        for spec in [
            FamilySpec::B { m: 2, n: 1 },
            FamilySpec::B { m: 2, n: 2 },
            FamilySpec::G3,
        ] {
            let sys = catalog::build(&spec).unwrap();
            for (aid, i, j) in square_contexts(&sys) {
                let alpha = sys.root(aid).clone();
                if sys.parity_id(aid) == 0
                    || sys.is_isotropic_id(sys.base_ids()[i])
                    || sys.is_isotropic_id(sys.base_ids()[j])
                {
                    continue;
                }
                let up = alpha.add(sys.base_root(i));
                if !sys.contains(&up) || !sys.contains(&alpha.sub(sys.base_root(j))) {
                    continue;
                }
                let lhs = u64::from(sys.simple_string(&alpha, i).down)
                    * u64::from(sys.simple_string(&up, j).up);
                seen.push(lhs);
            }
        }
        assert!(!seen.is_empty());
        assert!(seen.iter().all(|v| [1, 2, 3, 4, 6].contains(v)), "{seen:?}");
    }

    #[test]
    fn g3_has_no_c211_counterexample() {
        // the only families with real odd roots are B(m,n) and G(3); in G(3)
        // no admissible (α, i, j) triple exists at all, which is exactly the
        // no-counterexample statement
        let sys = catalog::build(&FamilySpec::G3).unwrap();
        let reports = verify_square_lemmas(&sys);
        let c211 = get(&reports, "C2.11");
        assert!(c211.passed());
        assert_eq!(c211.cases_checked, 0);
        // the hypothesis set is inhabited elsewhere in the suite
        let sys = catalog::build(&FamilySpec::B { m: 2, n: 2 }).unwrap();
        let c211_b = verify_square_lemmas(&sys)
            .into_iter()
            .find(|r| r.lemma_id == "C2.11")
            .unwrap();
        assert!(c211_b.cases_checked > 0 && c211_b.passed());
    }

    #[test]
    fn operator_relations_pass_and_fault_is_caught() {
        let sys = catalog::build(&FamilySpec::B { m: 2, n: 1 }).unwrap();
        let reports = verify_operator_relations(&sys).unwrap();
        assert!(reports.iter().all(LemmaReport::passed));
        let mut ops = operators::build_all(&sys).unwrap();
        let iso = (0..sys.base_len())
            .find(|&k| sys.is_isotropic_id(sys.base_ids()[k]))
            .unwrap();
        ops.e[iso] = operators::build_e_with_sign_fault(&sys, iso).unwrap();
        let broken = verify_operator_relations_on(&sys, &ops);
        assert!(broken.iter().any(|r| !r.passed()));
    }

    #[test]
    fn verify_instance_reports_are_labeled() {
        let spec = FamilySpec::B { m: 1, n: 1 };
        let reports = verify_instance(&spec).unwrap();
        assert!(reports.iter().all(|r| r.instance == "B(1,1)"));
        assert!(reports.iter().any(|r| r.lemma_id == "L3.1e" && r.passed()));
        assert!(reports.iter().any(|r| r.lemma_id == "axioms" && r.passed()));
        let rendered = get(&reports, "L3.1e").render();
        assert!(rendered.contains("L3.1e: pass"));
    }
}
