//! Chevalley-type generators e_i, f_i, h_i and the involution ω on the
//! superspace M, as exact sparse matrices.
//!
//! Coefficient dispatch for e_i(v_α) (and mirrored for f_i): the case
//! α = ∓α_i is tested first, then α ± α_i ∉ R, then the real branch, then
//! the isotropic branch, making the four cases mutually exclusive and total.
//! Every pairing against an isotropic simple root is the scaled bilinear
//! value from `GrsSystem::simple_coroot_pairing`; bilinearity in α is what
//! makes ad(h_i) act on each generator by a single scalar, and the per-system
//! scale κ is pinned so that [e_i, f_i] = h_i comes out exactly.

use crate::linalg::SparseVec;
use crate::rational::{self, Rat};
use crate::superspace::ModuleBasis;
use crate::system::GrsSystem;
use crate::Result;
use num_traits::Zero;

/// A homogeneous linear map on M, stored column-sparse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseOperator {
    dim: usize,
    degree: u8,
    cols: Vec<Vec<(usize, Rat)>>,
}

impl SparseOperator {
    pub fn zero(dim: usize, degree: u8) -> SparseOperator {
        SparseOperator {
            dim,
            degree,
            cols: vec![Vec::new(); dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> u8 {
        self.degree
    }

    pub fn col(&self, c: usize) -> &[(usize, Rat)] {
        &self.cols[c]
    }

    fn set_col(&mut self, c: usize, mut entries: Vec<(usize, Rat)>) {
        entries.retain(|(_, v)| !v.is_zero());
        entries.sort_by_key(|(r, _)| *r);
        self.cols[c] = entries;
    }

    pub fn entry(&self, row: usize, col: usize) -> Rat {
        self.cols[col]
            .iter()
            .find(|(r, _)| *r == row)
            .map(|(_, v)| v.clone())
            .unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn neg(&self) -> SparseOperator {
        self.scale(&-rational::one())
    }

    pub fn scale(&self, k: &Rat) -> SparseOperator {
        if k.is_zero() {
            return SparseOperator::zero(self.dim, self.degree);
        }
        SparseOperator {
            dim: self.dim,
            degree: self.degree,
            cols: self
                .cols
                .iter()
                .map(|col| col.iter().map(|(r, v)| (*r, v * k)).collect())
                .collect(),
        }
    }

    /// Sum; both operands must share dimension and degree.
    pub fn add(&self, other: &SparseOperator) -> SparseOperator {
        assert_eq!(self.dim, other.dim);
        assert_eq!(self.degree, other.degree, "sum of non-homogeneous degrees");
        let mut out = SparseOperator::zero(self.dim, self.degree);
        for c in 0..self.dim {
            let merged = SparseVec::from_entries(
                self.cols[c]
                    .iter()
                    .chain(other.cols[c].iter())
                    .cloned()
                    .collect(),
            );
            out.cols[c] = merged.entries;
        }
        out
    }

    pub fn sub(&self, other: &SparseOperator) -> SparseOperator {
        self.add(&other.neg())
    }

    /// Composition self ∘ other.
    pub fn compose(&self, other: &SparseOperator) -> SparseOperator {
        assert_eq!(self.dim, other.dim);
        let mut out = SparseOperator::zero(self.dim, (self.degree + other.degree) % 2);
        for c in 0..self.dim {
            let mut acc: Vec<(usize, Rat)> = Vec::new();
            for (mid, v) in &other.cols[c] {
                for (r, w) in &self.cols[*mid] {
                    acc.push((*r, v * w));
                }
            }
            out.set_col(c, SparseVec::from_entries(acc).entries);
        }
        out
    }

    /// Applies the operator to a vector in slot coordinates.
    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut acc: Vec<(usize, Rat)> = Vec::new();
        for (c, coeff) in &v.entries {
            for (r, w) in &self.cols[*c] {
                acc.push((*r, coeff * w));
            }
        }
        SparseVec::from_entries(acc)
    }

    /// Column-major flattening (index = col·dim + row), for echelonization.
    pub fn flatten(&self) -> SparseVec {
        let mut entries = Vec::with_capacity(self.nnz());
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                entries.push((c * self.dim + r, v.clone()));
            }
        }
        SparseVec { entries }
    }

    /// Degree-homogeneity against the module parities.
    pub fn is_homogeneous(&self, m: &ModuleBasis) -> bool {
        self.cols.iter().enumerate().all(|(c, col)| {
            col.iter()
                .all(|(r, _)| m.slot_parity(*r) == (m.slot_parity(c) + self.degree) % 2)
        })
    }
}

/// Super commutator [x, y] = x∘y − (−1)^{x̄ȳ} y∘x of homogeneous maps.
pub fn super_commutator(x: &SparseOperator, y: &SparseOperator) -> SparseOperator {
    let xy = x.compose(y);
    let yx = y.compose(x);
    let sign_flip = x.degree() == 1 && y.degree() == 1;
    if sign_flip {
        xy.add(&yx)
    } else {
        xy.sub(&yx)
    }
}

/// All generators plus ω and its inverse for one system.
#[derive(Clone, Debug)]
pub struct ChevalleyOps {
    pub e: Vec<SparseOperator>,
    pub f: Vec<SparseOperator>,
    pub h: Vec<SparseOperator>,
    pub omega: SparseOperator,
    pub omega_inv: SparseOperator,
}

pub fn build_all(sys: &GrsSystem) -> Result<ChevalleyOps> {
    let n = sys.base_len();
    let mut e = Vec::with_capacity(n);
    let mut f = Vec::with_capacity(n);
    let mut h = Vec::with_capacity(n);
    for i in 0..n {
        e.push(build_e(sys, i)?);
        f.push(build_f(sys, i)?);
        h.push(build_h(sys, i)?);
    }
    Ok(ChevalleyOps {
        e,
        f,
        h,
        omega: build_omega(sys),
        omega_inv: build_omega_inv(sys),
    })
}

/// e_i: u_j ↦ |(α_i,α_j∨)| v_{α_i}; v_{−α_i} ↦ (−1)^ī u_i; otherwise
/// v_α ↦ c·v_{α+α_i} with c from the real/isotropic branch.
pub fn build_e(sys: &GrsSystem, i: usize) -> Result<SparseOperator> {
    build_e_inner(sys, i, false)
}

/// e_i with the isotropic-branch sign flipped. Exists for fault-injection
/// tests: the relation checks must catch the flip.
#[doc(hidden)]
pub fn build_e_with_sign_fault(sys: &GrsSystem, i: usize) -> Result<SparseOperator> {
    build_e_inner(sys, i, true)
}

/// Coefficient of e_i/f_i on the slot u_j: the coroot pairing (α_i, α_j∨),
/// taken in absolute value on real slots. On the isotropic slot the signed
/// bilinear value is required: its sign varies with the side of the
/// isotropic node and the commutation relations pin it exactly.
fn cartan_slot_coefficient(sys: &GrsSystem, i: usize, j: usize) -> Result<Rat> {
    let alpha_i = sys.base_root(i);
    let c = sys.simple_coroot_pairing(alpha_i, j)?;
    if sys.is_isotropic_id(sys.base_ids()[j]) {
        Ok(c)
    } else if c < Rat::zero() {
        Ok(-c)
    } else {
        Ok(c)
    }
}

fn build_e_inner(sys: &GrsSystem, i: usize, flip_isotropic: bool) -> Result<SparseOperator> {
    let m = ModuleBasis::from_system(sys);
    let alpha_i = sys.base_root(i).clone();
    let deg_i = sys.base_parity(i);
    let mut op = SparseOperator::zero(m.dim(), deg_i);

    for j in 0..sys.base_len() {
        let c = cartan_slot_coefficient(sys, i, j)?;
        if !c.is_zero() {
            let target = m.v_slot(sys.root_id(&alpha_i).unwrap());
            op.set_col(m.u_slot(j), vec![(target, c)]);
        }
    }

    let minus_alpha_i = alpha_i.neg();
    for id in 0..sys.len() {
        let alpha = sys.root(id).clone();
        let col = m.v_slot(id);
        if alpha == minus_alpha_i {
            let sign = if deg_i == 1 {
                -rational::one()
            } else {
                rational::one()
            };
            op.set_col(col, vec![(m.u_slot(i), sign)]);
            continue;
        }
        let shifted = alpha.add(&alpha_i);
        let Some(target_id) = sys.root_id(&shifted) else {
            continue;
        };
        let sgn = rational::rat_int(sys.sgn(id));
        let string = sys.simple_string(&alpha, i);
        let m_minus = rational::rat_int(i64::from(string.down));
        let coeff = if !sys.is_isotropic_id(id) {
            // real α
            if deg_i == 0 {
                &sgn * &m_minus
            } else {
                m_minus
            }
        } else {
            // isotropic α
            if deg_i == 0 {
                &sgn * &m_minus
            } else {
                let pairing = sys.simple_coroot_pairing(&alpha, i)?;
                let c = &pairing * &sgn;
                if flip_isotropic {
                    -c
                } else {
                    c
                }
            }
        };
        if !coeff.is_zero() {
            op.set_col(col, vec![(m.v_slot(target_id), coeff)]);
        }
    }
    Ok(op)
}

/// f_i: u_j ↦ |(α_i,α_j∨)| v_{−α_i}; v_{α_i} ↦ u_i; otherwise
/// v_α ↦ c·v_{α−α_i}.
pub fn build_f(sys: &GrsSystem, i: usize) -> Result<SparseOperator> {
    let m = ModuleBasis::from_system(sys);
    let alpha_i = sys.base_root(i).clone();
    let deg_i = sys.base_parity(i);
    let mut op = SparseOperator::zero(m.dim(), deg_i);

    let minus_alpha_i = alpha_i.neg();
    for j in 0..sys.base_len() {
        let c = cartan_slot_coefficient(sys, i, j)?;
        if !c.is_zero() {
            let target = m.v_slot(sys.root_id(&minus_alpha_i).unwrap());
            op.set_col(m.u_slot(j), vec![(target, c)]);
        }
    }

    for id in 0..sys.len() {
        let alpha = sys.root(id).clone();
        let col = m.v_slot(id);
        if alpha == alpha_i {
            op.set_col(col, vec![(m.u_slot(i), rational::one())]);
            continue;
        }
        let shifted = alpha.sub(&alpha_i);
        let Some(target_id) = sys.root_id(&shifted) else {
            continue;
        };
        let sgn = rational::rat_int(sys.sgn(id));
        let string = sys.simple_string(&alpha, i);
        let m_plus = rational::rat_int(i64::from(string.up));
        // the real branch and the even-i isotropic branch share one formula
        let coeff = if !sys.is_isotropic_id(id) || deg_i == 0 {
            &sgn * &m_plus
        } else {
            sys.simple_coroot_pairing(&alpha, i)?
        };
        if !coeff.is_zero() {
            op.set_col(col, vec![(m.v_slot(target_id), coeff)]);
        }
    }
    Ok(op)
}

/// h_i: u_j ↦ 0; v_α ↦ (α,α_i∨) v_α.
pub fn build_h(sys: &GrsSystem, i: usize) -> Result<SparseOperator> {
    let m = ModuleBasis::from_system(sys);
    let mut op = SparseOperator::zero(m.dim(), 0);
    for id in 0..sys.len() {
        let c = sys.simple_coroot_pairing(sys.root(id), i)?;
        if !c.is_zero() {
            let slot = m.v_slot(id);
            op.set_col(slot, vec![(slot, c)]);
        }
    }
    Ok(op)
}

/// ω: u_i ↦ u_i, v_α ↦ −v_{−α} and v_{−α} ↦ −(−1)^ᾱ v_α for α ∈ R⁺.
pub fn build_omega(sys: &GrsSystem) -> SparseOperator {
    let m = ModuleBasis::from_system(sys);
    let mut op = SparseOperator::zero(m.dim(), 0);
    for i in 0..sys.base_len() {
        op.set_col(m.u_slot(i), vec![(m.u_slot(i), rational::one())]);
    }
    for id in 0..sys.len() {
        let neg_id = sys.root_id(&sys.root(id).neg()).expect("R = -R");
        let coeff = if sys.is_positive_id(id) {
            -rational::one()
        } else if sys.parity_id(id) == 1 {
            rational::one()
        } else {
            -rational::one()
        };
        op.set_col(m.v_slot(id), vec![(m.v_slot(neg_id), coeff)]);
    }
    op
}

/// ω⁻¹: u_i ↦ u_i, v_α ↦ −(−1)^ᾱ v_{−α} and v_{−α} ↦ −v_α for α ∈ R⁺.
pub fn build_omega_inv(sys: &GrsSystem) -> SparseOperator {
    let m = ModuleBasis::from_system(sys);
    let mut op = SparseOperator::zero(m.dim(), 0);
    for i in 0..sys.base_len() {
        op.set_col(m.u_slot(i), vec![(m.u_slot(i), rational::one())]);
    }
    for id in 0..sys.len() {
        let neg_id = sys.root_id(&sys.root(id).neg()).expect("R = -R");
        let coeff = if !sys.is_positive_id(id) {
            -rational::one()
        } else if sys.parity_id(id) == 1 {
            rational::one()
        } else {
            -rational::one()
        };
        op.set_col(m.v_slot(id), vec![(m.v_slot(neg_id), coeff)]);
    }
    op
}

/// ω x ω⁻¹.
pub fn conjugate_by_omega(ops: &ChevalleyOps, x: &SparseOperator) -> SparseOperator {
    ops.omega.compose(x).compose(&ops.omega_inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{self, FamilySpec};
    use crate::root::Root;
    use crate::verify;

    fn b11() -> GrsSystem {
        catalog::build(&FamilySpec::B { m: 1, n: 1 }).unwrap()
    }

    #[test]
    fn e_on_cartan_slots() {
        let sys = catalog::build(&FamilySpec::A { m: 2, n: 1 }).unwrap();
        let m = ModuleBasis::from_system(&sys);
        // real simple root: e_i(u_i) = 2 v_{α_i}
        let i = 0;
        let e = build_e(&sys, i).unwrap();
        let target = m.v_slot(sys.root_id(sys.base_root(i)).unwrap());
        assert_eq!(e.col(m.u_slot(i)), &[(target, rational::rat_int(2))]);
        // isotropic simple root: e_i(u_i) = 0
        let iso = (0..sys.base_len())
            .find(|&k| sys.is_isotropic_id(sys.base_ids()[k]))
            .unwrap();
        let e_iso = build_e(&sys, iso).unwrap();
        assert!(e_iso.col(m.u_slot(iso)).is_empty());
    }

    #[test]
    fn h_on_its_own_root_vector() {
        let sys = b11();
        let m = ModuleBasis::from_system(&sys);
        for i in 0..sys.base_len() {
            let h = build_h(&sys, i).unwrap();
            let slot = m.v_slot(sys.root_id(sys.base_root(i)).unwrap());
            let expected = if sys.is_isotropic_id(sys.base_ids()[i]) {
                Vec::new()
            } else {
                vec![(slot, rational::rat_int(2))]
            };
            assert_eq!(h.col(slot), expected.as_slice());
        }
    }

    #[test]
    fn isotropic_e_moves_eps1_to_delta1() {
        let sys = b11();
        let m = ModuleBasis::from_system(&sys);
        let iso = (0..sys.base_len())
            .find(|&k| sys.is_isotropic_id(sys.base_ids()[k]))
            .unwrap();
        let e = build_e(&sys, iso).unwrap();
        let from = m.v_slot(sys.root_id(&Root::from_ints(&[1, 0])).unwrap());
        let to = m.v_slot(sys.root_id(&Root::from_ints(&[0, 1])).unwrap());
        assert_eq!(e.col(from), &[(to, rational::one())]);
    }

    #[test]
    fn weight_shift_structure() {
        let sys = catalog::build(&FamilySpec::C { n: 3 }).unwrap();
        let m = ModuleBasis::from_system(&sys);
        for i in 0..sys.base_len() {
            let e = build_e(&sys, i).unwrap();
            let alpha_i = sys.base_root(i).clone();
            for col in 0..m.dim() {
                for (row, _) in e.col(col) {
                    match (m.slot_root(col), m.slot_root(*row)) {
                        (Some(a), Some(b)) => {
                            assert_eq!(sys.root(a).add(&alpha_i), *sys.root(b));
                        }
                        (None, Some(b)) => assert_eq!(sys.root(b), &alpha_i),
                        (Some(a), None) => {
                            assert_eq!(*sys.root(a), alpha_i.neg());
                            assert_eq!(*row, m.u_slot(i));
                        }
                        (None, None) => panic!("e_i maps u to u"),
                    }
                }
            }
        }
    }

    #[test]
    fn omega_squares_to_the_grading_involution() {
        let sys = b11();
        let m = ModuleBasis::from_system(&sys);
        let omega = build_omega(&sys);
        let omega_inv = build_omega_inv(&sys);
        let id = omega.compose(&omega_inv);
        for c in 0..m.dim() {
            assert_eq!(id.col(c), &[(c, rational::one())]);
        }
        let sq = omega.compose(&omega);
        for c in 0..m.dim() {
            let sign = if m.slot_parity(c) == 0 {
                rational::one()
            } else {
                -rational::one()
            };
            assert_eq!(sq.col(c), &[(c, sign)]);
        }
    }

    #[test]
    fn commutator_basics() {
        let sys = b11();
        let ops = build_all(&sys).unwrap();
        for i in 0..sys.base_len() {
            for j in 0..sys.base_len() {
                assert!(super_commutator(&ops.h[i], &ops.h[j]).is_zero());
            }
            assert_eq!(super_commutator(&ops.e[i], &ops.f[i]), ops.h[i]);
            // [x,x] = 0 for even homogeneous x
            if ops.e[i].degree() == 0 {
                assert!(super_commutator(&ops.e[i], &ops.e[i]).is_zero());
            }
        }
    }

    #[test]
    fn relations_hold_on_small_instances() {
        for spec in [
            FamilySpec::B { m: 1, n: 1 },
            FamilySpec::A { m: 2, n: 1 },
            FamilySpec::C { n: 3 },
            FamilySpec::D21a {
                a: rational::rat_int(2),
            },
        ] {
            let sys = catalog::build(&spec).unwrap();
            for report in verify::verify_operator_relations(&sys).unwrap() {
                assert!(
                    report.passed(),
                    "{} {}: {:?}",
                    spec.label(),
                    report.lemma_id,
                    report.failures.first()
                );
                assert!(report.cases_checked > 0);
            }
        }
    }

    #[test]
    fn sign_fault_is_caught_by_the_relation_checks() {
        let sys = b11();
        let mut ops = build_all(&sys).unwrap();
        let iso = (0..sys.base_len())
            .find(|&k| sys.is_isotropic_id(sys.base_ids()[k]))
            .unwrap();
        ops.e[iso] = build_e_with_sign_fault(&sys, iso).unwrap();
        let reports = verify::verify_operator_relations_on(&sys, &ops);
        assert!(reports.iter().any(|r| !r.passed()));
    }
}
