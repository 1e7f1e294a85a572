//! Constructors for the irreducible generalized root systems with isotropic
//! roots: A(m,n), B(m,n), C(n), D(m,n), D(2,1;a), F(4), G(3), each with its
//! distinguished base (exactly one isotropic simple root) and standard
//! coordinate realization.
//!
//! Realizations:
//! - classical series: (ε_i, ε_j) = δ_ij, (δ_k, δ_l) = −δ_kl, cross terms 0;
//! - D(2,1;a): diagonal (ε₁,ε₁) = −(1+a)/2, (ε₂,ε₂) = 1/2, (ε₃,ε₃) = a/2;
//! - F(4): (ε_i, ε_j) = δ_ij, (δ,δ) = −3;
//! - G(3): ε₃ := −ε₁−ε₂ eliminated, coordinates over (δ, ε₁, ε₂) with
//!   (δ,δ) = −2, (ε_i,ε_i) = 2, (ε₁,ε₂) = −1.

use crate::rational::{self, Rat};
use crate::root::Root;
use crate::space::AmbientSpace;
use crate::system::GrsSystem;
use crate::{Error, Result};
use num_traits::Zero;

/// Family identifier.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    A,
    B,
    C,
    D,
    D21a,
    F4,
    G3,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::D21a => "D21a",
            Family::F4 => "F4",
            Family::G3 => "G3",
        }
    }
}

/// A fully specified catalog instance.
#[derive(Clone, Debug, PartialEq)]
pub enum FamilySpec {
    A { m: u32, n: u32 },
    B { m: u32, n: u32 },
    C { n: u32 },
    D { m: u32, n: u32 },
    D21a { a: Rat },
    F4,
    G3,
}

impl FamilySpec {
    pub fn family(&self) -> Family {
        match self {
            FamilySpec::A { .. } => Family::A,
            FamilySpec::B { .. } => Family::B,
            FamilySpec::C { .. } => Family::C,
            FamilySpec::D { .. } => Family::D,
            FamilySpec::D21a { .. } => Family::D21a,
            FamilySpec::F4 => Family::F4,
            FamilySpec::G3 => Family::G3,
        }
    }

    /// Validates the parameter constraints. A(1,1), A(n,n) and B(0,n) are
    /// rejected here rather than special-cased downstream.
    pub fn validate(&self) -> Result<()> {
        match self {
            FamilySpec::A { m, n } => {
                if m == n {
                    return Err(Error::InvalidFamily(format!(
                        "A({m},{n}) excluded: requires m ≠ n"
                    )));
                }
                Ok(())
            }
            FamilySpec::B { m, n } => {
                if *m < 1 || *n < 1 {
                    return Err(Error::InvalidFamily(format!(
                        "B({m},{n}) excluded: requires m ≥ 1 and n ≥ 1"
                    )));
                }
                Ok(())
            }
            FamilySpec::C { n } => {
                if *n < 2 {
                    return Err(Error::InvalidFamily(format!("C({n}) requires n ≥ 2")));
                }
                Ok(())
            }
            FamilySpec::D { m, n } => {
                if *m < 2 || *n < 1 {
                    return Err(Error::InvalidFamily(format!(
                        "D({m},{n}) requires m ≥ 2 and n ≥ 1"
                    )));
                }
                Ok(())
            }
            FamilySpec::D21a { a } => {
                if a.is_zero() || *a == -rational::one() {
                    return Err(Error::InvalidFamily(format!(
                        "D(2,1;a) requires a ∉ {{0, −1}}, got a = {}",
                        rational::format(a)
                    )));
                }
                Ok(())
            }
            FamilySpec::F4 | FamilySpec::G3 => Ok(()),
        }
    }

    /// Display label, e.g. `A(2,1)` or `D(2,1;a=1/3)`.
    pub fn label(&self) -> String {
        match self {
            FamilySpec::A { m, n } => format!("A({m},{n})"),
            FamilySpec::B { m, n } => format!("B({m},{n})"),
            FamilySpec::C { n } => format!("C({n})"),
            FamilySpec::D { m, n } => format!("D({m},{n})"),
            FamilySpec::D21a { a } => format!("D(2,1;a={})", rational::format(a)),
            FamilySpec::F4 => "F(4)".to_string(),
            FamilySpec::G3 => "G(3)".to_string(),
        }
    }
}

/// Closed-form positive root counts (even, odd), read off the catalog lists.
pub fn expected_counts(spec: &FamilySpec) -> Result<(usize, usize)> {
    spec.validate()?;
    Ok(match spec {
        FamilySpec::A { m, n } => {
            let (m, n) = (*m as usize, *n as usize);
            ((m + 1) * m / 2 + (n + 1) * n / 2, (m + 1) * (n + 1))
        }
        FamilySpec::B { m, n } => {
            let (m, n) = (*m as usize, *n as usize);
            (m * m + n * n, n * (2 * m + 1))
        }
        FamilySpec::C { n } => {
            let n = *n as usize;
            ((n - 1) * (n - 1), 2 * (n - 1))
        }
        FamilySpec::D { m, n } => {
            let (m, n) = (*m as usize, *n as usize);
            (m * (m - 1) + n * n, 2 * m * n)
        }
        FamilySpec::D21a { .. } => (3, 4),
        FamilySpec::F4 => (10, 8),
        FamilySpec::G3 => (7, 7),
    })
}

/// Closed-form dimension of the generated superalgebra, |R| + |Π|.
pub fn expected_dimension(spec: &FamilySpec) -> Result<usize> {
    spec.validate()?;
    Ok(match spec {
        FamilySpec::A { m, n } => {
            let (m, n) = (*m as usize, *n as usize);
            (m + n + 2) * (m + n + 2) - 1
        }
        FamilySpec::B { m, n } => {
            let (m, n) = (*m as usize, *n as usize);
            m * (2 * m + 1) + n * (2 * n + 1) + 2 * n * (2 * m + 1)
        }
        FamilySpec::C { n } => {
            let n = *n as usize;
            (n - 1) * (2 * n - 1) + 1 + 4 * (n - 1)
        }
        FamilySpec::D { m, n } => {
            let (m, n) = (*m as usize, *n as usize);
            m * (2 * m - 1) + n * (2 * n + 1) + 4 * m * n
        }
        FamilySpec::D21a { .. } => 17,
        FamilySpec::F4 => 40,
        FamilySpec::G3 => 31,
    })
}

/// Builds the system for a valid spec. The returned system passes
/// `check_axioms` with an empty report; its positive set is exactly the
/// catalog's positive list.
pub fn build(spec: &FamilySpec) -> Result<GrsSystem> {
    spec.validate()?;
    let (space, positive, base) = match spec {
        FamilySpec::A { m, n } => build_a(*m as usize, *n as usize)?,
        FamilySpec::B { m, n } => build_b(*m as usize, *n as usize)?,
        FamilySpec::C { n } => build_c(*n as usize)?,
        FamilySpec::D { m, n } => build_d(*m as usize, *n as usize)?,
        FamilySpec::D21a { a } => build_d21a(a)?,
        FamilySpec::F4 => build_f4()?,
        FamilySpec::G3 => build_g3()?,
    };
    let mut roots = positive.clone();
    roots.extend(positive.iter().map(Root::neg));
    let sys = GrsSystem::from_roots(space, roots, base, spec.label())?;
    // the stored positive set must coincide with the catalog list
    for r in &positive {
        let id = sys
            .root_id(r)
            .ok_or_else(|| Error::InvalidBase(format!("catalog root {r:?} lost")))?;
        if !sys.is_positive_id(id) {
            return Err(Error::InvalidBase(format!(
                "catalog-positive root {r:?} decomposes negatively"
            )));
        }
    }
    Ok(sys)
}

/// Unit coordinate vector helper: puts `value` at `pos` in a `dim` vector.
fn unit(dim: usize, pos: usize, value: i64) -> Vec<i64> {
    let mut v = vec![0i64; dim];
    v[pos] = value;
    v
}

fn two_slot(dim: usize, p1: usize, v1: i64, p2: usize, v2: i64) -> Vec<i64> {
    let mut v = vec![0i64; dim];
    v[p1] = v1;
    v[p2] += v2;
    v
}

fn eps_delta_labels(m: usize, n: usize) -> Vec<String> {
    let mut labels: Vec<String> = (1..=m).map(|i| format!("ε{i}")).collect();
    labels.extend((1..=n).map(|k| format!("δ{k}")));
    labels
}

fn diag_pm(m: usize, n: usize) -> Vec<Rat> {
    let mut d = vec![rational::one(); m];
    d.extend(std::iter::repeat_n(-rational::one(), n));
    d
}

fn build_a(m: usize, n: usize) -> Result<(AmbientSpace, Vec<Root>, Vec<Root>)> {
    // coordinates: ε₁..ε_{m+1}, δ₁..δ_{n+1}
    let ne = m + 1;
    let nd = n + 1;
    let dim = ne + nd;
    let space = AmbientSpace::diagonal(eps_delta_labels(ne, nd), diag_pm(ne, nd))?;

    let mut positive = Vec::new();
    for i in 0..ne {
        for j in (i + 1)..ne {
            positive.push(Root::from_ints(&two_slot(dim, i, 1, j, -1)));
        }
    }
    for k in 0..nd {
        for l in (k + 1)..nd {
            positive.push(Root::from_ints(&two_slot(dim, ne + k, 1, ne + l, -1)));
        }
    }
    for i in 0..ne {
        for j in 0..nd {
            positive.push(Root::from_ints(&two_slot(dim, i, 1, ne + j, -1)));
        }
    }

    let mut base = Vec::new();
    for i in 0..m {
        base.push(Root::from_ints(&two_slot(dim, i, 1, i + 1, -1)));
    }
    base.push(Root::from_ints(&two_slot(dim, m, 1, ne, -1))); // ε_{m+1} − δ₁
    for k in 0..n {
        base.push(Root::from_ints(&two_slot(dim, ne + k, 1, ne + k + 1, -1)));
    }
    Ok((space, positive, base))
}

fn build_b(m: usize, n: usize) -> Result<(AmbientSpace, Vec<Root>, Vec<Root>)> {
    // coordinates: ε₁..ε_m, δ₁..δ_n
    let dim = m + n;
    let space = AmbientSpace::diagonal(eps_delta_labels(m, n), diag_pm(m, n))?;

    let mut positive = Vec::new();
    for i in 0..m {
        for j in (i + 1)..m {
            positive.push(Root::from_ints(&two_slot(dim, i, 1, j, -1)));
            positive.push(Root::from_ints(&two_slot(dim, i, 1, j, 1)));
        }
    }
    for i in 0..m {
        positive.push(Root::from_ints(&unit(dim, i, 1)));
    }
    for k in 0..n {
        for l in (k + 1)..n {
            positive.push(Root::from_ints(&two_slot(dim, m + k, 1, m + l, -1)));
            positive.push(Root::from_ints(&two_slot(dim, m + k, 1, m + l, 1)));
        }
    }
    for k in 0..n {
        positive.push(Root::from_ints(&unit(dim, m + k, 2)));
    }
    for k in 0..n {
        positive.push(Root::from_ints(&unit(dim, m + k, 1)));
        for l in 0..m {
            positive.push(Root::from_ints(&two_slot(dim, m + k, 1, l, 1)));
            positive.push(Root::from_ints(&two_slot(dim, m + k, 1, l, -1)));
        }
    }

    let mut base = Vec::new();
    for k in 0..(n - 1) {
        base.push(Root::from_ints(&two_slot(dim, m + k, 1, m + k + 1, -1)));
    }
    base.push(Root::from_ints(&two_slot(dim, m + n - 1, 1, 0, -1))); // δ_n − ε₁
    for i in 0..(m - 1) {
        base.push(Root::from_ints(&two_slot(dim, i, 1, i + 1, -1)));
    }
    base.push(Root::from_ints(&unit(dim, m - 1, 1))); // ε_m
    Ok((space, positive, base))
}

fn build_c(n: usize) -> Result<(AmbientSpace, Vec<Root>, Vec<Root>)> {
    // coordinates: ε₁, δ₁..δ_{n−1}
    let nd = n - 1;
    let dim = 1 + nd;
    let space = AmbientSpace::diagonal(eps_delta_labels(1, nd), diag_pm(1, nd))?;

    let mut positive = Vec::new();
    for k in 0..nd {
        for l in (k + 1)..nd {
            positive.push(Root::from_ints(&two_slot(dim, 1 + k, 1, 1 + l, -1)));
            positive.push(Root::from_ints(&two_slot(dim, 1 + k, 1, 1 + l, 1)));
        }
    }
    for k in 0..nd {
        positive.push(Root::from_ints(&unit(dim, 1 + k, 2)));
    }
    for k in 0..nd {
        positive.push(Root::from_ints(&two_slot(dim, 0, 1, 1 + k, 1)));
        positive.push(Root::from_ints(&two_slot(dim, 0, 1, 1 + k, -1)));
    }

    let mut base = vec![Root::from_ints(&two_slot(dim, 0, 1, 1, -1))]; // ε₁ − δ₁
    for k in 0..(nd - 1) {
        base.push(Root::from_ints(&two_slot(dim, 1 + k, 1, 1 + k + 1, -1)));
    }
    base.push(Root::from_ints(&unit(dim, dim - 1, 2))); // 2δ_{n−1}
    Ok((space, positive, base))
}

fn build_d(m: usize, n: usize) -> Result<(AmbientSpace, Vec<Root>, Vec<Root>)> {
    // coordinates: ε₁..ε_m, δ₁..δ_n
    let dim = m + n;
    let space = AmbientSpace::diagonal(eps_delta_labels(m, n), diag_pm(m, n))?;

    let mut positive = Vec::new();
    for i in 0..m {
        for j in (i + 1)..m {
            positive.push(Root::from_ints(&two_slot(dim, i, 1, j, -1)));
            positive.push(Root::from_ints(&two_slot(dim, i, 1, j, 1)));
        }
    }
    for k in 0..n {
        for l in (k + 1)..n {
            positive.push(Root::from_ints(&two_slot(dim, m + k, 1, m + l, -1)));
            positive.push(Root::from_ints(&two_slot(dim, m + k, 1, m + l, 1)));
        }
    }
    for k in 0..n {
        positive.push(Root::from_ints(&unit(dim, m + k, 2)));
    }
    for k in 0..n {
        for l in 0..m {
            positive.push(Root::from_ints(&two_slot(dim, m + k, 1, l, 1)));
            positive.push(Root::from_ints(&two_slot(dim, m + k, 1, l, -1)));
        }
    }

    let mut base = Vec::new();
    for k in 0..(n - 1) {
        base.push(Root::from_ints(&two_slot(dim, m + k, 1, m + k + 1, -1)));
    }
    base.push(Root::from_ints(&two_slot(dim, m + n - 1, 1, 0, -1))); // δ_n − ε₁
    for i in 0..(m - 1) {
        base.push(Root::from_ints(&two_slot(dim, i, 1, i + 1, -1)));
    }
    base.push(Root::from_ints(&two_slot(dim, m - 2, 1, m - 1, 1))); // ε_{m−1} + ε_m
    Ok((space, positive, base))
}

fn build_d21a(a: &Rat) -> Result<(AmbientSpace, Vec<Root>, Vec<Root>)> {
    let labels: Vec<String> = (1..=3).map(|i| format!("ε{i}")).collect();
    let one = rational::one();
    let two = rational::rat_int(2);
    let diag = vec![
        -(&one + a) / &two, // (ε₁,ε₁) = −(1+a)/2
        rational::rat(1, 2),
        a / &two,
    ];
    let space = AmbientSpace::diagonal(labels, diag)?;

    let mut positive = vec![
        Root::from_ints(&[2, 0, 0]),
        Root::from_ints(&[0, 2, 0]),
        Root::from_ints(&[0, 0, 2]),
    ];
    for s1 in [1i64, -1] {
        for s3 in [1i64, -1] {
            positive.push(Root::from_ints(&[s1, 1, s3]));
        }
    }
    let base = vec![
        Root::from_ints(&[2, 0, 0]),
        Root::from_ints(&[-1, 1, -1]),
        Root::from_ints(&[0, 0, 2]),
    ];
    Ok((space, positive, base))
}

fn build_f4() -> Result<(AmbientSpace, Vec<Root>, Vec<Root>)> {
    // coordinates: δ, ε₁, ε₂, ε₃
    let labels: Vec<String> = std::iter::once("δ".to_string())
        .chain((1..=3).map(|i| format!("ε{i}")))
        .collect();
    let diag = vec![
        rational::rat_int(-3),
        rational::one(),
        rational::one(),
        rational::one(),
    ];
    let space = AmbientSpace::diagonal(labels, diag)?;

    let mut positive = vec![Root::from_ints(&[1, 0, 0, 0])];
    for i in 1..=3usize {
        positive.push(Root::from_ints(&unit(4, i, -1)));
    }
    // positivity is decided by base decomposition, not coordinate signs:
    // the even two-coordinate positives are −ε_k−ε_l and ε_k−ε_l for k < l
    for k in 1..=3usize {
        for l in (k + 1)..=3 {
            positive.push(Root::from_ints(&two_slot(4, k, -1, l, -1)));
            positive.push(Root::from_ints(&two_slot(4, k, 1, l, -1)));
        }
    }
    for s1 in [1i64, -1] {
        for s2 in [1i64, -1] {
            for s3 in [1i64, -1] {
                positive.push(Root::from_scaled_ints(1, 2, &[1, s1, s2, s3]));
            }
        }
    }

    let base = vec![
        Root::from_scaled_ints(1, 2, &[1, 1, 1, 1]),
        Root::from_ints(&[0, -1, 0, 0]),
        Root::from_ints(&[0, 1, -1, 0]),
        Root::from_ints(&[0, 0, 1, -1]),
    ];
    Ok((space, positive, base))
}

fn build_g3() -> Result<(AmbientSpace, Vec<Root>, Vec<Root>)> {
    // coordinates: δ, ε₁, ε₂ with ε₃ = −ε₁−ε₂ eliminated
    let labels: Vec<String> = ["δ", "ε1", "ε2"].iter().map(|s| s.to_string()).collect();
    let gram = vec![
        vec![rational::rat_int(-2), rational::zero(), rational::zero()],
        vec![
            rational::zero(),
            rational::rat_int(2),
            rational::rat_int(-1),
        ],
        vec![
            rational::zero(),
            rational::rat_int(-1),
            rational::rat_int(2),
        ],
    ];
    let space = AmbientSpace::new(labels, gram)?;

    let positive = vec![
        // even: 2δ, ε₁, ε₂, −ε₃, ε₁−ε₃, ε₂−ε₃, ε₂−ε₁
        Root::from_ints(&[2, 0, 0]),
        Root::from_ints(&[0, 1, 0]),
        Root::from_ints(&[0, 0, 1]),
        Root::from_ints(&[0, 1, 1]),
        Root::from_ints(&[0, 2, 1]),
        Root::from_ints(&[0, 1, 2]),
        Root::from_ints(&[0, -1, 1]),
        // odd: δ, δ±ε₁, δ±ε₂, δ±ε₃
        Root::from_ints(&[1, 0, 0]),
        Root::from_ints(&[1, 1, 0]),
        Root::from_ints(&[1, -1, 0]),
        Root::from_ints(&[1, 0, 1]),
        Root::from_ints(&[1, 0, -1]),
        Root::from_ints(&[1, -1, -1]),
        Root::from_ints(&[1, 1, 1]),
    ];
    let base = vec![
        Root::from_ints(&[1, -1, -1]), // δ + ε₃
        Root::from_ints(&[0, 1, 0]),   // ε₁
        Root::from_ints(&[0, -1, 1]),  // ε₂ − ε₁
    ];
    Ok((space, positive, base))
}

/// The default instance set exercised by `verify --all` and the test suite.
pub fn default_instances() -> Vec<FamilySpec> {
    vec![
        FamilySpec::A { m: 2, n: 1 },
        FamilySpec::A { m: 1, n: 2 },
        FamilySpec::B { m: 1, n: 1 },
        FamilySpec::B { m: 2, n: 1 },
        FamilySpec::B { m: 2, n: 2 },
        FamilySpec::C { n: 3 },
        FamilySpec::C { n: 4 },
        FamilySpec::D { m: 2, n: 1 },
        FamilySpec::D { m: 3, n: 2 },
        FamilySpec::D21a {
            a: rational::rat_int(2),
        },
        FamilySpec::D21a {
            a: rational::rat(1, 3),
        },
        FamilySpec::F4,
        FamilySpec::G3,
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts(sys: &GrsSystem) -> (usize, usize) {
        let mut even = 0;
        let mut odd = 0;
        for id in sys.positive_ids() {
            if sys.parity_id(id) == 0 {
                even += 1;
            } else {
                odd += 1;
            }
        }
        (even, odd)
    }

    #[test]
    fn positive_counts_match_catalog_lists() {
        let cases = [
            (FamilySpec::A { m: 2, n: 1 }, (4, 6)),
            (
                FamilySpec::D21a {
                    a: rational::rat_int(2),
                },
                (3, 4),
            ),
            (FamilySpec::G3, (7, 7)),
            (FamilySpec::F4, (10, 8)),
            (FamilySpec::B { m: 2, n: 1 }, (5, 5)),
            (FamilySpec::C { n: 3 }, (4, 4)),
            (FamilySpec::D { m: 2, n: 1 }, (3, 4)),
        ];
        for (spec, want) in cases {
            let sys = build(&spec).unwrap();
            assert_eq!(counts(&sys), want, "{}", spec.label());
        }
    }

    #[test]
    fn expected_counts_agree_with_builds_at_small_sizes() {
        let mut specs = Vec::new();
        for m in 0..=4u32 {
            for n in 0..=4u32 {
                specs.push(FamilySpec::A { m, n });
                specs.push(FamilySpec::B { m, n });
                specs.push(FamilySpec::D { m, n });
            }
        }
        for n in 0..=4u32 {
            specs.push(FamilySpec::C { n });
        }
        for spec in specs {
            if spec.validate().is_err() {
                continue;
            }
            let sys = build(&spec).unwrap();
            let want = expected_counts(&spec).unwrap();
            assert_eq!(counts(&sys), want, "{}", spec.label());
        }
    }

    #[test]
    fn invalid_specs_are_rejected() {
        for spec in [
            FamilySpec::A { m: 1, n: 1 },
            FamilySpec::A { m: 2, n: 2 },
            FamilySpec::B { m: 0, n: 2 },
            FamilySpec::B { m: 2, n: 0 },
            FamilySpec::C { n: 1 },
            FamilySpec::D { m: 1, n: 1 },
            FamilySpec::D21a {
                a: rational::zero(),
            },
            FamilySpec::D21a {
                a: rational::rat_int(-1),
            },
        ] {
            assert!(build(&spec).is_err(), "{}", spec.label());
        }
    }

    #[test]
    fn every_base_has_exactly_one_isotropic_root() {
        for spec in default_instances() {
            let sys = build(&spec).unwrap();
            let iso = (0..sys.base_len())
                .filter(|&i| sys.is_isotropic_id(sys.base_ids()[i]))
                .count();
            assert_eq!(iso, 1, "{}", spec.label());
        }
    }

    #[test]
    fn base_roots_have_height_one() {
        for spec in default_instances() {
            let sys = build(&spec).unwrap();
            for i in 0..sys.base_len() {
                let coords = sys.base_coords_id(sys.base_ids()[i]);
                let mut expect = vec![0i64; sys.base_len()];
                expect[i] = 1;
                assert_eq!(coords, expect.as_slice());
            }
        }
    }
}
