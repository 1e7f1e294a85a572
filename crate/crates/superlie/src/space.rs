//! The ambient space: a coordinate basis with a symmetric non-degenerate
//! bilinear form given by an exact rational Gram matrix.

use crate::linalg;
use crate::rational::Rat;
use crate::root::Root;
use crate::{Error, Result};
use num_traits::Zero;

#[derive(Clone, Debug)]
pub struct AmbientSpace {
    labels: Vec<String>,
    gram: Vec<Vec<Rat>>,
}

impl AmbientSpace {
    /// Validates symmetry and non-degeneracy of the Gram matrix.
    pub fn new(labels: Vec<String>, gram: Vec<Vec<Rat>>) -> Result<Self> {
        let dim = labels.len();
        if gram.len() != dim || gram.iter().any(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: gram.len(),
            });
        }
        for i in 0..dim {
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::DegenerateForm(format!(
                        "gram not symmetric at ({i},{j})"
                    )));
                }
            }
        }
        if linalg::rank_dense(&gram) != dim {
            return Err(Error::DegenerateForm("gram has zero determinant".into()));
        }
        Ok(AmbientSpace { labels, gram })
    }

    /// Diagonal Gram matrix.
    pub fn diagonal(labels: Vec<String>, diag: Vec<Rat>) -> Result<Self> {
        let dim = labels.len();
        let mut gram = vec![vec![Rat::zero(); dim]; dim];
        for (i, d) in diag.into_iter().enumerate() {
            gram[i][i] = d;
        }
        AmbientSpace::new(labels, gram)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn gram(&self) -> &[Vec<Rat>] {
        &self.gram
    }

    /// The bilinear form `xᵀ·gram·y`. Checks dimensions.
    pub fn pairing(&self, x: &Root, y: &Root) -> Result<Rat> {
        if x.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: x.dim(),
            });
        }
        if y.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: y.dim(),
            });
        }
        Ok(self.form(x, y))
    }

    /// The bilinear form without dimension checks (internal fast path).
    pub(crate) fn form(&self, x: &Root, y: &Root) -> Rat {
        let mut acc = Rat::zero();
        for (i, xi) in x.coords().iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            let mut row = Rat::zero();
            for (j, yj) in y.coords().iter().enumerate() {
                if yj.is_zero() || self.gram[i][j].is_zero() {
                    continue;
                }
                row += &self.gram[i][j] * yj;
            }
            acc += xi * &row;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat_int, zero};

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("x{i}")).collect()
    }

    #[test]
    fn rejects_asymmetric_and_degenerate() {
        let asym = vec![vec![rat_int(1), rat_int(2)], vec![rat_int(0), rat_int(1)]];
        assert!(AmbientSpace::new(labels(2), asym).is_err());
        let degenerate = AmbientSpace::diagonal(labels(2), vec![rat_int(1), zero()]);
        assert!(degenerate.is_err());
    }

    #[test]
    fn pairing_is_symmetric_and_checks_dims() {
        let sp =
            AmbientSpace::diagonal(labels(3), vec![rat_int(1), rat_int(1), rat_int(-1)]).unwrap();
        let a = Root::from_ints(&[1, -1, 0]);
        let b = Root::from_ints(&[0, 1, -1]);
        assert_eq!(sp.pairing(&a, &b).unwrap(), sp.pairing(&b, &a).unwrap());
        assert_eq!(sp.pairing(&a, &a).unwrap(), rat_int(2));
        let short = Root::from_ints(&[1, 0]);
        assert!(sp.pairing(&a, &short).is_err());
    }
}
