//! Roots as exact coordinate vectors in a fixed ambient basis.

use crate::rational::{self, Rat};
use num_traits::Zero;
use std::fmt;

/// A root: a nonzero vector of rational coordinates. Most families use
/// integer coordinates; F(4) uses half-integers. Roots compare by exact
/// coordinates, which gives every root set a canonical total order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Root {
    coords: Vec<Rat>,
}

impl Root {
    pub fn new(coords: Vec<Rat>) -> Self {
        Root { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Root {
            coords: coords.iter().map(|&n| rational::rat_int(n)).collect(),
        }
    }

    /// Coordinates with a common rational scale, e.g. the F(4) odd roots
    /// `½(δ ± ε₁ ± ε₂ ± ε₃)`.
    pub fn from_scaled_ints(num: i64, den: i64, coords: &[i64]) -> Self {
        let k = rational::rat(num, den);
        Root {
            coords: coords.iter().map(|&n| rational::rat_int(n) * &k).collect(),
        }
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn neg(&self) -> Root {
        Root {
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &Root) -> Root {
        Root {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Root) -> Root {
        Root {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scaled(&self, k: &Rat) -> Root {
        Root {
            coords: self.coords.iter().map(|c| c * k).collect(),
        }
    }

    /// If `self = k·other` for a rational `k`, returns `k`.
    pub fn ratio_to(&self, other: &Root) -> Option<Rat> {
        if self.dim() != other.dim() || other.is_zero() {
            return None;
        }
        let mut k: Option<Rat> = None;
        for (a, b) in self.coords.iter().zip(&other.coords) {
            if b.is_zero() {
                if !a.is_zero() {
                    return None;
                }
            } else {
                let q = a / b;
                match &k {
                    None => k = Some(q),
                    Some(prev) if *prev == q => {}
                    _ => return None,
                }
            }
        }
        k
    }

    /// Human-readable form over the given basis labels, e.g. `δ1-ε1` or
    /// `1/2(δ+ε1+ε2+ε3)`.
    pub fn pretty(&self, labels: &[String]) -> String {
        use num_traits::One;
        // factor out a common denominator > 1 when every coordinate shares it
        let denoms: Vec<_> = self.coords.iter().map(|c| c.denom().clone()).collect();
        let common = denoms
            .iter()
            .filter(|d| !d.is_one())
            .max()
            .cloned()
            .unwrap_or_else(num_bigint::BigInt::one);
        let all_match = !common.is_one()
            && self
                .coords
                .iter()
                .all(|c| c.is_zero() || *c.denom() == common);
        let scale = if all_match {
            Rat::from_integer(common.clone())
        } else {
            Rat::one()
        };
        let mut body = String::new();
        for (c, label) in self.coords.iter().zip(labels) {
            let c = c * &scale;
            if c.is_zero() {
                continue;
            }
            let mag = if c < Rat::zero() {
                -c.clone()
            } else {
                c.clone()
            };
            if body.is_empty() {
                if c < Rat::zero() {
                    body.push('-');
                }
            } else if c < Rat::zero() {
                body.push('-');
            } else {
                body.push('+');
            }
            if !mag.is_one() {
                body.push_str(&rational::format(&mag));
            }
            body.push_str(label);
        }
        if body.is_empty() {
            return "0".to_string();
        }
        if all_match {
            format!("1/{}({})", common, body)
        } else {
            body
        }
    }
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, c) in self.coords.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", rational::format(c))?;
        }
        write!(f, "]")
    }
}
