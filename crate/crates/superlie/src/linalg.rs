//! Exact sparse linear algebra over ℚ.
//!
//! Everything here works on sparse vectors with sorted index lists and keeps
//! entries as exact rationals. Row reduction normalizes pivots to 1 so that
//! reduction against an [`Echelon`] is a plain scan; no pivoting heuristics
//! are needed since there is no rounding to fight.

use crate::rational::Rat;
use num_traits::{One, Zero};

/// Sparse vector: strictly increasing indices, nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseVec {
    pub entries: Vec<(usize, Rat)>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec {
            entries: Vec::new(),
        }
    }

    pub fn unit(idx: usize) -> Self {
        SparseVec {
            entries: vec![(idx, Rat::one())],
        }
    }

    /// Builds from unordered entries, summing duplicates and dropping zeros.
    pub fn from_entries(mut entries: Vec<(usize, Rat)>) -> Self {
        entries.sort_by_key(|(i, _)| *i);
        let mut merged: Vec<(usize, Rat)> = Vec::with_capacity(entries.len());
        for (i, c) in entries {
            match merged.last_mut() {
                Some((j, acc)) if *j == i => *acc += c,
                _ => merged.push((i, c)),
            }
        }
        merged.retain(|(_, c)| !c.is_zero());
        SparseVec { entries: merged }
    }

    pub fn from_dense(v: &[Rat]) -> Self {
        SparseVec {
            entries: v
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, len: usize) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); len];
        for (i, c) in &self.entries {
            out[*i] = c.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Index and value of the leading (smallest-index) entry.
    pub fn leading(&self) -> Option<(usize, &Rat)> {
        self.entries.first().map(|(i, c)| (*i, c))
    }

    pub fn get(&self, idx: usize) -> Option<&Rat> {
        self.entries
            .binary_search_by_key(&idx, |(i, _)| *i)
            .ok()
            .map(|p| &self.entries[p].1)
    }

    pub fn scale(&self, k: &Rat) -> SparseVec {
        if k.is_zero() {
            return SparseVec::new();
        }
        SparseVec {
            entries: self.entries.iter().map(|(i, c)| (*i, c * k)).collect(),
        }
    }

    pub fn neg(&self) -> SparseVec {
        SparseVec {
            entries: self.entries.iter().map(|(i, c)| (*i, -c)).collect(),
        }
    }

    /// `self + k·other`, merged in one pass.
    pub fn axpy(&self, k: &Rat, other: &SparseVec) -> SparseVec {
        if k.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (0, 0);
        while a < self.entries.len() && b < other.entries.len() {
            let (ia, ca) = &self.entries[a];
            let (ib, cb) = &other.entries[b];
            match ia.cmp(ib) {
                std::cmp::Ordering::Less => {
                    out.push((*ia, ca.clone()));
                    a += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((*ib, cb * k));
                    b += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = ca + &(cb * k);
                    if !c.is_zero() {
                        out.push((*ia, c));
                    }
                    a += 1;
                    b += 1;
                }
            }
        }
        out.extend(self.entries[a..].iter().cloned());
        out.extend(other.entries[b..].iter().map(|(i, c)| (*i, c * k)));
        SparseVec { entries: out }
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        self.axpy(&Rat::one(), other)
    }
}

impl Default for SparseVec {
    fn default() -> Self {
        Self::new()
    }
}

/// Row-echelon accumulator: rows have distinct pivots, each normalized to 1,
/// kept sorted by pivot index.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<SparseVec>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon { rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Remainder of `v` after reduction against all rows.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut cur = v.clone();
        loop {
            let Some((lead, coeff)) = cur.leading().map(|(i, c)| (i, c.clone())) else {
                return cur;
            };
            match self
                .rows
                .binary_search_by_key(&lead, |r| r.leading().unwrap().0)
            {
                Ok(pos) => {
                    cur = cur.axpy(&-coeff, &self.rows[pos]);
                }
                Err(_) => return cur,
            }
        }
    }

    /// Inserts `v` if independent of the current rows. Returns true on growth.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let rem = self.reduce(v);
        let Some((lead, coeff)) = rem.leading().map(|(i, c)| (i, c.clone())) else {
            return false;
        };
        let inv = Rat::one() / coeff;
        let row = rem.scale(&inv);
        let pos = self
            .rows
            .binary_search_by_key(&lead, |r| r.leading().unwrap().0)
            .unwrap_err();
        self.rows.insert(pos, row);
        true
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }
}

/// Echelon with expression tracking: answers "write `v` as a combination of
/// the original vectors", provided those originals are linearly independent.
#[derive(Clone, Debug)]
pub struct SpanSolver {
    /// (reduced row, its coordinates over the originals)
    rows: Vec<(SparseVec, Vec<Rat>)>,
    width: usize,
}

impl SpanSolver {
    /// Builds the solver. Returns `None` if the originals are dependent.
    pub fn new(originals: &[SparseVec]) -> Option<Self> {
        let width = originals.len();
        let mut solver = SpanSolver {
            rows: Vec::new(),
            width,
        };
        for (k, v) in originals.iter().enumerate() {
            let mut coords = vec![Rat::zero(); width];
            coords[k] = Rat::one();
            if !solver.insert_tracked(v.clone(), coords) {
                return None;
            }
        }
        Some(solver)
    }

    fn insert_tracked(&mut self, v: SparseVec, coords: Vec<Rat>) -> bool {
        let (rem, expr) = self.reduce_tracked(v, coords);
        let Some((lead, coeff)) = rem.leading().map(|(i, c)| (i, c.clone())) else {
            return false;
        };
        let inv = Rat::one() / coeff;
        let row = rem.scale(&inv);
        let expr: Vec<Rat> = expr.iter().map(|c| c * &inv).collect();
        let pos = self
            .rows
            .binary_search_by_key(&lead, |(r, _)| r.leading().unwrap().0)
            .unwrap_err();
        self.rows.insert(pos, (row, expr));
        true
    }

    fn reduce_tracked(&self, v: SparseVec, mut coords: Vec<Rat>) -> (SparseVec, Vec<Rat>) {
        let mut cur = v;
        loop {
            let Some((lead, coeff)) = cur.leading().map(|(i, c)| (i, c.clone())) else {
                return (cur, coords);
            };
            match self
                .rows
                .binary_search_by_key(&lead, |(r, _)| r.leading().unwrap().0)
            {
                Ok(pos) => {
                    let (row, expr) = &self.rows[pos];
                    cur = cur.axpy(&-coeff.clone(), row);
                    for (c, e) in coords.iter_mut().zip(expr.iter()) {
                        *c -= &coeff * e;
                    }
                }
                Err(_) => return (cur, coords),
            }
        }
    }

    /// Coordinates of `v` over the originals, or `None` if `v` is outside
    /// their span.
    pub fn express(&self, v: &SparseVec) -> Option<Vec<Rat>> {
        let (rem, coords) = self.reduce_tracked(v.clone(), vec![Rat::zero(); self.width]);
        if rem.is_zero() {
            Some(coords.iter().map(|c| -c).collect())
        } else {
            None
        }
    }
}

/// Rank of a dense matrix given as rows.
pub fn rank_dense(rows: &[Vec<Rat>]) -> usize {
    let mut ech = Echelon::new();
    for r in rows {
        ech.insert(&SparseVec::from_dense(r));
    }
    ech.rank()
}

/// Solves `Σ_j x_j · cols[j] = rhs` when the columns are linearly
/// independent. Returns `None` if the columns are dependent or the system is
/// inconsistent.
pub fn solve_unique(cols: &[Vec<Rat>], rhs: &[Rat]) -> Option<Vec<Rat>> {
    let sparse_cols: Vec<SparseVec> = cols.iter().map(|c| SparseVec::from_dense(c)).collect();
    let solver = SpanSolver::new(&sparse_cols)?;
    solver.express(&SparseVec::from_dense(rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn dense(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&n| rat_int(n)).collect()
    }

    #[test]
    fn axpy_merges_and_cancels() {
        let a = SparseVec::from_dense(&dense(&[1, 0, 2]));
        let b = SparseVec::from_dense(&dense(&[-1, 3, 0]));
        let s = a.axpy(&rat_int(1), &b);
        assert_eq!(s.to_dense(3), dense(&[0, 3, 2]));
        let z = a.axpy(&rat_int(-1), &a);
        assert!(z.is_zero());
    }

    #[test]
    fn echelon_rank_and_membership() {
        let mut ech = Echelon::new();
        assert!(ech.insert(&SparseVec::from_dense(&dense(&[1, 1, 0]))));
        assert!(ech.insert(&SparseVec::from_dense(&dense(&[0, 2, 1]))));
        assert!(!ech.insert(&SparseVec::from_dense(&dense(&[2, 4, 1]))));
        assert_eq!(ech.rank(), 2);
        assert!(ech.contains(&SparseVec::from_dense(&dense(&[1, 3, 1]))));
        assert!(!ech.contains(&SparseVec::from_dense(&dense(&[0, 0, 1]))));
    }

    #[test]
    fn span_solver_expresses_exactly() {
        let basis = vec![
            SparseVec::from_dense(&dense(&[1, 1, 0])),
            SparseVec::from_dense(&dense(&[0, 1, 1])),
        ];
        let solver = SpanSolver::new(&basis).unwrap();
        let v = SparseVec::from_dense(&[rat(1, 2), rat(5, 2), rat_int(2)]);
        let coords = solver.express(&v).unwrap();
        assert_eq!(coords, vec![rat(1, 2), rat_int(2)]);
        assert!(solver
            .express(&SparseVec::from_dense(&dense(&[1, 0, 0])))
            .is_none());
    }

    #[test]
    fn span_solver_rejects_dependent_originals() {
        let dep = vec![
            SparseVec::from_dense(&dense(&[1, 2])),
            SparseVec::from_dense(&dense(&[2, 4])),
        ];
        assert!(SpanSolver::new(&dep).is_none());
    }

    #[test]
    fn solve_unique_consistency() {
        let cols = vec![dense(&[1, 0, 1]), dense(&[1, 1, 0])];
        let x = solve_unique(&cols, &dense(&[3, 1, 2])).unwrap();
        assert_eq!(x, dense(&[2, 1]));
        assert!(solve_unique(&cols, &dense(&[0, 0, 1])).is_none());
    }
}
