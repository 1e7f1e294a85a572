//! The Lie superalgebra generated by the e_i and f_i inside gl(M):
//! breadth-first closure under the super commutator, root-space and
//! triangular decompositions, structure constants, ideals and simplicity.

use crate::linalg::{Echelon, SpanSolver, SparseVec};
use crate::operators::{self, ChevalleyOps, SparseOperator};
use crate::rational::{self, Rat};
use crate::superspace::ModuleBasis;
use crate::system::GrsSystem;
use crate::{Error, Result};
use num_traits::Zero;
use std::collections::{BTreeMap, VecDeque};

/// One basis element of the generated algebra: the operator together with
/// its weight (base coefficients of the root it belongs to; all zero on the
/// Cartan part) and its ℤ₂ degree.
#[derive(Clone, Debug)]
pub struct AlgebraElement {
    pub op: SparseOperator,
    pub weight: Vec<i64>,
    pub parity: u8,
}

/// Echelonized basis of the generated superalgebra, in discovery order:
/// first the generators, then new commutators level by level. Each root
/// space keeps its first-discovered Lie monomial as representative, with no
/// rescaling.
#[derive(Clone, Debug)]
pub struct SuperBasis {
    pub module: ModuleBasis,
    pub ops: ChevalleyOps,
    pub elements: Vec<AlgebraElement>,
}

impl SuperBasis {
    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    /// Indices of elements with the given weight.
    pub fn elements_with_weight(&self, weight: &[i64]) -> Vec<usize> {
        self.elements
            .iter()
            .enumerate()
            .filter(|(_, e)| e.weight == weight)
            .map(|(k, _)| k)
            .collect()
    }
}

/// Generates 𝔤 = ⟨e_i, f_i⟩ by breadth-first bracketing with the generators,
/// echelonizing in flattened operator coordinates, until a full level adds
/// no new dimension.
pub fn generate(sys: &GrsSystem) -> Result<SuperBasis> {
    let ops = operators::build_all(sys)?;
    let module = ModuleBasis::from_system(sys);
    let n = sys.base_len();

    let mut gens: Vec<(SparseOperator, Vec<i64>, u8)> = Vec::with_capacity(2 * n);
    for i in 0..n {
        let mut w = vec![0i64; n];
        w[i] = 1;
        gens.push((ops.e[i].clone(), w, sys.base_parity(i)));
    }
    for i in 0..n {
        let mut w = vec![0i64; n];
        w[i] = -1;
        gens.push((ops.f[i].clone(), w, sys.base_parity(i)));
    }

    let mut ech = Echelon::new();
    let mut elements: Vec<AlgebraElement> = Vec::new();
    let mut queue: VecDeque<usize> = VecDeque::new();

    for (op, weight, parity) in &gens {
        if ech.insert(&op.flatten()) {
            elements.push(AlgebraElement {
                op: op.clone(),
                weight: weight.clone(),
                parity: *parity,
            });
            queue.push_back(elements.len() - 1);
        }
    }

    while let Some(k) = queue.pop_front() {
        for (gop, gw, gp) in &gens {
            let cand = operators::super_commutator(gop, &elements[k].op);
            if cand.is_zero() {
                continue;
            }
            if ech.insert(&cand.flatten()) {
                let weight: Vec<i64> = gw
                    .iter()
                    .zip(&elements[k].weight)
                    .map(|(a, b)| a + b)
                    .collect();
                let parity = (gp + elements[k].parity) % 2;
                elements.push(AlgebraElement {
                    op: cand,
                    weight,
                    parity,
                });
                queue.push_back(elements.len() - 1);
            }
        }
    }

    Ok(SuperBasis {
        module,
        ops,
        elements,
    })
}

/// Root-space decomposition data: for each weight, the basis elements
/// carrying it. The zero weight is the Cartan part.
#[derive(Clone, Debug)]
pub struct RootSpaces {
    pub cartan: Vec<usize>,
    pub by_weight: BTreeMap<Vec<i64>, Vec<usize>>,
}

/// Groups the basis by weight and verifies the adjoint eigen-equations
/// [h_i, x] = λ_i·x exactly, where λ comes from the weight's base
/// coefficients paired against each h_i.
pub fn root_space_decomposition(sys: &GrsSystem, basis: &SuperBasis) -> Result<RootSpaces> {
    let n = sys.base_len();
    // λ_i(α_j) table
    let mut simple_pairings = vec![vec![Rat::zero(); n]; n];
    for (j, row) in simple_pairings.iter_mut().enumerate() {
        for (i, cell) in row.iter_mut().enumerate() {
            *cell = sys.simple_coroot_pairing(sys.base_root(j), i)?;
        }
    }

    let mut spaces = RootSpaces {
        cartan: Vec::new(),
        by_weight: BTreeMap::new(),
    };
    for (k, elem) in basis.elements.iter().enumerate() {
        for i in 0..n {
            let lambda: Rat = (0..n)
                .map(|j| rational::rat_int(elem.weight[j]) * &simple_pairings[j][i])
                .sum();
            let ad = operators::super_commutator(&basis.ops.h[i], &elem.op);
            let expect = elem.op.scale(&lambda);
            if ad != expect {
                return Err(Error::ClosureFailure(format!(
                    "element {k} is not an ad(h_{}) eigenvector for its weight",
                    i + 1
                )));
            }
        }
        if elem.weight.iter().all(|&w| w == 0) {
            spaces.cartan.push(k);
        } else {
            spaces
                .by_weight
                .entry(elem.weight.clone())
                .or_default()
                .push(k);
        }
    }
    Ok(spaces)
}

/// The triangular pieces (𝔫⁻, 𝔥, 𝔫⁺) as index sets into the basis.
pub fn triangular_decomposition(basis: &SuperBasis) -> (Vec<usize>, Vec<usize>, Vec<usize>) {
    let mut n_minus = Vec::new();
    let mut cartan = Vec::new();
    let mut n_plus = Vec::new();
    for (k, elem) in basis.elements.iter().enumerate() {
        if elem.weight.iter().all(|&w| w == 0) {
            cartan.push(k);
        } else if elem.weight.iter().all(|&w| w >= 0) {
            n_plus.push(k);
        } else if elem.weight.iter().all(|&w| w <= 0) {
            n_minus.push(k);
        } else {
            // mixed-sign weights cannot arise from a base; keep them visible
            cartan.push(k);
        }
    }
    (n_minus, cartan, n_plus)
}

/// Structure constants over a canonical ordering: Cartan generators
/// h_1..h_n first, then e_α over positive roots in canonical root order,
/// then f_α in the same root order. Weights are base-coefficient vectors,
/// `None` on the Cartan part.
#[derive(Clone, Debug)]
pub struct StructureTable {
    pub dim: usize,
    pub labels: Vec<String>,
    pub parities: Vec<u8>,
    pub weights: Vec<Option<Vec<i64>>>,
    /// brackets[i][j] = coordinates of [x_i, x_j] over the basis.
    pub brackets: Vec<Vec<SparseVec>>,
}

impl StructureTable {
    pub fn constant(&self, i: usize, j: usize, k: usize) -> Rat {
        self.brackets[i][j]
            .get(k)
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    /// Sparse triples (i, j, k, c) with c ≠ 0, in lexicographic order.
    pub fn constants(&self) -> Vec<(usize, usize, usize, Rat)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                for (k, c) in &self.brackets[i][j].entries {
                    out.push((i, j, *k, c.clone()));
                }
            }
        }
        out
    }

    /// [v, x_j] for a coordinate vector v.
    pub fn bracket_vec_elem(&self, v: &SparseVec, j: usize) -> SparseVec {
        let mut acc = SparseVec::new();
        for (i, c) in &v.entries {
            acc = acc.axpy(c, &self.brackets[*i][j]);
        }
        acc
    }

    /// Super-antisymmetry c_ij^k = −(−1)^{p_i p_j} c_ji^k for all pairs.
    pub fn check_super_antisymmetry(&self) -> Vec<String> {
        let mut failures = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let sign = if self.parities[i] == 1 && self.parities[j] == 1 {
                    rational::one()
                } else {
                    -rational::one()
                };
                let expected = self.brackets[j][i].scale(&sign);
                if self.brackets[i][j] != expected {
                    failures.push(format!("[x_{i},x_{j}] ≠ −(−1)^{{p_i p_j}}[x_{j},x_{i}]"));
                }
            }
        }
        failures
    }

    /// Super Jacobi residual [x_i,[x_j,x_k]] − [[x_i,x_j],x_k]
    /// − (−1)^{p_i p_j} [x_j,[x_i,x_k]] over all triples.
    pub fn check_super_jacobi(&self) -> Vec<String> {
        let mut failures = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let sign = if self.parities[i] == 1 && self.parities[j] == 1 {
                    -rational::one()
                } else {
                    rational::one()
                };
                for k in 0..self.dim {
                    let t1 = self.bracket_left(i, &self.brackets[j][k]);
                    let t2 = self.bracket_vec_elem(&self.brackets[i][j], k);
                    let t3 = self.bracket_left(j, &self.brackets[i][k]).scale(&sign);
                    let residual = t1.axpy(&-rational::one(), &t2).axpy(&-rational::one(), &t3);
                    if !residual.is_zero() {
                        failures.push(format!("jacobi residual nonzero at ({i},{j},{k})"));
                    }
                }
            }
        }
        failures
    }

    /// [x_i, v] for a coordinate vector v.
    pub fn bracket_left(&self, i: usize, v: &SparseVec) -> SparseVec {
        let mut acc = SparseVec::new();
        for (j, c) in &v.entries {
            acc = acc.axpy(c, &self.brackets[i][*j]);
        }
        acc
    }

    /// Weight grading: the bracket of weight-μ and weight-ν elements lies in
    /// weight μ+ν (or vanishes when μ+ν is not a weight).
    pub fn check_weight_additivity(&self) -> Vec<String> {
        let mut failures = Vec::new();
        let zero_weight = |w: &Option<Vec<i64>>| -> Vec<i64> {
            w.clone().unwrap_or_else(|| {
                vec![0; self.weights.iter().flatten().next().map_or(0, Vec::len)]
            })
        };
        for i in 0..self.dim {
            for j in 0..self.dim {
                let wi = zero_weight(&self.weights[i]);
                let wj = zero_weight(&self.weights[j]);
                if wi.is_empty() || wj.is_empty() {
                    continue;
                }
                let sum: Vec<i64> = wi.iter().zip(&wj).map(|(a, b)| a + b).collect();
                for (k, _) in &self.brackets[i][j].entries {
                    let wk = zero_weight(&self.weights[*k]);
                    if wk != sum {
                        failures.push(format!(
                            "bracket ({i},{j}) hits weight {wk:?}, expected {sum:?}"
                        ));
                    }
                }
            }
        }
        failures
    }

    /// Block-diagonal direct sum; the result is never simple.
    pub fn direct_sum(&self, other: &StructureTable) -> StructureTable {
        let dim = self.dim + other.dim;
        let wl = self.weights.iter().flatten().next().map_or(0, Vec::len);
        let wr = other.weights.iter().flatten().next().map_or(0, Vec::len);
        let mut labels: Vec<String> = self.labels.iter().map(|l| format!("left:{l}")).collect();
        labels.extend(other.labels.iter().map(|l| format!("right:{l}")));
        let mut parities = self.parities.clone();
        parities.extend_from_slice(&other.parities);
        let pad = |w: &Option<Vec<i64>>, left: bool| -> Option<Vec<i64>> {
            w.as_ref().map(|w| {
                let mut out = Vec::with_capacity(wl + wr);
                if left {
                    out.extend_from_slice(w);
                    out.extend(std::iter::repeat_n(0, wr));
                } else {
                    out.extend(std::iter::repeat_n(0, wl));
                    out.extend_from_slice(w);
                }
                out
            })
        };
        let mut weights: Vec<Option<Vec<i64>>> =
            self.weights.iter().map(|w| pad(w, true)).collect();
        weights.extend(other.weights.iter().map(|w| pad(w, false)));

        let mut brackets = vec![vec![SparseVec::new(); dim]; dim];
        for i in 0..self.dim {
            for j in 0..self.dim {
                brackets[i][j] = self.brackets[i][j].clone();
            }
        }
        for i in 0..other.dim {
            for j in 0..other.dim {
                brackets[self.dim + i][self.dim + j] = SparseVec {
                    entries: other.brackets[i][j]
                        .entries
                        .iter()
                        .map(|(k, c)| (self.dim + k, c.clone()))
                        .collect(),
                };
            }
        }
        StructureTable {
            dim,
            labels,
            parities,
            weights,
            brackets,
        }
    }

    /// Smallest subspace containing the seed vector and closed under the
    /// adjoint action of every basis element. Returns its echelon.
    pub fn ideal_closure_of(&self, seed: &SparseVec) -> Echelon {
        let mut ech = Echelon::new();
        let mut queue: VecDeque<SparseVec> = VecDeque::new();
        if ech.insert(seed) {
            queue.push_back(seed.clone());
        }
        while let Some(v) = queue.pop_front() {
            for j in 0..self.dim {
                let w = self.bracket_vec_elem(&v, j);
                if !w.is_zero() && ech.insert(&w) {
                    queue.push_back(w);
                }
            }
        }
        ech
    }

    /// Closure from the k-th basis element.
    pub fn ideal_closure(&self, k: usize) -> Echelon {
        self.ideal_closure_of(&SparseVec::unit(k))
    }

    /// True iff the bracket is nonzero and every basis element generates the
    /// whole algebra as an ideal.
    pub fn is_simple(&self) -> bool {
        let nonabelian =
            (0..self.dim).any(|i| (0..self.dim).any(|j| !self.brackets[i][j].is_zero()));
        if !nonabelian {
            return false;
        }
        (0..self.dim).all(|k| self.ideal_closure(k).rank() == self.dim)
    }

    pub fn even_indices(&self) -> Vec<usize> {
        (0..self.dim).filter(|&i| self.parities[i] == 0).collect()
    }

    pub fn odd_indices(&self) -> Vec<usize> {
        (0..self.dim).filter(|&i| self.parities[i] == 1).collect()
    }
}

/// Outcome of the bracket-relation checks between the graded pieces.
#[derive(Clone, Debug)]
pub struct BracketReport {
    pub even_dim: usize,
    pub odd_dim: usize,
    pub odd_bracket_rank: usize,
    pub mixed_bracket_rank: usize,
    pub faithful: bool,
}

impl BracketReport {
    /// [𝔤₁,𝔤₁] = 𝔤₀
    pub fn odd_generates_even(&self) -> bool {
        self.odd_bracket_rank == self.even_dim
    }

    /// [𝔤₀,𝔤₁] = 𝔤₁
    pub fn even_acts_onto_odd(&self) -> bool {
        self.mixed_bracket_rank == self.odd_dim
    }

    pub fn all_hold(&self) -> bool {
        self.odd_generates_even() && self.even_acts_onto_odd() && self.faithful
    }
}

/// Verifies [𝔤₁,𝔤₁] = 𝔤₀, [𝔤₀,𝔤₁] = 𝔤₁ and faithfulness of the even part on
/// the odd part, as exact subspace computations in basis coordinates.
pub fn check_bracket_relations(table: &StructureTable) -> BracketReport {
    let even = table.even_indices();
    let odd = table.odd_indices();

    let mut odd_span = Echelon::new();
    for &i in &odd {
        for &j in &odd {
            odd_span.insert(&table.brackets[i][j]);
        }
    }

    let mut mixed_span = Echelon::new();
    for &i in &even {
        for &j in &odd {
            mixed_span.insert(&table.brackets[i][j]);
        }
    }

    // kernel of 𝔤₀ → Hom(𝔤₁, 𝔤): stack the action columns per even element
    let mut action = Echelon::new();
    let mut faithful = true;
    for &i in &even {
        let mut stacked = Vec::new();
        for (pos, &j) in odd.iter().enumerate() {
            for (k, c) in &table.brackets[i][j].entries {
                stacked.push((pos * table.dim + k, c.clone()));
            }
        }
        if !action.insert(&SparseVec::from_entries(stacked)) {
            faithful = false;
        }
    }

    BracketReport {
        even_dim: even.len(),
        odd_dim: odd.len(),
        odd_bracket_rank: odd_span.rank(),
        mixed_bracket_rank: mixed_span.rank(),
        faithful,
    }
}

/// Builds the structure table from a generated basis. The Cartan part is
/// ordered h_1..h_n (the actual operators); each root space is represented
/// by its first-discovered Lie monomial.
pub fn structure_constants(sys: &GrsSystem, basis: &SuperBasis) -> Result<StructureTable> {
    let n = sys.base_len();
    let mut order: Vec<(SparseOperator, String, u8, Option<Vec<i64>>)> = Vec::new();

    for i in 0..n {
        order.push((basis.ops.h[i].clone(), format!("h{}", i + 1), 0, None));
    }

    let mut positive: Vec<usize> = sys.positive_ids().collect();
    positive.sort_by_key(|&id| (sys.height_id(id), sys.root(id).clone()));

    let find_rep = |weight: &[i64]| -> Result<&AlgebraElement> {
        let hits = basis.elements_with_weight(weight);
        match hits.len() {
            1 => Ok(&basis.elements[hits[0]]),
            0 => Err(Error::ClosureFailure(format!(
                "no basis element of weight {weight:?}"
            ))),
            _ => Err(Error::ClosureFailure(format!(
                "root space of weight {weight:?} has dimension {}",
                hits.len()
            ))),
        }
    };

    for &id in &positive {
        let w = sys.base_coords_id(id).to_vec();
        let elem = find_rep(&w)?;
        let label: Vec<String> = w.iter().map(|k| k.to_string()).collect();
        order.push((
            elem.op.clone(),
            format!("e({})", label.join(",")),
            elem.parity,
            Some(w),
        ));
    }
    for &id in &positive {
        let w: Vec<i64> = sys.base_coords_id(id).iter().map(|k| -k).collect();
        let elem = find_rep(&w)?;
        let label: Vec<String> = sys
            .base_coords_id(id)
            .iter()
            .map(|k| k.to_string())
            .collect();
        order.push((
            elem.op.clone(),
            format!("f({})", label.join(",")),
            elem.parity,
            Some(w),
        ));
    }

    if order.len() != basis.elements.len() {
        return Err(Error::ClosureFailure(format!(
            "basis has {} elements but the root catalog predicts {}",
            basis.elements.len(),
            order.len()
        )));
    }

    let flat: Vec<SparseVec> = order.iter().map(|(op, ..)| op.flatten()).collect();
    let solver = SpanSolver::new(&flat)
        .ok_or_else(|| Error::ClosureFailure("canonical basis is linearly dependent".into()))?;

    let dim = order.len();
    let mut brackets = vec![vec![SparseVec::new(); dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            let br = operators::super_commutator(&order[i].0, &order[j].0);
            if br.is_zero() {
                continue;
            }
            let coords = solver.express(&br.flatten()).ok_or_else(|| {
                Error::ClosureFailure(format!(
                    "[{}, {}] falls outside the generated span",
                    order[i].1, order[j].1
                ))
            })?;
            brackets[i][j] = SparseVec::from_dense(&coords);
        }
    }

    Ok(StructureTable {
        dim,
        labels: order.iter().map(|(_, l, ..)| l.clone()).collect(),
        parities: order.iter().map(|(_, _, p, _)| *p).collect(),
        weights: order.iter().map(|(_, _, _, w)| w.clone()).collect(),
        brackets,
    })
}

/// The conjugation automorphism g ↦ ω g ω⁻¹ expressed over the basis:
/// column j holds the coordinates of ω x_j ω⁻¹. Errors if a conjugate
/// escapes the span.
pub fn omega_tilde(basis: &SuperBasis) -> Result<Vec<Vec<Rat>>> {
    let flat: Vec<SparseVec> = basis.elements.iter().map(|e| e.op.flatten()).collect();
    let solver = SpanSolver::new(&flat)
        .ok_or_else(|| Error::ClosureFailure("basis is linearly dependent".into()))?;
    let mut cols = Vec::with_capacity(basis.dim());
    for elem in &basis.elements {
        let conj = operators::conjugate_by_omega(&basis.ops, &elem.op);
        let coords = solver
            .express(&conj.flatten())
            .ok_or_else(|| Error::EscapesSpan("ω x ω⁻¹ is not in the generated algebra".into()))?;
        cols.push(coords);
    }
    Ok(cols)
}

/// Matrix product of column-major square matrices of rationals.
pub fn mat_mul(a: &[Vec<Rat>], b: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let n = a.len();
    let mut out = vec![vec![Rat::zero(); n]; n];
    for (j, bcol) in b.iter().enumerate() {
        for (k, bkj) in bcol.iter().enumerate() {
            if bkj.is_zero() {
                continue;
            }
            for i in 0..n {
                if a[k][i].is_zero() {
                    continue;
                }
                let t = &a[k][i] * bkj;
                out[j][i] += t;
            }
        }
    }
    out
}
