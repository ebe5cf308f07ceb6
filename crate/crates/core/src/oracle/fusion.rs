use std::collections::{BTreeMap, HashMap, VecDeque};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{rat, EchelonBasis, Rat, SparseMatrix};
use crate::qseries::{GradedCharacter, GradedDecomposition};
use crate::weights::{weyl_dim, DominantWeight, Weight};

use super::irrep::{realization, Generator, IrrepRealization};

/// Largest `dim V(λ)·dim V(μ)` the oracle accepts by default.
pub const DEFAULT_DIM_BOUND: u64 = 400;

/// Distinct evaluation points `z₁ ≠ z₂`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EvaluationParams {
    z1: Rat,
    z2: Rat,
}

impl EvaluationParams {
    pub fn new(z1: Rat, z2: Rat) -> Result<Self> {
        if z1 == z2 {
            return Err(Error::EqualEvaluationPoints);
        }
        Ok(EvaluationParams { z1, z2 })
    }

    pub fn from_integers(z1: i64, z2: i64) -> Result<Self> {
        Self::new(rat(z1), rat(z2))
    }

    pub fn z1(&self) -> &Rat {
        &self.z1
    }

    pub fn z2(&self) -> &Rat {
        &self.z2
    }
}

impl Default for EvaluationParams {
    fn default() -> Self {
        EvaluationParams { z1: rat(0), z2: rat(1) }
    }
}

impl std::fmt::Display for EvaluationParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{},{}", self.z1, self.z2)
    }
}

/// `a·(X ⊗ 1) + b·(1 ⊗ Y)` on `V(λ) ⊗ V(μ)`.
struct PairOperator {
    left: SparseMatrix,
    right: SparseMatrix,
    a: Rat,
    b: Rat,
    shift: Weight,
}

struct Block {
    indices: Vec<usize>,
    local: HashMap<usize, usize>,
    basis: EchelonBasis,
}

struct TensorSpace<'a> {
    right: &'a IrrepRealization,
    blocks: HashMap<Weight, Block>,
    rank: usize,
}

impl<'a> TensorSpace<'a> {
    fn new(left: &'a IrrepRealization, right: &'a IrrepRealization) -> Self {
        let mut blocks: HashMap<Weight, Block> = HashMap::new();
        for (i, wi) in left.weights.iter().enumerate() {
            for (j, wj) in right.weights.iter().enumerate() {
                let idx = i * right.dim + j;
                let b = blocks.entry(*wi + *wj).or_insert_with(|| Block {
                    indices: Vec::new(),
                    local: HashMap::new(),
                    basis: EchelonBasis::new(0),
                });
                b.local.insert(idx, b.indices.len());
                b.indices.push(idx);
            }
        }
        for b in blocks.values_mut() {
            b.basis = EchelonBasis::new(b.indices.len());
        }
        TensorSpace { right, blocks, rank: 0 }
    }

    fn apply(&self, op: &PairOperator, w: Weight, v: &[Rat]) -> Option<(Weight, Vec<Rat>)> {
        let target = w + op.shift;
        let tb = self.blocks.get(&target)?;
        let d2 = self.right.dim;
        let mut out = vec![Rat::zero(); tb.indices.len()];
        for (k, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let idx = self.blocks[&w].indices[k];
            let (i, j) = (idx / d2, idx % d2);
            if !op.a.is_zero() {
                for (i2, x) in op.left.column(i) {
                    out[tb.local[&(i2 * d2 + j)]] += c * x * &op.a;
                }
            }
            if !op.b.is_zero() {
                for (j2, x) in op.right.column(j) {
                    out[tb.local[&(i * d2 + j2)]] += c * x * &op.b;
                }
            }
        }
        out.iter().any(|x| !x.is_zero()).then_some((target, out))
    }

    /// Adds `v` to the current space; returns the new basis row if it was
    /// independent.
    fn insert(&mut self, w: Weight, v: Vec<Rat>) -> Option<Vec<Rat>> {
        let row = self.blocks.get_mut(&w)?.basis.insert(v)?.to_vec();
        self.rank += 1;
        Some(row)
    }

    fn ranks(&self) -> HashMap<Weight, usize> {
        self.blocks.iter().map(|(w, b)| (*w, b.basis.rank())).collect()
    }

    /// Closes under the degree-0 operators, starting from the new vectors
    /// in `queue`, and returns everything that was added.
    fn close(&mut self, ops: &[PairOperator], mut queue: VecDeque<(Weight, Vec<Rat>)>) -> Vec<(Weight, Vec<Rat>)> {
        let mut added = queue.iter().cloned().collect::<Vec<_>>();
        while let Some((w, v)) = queue.pop_front() {
            for op in ops {
                if let Some((t, u)) = self.apply(op, w, &v) {
                    if let Some(row) = self.insert(t, u) {
                        added.push((t, row.clone()));
                        queue.push_back((t, row));
                    }
                }
            }
        }
        added
    }
}

fn sl3_basis(r: &IrrepRealization) -> Vec<(SparseMatrix, Weight)> {
    let mut out: Vec<(SparseMatrix, Weight)> =
        Generator::ALL.iter().map(|g| (r.action(*g).clone(), g.weight())).collect();
    out.push((r.x_theta_plus(), Weight::new(1, 1)));
    out.push((r.x_theta_minus(), Weight::new(-1, -1)));
    out
}

/// The associated graded character of `U(g[t])·(v_λ ⊗ v_μ)` inside the
/// evaluation module `V(λ, z₁) ⊗ V(μ, z₂)`.
pub fn fusion_graded_character(
    lambda: DominantWeight,
    mu: DominantWeight,
    z: &EvaluationParams,
) -> Result<GradedCharacter> {
    fusion_graded_character_bounded(lambda, mu, z, DEFAULT_DIM_BOUND)
}

pub fn fusion_graded_character_bounded(
    lambda: DominantWeight,
    mu: DominantWeight,
    z: &EvaluationParams,
    bound: u64,
) -> Result<GradedCharacter> {
    let total = weyl_dim(lambda) * weyl_dim(mu);
    if total > bound {
        return Err(Error::DimensionBound { dim: total, bound });
    }
    let left = realization(lambda)?;
    let right = realization(mu)?;
    let mut space = TensorSpace::new(&left, &right);

    let lb = sl3_basis(&left);
    let rb = sl3_basis(&right);
    let degree = |a: &Rat, b: &Rat, only_roots: bool| -> Vec<PairOperator> {
        lb.iter()
            .zip(&rb)
            .filter(|((_, w), _)| !only_roots || *w != Weight::ZERO)
            .map(|((x, w), (y, _))| PairOperator {
                left: x.clone(),
                right: y.clone(),
                a: a.clone(),
                b: b.clone(),
                shift: *w,
            })
            .collect()
    };
    // Root vectors generate g, so they suffice for the degree-0 closure.
    let deg0 = degree(&Rat::one(), &Rat::one(), true);
    let deg1 = degree(&z.z1, &z.z2, false);

    let top = lambda.weight() + mu.weight();
    let mut start = vec![Rat::zero(); space.blocks[&top].indices.len()];
    start[space.blocks[&top].local[&(left.highest_vector_index * right.dim + right.highest_vector_index)]] = Rat::one();
    let row = space.insert(top, start).expect("nonzero start");

    let mut terms: BTreeMap<(Weight, usize), u64> = BTreeMap::new();
    let mut previous: HashMap<Weight, usize> = HashMap::new();
    let mut record = |space: &TensorSpace, grade: usize, previous: &mut HashMap<Weight, usize>| {
        for (w, r) in space.ranks() {
            let before = previous.get(&w).copied().unwrap_or(0);
            if r > before {
                terms.insert((w, grade), (r - before) as u64);
            }
        }
        *previous = space.ranks();
    };

    let mut fresh = space.close(&deg0, VecDeque::from([(top, row)]));
    record(&space, 0, &mut previous);
    let max_grade = (lambda.height() + mu.height()) as usize;
    let mut grade = 0;
    while (space.rank as u64) < total {
        grade += 1;
        if grade > max_grade {
            return Err(Error::FiltrationStalled(grade));
        }
        let mut queue = VecDeque::new();
        for (w, v) in &fresh {
            for op in &deg1 {
                if let Some((t, u)) = space.apply(op, *w, v) {
                    if let Some(row) = space.insert(t, u) {
                        queue.push_back((t, row));
                    }
                }
            }
        }
        if queue.is_empty() {
            return Err(Error::FiltrationStalled(grade));
        }
        fresh = space.close(&deg0, queue);
        record(&space, grade, &mut previous);
    }
    Ok(GradedCharacter::from_terms(terms))
}

/// Each graded piece of the oracle output, peeled into irreducibles.
pub fn graded_decompose_oracle(
    lambda: DominantWeight,
    mu: DominantWeight,
    z: &EvaluationParams,
) -> Result<GradedDecomposition> {
    fusion_graded_character(lambda, mu, z)?.decompose()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::QPolynomial;

    fn dw(a: u32, b: u32) -> DominantWeight {
        DominantWeight::new(a, b)
    }

    fn q(c: &[u64]) -> QPolynomial {
        QPolynomial::from_coeffs(c.to_vec())
    }

    #[test]
    fn equal_points_are_rejected() {
        assert_eq!(EvaluationParams::from_integers(3, 3), Err(Error::EqualEvaluationPoints));
    }

    #[test]
    fn trivial_pair() {
        let z = EvaluationParams::from_integers(4, -1).unwrap();
        let g = fusion_graded_character(dw(0, 0), dw(0, 0), &z).unwrap();
        assert_eq!(g, GradedCharacter::from_terms([((Weight::ZERO, 0), 1)]));
    }

    #[test]
    fn small_oracle_outputs() {
        let z = EvaluationParams::default();
        let g = fusion_graded_character(dw(1, 0), dw(1, 0), &z).unwrap();
        assert_eq!(g.mass(), 9);
        assert_eq!(g.grade_mass(0), 6);
        assert_eq!(
            g.decompose().unwrap(),
            GradedDecomposition::from_summands([(dw(2, 0), q(&[1])), (dw(0, 1), q(&[0, 1]))])
        );
        let d = graded_decompose_oracle(dw(1, 0), dw(0, 1), &z).unwrap();
        assert_eq!(d, GradedDecomposition::from_summands([(dw(1, 1), q(&[1])), (dw(0, 0), q(&[0, 1]))]));
    }

    #[test]
    fn bound_is_enforced() {
        let z = EvaluationParams::default();
        assert!(matches!(
            fusion_graded_character_bounded(dw(1, 1), dw(1, 1), &z, 63),
            Err(Error::DimensionBound { dim: 64, bound: 63 })
        ));
    }
}
