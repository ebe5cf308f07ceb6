//! Exact-rational linear algebra for the oracle: sparse matrices stored by
//! column and incrementally built echelon bases.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

/// A square matrix stored as sparse columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    dim: usize,
    cols: Vec<Vec<(usize, Rat)>>,
}

impl SparseMatrix {
    pub fn zero(dim: usize) -> Self {
        SparseMatrix { dim, cols: vec![Vec::new(); dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.cols[i].push((i, Rat::one()));
        }
        m
    }

    /// Builds a matrix from columns; zero entries are dropped and rows sorted.
    pub fn from_columns(dim: usize, cols: Vec<Vec<(usize, Rat)>>) -> Self {
        assert_eq!(cols.len(), dim);
        let cols = cols
            .into_iter()
            .map(|mut c| {
                c.retain(|(i, v)| {
                    assert!(*i < dim);
                    !v.is_zero()
                });
                c.sort_by_key(|e| e.0);
                c
            })
            .collect();
        SparseMatrix { dim, cols }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn column(&self, j: usize) -> &[(usize, Rat)] {
        &self.cols[j]
    }

    pub fn get(&self, i: usize, j: usize) -> Rat {
        self.cols[j]
            .iter()
            .find(|e| e.0 == i)
            .map_or_else(Rat::zero, |e| e.1.clone())
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn apply(&self, v: &[Rat]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.dim];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, a) in &self.cols[j] {
                out[*i] += a * x;
            }
        }
        out
    }

    pub fn mul(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.dim, rhs.dim);
        let cols = rhs
            .cols
            .iter()
            .map(|col| {
                let mut acc = vec![Rat::zero(); self.dim];
                for (k, b) in col {
                    for (i, a) in &self.cols[*k] {
                        acc[*i] += a * b;
                    }
                }
                acc.into_iter().enumerate().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        SparseMatrix { dim: self.dim, cols }
    }

    /// `self·a + other·b`.
    pub fn combine(&self, a: &Rat, other: &SparseMatrix, b: &Rat) -> SparseMatrix {
        assert_eq!(self.dim, other.dim);
        let cols = (0..self.dim)
            .map(|j| {
                let mut acc = vec![Rat::zero(); self.dim];
                for (i, x) in &self.cols[j] {
                    acc[*i] += x * a;
                }
                for (i, x) in &other.cols[j] {
                    acc[*i] += x * b;
                }
                acc.into_iter().enumerate().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        SparseMatrix { dim: self.dim, cols }
    }

    pub fn commutator(&self, other: &SparseMatrix) -> SparseMatrix {
        self.mul(other).combine(&Rat::one(), &other.mul(self), &-Rat::one())
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }
}

/// A basis of a subspace of `Q^n` kept in echelon form: every row has a
/// pivot equal to one and vanishes at the pivots of earlier rows.
#[derive(Clone, Debug, Default)]
pub struct EchelonBasis {
    len: usize,
    rows: Vec<(usize, Vec<Rat>)>,
}

impl EchelonBasis {
    pub fn new(len: usize) -> Self {
        EchelonBasis { len, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.len
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.len
    }

    /// Reduces `v` against the basis in place.
    pub fn reduce(&self, v: &mut [Rat]) {
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let c = v[*p].clone();
            for (x, r) in v.iter_mut().zip(row).skip(*p) {
                if !r.is_zero() {
                    *x -= &c * r;
                }
            }
        }
    }

    /// Adds `v` if it is independent; returns the reduced, normalized row
    /// that was added.
    pub fn insert(&mut self, mut v: Vec<Rat>) -> Option<&[Rat]> {
        assert_eq!(v.len(), self.len);
        self.reduce(&mut v);
        let p = v.iter().position(|x| !x.is_zero())?;
        let inv = v[p].recip();
        for x in v.iter_mut().skip(p) {
            *x *= &inv;
        }
        self.rows.push((p, v));
        self.rows.last().map(|r| r.1.as_slice())
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        let mut v = v.to_vec();
        self.reduce(&mut v);
        v.iter().all(Zero::is_zero)
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rat]> {
        self.rows.iter().map(|r| r.1.as_slice())
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|r| r.0)
    }

    /// Coordinates of `v` in the basis, or `None` if `v` is not in the span.
    pub fn coordinates(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        let mut v = v.to_vec();
        let mut coords = Vec::with_capacity(self.rows.len());
        for (p, row) in &self.rows {
            let c = v[*p].clone();
            if !c.is_zero() {
                for (x, r) in v.iter_mut().zip(row).skip(*p) {
                    *x -= &c * r;
                }
            }
            coords.push(c);
        }
        v.iter().all(Zero::is_zero).then_some(coords)
    }
}
