use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{rat, EchelonBasis, Rat, SparseMatrix};
use crate::weights::{weyl_dim, DominantWeight, Weight};

/// The Chevalley generators, in the order `x⁺₁, x⁻₁, x⁺₂, x⁻₂, h₁, h₂`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    X1Plus,
    X1Minus,
    X2Plus,
    X2Minus,
    H1,
    H2,
}

impl Generator {
    pub const ALL: [Generator; 6] = [
        Generator::X1Plus,
        Generator::X1Minus,
        Generator::X2Plus,
        Generator::X2Minus,
        Generator::H1,
        Generator::H2,
    ];

    /// The weight by which the generator shifts.
    pub fn weight(self) -> Weight {
        match self {
            Generator::X1Plus => Weight::new(2, -1),
            Generator::X1Minus => Weight::new(-2, 1),
            Generator::X2Plus => Weight::new(-1, 2),
            Generator::X2Minus => Weight::new(1, -2),
            Generator::H1 | Generator::H2 => Weight::ZERO,
        }
    }

    /// `(i, j)` with the generator equal to `E_ij`, or `None` for the Cartan part.
    fn matrix_unit(self) -> Option<(usize, usize)> {
        match self {
            Generator::X1Plus => Some((0, 1)),
            Generator::X1Minus => Some((1, 0)),
            Generator::X2Plus => Some((1, 2)),
            Generator::X2Minus => Some((2, 1)),
            Generator::H1 | Generator::H2 => None,
        }
    }
}

/// `V(λ)` with an explicit basis of weight vectors and the generator action.
#[derive(Clone, Debug)]
pub struct IrrepRealization {
    pub highest_weight: DominantWeight,
    pub dim: usize,
    pub weights: Vec<Weight>,
    pub highest_vector_index: usize,
    action: [SparseMatrix; 6],
}

impl IrrepRealization {
    pub fn action(&self, g: Generator) -> &SparseMatrix {
        &self.action[g as usize]
    }

    /// `x⁺_θ = [x⁺₁, x⁺₂]`.
    pub fn x_theta_plus(&self) -> SparseMatrix {
        self.action(Generator::X1Plus).commutator(self.action(Generator::X2Plus))
    }

    /// `x⁻_θ = −[x⁻₁, x⁻₂]`.
    pub fn x_theta_minus(&self) -> SparseMatrix {
        self.action(Generator::X2Minus).commutator(self.action(Generator::X1Minus))
    }

    /// Weight multiplicities of the basis.
    pub fn census(&self) -> BTreeMap<Weight, u64> {
        let mut out = BTreeMap::new();
        for w in &self.weights {
            *out.entry(*w).or_insert(0) += 1;
        }
        out
    }
}

/// Exponents of `x₁, x₂, x₃, y₁₂, y₁₃, y₂₃` with `y_kl = x_k ∧ x_l`.
type Monomial = [u32; 6];

const Y_INDEX: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

fn monomial_weight(m: &Monomial) -> Weight {
    let mut n = [0i64; 3];
    for k in 0..3 {
        n[k] += m[k] as i64;
    }
    for (s, (k, l)) in Y_INDEX.iter().enumerate() {
        n[*k] += m[3 + s] as i64;
        n[*l] += m[3 + s] as i64;
    }
    Weight::new(n[0] - n[1], n[1] - n[2])
}

/// Monomials of degree `d` in three variables starting at `offset`.
fn compositions(d: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for a in 0..=d {
        for b in 0..=d - a {
            out.push([a, b, d - a - b]);
        }
    }
    out
}

/// `(sign, slot)` of `y_ab` among the `y` variables, or `None` when `a = b`.
fn y_slot(a: usize, b: usize) -> Option<(i64, usize)> {
    let (lo, hi, sign) = if a < b { (a, b, 1) } else { (b, a, -1) };
    if lo == hi {
        return None;
    }
    let slot = Y_INDEX.iter().position(|p| *p == (lo, hi))?;
    Some((sign, 3 + slot))
}

/// `E_ij` acting as a derivation on one monomial.
fn apply_unit(i: usize, j: usize, m: &Monomial, coeff: &Rat, out: &mut HashMap<Monomial, Rat>) {
    let mut emit = |from: usize, to: Option<(i64, usize)>, mult: i64| {
        let Some((sign, to)) = to else { return };
        let mut n = *m;
        n[from] -= 1;
        n[to] += 1;
        let c = coeff * rat(sign * mult);
        let e = out.entry(n).or_insert_with(Rat::zero);
        *e += c;
    };
    if m[j] > 0 {
        emit(j, Some((1, i)), m[j] as i64);
    }
    for (s, (k, l)) in Y_INDEX.iter().enumerate() {
        let e = m[3 + s];
        if e == 0 {
            continue;
        }
        if *k == j {
            emit(3 + s, y_slot(i, *l), e as i64);
        }
        if *l == j {
            emit(3 + s, y_slot(*k, i), e as i64);
        }
    }
}

struct WeightSpace {
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    basis: EchelonBasis,
}

/// Builds `V(λ)` as the cyclic span of `x₁^λ₁ y₁₂^λ₂` inside
/// `Sym^λ₁(C³) ⊗ Sym^λ₂(Λ²C³)`.
pub fn realize_irrep(lambda: DominantWeight) -> Result<IrrepRealization> {
    let (a, b) = (lambda.c1() as u32, lambda.c2() as u32);
    let mut spaces: BTreeMap<Weight, WeightSpace> = BTreeMap::new();
    for x in compositions(a) {
        for y in compositions(b) {
            let m = [x[0], x[1], x[2], y[0], y[1], y[2]];
            let w = monomial_weight(&m);
            let s = spaces.entry(w).or_insert_with(|| WeightSpace {
                monomials: Vec::new(),
                index: HashMap::new(),
                basis: EchelonBasis::new(0),
            });
            s.index.insert(m, s.monomials.len());
            s.monomials.push(m);
        }
    }
    for s in spaces.values_mut() {
        s.basis = EchelonBasis::new(s.monomials.len());
    }

    let lam = lambda.weight();
    let depth = |w: Weight| (lam - w).height();
    let mut order: Vec<Weight> = spaces.keys().copied().filter(|w| (lam - *w).root_coords().is_some()).collect();
    order.sort_by_key(|w| (depth(*w), std::cmp::Reverse(*w)));

    let top: Monomial = [a, 0, 0, b, 0, 0];
    {
        let s = spaces.get_mut(&lam).expect("highest weight space");
        let mut v = vec![Rat::zero(); s.monomials.len()];
        v[s.index[&top]] = Rat::one();
        s.basis.insert(v);
    }

    let lowering = [Generator::X1Minus, Generator::X2Minus];
    for w in &order {
        let rows: Vec<Vec<Rat>> = spaces[w].basis.rows().map(<[Rat]>::to_vec).collect();
        if rows.is_empty() {
            continue;
        }
        for g in lowering {
            let target = *w + g.weight();
            let images: Vec<Vec<Rat>> = rows.iter().map(|r| image(&spaces, *w, r, g, target)).collect();
            if let Some(t) = spaces.get_mut(&target) {
                for v in images {
                    t.basis.insert(v);
                }
            }
        }
    }

    let mut weights = Vec::new();
    let mut offset: HashMap<Weight, usize> = HashMap::new();
    for w in &order {
        offset.insert(*w, weights.len());
        weights.extend(std::iter::repeat_n(*w, spaces[w].basis.rank()));
    }
    let dim = weights.len();
    let expected = weyl_dim(lambda);
    if dim as u64 != expected {
        return Err(Error::RealizationDimension {
            lambda: lam,
            got: dim,
            expected,
        });
    }

    let mut action: Vec<SparseMatrix> = Vec::with_capacity(6);
    for g in Generator::ALL {
        let mut cols = vec![Vec::new(); dim];
        for w in &order {
            let space = &spaces[w];
            for (r, row) in space.basis.rows().enumerate() {
                let col = offset[w] + r;
                match g {
                    Generator::H1 => cols[col].push((col, rat(w.c1))),
                    Generator::H2 => cols[col].push((col, rat(w.c2))),
                    _ => {
                        let target = *w + g.weight();
                        let img = image(&spaces, *w, row, g, target);
                        if img.iter().all(Zero::is_zero) {
                            continue;
                        }
                        let coords = spaces
                            .get(&target)
                            .filter(|_| offset.contains_key(&target))
                            .and_then(|t| t.basis.coordinates(&img))
                            .ok_or(Error::RealizationDimension {
                                lambda: lam,
                                got: dim,
                                expected,
                            })?;
                        for (k, c) in coords.into_iter().enumerate() {
                            if !c.is_zero() {
                                cols[col].push((offset[&target] + k, c));
                            }
                        }
                    }
                }
            }
        }
        action.push(SparseMatrix::from_columns(dim, cols));
    }

    Ok(IrrepRealization {
        highest_weight: lambda,
        dim,
        weights,
        highest_vector_index: 0,
        action: action.try_into().expect("six generators"),
    })
}

/// The image of a weight vector under a root generator, as a dense vector
/// over the monomials of the target weight (empty target: all-zero image).
fn image(spaces: &BTreeMap<Weight, WeightSpace>, w: Weight, row: &[Rat], g: Generator, target: Weight) -> Vec<Rat> {
    let (i, j) = g.matrix_unit().expect("root generator");
    let mut acc = HashMap::new();
    for (k, c) in row.iter().enumerate() {
        if !c.is_zero() {
            apply_unit(i, j, &spaces[&w].monomials[k], c, &mut acc);
        }
    }
    match spaces.get(&target) {
        Some(t) => {
            let mut v = vec![Rat::zero(); t.monomials.len()];
            for (m, c) in acc {
                v[t.index[&m]] += c;
            }
            v
        }
        None => {
            debug_assert!(acc.values().all(Zero::is_zero));
            Vec::new()
        }
    }
}

fn cache() -> &'static RwLock<HashMap<DominantWeight, Arc<IrrepRealization>>> {
    static CACHE: OnceLock<RwLock<HashMap<DominantWeight, Arc<IrrepRealization>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Shared, cached realization of `V(λ)`.
pub fn realization(lambda: DominantWeight) -> Result<Arc<IrrepRealization>> {
    if let Some(r) = cache().read().unwrap().get(&lambda) {
        return Ok(r.clone());
    }
    let r = Arc::new(realize_irrep(lambda)?);
    Ok(cache().write().unwrap().entry(lambda).or_insert(r).clone())
}
