//! Formal characters in `Z[P]` and the tensor-product decomposition oracle.
//!
//! Weight multiplicities of irreducibles come from Freudenthal's recursion,
//! evaluated on dominant weights only and spread over Weyl orbits. Tensor
//! products are decomposed by convolving characters and peeling off
//! irreducible characters one highest weight at a time.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::weights::{weyl_dim, DominantWeight, PositiveRoot, Weight};

/// A finite map from weights to positive multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FormalCharacter {
    terms: BTreeMap<Weight, u64>,
}

impl FormalCharacter {
    /// The character `e(0)` of the trivial module.
    pub fn unit() -> Self {
        FormalCharacter::from_terms([(Weight::ZERO, 1)])
    }

    /// Builds a character, summing repeated weights and dropping zeros.
    pub fn from_terms(terms: impl IntoIterator<Item = (Weight, u64)>) -> Self {
        let mut map = BTreeMap::new();
        for (w, m) in terms {
            *map.entry(w).or_insert(0) += m;
        }
        map.retain(|_, m| *m != 0);
        FormalCharacter { terms: map }
    }

    pub fn get(&self, w: Weight) -> u64 {
        self.terms.get(&w).copied().unwrap_or(0)
    }

    /// Total dimension.
    pub fn mass(&self) -> u64 {
        self.terms.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Terms in lexicographic weight order.
    pub fn iter(&self) -> impl Iterator<Item = (Weight, u64)> + '_ {
        self.terms.iter().map(|(w, m)| (*w, *m))
    }

    pub fn terms(&self) -> &BTreeMap<Weight, u64> {
        &self.terms
    }

    pub fn add_assign_scaled(&mut self, other: &FormalCharacter, scale: u64) {
        if scale == 0 {
            return;
        }
        for (w, m) in other.iter() {
            *self.terms.entry(w).or_insert(0) += m * scale;
        }
    }

    /// True when the multiplicity map is invariant under both simple reflections.
    pub fn is_weyl_invariant(&self) -> bool {
        self.iter()
            .all(|(w, m)| self.get(w.reflect1()) == m && self.get(w.reflect2()) == m)
    }
}

/// Multiplicities of the dominant weights of `V(λ)`, keyed by weight.
type DominantMultiplicities = BTreeMap<Weight, u64>;

fn dominant_cache() -> &'static RwLock<HashMap<DominantWeight, Arc<DominantMultiplicities>>> {
    static CACHE: OnceLock<RwLock<HashMap<DominantWeight, Arc<DominantMultiplicities>>>> =
        OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Dominant weights `ν ≤ λ`, sorted so that higher weights come first.
fn dominant_weights_below(lambda: DominantWeight) -> Vec<(i64, Weight)> {
    let h = lambda.height();
    let top = lambda.weight();
    let mut out = Vec::new();
    for a in 0..=h {
        for b in 0..=(h - a) {
            let nu = top - PositiveRoot::Alpha1.weight().scale(a) - PositiveRoot::Alpha2.weight().scale(b);
            if nu.is_dominant() {
                out.push((a + b, nu));
            }
        }
    }
    out.sort_unstable_by_key(|&(depth, nu)| (depth, std::cmp::Reverse(nu)));
    out
}

fn freudenthal(lambda: DominantWeight) -> DominantMultiplicities {
    let top = lambda.weight();
    let rho = Weight::new(1, 1);
    let norm_top = (top + rho).form3(top + rho);
    let mut mult: DominantMultiplicities = BTreeMap::new();
    for (depth, nu) in dominant_weights_below(lambda) {
        if depth == 0 {
            mult.insert(nu, 1);
            continue;
        }
        let mut numerator: i64 = 0;
        for root in PositiveRoot::ALL {
            let alpha = root.weight();
            let mut k = 1;
            loop {
                let w = nu + alpha.scale(k);
                let dom = w.dominant_conjugate();
                if !top.dominates(dom) {
                    break;
                }
                let m = mult.get(&dom).copied().unwrap_or(0) as i64;
                numerator += m * w.form3(alpha);
                k += 1;
            }
        }
        numerator *= 2;
        let denominator = norm_top - (nu + rho).form3(nu + rho);
        debug_assert!(denominator > 0);
        debug_assert_eq!(numerator % denominator, 0);
        let m = numerator / denominator;
        if m > 0 {
            mult.insert(nu, m as u64);
        }
    }
    mult
}

fn dominant_multiplicities(lambda: DominantWeight) -> Arc<DominantMultiplicities> {
    if let Some(hit) = dominant_cache().read().unwrap().get(&lambda) {
        return Arc::clone(hit);
    }
    let computed = Arc::new(freudenthal(lambda));
    dominant_cache()
        .write()
        .unwrap()
        .entry(lambda)
        .or_insert(computed)
        .clone()
}

/// Multiplicity of the weight `w` in `V(λ)`.
pub fn weight_multiplicity(lambda: DominantWeight, w: Weight) -> u64 {
    let dom = w.dominant_conjugate();
    dominant_multiplicities(lambda).get(&dom).copied().unwrap_or(0)
}

/// The full weight-multiplicity map of `V(λ)`.
pub fn irrep_character(lambda: DominantWeight) -> FormalCharacter {
    let dom = dominant_multiplicities(lambda);
    FormalCharacter::from_terms(
        dom.iter()
            .flat_map(|(&nu, &m)| nu.weyl_orbit().into_iter().map(move |w| (w, m))),
    )
}

/// Convolution in `Z[P]`.
pub fn char_product(a: &FormalCharacter, b: &FormalCharacter) -> FormalCharacter {
    let mut out: HashMap<Weight, u64> = HashMap::with_capacity(a.len() + b.len());
    for (u, x) in a.iter() {
        for (v, y) in b.iter() {
            *out.entry(u + v).or_insert(0) += x * y;
        }
    }
    FormalCharacter::from_terms(out)
}

/// A signed multiplicity table on the dominant weights of a bounding box.
struct DominantTable {
    width: i64,
    height: i64,
    cells: Vec<i64>,
}

impl DominantTable {
    /// Covers dominant weights with coordinates up to `bound`. A dominant
    /// weight below some `ν` has both coordinates at most `|ν|`.
    fn new(bound: Weight) -> Self {
        let (width, height) = (bound.c1 + 1, bound.c2 + 1);
        DominantTable {
            width,
            height,
            cells: vec![0; (width * height) as usize],
        }
    }

    fn index(&self, w: Weight) -> Option<usize> {
        (w.is_dominant() && w.c1 < self.width && w.c2 < self.height)
            .then(|| (w.c1 * self.height + w.c2) as usize)
    }

    fn weight_at(&self, i: usize) -> Weight {
        Weight::new(i as i64 / self.height, i as i64 % self.height)
    }

    /// The nonzero cell of largest height, ties broken toward the
    /// lexicographically largest weight.
    fn top(&self) -> Option<(Weight, i64)> {
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, &m)| m != 0)
            .map(|(i, &m)| (self.weight_at(i), m))
            .max_by_key(|&(w, _)| (w.height(), w))
    }
}

/// Peels irreducible characters off a table holding the dominant part of a
/// `g`-module character.
fn peel(mut table: DominantTable) -> Result<BTreeMap<DominantWeight, u64>> {
    let mut out = BTreeMap::new();
    while let Some((nu, c)) = table.top() {
        if c < 0 {
            return Err(Error::NegativeMultiplicity(nu));
        }
        let hw = DominantWeight::try_from(nu)?;
        for (&w, &m) in dominant_multiplicities(hw).iter() {
            match table.index(w) {
                Some(i) => table.cells[i] -= c * m as i64,
                None => return Err(Error::NegativeMultiplicity(w)),
            }
        }
        out.insert(hw, c as u64);
    }
    Ok(out)
}

/// Decomposes the character of a finite-dimensional `g`-module into
/// irreducibles. Fails if the character is not a nonnegative combination of
/// irreducible characters.
pub fn decompose_character(ch: &FormalCharacter) -> Result<BTreeMap<DominantWeight, u64>> {
    if ch.is_empty() {
        return Ok(BTreeMap::new());
    }
    let top = ch.iter().map(|(w, _)| w.height()).max().unwrap_or(0).max(0);
    let mut table = DominantTable::new(Weight::new(top, top));
    for (w, m) in ch.iter() {
        if let Some(i) = table.index(w) {
            table.cells[i] += m as i64;
        }
    }
    let parts = peel(table)?;
    let reconstructed: u64 = parts.iter().map(|(nu, c)| c * weyl_dim(*nu)).sum();
    if reconstructed != ch.mass() {
        // Dominant part peeled cleanly but the character is not Weyl-invariant.
        let w = ch.iter().find(|&(w, m)| weight_multiplicity_in(&parts, w) != m).map(|(w, _)| w);
        return Err(Error::NegativeMultiplicity(w.unwrap_or(Weight::ZERO)));
    }
    Ok(parts)
}

fn weight_multiplicity_in(parts: &BTreeMap<DominantWeight, u64>, w: Weight) -> u64 {
    parts.iter().map(|(nu, c)| c * weight_multiplicity(*nu, w)).sum()
}

/// Littlewood–Richardson coefficients `c^ν_{λ,μ}` of `V(λ) ⊗ V(μ)` by
/// character convolution and highest-weight peeling.
pub fn tensor_decompose(
    lambda: DominantWeight,
    mu: DominantWeight,
) -> Result<BTreeMap<DominantWeight, u64>> {
    let a = irrep_character(lambda);
    let b = irrep_character(mu);
    let h = lambda.height() + mu.height();
    let mut table = DominantTable::new(Weight::new(h, h));
    // Only the dominant part of the product is needed; it determines the rest.
    for (u, x) in a.iter() {
        for (v, y) in b.iter() {
            if let Some(i) = table.index(u + v) {
                table.cells[i] += (x * y) as i64;
            }
        }
    }
    peel(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dw(a: u32, b: u32) -> DominantWeight {
        DominantWeight::new(a, b)
    }

    fn w(a: i64, b: i64) -> Weight {
        Weight::new(a, b)
    }

    #[test]
    fn small_irreducible_characters() {
        assert_eq!(irrep_character(dw(0, 0)), FormalCharacter::unit());
        assert_eq!(
            irrep_character(dw(1, 0)),
            FormalCharacter::from_terms([(w(1, 0), 1), (w(-1, 1), 1), (w(0, -1), 1)])
        );
        let adjoint = FormalCharacter::from_terms([
            (w(1, 1), 1),
            (w(-1, 2), 1),
            (w(2, -1), 1),
            (w(0, 0), 2),
            (w(1, -2), 1),
            (w(-2, 1), 1),
            (w(-1, -1), 1),
        ]);
        assert_eq!(irrep_character(dw(1, 1)), adjoint);
    }

    #[test]
    fn character_mass_and_symmetry() {
        for l in DominantWeight::grid(6) {
            let ch = irrep_character(l);
            assert_eq!(ch.mass(), weyl_dim(l), "{l}");
            assert_eq!(ch.get(l.weight()), 1);
            assert!(ch.is_weyl_invariant(), "{l}");
        }
    }

    #[test]
    fn products() {
        let three = irrep_character(dw(1, 0));
        let bar = irrep_character(dw(0, 1));
        assert_eq!(char_product(&three, &FormalCharacter::unit()), three);
        let sq = char_product(&three, &three);
        assert_eq!(sq.mass(), 9);
        assert_eq!(sq.get(w(2, 0)), 1);
        assert_eq!(char_product(&three, &bar).get(Weight::ZERO), 3);
    }

    #[test]
    fn product_mass_is_multiplicative() {
        for l in DominantWeight::grid(3) {
            for m in DominantWeight::grid(3) {
                let (a, b) = (irrep_character(l), irrep_character(m));
                assert_eq!(char_product(&a, &b).mass(), a.mass() * b.mass());
            }
        }
    }

    #[test]
    fn classical_tensor_products() {
        let map = |xs: &[((u32, u32), u64)]| -> BTreeMap<DominantWeight, u64> {
            xs.iter().map(|&((a, b), c)| (dw(a, b), c)).collect()
        };
        assert_eq!(tensor_decompose(dw(1, 0), dw(1, 0)).unwrap(), map(&[((2, 0), 1), ((0, 1), 1)]));
        assert_eq!(tensor_decompose(dw(1, 0), dw(0, 1)).unwrap(), map(&[((1, 1), 1), ((0, 0), 1)]));
        assert_eq!(
            tensor_decompose(dw(1, 1), dw(1, 1)).unwrap(),
            map(&[((2, 2), 1), ((3, 0), 1), ((0, 3), 1), ((1, 1), 2), ((0, 0), 1)])
        );
        assert_eq!(tensor_decompose(dw(0, 0), dw(3, 2)).unwrap(), map(&[((3, 2), 1)]));
    }

    #[test]
    fn tensor_decomposition_invariants() {
        for l in DominantWeight::grid(4) {
            for m in DominantWeight::grid(4) {
                let d = tensor_decompose(l, m).unwrap();
                let total: u64 = d.iter().map(|(nu, c)| c * weyl_dim(*nu)).sum();
                assert_eq!(total, weyl_dim(l) * weyl_dim(m));
                assert_eq!(d.get(&DominantWeight::try_from(l.weight() + m.weight()).unwrap()), Some(&1));
                assert_eq!(d, tensor_decompose(m, l).unwrap());
                let hat: BTreeMap<_, _> = d.iter().map(|(nu, c)| (nu.involution(), *c)).collect();
                assert_eq!(tensor_decompose(l.involution(), m.involution()).unwrap(), hat);
            }
        }
    }

    #[test]
    fn peeling_agrees_with_full_product() {
        let (l, m) = (dw(2, 1), dw(1, 2));
        let full = char_product(&irrep_character(l), &irrep_character(m));
        assert_eq!(decompose_character(&full).unwrap(), tensor_decompose(l, m).unwrap());
    }

    #[test]
    fn non_characters_are_rejected() {
        // A lone non-dominant-symmetric term cannot come from a g-module.
        let bad = FormalCharacter::from_terms([(w(1, 0), 1)]);
        assert!(decompose_character(&bad).is_err());
        let neg = FormalCharacter::from_terms([(w(1, 1), 1)]);
        assert!(matches!(decompose_character(&neg), Err(Error::NegativeMultiplicity(_))));
    }
}
