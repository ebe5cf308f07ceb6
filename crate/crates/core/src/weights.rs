//! Weight-lattice arithmetic for sl3 in fundamental-weight coordinates.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integral weight `c1·ω₁ + c2·ω₂`.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct Weight {
    pub c1: i64,
    pub c2: i64,
}

impl Weight {
    pub const ZERO: Weight = Weight { c1: 0, c2: 0 };
    pub const OMEGA1: Weight = Weight { c1: 1, c2: 0 };
    pub const OMEGA2: Weight = Weight { c1: 0, c2: 1 };

    pub const fn new(c1: i64, c2: i64) -> Self {
        Weight { c1, c2 }
    }

    /// `|λ| = λ₁ + λ₂`, the pairing with the coroot of θ.
    pub const fn height(self) -> i64 {
        self.c1 + self.c2
    }

    pub const fn is_dominant(self) -> bool {
        self.c1 >= 0 && self.c2 >= 0
    }

    /// `λ(h_α)`.
    pub const fn pairing(self, root: PositiveRoot) -> i64 {
        match root {
            PositiveRoot::Alpha1 => self.c1,
            PositiveRoot::Alpha2 => self.c2,
            PositiveRoot::Theta => self.c1 + self.c2,
        }
    }

    pub const fn scale(self, k: i64) -> Self {
        Weight::new(self.c1 * k, self.c2 * k)
    }

    /// Coordinates `(a, b)` with `self = a·α₁ + b·α₂`, when they are integers.
    pub fn root_coords(self) -> Option<(i64, i64)> {
        let a = 2 * self.c1 + self.c2;
        let b = self.c1 + 2 * self.c2;
        (a % 3 == 0 && b % 3 == 0).then_some((a / 3, b / 3))
    }

    /// True when `self - other` is a nonnegative integer combination of simple roots.
    pub fn dominates(self, other: Weight) -> bool {
        matches!((self - other).root_coords(), Some((a, b)) if a >= 0 && b >= 0)
    }

    /// Three times the invariant form, normalized so that `(α, α) = 2`.
    pub const fn form3(self, other: Weight) -> i64 {
        2 * self.c1 * other.c1 + self.c1 * other.c2 + self.c2 * other.c1 + 2 * self.c2 * other.c2
    }

    /// Simple reflection `s₁`.
    pub const fn reflect1(self) -> Self {
        Weight::new(-self.c1, self.c1 + self.c2)
    }

    /// Simple reflection `s₂`.
    pub const fn reflect2(self) -> Self {
        Weight::new(self.c1 + self.c2, -self.c2)
    }

    /// The dominant weight in the Weyl orbit of `self`.
    pub fn dominant_conjugate(self) -> Weight {
        let mut w = self;
        loop {
            if w.c1 < 0 {
                w = w.reflect1();
            } else if w.c2 < 0 {
                w = w.reflect2();
            } else {
                return w;
            }
        }
    }

    /// The full Weyl orbit, sorted and deduplicated.
    pub fn weyl_orbit(self) -> Vec<Weight> {
        let s1 = self.reflect1();
        let s2 = self.reflect2();
        let mut orbit = vec![
            self,
            s1,
            s2,
            s1.reflect2(),
            s2.reflect1(),
            s1.reflect2().reflect1(),
        ];
        orbit.sort_unstable();
        orbit.dedup();
        orbit
    }
}

impl From<[i64; 2]> for Weight {
    fn from([c1, c2]: [i64; 2]) -> Self {
        Weight::new(c1, c2)
    }
}

impl From<Weight> for [i64; 2] {
    fn from(w: Weight) -> Self {
        [w.c1, w.c2]
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        Weight::new(self.c1 + rhs.c1, self.c2 + rhs.c2)
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        Weight::new(self.c1 - rhs.c1, self.c2 - rhs.c2)
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight::new(-self.c1, -self.c2)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.c1, self.c2)
    }
}

/// A weight with both coordinates nonnegative.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
#[serde(try_from = "[i64; 2]", into = "[i64; 2]")]
pub struct DominantWeight(Weight);

impl DominantWeight {
    pub const ZERO: DominantWeight = DominantWeight(Weight::ZERO);

    pub const fn new(c1: u32, c2: u32) -> Self {
        DominantWeight(Weight::new(c1 as i64, c2 as i64))
    }

    pub const fn weight(self) -> Weight {
        self.0
    }

    pub const fn c1(self) -> i64 {
        self.0.c1
    }

    pub const fn c2(self) -> i64 {
        self.0.c2
    }

    pub const fn height(self) -> i64 {
        self.0.height()
    }

    pub const fn is_zero(self) -> bool {
        self.0.c1 == 0 && self.0.c2 == 0
    }

    /// Dynkin diagram automorphism, `λ̂`.
    pub const fn involution(self) -> Self {
        DominantWeight(dynkin_involution(self.0))
    }

    /// Every dominant weight with both coordinates at most `max`, in lexicographic order.
    pub fn grid(max: u32) -> impl Iterator<Item = DominantWeight> {
        (0..=max).flat_map(move |a| (0..=max).map(move |b| DominantWeight::new(a, b)))
    }
}

impl TryFrom<Weight> for DominantWeight {
    type Error = Error;
    fn try_from(w: Weight) -> Result<Self> {
        if w.is_dominant() {
            Ok(DominantWeight(w))
        } else {
            Err(Error::NotDominant(w))
        }
    }
}

impl TryFrom<[i64; 2]> for DominantWeight {
    type Error = Error;
    fn try_from(c: [i64; 2]) -> Result<Self> {
        DominantWeight::try_from(Weight::from(c))
    }
}

impl From<DominantWeight> for [i64; 2] {
    fn from(w: DominantWeight) -> Self {
        w.0.into()
    }
}

impl From<DominantWeight> for Weight {
    fn from(w: DominantWeight) -> Self {
        w.0
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PositiveRoot {
    Alpha1,
    Alpha2,
    Theta,
}

impl PositiveRoot {
    pub const ALL: [PositiveRoot; 3] = [PositiveRoot::Alpha1, PositiveRoot::Alpha2, PositiveRoot::Theta];

    /// The root expressed in fundamental-weight coordinates.
    pub const fn weight(self) -> Weight {
        match self {
            PositiveRoot::Alpha1 => Weight::new(2, -1),
            PositiveRoot::Alpha2 => Weight::new(-1, 2),
            PositiveRoot::Theta => Weight::new(1, 1),
        }
    }

    /// Coordinates on the simple-root basis.
    pub const fn root_coords(self) -> (i64, i64) {
        match self {
            PositiveRoot::Alpha1 => (1, 0),
            PositiveRoot::Alpha2 => (0, 1),
            PositiveRoot::Theta => (1, 1),
        }
    }
}

impl fmt::Display for PositiveRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PositiveRoot::Alpha1 => "alpha1",
            PositiveRoot::Alpha2 => "alpha2",
            PositiveRoot::Theta => "theta",
        })
    }
}

/// Trichotomy of dominant pairs governing which reduction applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairKind {
    First,
    Second,
    Third,
    /// `|λ| < |μ|`; the pair has to be swapped before it can be classified.
    NotNormalized,
}

/// A pair of first or second kind, together with the moves that produced it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct NormalizedPair {
    pub lambda: DominantWeight,
    pub mu: DominantWeight,
    pub swapped: bool,
    pub involuted: bool,
}

impl NormalizedPair {
    pub fn kind(&self) -> PairKind {
        classify_kind(self.lambda, self.mu)
    }

    /// Undo the recorded involution and swap.
    pub fn original(&self) -> (DominantWeight, DominantWeight) {
        let (mut l, mut m) = (self.lambda, self.mu);
        if self.involuted {
            l = l.involution();
            m = m.involution();
        }
        if self.swapped {
            std::mem::swap(&mut l, &mut m);
        }
        (l, m)
    }
}

/// `dim V(λ) = (λ₁+1)(λ₂+1)(λ₁+λ₂+2)/2`.
pub fn weyl_dim(lambda: DominantWeight) -> u64 {
    let (a, b) = (lambda.c1() as u64, lambda.c2() as u64);
    (a + 1) * (b + 1) * (a + b + 2) / 2
}

pub fn classify_kind(lambda: DominantWeight, mu: DominantWeight) -> PairKind {
    if lambda.height() < mu.height() {
        PairKind::NotNormalized
    } else if lambda.c1() >= mu.c1() && lambda.c2() >= mu.c2() {
        PairKind::First
    } else if lambda.c1() >= mu.c1() {
        PairKind::Second
    } else {
        // |λ| ≥ |μ| and μ₁ > λ₁ force λ₂ > μ₂.
        PairKind::Third
    }
}

/// Bring a pair to first or second kind by an optional swap followed by an
/// optional Dynkin involution.
pub fn normalize_pair(lambda: DominantWeight, mu: DominantWeight) -> NormalizedPair {
    let swapped = lambda.height() < mu.height();
    let (mut l, mut m) = if swapped { (mu, lambda) } else { (lambda, mu) };
    let involuted = classify_kind(l, m) == PairKind::Third;
    if involuted {
        l = l.involution();
        m = m.involution();
    }
    NormalizedPair {
        lambda: l,
        mu: m,
        swapped,
        involuted,
    }
}

pub const fn dynkin_involution(w: Weight) -> Weight {
    Weight::new(w.c2, w.c1)
}

/// Majorization order on tuples of dominant weights with a common sum.
pub fn majorizes(a: &[DominantWeight], b: &[DominantWeight]) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::ShapeMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let total = |xs: &[DominantWeight]| xs.iter().fold(Weight::ZERO, |acc, w| acc + w.weight());
    let (ta, tb) = (total(a), total(b));
    if ta != tb {
        return Err(Error::SumMismatch { left: ta, right: tb });
    }
    let sorted_pairings = |xs: &[DominantWeight], root: PositiveRoot| {
        let mut v: Vec<i64> = xs.iter().map(|w| w.weight().pairing(root)).collect();
        v.sort_unstable_by(|x, y| y.cmp(x));
        v
    };
    for root in PositiveRoot::ALL {
        let (pa, pb) = (sorted_pairings(a, root), sorted_pairings(b, root));
        for i in 1..a.len() {
            let tail_a: i64 = pa[i..].iter().sum();
            let tail_b: i64 = pb[i..].iter().sum();
            if tail_a < tail_b {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dw(a: u32, b: u32) -> DominantWeight {
        DominantWeight::new(a, b)
    }

    #[test]
    fn weyl_dim_small_cases() {
        assert_eq!(weyl_dim(dw(0, 0)), 1);
        assert_eq!(weyl_dim(dw(1, 0)), 3);
        assert_eq!(weyl_dim(dw(1, 1)), 8);
        assert_eq!(weyl_dim(dw(2, 2)), 27);
    }

    #[test]
    fn classification_examples() {
        assert_eq!(classify_kind(dw(1, 1), dw(1, 1)), PairKind::First);
        assert_eq!(classify_kind(dw(1, 0), dw(0, 1)), PairKind::Second);
        assert_eq!(classify_kind(dw(0, 1), dw(1, 0)), PairKind::Third);
        assert_eq!(classify_kind(dw(1, 0), dw(2, 0)), PairKind::NotNormalized);
    }

    #[test]
    fn normalization_examples() {
        let n = normalize_pair(dw(1, 0), dw(0, 1));
        assert_eq!((n.lambda, n.mu, n.swapped, n.involuted), (dw(1, 0), dw(0, 1), false, false));
        let n = normalize_pair(dw(0, 1), dw(1, 0));
        assert_eq!((n.lambda, n.mu, n.swapped, n.involuted), (dw(1, 0), dw(0, 1), false, true));
        let n = normalize_pair(dw(1, 0), dw(2, 0));
        assert_eq!((n.lambda, n.mu, n.swapped, n.involuted), (dw(2, 0), dw(1, 0), true, false));
    }

    #[test]
    fn normalization_is_total_and_reversible() {
        for l in DominantWeight::grid(6) {
            for m in DominantWeight::grid(6) {
                let n = normalize_pair(l, m);
                assert!(matches!(n.kind(), PairKind::First | PairKind::Second), "{l} {m}");
                assert_eq!(n.original(), (l, m));
            }
        }
    }

    #[test]
    fn involution_examples() {
        assert_eq!(dynkin_involution(Weight::new(3, 1)), Weight::new(1, 3));
        assert_eq!(dynkin_involution(Weight::new(2, 2)), Weight::new(2, 2));
        assert_eq!(dynkin_involution(Weight::new(0, 5)), Weight::new(5, 0));
    }

    #[test]
    fn majorization_examples() {
        let a = [dw(2, 0), dw(1, 0)];
        let b = [dw(3, 0), dw(0, 0)];
        assert!(majorizes(&a, &b).unwrap());
        assert!(!majorizes(&b, &a).unwrap());
        assert!(majorizes(&a, &a).unwrap());
    }

    #[test]
    fn majorization_rejects_bad_shapes() {
        assert!(matches!(
            majorizes(&[dw(1, 0)], &[dw(1, 0), dw(0, 0)]),
            Err(Error::ShapeMismatch { .. })
        ));
        assert!(matches!(
            majorizes(&[dw(1, 0), dw(0, 0)], &[dw(0, 1), dw(0, 0)]),
            Err(Error::SumMismatch { .. })
        ));
    }

    fn two_splits(total: DominantWeight) -> Vec<[DominantWeight; 2]> {
        let mut out = Vec::new();
        for a in 0..=total.c1() as u32 {
            for b in 0..=total.c2() as u32 {
                let first = dw(a, b);
                let second = dw(total.c1() as u32 - a, total.c2() as u32 - b);
                // Sorted representative: the ordering does not affect majorization.
                if (first.c1(), first.c2()) >= (second.c1(), second.c2()) {
                    out.push([first, second]);
                }
            }
        }
        out
    }

    #[test]
    fn majorization_is_a_partial_order() {
        for total in DominantWeight::grid(6).filter(|w| w.height() <= 6) {
            let splits = two_splits(total);
            let ge = |x: &[DominantWeight; 2], y: &[DominantWeight; 2]| majorizes(x, y).unwrap();
            for x in &splits {
                assert!(ge(x, x));
                for y in &splits {
                    if ge(x, y) && ge(y, x) {
                        // Antisymmetry up to equal pairing profiles.
                        for root in PositiveRoot::ALL {
                            let mut px: Vec<i64> = x.iter().map(|w| w.weight().pairing(root)).collect();
                            let mut py: Vec<i64> = y.iter().map(|w| w.weight().pairing(root)).collect();
                            px.sort_unstable();
                            py.sort_unstable();
                            assert_eq!(px, py);
                        }
                    }
                    for z in &splits {
                        if ge(x, y) && ge(y, z) {
                            assert!(ge(x, z));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn weyl_dim_is_involution_invariant() {
        for l in DominantWeight::grid(10) {
            assert_eq!(weyl_dim(l), weyl_dim(l.involution()));
        }
    }

    #[test]
    fn roots_and_orbits() {
        assert_eq!(PositiveRoot::Alpha1.weight() + PositiveRoot::Alpha2.weight(), PositiveRoot::Theta.weight());
        assert_eq!(Weight::new(1, 1).weyl_orbit().len(), 6);
        assert_eq!(Weight::new(1, 0).weyl_orbit().len(), 3);
        assert_eq!(Weight::new(-1, 2).dominant_conjugate(), Weight::new(1, 1));
        assert!(Weight::new(1, 1).dominates(Weight::ZERO));
        assert!(!Weight::new(1, 0).dominates(Weight::ZERO));
    }
}
