//! Polynomials in the grading variable `q` and graded decompositions.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign};

use crate::characters::{decompose_character, irrep_character, FormalCharacter};
use crate::error::Result;
use crate::weights::{weyl_dim, DominantWeight, Weight};

/// `Σ coeffs[i] q^i` with nonnegative integer coefficients, stored without
/// trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QPolynomial {
    coeffs: Vec<u64>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        QPolynomial::default()
    }

    pub fn one() -> Self {
        QPolynomial::monomial(0, 1)
    }

    pub fn monomial(degree: usize, coeff: u64) -> Self {
        let mut coeffs = vec![0; degree + 1];
        coeffs[degree] = coeff;
        QPolynomial::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        QPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, degree: usize) -> u64 {
        self.coeffs.get(degree).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|&c| c != 0)
    }

    /// True for `q^p` with coefficient one.
    pub fn is_unit_monomial(&self) -> bool {
        self.coeffs.iter().filter(|&&c| c != 0).count() == 1 && self.coeffs.iter().all(|&c| c <= 1)
    }

    /// Nonzero `(degree, coefficient)` pairs in increasing degree.
    pub fn terms(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, &c)| c != 0).map(|(d, &c)| (d, c))
    }

    /// Multiplication by `q^shift`.
    pub fn shifted(&self, shift: usize) -> Self {
        if self.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = vec![0; shift];
        coeffs.extend_from_slice(&self.coeffs);
        QPolynomial { coeffs }
    }

    /// Value at `q = 1`.
    pub fn eval_at_one(&self) -> u64 {
        self.coeffs.iter().sum()
    }

    /// LaTeX rendering, e.g. `q + q^{2}`.
    pub fn to_latex(&self) -> String {
        self.render(|d| format!("q^{{{d}}}"))
    }

    fn render(&self, power: impl Fn(usize) -> String) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.terms()
            .map(|(d, c)| match (d, c) {
                (0, c) => c.to_string(),
                (1, 1) => "q".to_string(),
                (1, c) => format!("{c}q"),
                (d, 1) => power(d),
                (d, c) => format!("{c}{}", power(d)),
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Coefficientwise sum.
pub fn qpoly_add(a: &QPolynomial, b: &QPolynomial) -> QPolynomial {
    let n = a.coeffs.len().max(b.coeffs.len());
    QPolynomial::from_coeffs((0..n).map(|i| a.coeff(i) + b.coeff(i)).collect())
}

pub fn qpoly_mul_monomial(p: &QPolynomial, shift: usize) -> QPolynomial {
    p.shifted(shift)
}

pub fn eval_at_one(p: &QPolynomial) -> u64 {
    p.eval_at_one()
}

impl Add for &QPolynomial {
    type Output = QPolynomial;
    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        qpoly_add(self, rhs)
    }
}

impl AddAssign<&QPolynomial> for QPolynomial {
    fn add_assign(&mut self, rhs: &QPolynomial) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), 0);
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            self.coeffs[i] += c;
        }
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(|d| format!("q^{d}")))
    }
}

/// `⊕ τ*_s V(ν)` with multiplicities, as a map `ν ↦ [F : V(ν)]_q`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GradedDecomposition {
    summands: BTreeMap<DominantWeight, QPolynomial>,
}

impl GradedDecomposition {
    pub fn new() -> Self {
        GradedDecomposition::default()
    }

    /// A single `V(ν)` in grade zero.
    pub fn irreducible(nu: DominantWeight) -> Self {
        let mut d = GradedDecomposition::new();
        d.add_term(nu, 0, 1);
        d
    }

    pub fn from_summands(entries: impl IntoIterator<Item = (DominantWeight, QPolynomial)>) -> Self {
        let mut d = GradedDecomposition::new();
        for (nu, p) in entries {
            d.add_poly(nu, &p);
        }
        d
    }

    /// Adds `mult` copies of `τ*_grade V(ν)`.
    pub fn add_term(&mut self, nu: DominantWeight, grade: usize, mult: u64) {
        if mult > 0 {
            self.add_poly(nu, &QPolynomial::monomial(grade, mult));
        }
    }

    pub fn add_poly(&mut self, nu: DominantWeight, p: &QPolynomial) {
        if !p.is_zero() {
            *self.summands.entry(nu).or_default() += p;
        }
    }

    /// Adds `τ*_shift` of another decomposition.
    pub fn add_shifted(&mut self, other: &GradedDecomposition, shift: usize) {
        for (nu, p) in &other.summands {
            self.add_poly(*nu, &p.shifted(shift));
        }
    }

    pub fn multiplicity(&self, nu: DominantWeight) -> QPolynomial {
        self.summands.get(&nu).cloned().unwrap_or_default()
    }

    pub fn summands(&self) -> &BTreeMap<DominantWeight, QPolynomial> {
        &self.summands
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    /// Total dimension `Σ_ν p_ν(1) dim V(ν)`.
    pub fn dimension(&self) -> u64 {
        self.summands.iter().map(|(nu, p)| p.eval_at_one() * weyl_dim(*nu)).sum()
    }

    pub fn max_grade(&self) -> Option<usize> {
        self.summands.values().filter_map(QPolynomial::degree).max()
    }

    /// Summands sorted by lowest occurring grade, then by `ν`.
    pub fn sorted(&self) -> Vec<(DominantWeight, &QPolynomial)> {
        let mut v: Vec<_> = self.summands.iter().map(|(nu, p)| (*nu, p)).collect();
        v.sort_by_key(|(nu, p)| (p.min_degree().unwrap_or(0), *nu));
        v
    }

    /// Relabels every summand by the Dynkin involution.
    pub fn involuted(&self) -> Self {
        GradedDecomposition {
            summands: self.summands.iter().map(|(nu, p)| (nu.involution(), p.clone())).collect(),
        }
    }

    /// The part living in grade `s`, as ungraded multiplicities.
    pub fn grade(&self, s: usize) -> BTreeMap<DominantWeight, u64> {
        self.summands
            .iter()
            .filter(|(_, p)| p.coeff(s) != 0)
            .map(|(nu, p)| (*nu, p.coeff(s)))
            .collect()
    }

    /// Renders as `(2,0): 1 ; (0,1): q`.
    pub fn to_text(&self) -> String {
        self.sorted()
            .iter()
            .map(|(nu, p)| format!("{nu}: {p}"))
            .collect::<Vec<_>>()
            .join(" ; ")
    }

    /// Renders as a sum of `τ^*_s V(ν)` terms.
    pub fn to_latex(&self) -> String {
        let mut terms = Vec::new();
        for (nu, p) in self.sorted() {
            for (s, c) in p.terms() {
                let coeff = if c == 1 { String::new() } else { c.to_string() };
                terms.push((s, nu, format!("{coeff}\\tau^*_{{{s}}} V({},{})", nu.c1(), nu.c2())));
            }
        }
        terms.sort_by_key(|(s, nu, _)| (*s, *nu));
        if terms.is_empty() {
            return "0".to_string();
        }
        terms.into_iter().map(|(_, _, t)| t).collect::<Vec<_>>().join(" \\oplus ")
    }
}

/// Weight-level graded character: `(η, s) ↦ dim F[s]_η`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GradedCharacter {
    terms: BTreeMap<(Weight, usize), u64>,
}

impl GradedCharacter {
    pub fn from_terms(terms: impl IntoIterator<Item = ((Weight, usize), u64)>) -> Self {
        let mut map = BTreeMap::new();
        for (k, m) in terms {
            *map.entry(k).or_insert(0) += m;
        }
        map.retain(|_, m| *m != 0);
        GradedCharacter { terms: map }
    }

    pub fn get(&self, w: Weight, grade: usize) -> u64 {
        self.terms.get(&(w, grade)).copied().unwrap_or(0)
    }

    pub fn mass(&self) -> u64 {
        self.terms.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = ((Weight, usize), u64)> + '_ {
        self.terms.iter().map(|(k, m)| (*k, *m))
    }

    pub fn max_grade(&self) -> Option<usize> {
        self.terms.keys().map(|(_, s)| *s).max()
    }

    /// Mass of a single grade.
    pub fn grade_mass(&self, s: usize) -> u64 {
        self.terms.iter().filter(|((_, g), _)| *g == s).map(|(_, m)| m).sum()
    }

    /// The ungraded character of grade `s`.
    pub fn grade(&self, s: usize) -> FormalCharacter {
        FormalCharacter::from_terms(
            self.terms.iter().filter(|((_, g), _)| *g == s).map(|((w, _), m)| (*w, *m)),
        )
    }

    /// Splits each graded piece into irreducibles.
    pub fn decompose(&self) -> Result<GradedDecomposition> {
        let mut out = GradedDecomposition::new();
        for s in 0..=self.max_grade().unwrap_or(0) {
            for (nu, c) in decompose_character(&self.grade(s))? {
                out.add_term(nu, s, c);
            }
        }
        Ok(out)
    }
}

/// Expands every `τ*_s V(ν)` into its weights at grade `s`.
pub fn decomposition_to_character(d: &GradedDecomposition) -> GradedCharacter {
    let mut terms = Vec::new();
    for (nu, p) in d.summands() {
        let ch = irrep_character(*nu);
        for (s, c) in p.terms() {
            terms.extend(ch.iter().map(|(w, m)| ((w, s), m * c)));
        }
    }
    GradedCharacter::from_terms(terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(c: &[u64]) -> QPolynomial {
        QPolynomial::from_coeffs(c.to_vec())
    }

    fn dw(a: u32, b: u32) -> DominantWeight {
        DominantWeight::new(a, b)
    }

    #[test]
    fn polynomial_basics() {
        assert_eq!(qpoly_add(&q(&[1]), &q(&[0, 1])), q(&[1, 1]));
        assert_eq!(qpoly_mul_monomial(&q(&[1, 1]), 2), q(&[0, 0, 1, 1]));
        assert_eq!(qpoly_add(&q(&[]), &q(&[2, 0, 3])), q(&[2, 0, 3]));
        assert_eq!(eval_at_one(&q(&[0, 1, 1])), 2);
        assert_eq!(eval_at_one(&q(&[])), 0);
        assert_eq!(eval_at_one(&q(&[1])), 1);
        assert_eq!(q(&[1, 0, 0]).coeffs(), &[1]);
        assert!(q(&[0, 0]).is_zero());
    }

    #[test]
    fn polynomial_rendering() {
        assert_eq!(q(&[0, 1, 1]).to_string(), "q + q^2");
        assert_eq!(q(&[1]).to_string(), "1");
        assert_eq!(q(&[3, 0, 2]).to_string(), "3 + 2q^2");
        assert_eq!(q(&[]).to_string(), "0");
        assert_eq!(q(&[0, 1, 1]).to_latex(), "q + q^{2}");
    }

    #[test]
    fn expansion_examples() {
        let d = GradedDecomposition::irreducible(dw(1, 0));
        let ch = decomposition_to_character(&d);
        let expected = GradedCharacter::from_terms([
            ((Weight::new(1, 0), 0), 1),
            ((Weight::new(-1, 1), 0), 1),
            ((Weight::new(0, -1), 0), 1),
        ]);
        assert_eq!(ch, expected);

        let d = GradedDecomposition::from_summands([(dw(0, 0), q(&[0, 0, 1]))]);
        assert_eq!(
            decomposition_to_character(&d),
            GradedCharacter::from_terms([((Weight::ZERO, 2), 1)])
        );

        let d = GradedDecomposition::from_summands([(dw(2, 0), q(&[1])), (dw(0, 1), q(&[0, 1]))]);
        let ch = decomposition_to_character(&d);
        assert_eq!(ch.mass(), 9);
        assert_eq!(ch.grade_mass(1), 3);
        assert_eq!(ch.decompose().unwrap(), d);
    }

    #[test]
    fn text_and_latex() {
        let d = GradedDecomposition::from_summands([(dw(2, 0), q(&[1])), (dw(0, 1), q(&[0, 1]))]);
        assert_eq!(d.to_text(), "(2,0): 1 ; (0,1): q");
        assert_eq!(d.to_latex(), "\\tau^*_{0} V(2,0) \\oplus \\tau^*_{1} V(0,1)");
    }

    fn poly() -> impl Strategy<Value = QPolynomial> {
        prop::collection::vec(0u64..5, 0..6).prop_map(QPolynomial::from_coeffs)
    }

    proptest! {
        #[test]
        fn eval_is_additive_and_shift_invariant(a in poly(), b in poly(), s in 0usize..5) {
            prop_assert_eq!(qpoly_add(&a, &b).eval_at_one(), a.eval_at_one() + b.eval_at_one());
            prop_assert_eq!(a.shifted(s).eval_at_one(), a.eval_at_one());
            prop_assert_eq!(qpoly_add(&a, &b), qpoly_add(&b, &a));
        }

        #[test]
        fn expansion_mass(entries in prop::collection::vec(((0u32..3, 0u32..3), poly()), 0..4)) {
            let d = GradedDecomposition::from_summands(
                entries.into_iter().map(|((a, b), p)| (dw(a, b), p)),
            );
            let ch = decomposition_to_character(&d);
            prop_assert_eq!(ch.mass(), d.dimension());
            prop_assert_eq!(ch.decompose().unwrap(), d);
        }
    }
}
