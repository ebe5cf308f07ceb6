//! Non-recursive graded multiplicities read off the explicit index families.
//!
//! Each family lists chain heads `ν` together with a run of consecutive
//! grades; the irreducible `V(ν)` occurs once in each grade of the run.
//! This path shares no code with the recursive assembly beyond the index
//! sets, and the two are checked against each other.

use crate::qseries::{GradedDecomposition, QPolynomial};
use crate::weights::{classify_kind, normalize_pair, DominantWeight, PairKind, Weight};

use super::filtration::{crossed_pair, s_inv, s_ninv, IndexPair};

/// `Σ_{s=0}^{len-1} q^{top-s}`.
fn run(top: i64, len: i64) -> QPolynomial {
    let mut coeffs = vec![0; top as usize + 1];
    for s in 0..len {
        coeffs[(top - s) as usize] += 1;
    }
    QPolynomial::from_coeffs(coeffs)
}

fn push(out: &mut GradedDecomposition, nu: Weight, poly: QPolynomial) {
    let nu = DominantWeight::try_from(nu).expect("index families produce dominant weights");
    out.add_poly(nu, &poly);
}

/// `μ = μ₁ω₁`, `λ₁ ≥ μ₁`: `ν_(a,p) = λ + (μ₁−p−a)ω₁ − (p−2a)ω₂` for
/// `p ∈ [0, μ₁]`, `a ∈ [p−λ₂, p] ∩ Z₊`, each with multiplicity `q^p`.
fn first_kind_omega1(lambda: DominantWeight, m1: i64, out: &mut GradedDecomposition) {
    let (lam, l2) = (lambda.weight(), lambda.c2());
    for p in 0..=m1 {
        for a in (p - l2).max(0)..=p {
            push(out, lam + Weight::new(m1 - p - a, -(p - 2 * a)), QPolynomial::monomial(p as usize, 1));
        }
    }
}

/// First kind with `μ₂ > 0`.
fn first_kind(lambda: DominantWeight, mu: DominantWeight, out: &mut GradedDecomposition) {
    let (l2, m1, m2) = (lambda.c2(), mu.c1(), mu.c2());
    let m = m1 + m2;
    let lam = lambda.weight();

    // Family ℓP_ninv: heads ν_{a^j_ℓ} = λ + (μ₂+ℓ−(a+j))ω₁ − (|μ|−ℓ−2(a+j))ω₂.
    for level in 0..=m1 {
        let k = m - level - l2;
        for j in 0..=m2 {
            for a in (k - 2 * j).max(0)..=(m1 - level) {
                let head = j == 0 || a == m1 - level || a == k - 2 * j;
                if !head {
                    continue;
                }
                let nu = lam + Weight::new(m2 + level - (a + j), -(m - level - 2 * (a + j)));
                // The run (j+s, a−s) stops at s = a or at j+s = μ₂.
                let len = a.min(m2 - j) + 1;
                push(out, nu, run(m - level - j, len));
            }
        }
    }

    // Family P¹_ninv: heads ν_(a_j,b_j) over S_ninv(λ+jω₂, μ−jω₂).
    for j in 0..m2 {
        let lj = DominantWeight::new(lambda.c1() as u32, (l2 + j) as u32);
        let mj = DominantWeight::new(m1 as u32, (m2 - j) as u32);
        for IndexPair { a1: a, a2: b } in s_ninv(lj, mj) {
            let d = b - a;
            let head = j == 0 || a == m1 || d == l2 - m1 + j || d == m2 - lambda.c1() - j;
            if !head {
                continue;
            }
            let nu = lam + Weight::new(-(m2 - j + a - 2 * b), j - (m1 + b - 2 * a));
            push(out, nu, run(m - j, a.min(b) + 1));
        }
    }
}

/// Second kind: the crossed family `P_inv` on top of the first-kind
/// families of `(ζ^λ_μ, ζ^μ_λ)`.
fn second_kind(lambda: DominantWeight, mu: DominantWeight, out: &mut GradedDecomposition) {
    let (l1, l2, m1, m2) = (lambda.c1(), lambda.c2(), mu.c1(), mu.c2());
    let gap = m2 - l2;
    let (zeta, zeta_dual) = crossed_pair(lambda, mu);
    for r in 0..gap {
        for IndexPair { a1: a, a2: b } in s_inv(lambda, mu, gap - r) {
            let d = b - a;
            let head = r == 0 || a == m1 || b == l2 || d == m2 - l1 - r || d == l2 - m1 + r;
            if !head {
                continue;
            }
            let nu = zeta.weight() - Weight::new(l2 + a - 2 * b + gap - r, m1 + b - 2 * a + gap - r);
            if !nu.is_dominant() {
                continue;
            }
            // The run (r+s, a−s, b−s) stops at s = min(a, b) or at ℓ = 1.
            let len = a.min(b).min(gap - 1 - r) + 1;
            push(out, nu, run(m1 + m2 - r, len));
        }
    }
    normalized_direct(zeta, zeta_dual, out);
}

fn normalized_direct(lambda: DominantWeight, mu: DominantWeight, out: &mut GradedDecomposition) {
    if mu.is_zero() {
        out.add_term(lambda, 0, 1);
        return;
    }
    match classify_kind(lambda, mu) {
        PairKind::First if mu.c2() == 0 => first_kind_omega1(lambda, mu.c1(), out),
        PairKind::First => first_kind(lambda, mu, out),
        PairKind::Second => second_kind(lambda, mu, out),
        _ => unreachable!("caller normalizes"),
    }
}

/// The whole graded decomposition of `F_{λ,μ}` from the index families.
pub fn graded_decomposition_direct(lambda: DominantWeight, mu: DominantWeight) -> GradedDecomposition {
    let n = normalize_pair(lambda, mu);
    let mut out = GradedDecomposition::new();
    normalized_direct(n.lambda, n.mu, &mut out);
    if n.involuted {
        out.involuted()
    } else {
        out
    }
}

/// `[F_{λ,μ} : V(ν)]_q` from the index families.
pub fn graded_multiplicity_direct(
    lambda: DominantWeight,
    mu: DominantWeight,
    nu: DominantWeight,
) -> QPolynomial {
    graded_decomposition_direct(lambda, mu).multiplicity(nu)
}
