//! Successive quotients of the filtration of `Ker φ(λ, μ)`.

use crate::error::Result;
use crate::weights::{DominantWeight, Weight};

use super::reduction::{branch, Branch};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexPair {
    pub a1: i64,
    pub a2: i64,
}

/// One quotient `τ*_shift V(hw)`, repeated `mult` times.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct KernelSummand {
    pub shift: usize,
    pub hw: Weight,
    pub mult: u64,
}

/// The quotient `τ*_shift F_{λ,μ}` that closes the first-kind filtration when
/// both coordinates of `μ` are positive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ResidualPair {
    pub shift: usize,
    pub lambda: DominantWeight,
    pub mu: DominantWeight,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KernelFiltration {
    pub summands: Vec<KernelSummand>,
    pub residual: Option<ResidualPair>,
}

/// `{(a₁,a₂) : 0≤a₂<μ₂, 0≤a₁≤μ₁, μ₂−λ₁ ≤ a₂−a₁ ≤ λ₂−μ₁}`, with `a₁` outermost.
pub fn s_ninv(lambda: DominantWeight, mu: DominantWeight) -> Vec<IndexPair> {
    let (l1, l2, m1, m2) = (lambda.c1(), lambda.c2(), mu.c1(), mu.c2());
    let mut out = Vec::new();
    for a1 in 0..=m1 {
        for a2 in 0..m2 {
            let d = a2 - a1;
            if m2 - l1 <= d && d <= l2 - m1 {
                out.push(IndexPair { a1, a2 });
            }
        }
    }
    out
}

/// `{(a₁,a₂) : 0≤a₁≤μ₁, 0≤a₂≤λ₂, μ₁−μ₂+ℓ ≤ a₁−a₂ ≤ λ₁−λ₂−ℓ}`.
pub fn s_inv(lambda: DominantWeight, mu: DominantWeight, level: i64) -> Vec<IndexPair> {
    let (l1, l2, m1, m2) = (lambda.c1(), lambda.c2(), mu.c1(), mu.c2());
    let mut out = Vec::new();
    for a1 in 0..=m1 {
        for a2 in 0..=l2 {
            let d = a1 - a2;
            if m1 - m2 + level <= d && d <= l1 - l2 - level {
                out.push(IndexPair { a1, a2 });
            }
        }
    }
    out
}

/// `ζ^λ_μ = λ₁ω₁ + μ₂ω₂` and `ζ^μ_λ = μ₁ω₁ + λ₂ω₂`.
pub fn crossed_pair(lambda: DominantWeight, mu: DominantWeight) -> (DominantWeight, DominantWeight) {
    (
        DominantWeight::new(lambda.c1() as u32, mu.c2() as u32),
        DominantWeight::new(mu.c1() as u32, lambda.c2() as u32),
    )
}

/// The successive quotients of the kernel filtration, with non-dominant
/// highest weights dropped (they contribute nothing).
pub fn kernel_summands(lambda: DominantWeight, mu: DominantWeight) -> Result<KernelFiltration> {
    let (l1, l2, m1, m2) = (lambda.c1(), lambda.c2(), mu.c1(), mu.c2());
    let lam = lambda.weight();
    let mut summands = Vec::new();
    let mut residual = None;
    let mut emit = |shift: i64, hw: Weight| {
        if hw.is_dominant() {
            summands.push(KernelSummand {
                shift: shift as usize,
                hw,
                mult: 1,
            });
        }
    };
    match branch(lambda, mu)? {
        Branch::Alpha2 if m1 == 0 => {
            for j in (m2 - l1).max(0)..=m2 {
                emit(m2, lam - Weight::new(m2 - 2 * j, j));
            }
        }
        Branch::Alpha2 => {
            for IndexPair { a1, a2 } in s_ninv(lambda, mu) {
                emit(m1 + m2, lam - Weight::new(m2 + a1 - 2 * a2, m1 + a2 - 2 * a1));
            }
            residual = Some(ResidualPair {
                shift: m2 as usize,
                lambda: DominantWeight::new((l1 + m2) as u32, (l2 - m2) as u32),
                mu: DominantWeight::new(m1 as u32, 0),
            });
        }
        Branch::Alpha1 => {
            for j in (m1 - l2).max(0)..=m1 {
                emit(m1, lam - Weight::new(j, m1 - 2 * j));
            }
        }
        Branch::Crossed => {
            let (zeta, _) = crossed_pair(lambda, mu);
            for level in 1..=m2 - l2 {
                for IndexPair { a1, a2 } in s_inv(lambda, mu, level) {
                    let hw = zeta.weight()
                        - Weight::new(l2 + a1 - 2 * a2 + level, m1 + a2 - 2 * a1 + level);
                    emit(m1 + l2 + level, hw);
                }
            }
        }
    }
    Ok(KernelFiltration { summands, residual })
}
