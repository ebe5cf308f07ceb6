//! Recursive assembly of the graded decomposition of `F_{λ,μ}` from the
//! short exact sequences `0 → Ker φ → F_{λ,μ} → F⁺_{λ,μ} → 0`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::error::Result;
use crate::qseries::{GradedDecomposition, QPolynomial};
use crate::weights::{normalize_pair, weyl_dim, DominantWeight};

use super::filtration::{kernel_summands, KernelSummand};
use super::reduction::reduce_plus;

type PairKey = (DominantWeight, DominantWeight);

fn cache() -> &'static RwLock<HashMap<PairKey, Arc<GradedDecomposition>>> {
    static CACHE: OnceLock<RwLock<HashMap<PairKey, Arc<GradedDecomposition>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// One reduction step: the pair, its reduction, and the kernel quotients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionStep {
    pub before: PairKey,
    pub after: PairKey,
    pub summands: Vec<KernelSummand>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
}

/// The chain of reductions starting at the normalized form of `(λ, μ)` and
/// ending at a pair with `μ = 0`.
pub fn reduction_trace(lambda: DominantWeight, mu: DominantWeight) -> ReductionTrace {
    let n = normalize_pair(lambda, mu);
    let (mut l, mut m) = (n.lambda, n.mu);
    let mut steps = Vec::new();
    while !m.is_zero() {
        let after = reduce_plus(l, m).expect("normalized pairs reduce");
        let summands = kernel_summands(l, m).expect("normalized pairs filter").summands;
        steps.push(ReductionStep {
            before: (l, m),
            after,
            summands,
        });
        (l, m) = after;
    }
    ReductionTrace { steps }
}

fn assemble_normalized(lambda: DominantWeight, mu: DominantWeight) -> Result<GradedDecomposition> {
    if mu.is_zero() {
        return Ok(GradedDecomposition::irreducible(lambda));
    }
    let (l2, m2) = reduce_plus(lambda, mu)?;
    let kernel = kernel_summands(lambda, mu)?;
    let mut out = (*graded_character_cached(l2, m2)).clone();
    for s in &kernel.summands {
        let hw = DominantWeight::try_from(s.hw)?;
        out.add_term(hw, s.shift, s.mult);
    }
    if let Some(r) = kernel.residual {
        out.add_shifted(&graded_character_cached(r.lambda, r.mu), r.shift);
    }
    Ok(out)
}

fn graded_character_cached(lambda: DominantWeight, mu: DominantWeight) -> Arc<GradedDecomposition> {
    let n = normalize_pair(lambda, mu);
    let key = (n.lambda, n.mu);
    let hit = cache().read().unwrap().get(&key).cloned();
    let base = match hit {
        Some(d) => d,
        None => {
            let d = Arc::new(assemble_normalized(n.lambda, n.mu).expect("normalized pairs assemble"));
            cache().write().unwrap().entry(key).or_insert(d).clone()
        }
    };
    if n.involuted {
        Arc::new(base.involuted())
    } else {
        base
    }
}

/// The graded decomposition of `F_{λ,μ} ≅ V(λ) ∗ V(μ)`.
pub fn graded_character_closed(lambda: DominantWeight, mu: DominantWeight) -> GradedDecomposition {
    (*graded_character_cached(lambda, mu)).clone()
}

/// `[F_{λ,μ} : V(ν)]_q`.
pub fn graded_multiplicity(lambda: DominantWeight, mu: DominantWeight, nu: DominantWeight) -> QPolynomial {
    graded_character_cached(lambda, mu).multiplicity(nu)
}

/// `c^η_{λ,μ}` as the graded multiplicity at `q = 1`.
pub fn lr_coefficient(lambda: DominantWeight, mu: DominantWeight, eta: DominantWeight) -> u64 {
    graded_multiplicity(lambda, mu, eta).eval_at_one()
}

/// `dim F_{λ,μ}` from the filtration alone: `dim F⁺ + dim Ker`, with
/// `dim F_{λ,0} = dim V(λ)`.
pub fn dimension_via_filtration(lambda: DominantWeight, mu: DominantWeight) -> u64 {
    let n = normalize_pair(lambda, mu);
    let (l, m) = (n.lambda, n.mu);
    if m.is_zero() {
        return weyl_dim(l);
    }
    let (l2, m2) = reduce_plus(l, m).expect("normalized pairs reduce");
    let kernel = kernel_summands(l, m).expect("normalized pairs filter");
    let quotients: u64 = kernel
        .summands
        .iter()
        .map(|s| s.mult * DominantWeight::try_from(s.hw).map_or(0, weyl_dim))
        .sum();
    let residual = kernel.residual.map_or(0, |r| dimension_via_filtration(r.lambda, r.mu));
    dimension_via_filtration(l2, m2) + quotients + residual
}
