use crate::error::{Error, Result};
use crate::weights::{classify_kind, DominantWeight, PairKind, PositiveRoot};

/// `(x⁻_root ⊗ t)^power · v_{λ,μ}`, one generator of the kernel of the
/// reduction map.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct KernelGeneratorDescriptor {
    pub root: PositiveRoot,
    pub power: u32,
}

/// Which of the three reduction branches applies to a normalized pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Branch {
    /// `λ₂ ≥ μ₂ > 0`; the boundary `λ₂ = μ₂` belongs here.
    Alpha2,
    /// `μ₂ = 0`, `μ₁ > 0`.
    Alpha1,
    /// `λ₂ < μ₂` (second kind).
    Crossed,
}

pub(crate) fn branch(lambda: DominantWeight, mu: DominantWeight) -> Result<Branch> {
    if mu.is_zero() {
        return Err(Error::ZeroMu);
    }
    match classify_kind(lambda, mu) {
        PairKind::First | PairKind::Second => {}
        _ => {
            return Err(Error::NotNormalized {
                lambda: lambda.weight(),
                mu: mu.weight(),
            })
        }
    }
    Ok(if mu.c2() == 0 {
        Branch::Alpha1
    } else if lambda.c2() >= mu.c2() {
        Branch::Alpha2
    } else {
        Branch::Crossed
    })
}

fn shift(lambda: DominantWeight, mu: DominantWeight, c1: i64, c2: i64) -> (DominantWeight, DominantWeight) {
    let l = DominantWeight::new((lambda.c1() + c1) as u32, (lambda.c2() + c2) as u32);
    let m = DominantWeight::new((mu.c1() - c1) as u32, (mu.c2() - c2) as u32);
    (l, m)
}

/// The pair `(λ', μ')` indexing the quotient `F⁺_{λ,μ}`.
pub fn reduce_plus(
    lambda: DominantWeight,
    mu: DominantWeight,
) -> Result<(DominantWeight, DominantWeight)> {
    Ok(match branch(lambda, mu)? {
        Branch::Alpha2 => shift(lambda, mu, 0, 1),
        Branch::Alpha1 => shift(lambda, mu, 1, 0),
        Branch::Crossed => shift(lambda, mu, 0, mu.c2() - lambda.c2()),
    })
}

/// Generators of the kernel of `F_{λ,μ} → F⁺_{λ,μ}`.
pub fn kernel_generators(
    lambda: DominantWeight,
    mu: DominantWeight,
) -> Result<Vec<KernelGeneratorDescriptor>> {
    let g = |root, power: i64| KernelGeneratorDescriptor {
        root,
        power: power as u32,
    };
    Ok(match branch(lambda, mu)? {
        Branch::Alpha2 => vec![
            g(PositiveRoot::Alpha2, mu.c2()),
            g(PositiveRoot::Theta, mu.height()),
        ],
        Branch::Alpha1 => vec![g(PositiveRoot::Alpha1, mu.c1()), g(PositiveRoot::Theta, mu.c1())],
        Branch::Crossed => (1..=mu.c2() - lambda.c2())
            .map(|s| g(PositiveRoot::Theta, mu.c1() + lambda.c2() + s))
            .collect(),
    })
}
