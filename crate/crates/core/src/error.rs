use thiserror::Error;

use crate::weights::Weight;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("weight {0} is not dominant")]
    NotDominant(Weight),

    #[error("tuples have different lengths ({left} vs {right})")]
    ShapeMismatch { left: usize, right: usize },

    #[error("tuples have different total weight ({left} vs {right})")]
    SumMismatch { left: Weight, right: Weight },

    #[error("pair ({lambda}, {mu}) is not of first or second kind")]
    NotNormalized { lambda: Weight, mu: Weight },

    #[error("reduction needs a nonzero second weight")]
    ZeroMu,

    #[error("evaluation points must be distinct")]
    EqualEvaluationPoints,

    #[error("module of dimension {dim} exceeds the oracle bound {bound}")]
    DimensionBound { dim: u64, bound: u64 },

    #[error("character is not a nonnegative combination of irreducibles: negative coefficient at {0}")]
    NegativeMultiplicity(Weight),

    #[error("realization of V{lambda} spans {got} vectors, expected {expected}")]
    RealizationDimension {
        lambda: Weight,
        got: usize,
        expected: u64,
    },

    #[error("degree filtration did not exhaust the module by grade {0}")]
    FiltrationStalled(usize),

    #[error("invalid input: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
