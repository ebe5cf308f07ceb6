//! Graded characters of fusion products `V(λ) ∗ V(μ)` of the sl3 current
//! algebra.
//!
//! [`closedform`] computes the graded decomposition of `F_{λ,μ}` from the
//! reduction/filtration combinatorics. Two independent oracles check it:
//! [`characters`] decomposes ordinary tensor products, and [`oracle`]
//! builds the evaluation module over exact rationals and reads off the
//! associated graded of its degree filtration.

pub mod characters;
pub mod closedform;
pub mod error;
pub mod json;
pub mod linalg;
pub mod oracle;
pub mod qseries;
pub mod verification;
pub mod weights;

pub use characters::{char_product, irrep_character, tensor_decompose, FormalCharacter};
pub use closedform::{
    dimension_via_filtration, graded_character_closed, graded_multiplicity, lr_coefficient,
};
pub use error::{Error, Result};
pub use qseries::{GradedCharacter, GradedDecomposition, QPolynomial};
pub use weights::{
    classify_kind, normalize_pair, weyl_dim, DominantWeight, NormalizedPair, PairKind,
    PositiveRoot, Weight,
};
pub use json::DecompositionJson;
pub use oracle::{fusion_graded_character, graded_decompose_oracle, realize_irrep, EvaluationParams, IrrepRealization};
pub use verification::{run_sweep, Check, SweepConfig, VerificationReport};
