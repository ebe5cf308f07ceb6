//! Brute-force ground truth: explicit irreducible modules over exact
//! rationals and the degree filtration of the evaluation module
//! `V(λ, z₁) ⊗ V(μ, z₂)`.

mod fusion;
mod irrep;

pub use fusion::{fusion_graded_character, fusion_graded_character_bounded, graded_decompose_oracle, EvaluationParams, DEFAULT_DIM_BOUND};
pub use irrep::{realization, realize_irrep, Generator, IrrepRealization};
