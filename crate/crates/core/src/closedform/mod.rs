//! Closed-form graded characters of `F_{λ,μ}`.
//!
//! The primary route is the recursion through the reduction `F_{λ,μ} → F⁺_{λ,μ}`
//! and the filtration of its kernel. [`direct`] computes the same graded
//! multiplicities from explicit index families, without recursion.

mod assembly;
pub mod direct;
mod filtration;
mod reduction;

pub use assembly::{
    dimension_via_filtration, graded_character_closed, graded_multiplicity, lr_coefficient,
    reduction_trace, ReductionStep, ReductionTrace,
};
pub use direct::{graded_decomposition_direct, graded_multiplicity_direct};
pub use filtration::{
    crossed_pair, kernel_summands, s_inv, s_ninv, IndexPair, KernelFiltration, KernelSummand,
    ResidualPair,
};
pub use reduction::{kernel_generators, reduce_plus, KernelGeneratorDescriptor};
