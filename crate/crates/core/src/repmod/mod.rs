//! Matrix representations of permutation groups: permutation modules,
//! restriction, fixed points, relative traces, Brauer quotients and
//! homomorphism spaces.

mod brauer_quotient;
mod hom;
mod module;
mod subspace;

pub use brauer_quotient::{
    brauer_construction, brauer_construction_with_normalizer, fixed_points, relative_trace_image,
    relative_trace_map, trace_sum, trace_sum_all, BrauerQuotient,
};
pub use hom::{hom_dim, hom_space};
pub use module::{element_matrix, module_kernel, perm_module, regular_module, restrict, Module};
pub use subspace::Subspace;
