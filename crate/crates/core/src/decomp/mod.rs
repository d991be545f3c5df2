//! Endomorphism algebras, Jacobson radicals, decomposition into
//! indecomposable summands, Scott modules and vertices.

mod algebra;
mod decompose;
mod iso;
mod loewy;
mod scott;

pub use algebra::{end_algebra, radical, FDAlgebra};
pub use decompose::{
    classify, decompose, decompose_absolute, decompose_with, fitting_split, is_absolutely_indecomposable,
    is_absolutely_indecomposable_with, DecomposeOptions, Decomposition, Indecomposability, Summand,
};
pub use iso::{find_isomorphism, indecomposables_isomorphic, is_isomorphic, isomorphism_from_decompositions, same_summands};
pub use loewy::{group_algebra_image, head, loewy_layers, radical_submodule, socle, LoewyLayers};
pub use scott::{is_relatively_projective, scott_module, scott_module_with, vertex, vertex_with, ScottModule};
