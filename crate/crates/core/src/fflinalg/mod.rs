//! Exact dense linear algebra over GF(p^m).

mod field;
mod mat;
mod poly;

pub use field::{is_prime, Elem, Field, MAX_FIELD_ORDER};
pub use mat::{Echelon, Mat, Rref};
pub(crate) use mat::axpy;
pub use poly::Poly;
