pub mod brauer;
pub mod decomp;
pub mod error;
pub mod exec;
pub mod fflinalg;
pub mod fixtures;
pub mod permgroup;
pub mod repmod;

pub use error::{Error, Result};
