//! Exact character tables, codegrees and group pseudo-algebras of finite
//! groups given by permutation generators.

pub mod analysis;
pub mod chartab;
pub mod cli;
pub mod error;
pub mod permgroup;
pub mod pseudoalg;

pub use error::{Error, Result};
