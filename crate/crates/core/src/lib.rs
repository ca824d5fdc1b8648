//! Exact computation of subalgebra depth.
#![allow(clippy::needless_range_loop)]

pub mod chars;
pub mod cli;
pub mod depth;
pub mod error;
pub mod exact;
pub mod green;
pub mod hopf;
pub mod perm;
pub mod pipelines;
pub mod tensor;

pub use error::{Error, Result};
