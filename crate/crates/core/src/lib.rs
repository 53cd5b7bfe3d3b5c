//! Exact computer algebra for split D4 triality.

pub mod chevalley;
pub mod clifford;
pub mod error;
pub mod expr;
pub mod exterior;
pub mod linalg;
pub mod matrix;
pub mod octonion;
pub mod parse;
pub mod quadtriple;
pub mod report;
pub mod ring;
pub mod scalar;
pub mod sparse;
pub mod tables;
pub mod suites;
pub mod triality;
pub mod triples;

pub use clifford::CliffordElement;
pub use error::{Error, Result};
pub use matrix::{EndoMatrix, Matrix};
pub use ring::Ring;
pub use scalar::{Rational, Scalar};
pub use sparse::LinearMap;
