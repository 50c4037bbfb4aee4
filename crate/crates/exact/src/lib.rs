//! Exact arithmetic substrate: Gaussian-rational scalars and sparse
//! polynomials in indexed variable families.
//!
//! Everything here is immutable after construction and all operations
//! are pure, so values can be shared freely across threads.

mod poly;
mod rational;
mod scalar;

pub use poly::{Monomial, Polynomial, VarFamily, VarLabel};
pub use rational::Rational;
pub use scalar::GaussianRational;

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0}")]
    Parse(String),
}
