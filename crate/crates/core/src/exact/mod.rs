//! Exact arithmetic: Q, Q(q), Q(ζ_ℓ), and linear algebra over them.

pub mod cyclo;
pub mod matrix;
pub mod poly;
pub mod ratfunc;
pub mod scalar;
pub mod sparse;

pub use cyclo::{cyclotomic_poly, CycloScalar};
pub use matrix::{kernel, rref, solve, Matrix, Rref};
pub use poly::Poly;
pub use ratfunc::RatFunc;
pub use scalar::{specialize, FieldTag, Scalar};
pub use sparse::{sparse_rank, Echelon, SparseVec};

/// Arbitrary-precision rational number.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("denominator vanishes at the specialization point")]
    DenominatorVanishes,
    #[error("cyclotomic level {0} must be odd and greater than 2")]
    InvalidLevel(u32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
}
