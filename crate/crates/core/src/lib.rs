//! Exact computations with Hopf algebras: presentations by rewriting,
//! structure tensors, integrals, winding and Nakayama automorphisms, and
//! twisted Hochschild (co)homology in bounded degree.

pub mod descent;
pub mod exact;
pub mod fd;
pub mod homology;
pub mod hopf;
pub mod rewrite;

pub use exact::{FieldTag, Matrix, Rational, Scalar};
