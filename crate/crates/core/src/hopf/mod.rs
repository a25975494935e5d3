//! Presented Hopf algebras, characters, winding automorphisms, and builders.

pub mod algebra;
pub mod axioms;
pub mod builders;
pub mod format;
pub mod group;
pub mod maps;
pub mod presentation;

pub use algebra::{Algebra, GroupAlgebra};
pub use format::{parse_presentation, write_presentation};
pub use axioms::{verify_hopf_axioms, AxiomCheck, AxiomReport};
pub use group::PolycyclicGroup;
pub use maps::{
    char_antipode_dual, compose, convolve, pi_of, s_minus_squared, s_squared, twist_character, winding_left, winding_right,
    AlgebraMap, Character,
};
pub use presentation::{Family, HopfPresentation, Tensor};

use crate::rewrite::RewriteError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HopfError {
    #[error("relation violated: {0}")]
    RelationViolation(String),
    #[error("non-invertible action: {0}")]
    NonInvertibleAction(String),
    #[error("Jacobi identity fails: {0}")]
    JacobiViolation(String),
    #[error("the antipode inverse is required but not given")]
    AntipodeInverseRequired,
    #[error("the presentation is only a bialgebra")]
    NotHopf,
    #[error("format error: {0}")]
    Format(String),
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
}
