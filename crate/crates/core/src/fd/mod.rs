//! Finite-dimensional Hopf algebras given by structure tensors.

pub mod catalog;
pub mod format;
pub mod hopf;
pub mod structure;

pub use catalog::{by_name, catalog_names, sweedler, taft, FiniteGroup};
pub use format::{parse_fd, write_fd};
pub use hopf::{FDAlgebra, FDHopf, Vector};
pub use structure::{
    adjoint_tensor_check, distinguished_group_like, equal_up_to_inner, group_likes, integral_order, is_unimodular, left_integral,
    left_integral_space, modular_character, nakayama, nakayama_order, phi, radford_s4_check, right_integral, right_integral_space, xi,
    AdjointReport, LinearAuto, RadfordReport, UnitSearch,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FdError {
    #[error("integral space has dimension {0}, expected 1")]
    NotUnimodularDimension(usize),
    #[error("right action on the integral line is not a character")]
    NotCharacter,
    #[error("the Frobenius form is degenerate")]
    DegenerateForm,
    #[error("the antipode is not invertible")]
    SingularAntipode,
    #[error("{axiom} fails at {location}")]
    Axiom { axiom: String, location: String },
    #[error("format error: {0}")]
    Format(String),
}

impl FdError {
    pub(crate) fn axiom(axiom: &str, location: &str) -> FdError {
        FdError::Axiom { axiom: axiom.into(), location: location.into() }
    }
}
