//! Resolutions of the trivial module and twisted Hochschild (co)homology.
//!
//! Presented algebras are infinite-dimensional, so their (co)homology is
//! computed in bounded filtration degree with a stabilization certificate.
//! Finite-dimensional Hopf algebras use normalized bar complexes and are exact.

pub mod coeff;
pub mod complex;
mod engine;
pub mod fd;
pub mod presented;

pub use coeff::{twisted_bimodule_coefficients, CoefficientModule, TwistSpec};
pub use complex::{ce_differentials, ce_resolution, parse_complex, resolution_for, tower_resolution, write_complex, Differentials, FreeComplex, LinearMap, PolyMatrix, ResolutionKind, Side};
pub use fd::{bar_resolution, fd_adjoint_tor, fd_duality_check, fd_hochschild_cohomology, fd_hochschild_homology, fd_zero_degree, FdTwist};
pub use presented::{
    duality_check, homological_integral, hochschild_cohomology, hochschild_homology, invariant_report, twisted_hochschild_cohomology,
    twisted_hochschild_homology, zero_degree, DualityReport, DualityRow, IntegralReport, InvariantReport, ZeroDegree,
};

use serde::Serialize;

use crate::fd::FdError;
use crate::hopf::HopfError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HomologyError {
    #[error("Jacobi identity fails: {0}")]
    JacobiViolation(String),
    #[error("non-invertible action: {0}")]
    NonInvertibleAction(String),
    #[error("top cohomology Ext^{degree}(k, A) has truncated dimensions {dims:?}, expected 1")]
    TopNotOneDimensional { degree: usize, dims: Vec<usize> },
    #[error("Ext^{degree}(k, A) has truncated dimensions {dims:?}, expected 0")]
    LowerExtNonzero { degree: usize, dims: Vec<usize> },
    #[error("degree {degree} did not stabilize within truncation {truncation} and window {window}")]
    TruncationInconclusive { degree: usize, truncation: usize, window: usize },
    #[error("twist is not filtration-compatible: {0}")]
    FiltrationIncompatible(String),
    #[error("the antipode inverse is required but not given")]
    AntipodeInverseRequired,
    #[error("no resolution is available: {0}")]
    NoResolution(String),
    #[error("complex check failed: {0}")]
    Complex(String),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Fd(#[from] FdError),
}

/// Dimensions of (co)homology classes representable in filtration degree ≤ n,
/// for n = 0..=truncation, one table per homological degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TruncatedDims {
    pub dims: Vec<Vec<usize>>,
    pub certified: Vec<bool>,
    pub truncation: usize,
    pub window: usize,
    /// Finite-dimensional computation: one entry per degree, no truncation.
    pub exact: bool,
    /// dim F_n C_i.
    pub chain_dims: Vec<Vec<usize>>,
    /// dim(Z_i ∩ F_n).
    pub cycles: Vec<Vec<usize>>,
    /// boundaries[i][n][L] = dim(∂(F_{n+L}) ∩ F_n) for L = 0..=window.
    pub boundaries: Vec<Vec<Vec<usize>>>,
    /// boundaries_below[i][n] = dim(∂(F_{n−1}) ∩ F_n), the shifted subcomplex
    /// used for Euler characteristic bookkeeping.
    pub boundaries_below: Vec<Vec<usize>>,
}

impl TruncatedDims {
    pub(crate) fn exact(dims: Vec<usize>) -> Self {
        let k = dims.len();
        TruncatedDims {
            dims: dims.iter().map(|&d| vec![d]).collect(),
            certified: vec![true; k],
            truncation: 0,
            window: 0,
            exact: true,
            chain_dims: Vec::new(),
            cycles: Vec::new(),
            boundaries: Vec::new(),
            boundaries_below: Vec::new(),
        }
    }

    pub fn degrees(&self) -> usize {
        self.dims.len()
    }

    /// Dimension at the largest computed filtration degree.
    pub fn value(&self, i: usize) -> usize {
        self.dims[i].last().copied().unwrap_or(0)
    }

    pub fn all_certified(&self) -> bool {
        self.certified.iter().all(|&c| c)
    }

    /// Largest degree with a certified nonzero class.
    pub fn top_nonzero(&self) -> Option<usize> {
        (0..self.degrees()).rev().find(|&i| self.certified[i] && self.value(i) > 0)
    }
}
