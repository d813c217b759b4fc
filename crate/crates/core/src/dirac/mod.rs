//! Free Dirac fields: gamma algebra, plane-wave spinors and the angular
//! momentum densities built from them.

mod densities;
mod gamma;
mod spinor;

pub use densities::{dirac_densities, DiracDensities};
pub use gamma::{build_algebra, GammaAlgebra, Mat4};
pub use spinor::{eval_spinors, plane_spinor, Spin, SpinorMode, SpinorSample};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DiracError {
    #[error("mass must be positive, got {0}")]
    NonPositiveMass(f64),
    #[error("non-finite spinor input")]
    NonFinite,
}
