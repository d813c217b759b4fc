//! Source-free Maxwell fields: plane-wave superpositions and step-index fiber
//! modes, evaluated with exact first derivatives.

mod fiber;
mod plane_wave;
mod sample;

pub use fiber::{
    beta_match, characteristic_residual, default_fiber_pair, fiber_fields_in_region,
    solve_fiber_dispersion, FiberFields, FiberMode, FiberSpec, ModeFamily, Region,
};
pub use plane_wave::{Handedness, PlaneWaveMode};
pub use sample::{eval_fiber_modes, eval_plane_waves, EMFieldSample, EmSource, Gauge, ModePhasor};

use thiserror::Error;

use crate::roots::RootError;
use crate::special::SpecialError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EmError {
    #[error("plane wave is not transverse: |k.E| / (|k||E|) = {0:e}")]
    NotTransverse(f64),
    #[error("plane wave violates vacuum dispersion: |k| c / omega - 1 = {0:e}")]
    Dispersion(f64),
    #[error("guidance condition violated: core index {n_core} must exceed cladding index {n_clad}")]
    Guidance { n_core: f64, n_clad: f64 },
    #[error("invalid fiber parameter: {0}")]
    InvalidSpec(String),
    #[error("{family:?} with azimuthal order {n} is not a valid mode label")]
    InvalidMode { family: ModeFamily, n: u32 },
    #[error("no guided {family:?}{n}{m} mode at V = {v:.4}")]
    NoGuidedMode { family: ModeFamily, n: u32, m: u32, v: f64 },
    #[error("root finding did not converge: {0}")]
    NoConvergence(String),
    #[error("beta matching landed on the first mode's frequency")]
    DegenerateMatch,
    #[error(transparent)]
    Special(#[from] SpecialError),
}

impl From<RootError> for EmError {
    fn from(e: RootError) -> Self {
        EmError::NoConvergence(e.to_string())
    }
}
