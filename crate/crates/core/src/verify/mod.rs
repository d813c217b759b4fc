//! Pointwise residuals of the angular-momentum balance laws over grids,
//! reduced to reports, plus the plane-wave closed form and the global
//! integral check.

mod checks;
mod planewave;
mod residual;
mod scenario;

pub use checks::{
    check_belinfante, check_convergence, check_sourcefree_spin, check_spin_oam_exchange, check_total_continuity,
    BelinfanteReport, ConvergenceReport, CrossCheck, FieldMap, SourceFreeSpin, SpinOamExchange,
};
pub use planewave::{
    check_planewave_closedform, closed_form_value, common_period, global_integral_check, ClosedForm,
    GlobalIntegralReport,
};
pub use residual::{
    evaluate, sum_consistency, summarize, Basis, DerivativeMode, Equation, Evaluation, ResidualField,
    ResidualReport, TimeDerivative, SCALE_FLOOR, SUM_CONSISTENCY_ULPS,
};
pub use scenario::{PointFields, Scenario};

use thiserror::Error;

use crate::diffops::DiffError;
use crate::em::EmError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum VerifyError {
    #[error("scenario has both electromagnetic and Dirac sources; the coupled system is not solved by free modes")]
    CoupledScenario,
    #[error("wrong scenario: {0}")]
    WrongScenario(String),
    #[error("no common spatial period within {max_wavelengths:e} wavelengths")]
    IncommensurateModes { max_wavelengths: f64 },
    #[error("evaluation does not contain {0:?}")]
    MissingEquation(Equation),
    #[error("no points left to evaluate")]
    NoPoints,
    #[error(transparent)]
    Em(#[from] EmError),
    #[error(transparent)]
    Grid(#[from] DiffError),
}
