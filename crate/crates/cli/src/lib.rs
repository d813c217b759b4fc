//! Declarative runner for the angular-momentum balance checks: parse a
//! scenario document, build the sources, run the requested checks and write
//! field maps plus a residual summary.

pub mod bundled;
pub mod config;
pub mod output;
pub mod runner;

pub use config::ScenarioConfig;
pub use runner::{execute, Overrides, RunOutput, RunSummary};
