//! Scenario documents: a JSON object describing the source, the grid and the
//! checks to run. Unknown keys are rejected everywhere.

use anyhow::{bail, Context, Result};
use angmom_core::constants::{UnitSystem, Units, C};
use angmom_core::diffops::{FdOrder, GridSpec};
use angmom_core::dirac::{plane_spinor, Spin, SpinorMode};
use angmom_core::em::{
    default_fiber_pair, solve_fiber_dispersion, EmSource, FiberSpec, Gauge, Handedness, ModeFamily, PlaneWaveMode,
};
use angmom_core::tensor::Vec3;
use angmom_core::verify::{ClosedForm, DerivativeMode, Equation, Scenario, TimeDerivative};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub name: String,
    pub source: SourceConfig,
    /// Unit system of the Dirac sector. Electromagnetic sources are always SI.
    #[serde(default)]
    pub units: UnitSystem,
    pub grid: GridSpec,
    #[serde(default)]
    pub derivatives: DerivativeKind,
    #[serde(default = "default_order")]
    pub fd_order: FdOrder,
    #[serde(default)]
    pub fd_time: TimeDerivative,
    pub checks: Vec<CheckKind>,
    /// Relative tolerance; defaults to 1e-10 with analytic derivatives and
    /// 1e-3 with finite differences.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    #[serde(default)]
    pub origin: [f64; 3],
    #[serde(default)]
    pub gauge: Gauge,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output_dir: Option<String>,
    #[serde(default)]
    pub closed_form: ClosedForm,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub convergence: Option<ConvergenceConfig>,
}

fn default_order() -> FdOrder {
    FdOrder::Two
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum DerivativeKind {
    #[default]
    Analytic,
    Fd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    TotalContinuity,
    SpinOamExchange,
    SourcefreeSpin,
    Belinfante,
    PlanewaveClosedform,
    GlobalIntegral,
    Convergence,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum SourceConfig {
    /// Two circularly polarized waves along +z.
    PlaneWavePair {
        wavelengths: [f64; 2],
        #[serde(default = "unit_amplitudes")]
        amplitudes: [[f64; 2]; 2],
        #[serde(default)]
        handedness: [Handedness; 2],
    },
    /// HE11 at the first wavelength plus the beta-matched mode nearest the
    /// second.
    FiberPair {
        radius: f64,
        #[serde(default = "default_n_core")]
        n_core: f64,
        #[serde(default = "default_n_clad")]
        n_clad: f64,
        wavelengths: [f64; 2],
        #[serde(default = "one")]
        amplitude: f64,
    },
    DiracSuperposition { modes: Vec<SpinorConfig> },
    Custom {
        #[serde(default)]
        plane_waves: Vec<PlaneWaveConfig>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        fiber: Option<FiberConfig>,
        #[serde(default)]
        spinors: Vec<SpinorConfig>,
    },
}

fn unit_amplitudes() -> [[f64; 2]; 2] {
    [[1.0, 0.0], [1.0, 0.0]]
}

fn default_n_core() -> f64 {
    1.5
}

fn default_n_clad() -> f64 {
    1.0
}

fn one() -> f64 {
    1.0
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlaneWaveConfig {
    pub wavelength: f64,
    /// Unit propagation direction.
    pub direction: [f64; 3],
    /// Complex electric amplitude, `[[re, im]; 3]`.
    pub amplitude: [[f64; 2]; 3],
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FiberConfig {
    pub radius: f64,
    pub n_core: f64,
    pub n_clad: f64,
    pub modes: Vec<FiberModeConfig>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FiberModeConfig {
    pub family: ModeFamily,
    pub n: u32,
    pub m: u32,
    pub wavelength: f64,
    #[serde(default = "one")]
    pub amplitude: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpinorConfig {
    pub momentum: [f64; 3],
    pub spin: Spin,
    pub mass: f64,
    #[serde(default = "unit_complex")]
    pub amplitude: [f64; 2],
}

fn unit_complex() -> [f64; 2] {
    [1.0, 0.0]
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConvergenceConfig {
    pub center: [f64; 3],
    #[serde(default)]
    pub time: f64,
    /// Points per axis of each cube.
    pub points: usize,
    pub equation: Equation,
    #[serde(default = "default_window")]
    pub window: f64,
    pub runs: Vec<ConvergenceRun>,
}

fn default_window() -> f64 {
    0.3
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConvergenceRun {
    pub order: FdOrder,
    /// Coarsest spacing; the sweep also uses h/2 and h/4.
    pub spacing: f64,
}

pub const ANALYTIC_TOLERANCE: f64 = 1e-10;
pub const FD_TOLERANCE: f64 = 1e-3;

fn complex(a: [f64; 2]) -> Complex64 {
    Complex64::new(a[0], a[1])
}

fn omega(lambda: f64) -> Result<f64> {
    if !lambda.is_finite() || lambda <= 0.0 {
        bail!("wavelength {lambda} must be positive");
    }
    Ok(2.0 * std::f64::consts::PI * C / lambda)
}

impl ScenarioConfig {
    pub fn parse(text: &str) -> Result<Self> {
        let cfg: Self = serde_json::from_str(text).context("invalid scenario document")?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.checks.is_empty() {
            bail!("no checks requested");
        }
        self.grid.validate().context("invalid grid")?;
        if let Some(t) = self.tolerance {
            if !t.is_finite() || t <= 0.0 {
                bail!("tolerance {t} must be positive");
            }
        }
        if self.checks.contains(&CheckKind::Convergence) && self.convergence.is_none() {
            bail!("the convergence check needs a \"convergence\" section");
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("config serializes");
        s.push('\n');
        s
    }

    pub fn mode(&self) -> DerivativeMode {
        match self.derivatives {
            DerivativeKind::Analytic => DerivativeMode::Analytic,
            DerivativeKind::Fd => DerivativeMode::Fd {
                order: self.fd_order,
                time: self.fd_time,
            },
        }
    }

    pub fn effective_tolerance(&self) -> f64 {
        self.tolerance.unwrap_or(match self.derivatives {
            DerivativeKind::Analytic => ANALYTIC_TOLERANCE,
            DerivativeKind::Fd => FD_TOLERANCE,
        })
    }

    pub fn units(&self) -> Units {
        Units::from_system(self.units)
    }

    /// Plane-wave modes of the source, if it has any.
    pub fn plane_waves(&self) -> Result<Vec<PlaneWaveMode>> {
        Ok(match self.build_sources()?.0 {
            EmSource::PlaneWaves(m) => m,
            _ => Vec::new(),
        })
    }

    fn build_sources(&self) -> Result<(EmSource, Vec<SpinorMode>)> {
        let units = self.units();
        let spinors = |list: &[SpinorConfig]| -> Result<Vec<SpinorMode>> {
            list.iter()
                .map(|s| {
                    plane_spinor(Vec3::from_array(s.momentum), s.spin, s.mass, complex(s.amplitude), units)
                        .map_err(anyhow::Error::from)
                })
                .collect()
        };
        Ok(match &self.source {
            SourceConfig::PlaneWavePair {
                wavelengths,
                amplitudes,
                handedness,
            } => {
                let modes = (0..2)
                    .map(|k| Ok(PlaneWaveMode::circular(omega(wavelengths[k])?, complex(amplitudes[k]), handedness[k])))
                    .collect::<Result<Vec<_>>>()?;
                (EmSource::PlaneWaves(modes), Vec::new())
            }
            SourceConfig::FiberPair {
                radius,
                n_core,
                n_clad,
                wavelengths,
                amplitude,
            } => {
                let spec = FiberSpec::new(*radius, *n_core, *n_clad)?;
                let (m1, m2) = default_fiber_pair(spec, wavelengths[0], wavelengths[1], *amplitude)?;
                (EmSource::Fiber(vec![m1, m2]), Vec::new())
            }
            SourceConfig::DiracSuperposition { modes } => {
                if modes.is_empty() {
                    bail!("dirac_superposition needs at least one mode");
                }
                (EmSource::None, spinors(modes)?)
            }
            SourceConfig::Custom {
                plane_waves,
                fiber,
                spinors: sp,
            } => {
                if !plane_waves.is_empty() && fiber.is_some() {
                    bail!("a custom source holds plane waves or fiber modes, not both");
                }
                let em = if let Some(f) = fiber {
                    let spec = FiberSpec::new(f.radius, f.n_core, f.n_clad)?;
                    let modes = f
                        .modes
                        .iter()
                        .map(|m| {
                            Ok(solve_fiber_dispersion(spec, omega(m.wavelength)?, m.family, m.n, m.m)?
                                .with_amplitude(m.amplitude))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    EmSource::Fiber(modes)
                } else if plane_waves.is_empty() {
                    EmSource::None
                } else {
                    let modes = plane_waves
                        .iter()
                        .map(|p| {
                            let w = omega(p.wavelength)?;
                            let d = Vec3::from_array(p.direction);
                            let n = d.norm();
                            if !n.is_finite() || n <= 0.0 {
                                bail!("plane-wave direction must be nonzero");
                            }
                            let amp = Vec3::from_array(p.amplitude.map(complex));
                            Ok(PlaneWaveMode::new(w, d.scale(w / (C * n)), amp)?)
                        })
                        .collect::<Result<Vec<_>>>()?;
                    EmSource::PlaneWaves(modes)
                };
                (em, spinors(sp)?)
            }
        })
    }

    pub fn build(&self) -> Result<Scenario> {
        let (em, dirac) = self.build_sources()?;
        Ok(Scenario::new(self.name.clone(), em, dirac, Vec3::from_array(self.origin), self.gauge)?)
    }
}
