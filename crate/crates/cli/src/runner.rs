use anyhow::{bail, Context, Result};
use angmom_core::diffops::{FdOrder, GridSpec};
use angmom_core::tensor::Vec3;
use angmom_core::verify::{
    check_belinfante, check_convergence, check_planewave_closedform, check_sourcefree_spin, check_spin_oam_exchange,
    check_total_continuity, global_integral_check, ConvergenceReport, CrossCheck, FieldMap, GlobalIntegralReport,
    ResidualReport,
};
use serde::{Deserialize, Serialize};

use crate::config::{CheckKind, DerivativeKind, ScenarioConfig};

/// Command-line settings that take precedence over the document.
#[derive(Clone, Copy, Debug, Default)]
pub struct Overrides {
    pub fd_order: Option<FdOrder>,
    pub derivatives: Option<DerivativeKind>,
    pub tolerance: Option<f64>,
}

impl Overrides {
    pub fn apply(&self, cfg: &mut ScenarioConfig) {
        if let Some(o) = self.fd_order {
            cfg.fd_order = o;
        }
        if let Some(d) = self.derivatives {
            cfg.derivatives = d;
        }
        if let Some(t) = self.tolerance {
            cfg.tolerance = Some(t);
        }
    }
}

/// Everything written to `residuals.json`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunSummary {
    pub scenario: String,
    pub pass: bool,
    pub reports: Vec<ResidualReport>,
    #[serde(default)]
    pub belinfante_cross_checks: Vec<CrossCheck>,
    #[serde(default)]
    pub convergence: Vec<ConvergenceReport>,
    #[serde(default)]
    pub global_integral: Vec<GlobalIntegralReport>,
}

#[derive(Clone, Debug)]
pub struct RunOutput {
    pub summary: RunSummary,
    pub maps: Vec<FieldMap>,
    /// One summary line per check, in execution order.
    pub lines: Vec<String>,
}

impl RunOutput {
    pub fn exit_code(&self) -> u8 {
        if self.summary.pass {
            0
        } else {
            2
        }
    }
}

fn global_line(r: &GlobalIntegralReport, name: &str) -> String {
    let status = if r.pass { "PASS" } else { "FAIL" };
    format!(
        "{status} global integral [{name}] rel={:.3e} tol={:.1e} over period {:.6e} m ({} samples)",
        r.rel, r.tolerance, r.period, r.samples
    )
}

fn cross_line(c: &CrossCheck, name: &str) -> String {
    let status = if c.agree { "PASS" } else { "FAIL" };
    format!(
        "{status} symmetrized vs canonical [{name}] max gap {:.3e}, {:.3e} of combined tolerance",
        c.max_gap, c.max_gap_ratio
    )
}

fn push(out: &mut RunOutput, r: ResidualReport) {
    out.lines.push(r.summary_line());
    out.summary.pass &= r.pass;
    out.summary.reports.push(r);
}

/// Runs every check of `cfg` in document order.
pub fn execute(cfg: &ScenarioConfig) -> Result<RunOutput> {
    cfg.validate()?;
    let scn = cfg.build().context("building the scenario")?;
    let grid: &GridSpec = &cfg.grid;
    let mode = cfg.mode();
    let tol = cfg.effective_tolerance();
    let name = scn.name.clone();
    let mut out = RunOutput {
        summary: RunSummary {
            scenario: name.clone(),
            pass: true,
            reports: Vec::new(),
            belinfante_cross_checks: Vec::new(),
            convergence: Vec::new(),
            global_integral: Vec::new(),
        },
        maps: Vec::new(),
        lines: Vec::new(),
    };
    for check in &cfg.checks {
        let ctx = || format!("check {check:?}");
        match check {
            CheckKind::TotalContinuity => {
                let r = check_total_continuity(&scn, grid, mode, tol).with_context(ctx)?;
                push(&mut out, r);
            }
            CheckKind::SpinOamExchange => {
                let r = check_spin_oam_exchange(&scn, grid, mode, tol).with_context(ctx)?;
                for rep in r.balances.into_iter().chain([r.total, r.sum_consistency]) {
                    push(&mut out, rep);
                }
            }
            CheckKind::SourcefreeSpin => {
                let r = check_sourcefree_spin(&scn, grid, mode, tol).with_context(ctx)?;
                push(&mut out, r.report);
                out.maps.extend(r.maps);
            }
            CheckKind::Belinfante => {
                let r = check_belinfante(&scn, grid, mode, tol).with_context(ctx)?;
                push(&mut out, r.report);
                out.lines.push(cross_line(&r.cross_check, &name));
                out.summary.pass &= r.cross_check.agree;
                out.summary.belinfante_cross_checks.push(r.cross_check);
            }
            CheckKind::PlanewaveClosedform => {
                let modes = cfg.plane_waves()?;
                let mut r = check_planewave_closedform(&modes, grid, mode, cfg.closed_form, tol).with_context(ctx)?;
                r.scenario = name.clone();
                push(&mut out, r);
            }
            CheckKind::GlobalIntegral => {
                let modes = cfg.plane_waves()?;
                if modes.is_empty() {
                    bail!("the global integral check needs a plane-wave source");
                }
                let r = global_integral_check(&modes, grid.t0, tol).with_context(ctx)?;
                out.lines.push(global_line(&r, &name));
                out.summary.pass &= r.pass;
                out.summary.global_integral.push(r);
            }
            CheckKind::Convergence => {
                let c = cfg.convergence.as_ref().expect("validated");
                for run in &c.runs {
                    let r = check_convergence(
                        &scn,
                        Vec3::from_array(c.center),
                        c.time,
                        c.points,
                        run.spacing,
                        run.order,
                        c.equation,
                        c.window,
                    )
                    .with_context(ctx)?;
                    out.lines.push(r.summary_line());
                    out.summary.pass &= r.pass;
                    out.summary.convergence.push(r);
                }
            }
        }
    }
    Ok(out)
}
