use serde::{Deserialize, Serialize};

use crate::diffops::{convergence_order, ConvergenceOrder, DiffError, FdOrder, GridSpec};
use crate::tensor::Vec3;

use super::residual::{evaluate, sum_consistency, summarize, Basis, DerivativeMode, Equation, ResidualReport};
use super::scenario::Scenario;
use super::VerifyError;

fn basis_for(scn: &Scenario) -> Basis {
    if scn.fiber_radius().is_some() {
        Basis::Cylindrical
    } else {
        Basis::Cartesian
    }
}

fn non_empty(n: usize) -> Result<(), VerifyError> {
    if n == 0 {
        Err(VerifyError::NoPoints)
    } else {
        Ok(())
    }
}

pub fn check_total_continuity(
    scn: &Scenario,
    grid: &GridSpec,
    mode: DerivativeMode,
    tolerance: f64,
) -> Result<ResidualReport, VerifyError> {
    let ev = evaluate(scn, grid, mode, &[Equation::Total])?;
    let f = &ev.fields[&Equation::Total];
    non_empty(f.len())?;
    Ok(summarize(f, &ev, basis_for(scn), tolerance))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpinOamExchange {
    /// Dirac spin, Dirac OAM, EM spin, EM OAM
    pub balances: [ResidualReport; 4],
    pub total: ResidualReport,
    pub sum_consistency: ResidualReport,
}

impl SpinOamExchange {
    pub fn reports(&self) -> Vec<&ResidualReport> {
        self.balances.iter().chain([&self.total, &self.sum_consistency]).collect()
    }
}

pub fn check_spin_oam_exchange(
    scn: &Scenario,
    grid: &GridSpec,
    mode: DerivativeMode,
    tolerance: f64,
) -> Result<SpinOamExchange, VerifyError> {
    let eqs = [
        Equation::DiracSpin,
        Equation::DiracOrbital,
        Equation::EmSpin,
        Equation::EmOrbital,
        Equation::Total,
    ];
    let ev = evaluate(scn, grid, mode, &eqs)?;
    non_empty(ev.fields[&Equation::Total].len())?;
    let basis = basis_for(scn);
    let r = |e: Equation| summarize(&ev.fields[&e], &ev, basis, tolerance);
    Ok(SpinOamExchange {
        balances: [r(eqs[0]), r(eqs[1]), r(eqs[2]), r(eqs[3])],
        total: r(Equation::Total),
        sum_consistency: sum_consistency(&ev)?,
    })
}

/// One term of a balance law sampled over a grid, in `basis` components.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FieldMap {
    pub quantity: String,
    pub units: String,
    pub basis: Basis,
    /// `(x, y, z, t)`, x fastest, then y, z, t
    pub points: Vec<[f64; 4]>,
    pub values: Vec<Vec3>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SourceFreeSpin {
    pub report: ResidualReport,
    /// `eps dt(E x A)`, `-(1/mu0) d_i(A_i B)`, `(1/mu0) grad(A . B)`, `tau_em`
    pub maps: [FieldMap; 4],
}

/// The source-free spin balance, residual `term1 + term2 + term3 - tau_em`,
/// with the four terms returned as field maps.
pub fn check_sourcefree_spin(
    scn: &Scenario,
    grid: &GridSpec,
    mode: DerivativeMode,
    tolerance: f64,
) -> Result<SourceFreeSpin, VerifyError> {
    if !scn.is_em_only() {
        return Err(VerifyError::WrongScenario("the source-free spin balance needs an EM-only scenario".into()));
    }
    let ev = evaluate(scn, grid, mode, &[Equation::SourceFreeSpin])?;
    let f = &ev.fields[&Equation::SourceFreeSpin];
    non_empty(f.len())?;
    let basis = basis_for(scn);
    let mut report = summarize(f, &ev, basis, tolerance);
    report.notes.push("qualitative reproduction: identity and panel layout, not absolute amplitudes".into());
    let map = |k: usize| FieldMap {
        quantity: f.term_names[k].to_string(),
        units: "N m^-2".into(),
        basis,
        points: f.points.clone(),
        values: f
            .points
            .iter()
            .zip(&f.terms[k])
            .map(|(p, v)| basis.rotate(*v, Vec3::new(p[0], p[1], p[2])))
            .collect(),
    };
    Ok(SourceFreeSpin {
        report,
        maps: [map(0), map(1), map(2), map(3)],
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CrossCheck {
    /// Largest `|r_canonical - r_symmetrized|_inf` over points.
    pub max_gap: f64,
    /// Largest gap relative to `tol * (scale_canonical + scale_symmetrized)`.
    pub max_gap_ratio: f64,
    pub agree: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BelinfanteReport {
    pub report: ResidualReport,
    pub canonical: ResidualReport,
    pub cross_check: CrossCheck,
}

pub fn check_belinfante(
    scn: &Scenario,
    grid: &GridSpec,
    mode: DerivativeMode,
    tolerance: f64,
) -> Result<BelinfanteReport, VerifyError> {
    let ev = evaluate(scn, grid, mode, &[Equation::Belinfante, Equation::Total])?;
    let b = &ev.fields[&Equation::Belinfante];
    let c = &ev.fields[&Equation::Total];
    non_empty(b.len())?;
    let basis = basis_for(scn);
    let report = summarize(b, &ev, basis, tolerance);
    let canonical = summarize(c, &ev, basis, tolerance);
    let mut max_gap = 0.0_f64;
    let mut ratio = 0.0_f64;
    for k in 0..b.len() {
        let gap = (b.residual[k] - c.residual[k]).max_abs();
        max_gap = max_gap.max(gap);
        ratio = ratio.max(gap / (tolerance * (b.scale[k] + c.scale[k])));
    }
    Ok(BelinfanteReport {
        report,
        canonical,
        cross_check: CrossCheck {
            max_gap,
            max_gap_ratio: ratio,
            agree: ratio <= 1.0,
        },
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceReport {
    pub equation: Equation,
    pub scenario: String,
    pub order: FdOrder,
    pub spacings: [f64; 3],
    /// Largest absolute residual at each spacing.
    pub errors: [f64; 3],
    /// `None` when the finite-difference residual vanishes identically.
    pub estimate: Option<ConvergenceOrder>,
    pub window: f64,
    pub pass: bool,
    pub exact: bool,
}

impl ConvergenceReport {
    pub fn summary_line(&self) -> String {
        let status = if self.pass { "PASS" } else { "FAIL" };
        match self.estimate {
            Some(e) => format!(
                "{status} convergence {:?} [{}] order {} measured {:.3} (pairwise {:.3}, {:.3})",
                self.equation,
                self.scenario,
                self.order.value(),
                e.order,
                e.pairwise[0],
                e.pairwise[1]
            ),
            None => format!("{status} convergence {:?} [{}] exact", self.equation, self.scenario),
        }
    }
}

/// Finite-difference residual of `equation` on `n^3` cubes centred on
/// `center` with spacings `h`, `h/2`, `h/4`; the measured order must lie
/// within `window` of the stencil order.
pub fn check_convergence(
    scn: &Scenario,
    center: Vec3,
    t: f64,
    n: usize,
    h: f64,
    order: FdOrder,
    equation: Equation,
    window: f64,
) -> Result<ConvergenceReport, VerifyError> {
    let spacings = [h, 0.5 * h, 0.25 * h];
    let mut errors = [0.0; 3];
    for (k, &hk) in spacings.iter().enumerate() {
        let grid = GridSpec::cube(center, hk, n)?.with_times(t, 0.0, 1)?;
        let ev = evaluate(scn, &grid, DerivativeMode::fd(order), &[equation])?;
        let f = ev.field(equation).ok_or(VerifyError::MissingEquation(equation))?;
        non_empty(f.len())?;
        errors[k] = f.residual.iter().map(|r| r.max_abs()).fold(0.0, f64::max);
    }
    let (estimate, exact) = match convergence_order(errors) {
        Ok(e) => (Some(e), false),
        Err(DiffError::ZeroError) => (None, true),
        Err(e) => return Err(e.into()),
    };
    let target = f64::from(order.value());
    let pass = exact || estimate.is_some_and(|e| (e.order - target).abs() <= window);
    Ok(ConvergenceReport {
        equation,
        scenario: scn.name.clone(),
        order,
        spacings,
        errors,
        estimate,
        window,
        pass,
        exact,
    })
}
