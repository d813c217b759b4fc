use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::diffops::{fd_partial, fd_partial_bound, FdOrder, GridSpec, ScalarGrid};
use crate::dual::Dual;
use crate::tensor::{Ring, Tensor2, Vec3};

use super::scenario::{PointFields, Scenario};
use super::VerifyError;

type D = Dual<f64>;

/// Floor applied to the per-point term scale.
pub const SCALE_FLOOR: f64 = 1e-30;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Equation {
    Total,
    DiracSpin,
    DiracOrbital,
    EmSpin,
    EmOrbital,
    SourceFreeSpin,
    PlaneWaveClosedForm,
    Belinfante,
    SumConsistency,
}

impl Equation {
    pub fn label(self) -> &'static str {
        match self {
            Equation::Total => "total angular momentum continuity",
            Equation::DiracSpin => "Dirac spin balance",
            Equation::DiracOrbital => "Dirac OAM balance",
            Equation::EmSpin => "EM spin balance",
            Equation::EmOrbital => "EM OAM balance",
            Equation::SourceFreeSpin => "source-free EM spin balance",
            Equation::PlaneWaveClosedForm => "plane-wave closed form",
            Equation::Belinfante => "symmetrized continuity",
            Equation::SumConsistency => "sum of split balances vs total",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum TimeDerivative {
    #[default]
    Analytic,
    Fd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DerivativeMode {
    #[default]
    Analytic,
    Fd {
        order: FdOrder,
        #[serde(default)]
        time: TimeDerivative,
    },
}

impl DerivativeMode {
    pub fn fd(order: FdOrder) -> Self {
        DerivativeMode::Fd {
            order,
            time: TimeDerivative::Analytic,
        }
    }
}

/// Component basis of reported vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum Basis {
    #[default]
    Cartesian,
    /// `rho, phi, z` about the z axis
    Cylindrical,
}

impl Basis {
    pub fn component_names(self) -> [&'static str; 3] {
        match self {
            Basis::Cartesian => ["x", "y", "z"],
            Basis::Cylindrical => ["rho", "phi", "z"],
        }
    }

    pub fn rotate(self, v: Vec3, at: Vec3) -> Vec3 {
        match self {
            Basis::Cartesian => v,
            Basis::Cylindrical => {
                let rho = at.x.hypot(at.y);
                let (c, s) = if rho > 0.0 { (at.x / rho, at.y / rho) } else { (1.0, 0.0) };
                Vec3::new(c * v.x + s * v.y, -s * v.x + c * v.y, v.z)
            }
        }
    }
}

/// Per point, the `(value, magnitude)` of every term.
type PointTerms = Vec<Vec<(Vec3, Vec3)>>;

#[allow(clippy::large_enum_variant)]
#[derive(Clone, Copy)]
enum Src {
    V(Vec3<D>),
    T(Tensor2<D>),
    S(D),
}

#[derive(Clone, Copy, PartialEq)]
enum Op {
    /// `d/dt` of a vector density
    Dt,
    /// `(div T)_j = d_i T_ij`
    Div,
    Grad,
    /// no derivative
    Value,
    /// `r x grad s`
    RCrossGrad,
    /// `grad s x r`, i.e. `curl(r s)`
    GradCrossR,
}

struct Term {
    name: &'static str,
    sign: f64,
    op: Op,
    get: fn(&PointFields) -> Src,
}

fn zero_v() -> Src {
    Src::V(Vec3::zero())
}

fn term_list(eq: Equation, analytic: bool) -> Vec<Term> {
    use Op::*;
    let t = |name, sign, op, get| Term { name, sign, op, get };
    match eq {
        Equation::Total => vec![
            t("dt_M", 1.0, Dt, |p| Src::V(p.total.m)),
            t("div_T", 1.0, Div, |p| Src::T(p.total.t)),
        ],
        Equation::DiracSpin => vec![
            t("dt_spin_dirac", 1.0, Dt, |p| p.dirac.as_ref().map_or(zero_v(), |d| Src::V(d.spin_density))),
            t("grad_chirality", 1.0, Grad, |p| {
                Src::S(p.dirac.as_ref().map_or(D::zero(), |d| d.chirality.scale(p.c)))
            }),
            t("tau_dirac", -1.0, Value, |p| p.dirac.as_ref().map_or(zero_v(), |d| Src::V(d.tau))),
        ],
        Equation::DiracOrbital => vec![
            t("dt_oam_dirac", 1.0, Dt, |p| p.dirac.as_ref().map_or(zero_v(), |d| Src::V(d.oam_density))),
            t("div_oam_current_dirac", 1.0, Div, |p| {
                Src::T(p.dirac.as_ref().map_or(Tensor2::zero(), |d| d.oam_current.scale(p.c)))
            }),
            t("tau_dirac", 1.0, Value, |p| p.dirac.as_ref().map_or(zero_v(), |d| Src::V(d.tau))),
        ],
        Equation::EmSpin | Equation::SourceFreeSpin => vec![
            t("dt_spin", 1.0, Dt, |p| Src::V(p.em.spin_density)),
            t("div_helicity_current", 1.0, Div, |p| Src::T(p.em.helicity_current)),
            t("grad_helicity", 1.0, Grad, |p| Src::S(p.em.helicity)),
            t("tau_em", -1.0, Value, |p| Src::V(p.em.tau)),
        ],
        Equation::EmOrbital => {
            let n_term = if analytic {
                t("div_n", 1.0, RCrossGrad, |p| Src::S(p.em.n_em))
            } else {
                t("div_n", 1.0, Div, |p| Src::T(p.em.n_tensor))
            };
            vec![
                t("dt_oam", 1.0, Dt, |p| Src::V(p.em.oam_density)),
                t("div_oam_current", 1.0, Div, |p| Src::T(p.em.oam_current)),
                n_term,
                t("tau_em", 1.0, Value, |p| Src::V(p.em.tau)),
            ]
        }
        Equation::Belinfante => vec![
            t("dt_M_sym", 1.0, Dt, |p| Src::V(p.belinfante.m)),
            t("div_J_sym", 1.0, Div, |p| Src::T(p.belinfante.j)),
            t("grad_chi_sym", 1.0, Grad, |p| Src::S(p.belinfante.chi)),
            t("curl_r_u", -1.0, GradCrossR, |p| Src::S(p.belinfante.u)),
        ],
        Equation::PlaneWaveClosedForm | Equation::SumConsistency => Vec::new(),
    }
}

/// Pointwise residual of one balance law over the evaluated points.
#[derive(Clone, Debug, PartialEq)]
pub struct ResidualField {
    pub equation: Equation,
    pub term_names: Vec<&'static str>,
    pub term_signs: Vec<f64>,
    /// `(x, y, z, t)` per entry
    pub points: Vec<[f64; 4]>,
    /// `terms[term][entry]`, unsigned as named
    pub terms: Vec<Vec<Vec3>>,
    pub residual: Vec<Vec3>,
    /// Largest `|term|_inf` at each entry, floored at [`SCALE_FLOOR`].
    pub scale: Vec<f64>,
    /// Per component, the summed magnitudes of every partial that entered the
    /// terms; bounds the rounding of the residual.
    pub magnitude: Vec<Vec3>,
}

impl ResidualField {
    fn empty(eq: Equation, analytic: bool) -> Self {
        let terms = term_list(eq, analytic);
        Self {
            equation: eq,
            term_names: terms.iter().map(|t| t.name).collect(),
            term_signs: terms.iter().map(|t| t.sign).collect(),
            points: Vec::new(),
            terms: vec![Vec::new(); terms.len()],
            residual: Vec::new(),
            scale: Vec::new(),
            magnitude: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    fn push(&mut self, point: [f64; 4], values: &[(Vec3, Vec3)]) {
        let mut res = Vec3::zero();
        let mut mag = Vec3::zero();
        let mut scale = 0.0_f64;
        for (k, (v, m)) in values.iter().enumerate() {
            res += v.scale(self.term_signs[k]);
            mag += *m;
            scale = scale.max(v.max_abs());
            self.terms[k].push(*v);
        }
        self.points.push(point);
        self.residual.push(res);
        self.scale.push(scale.max(SCALE_FLOOR));
        self.magnitude.push(mag);
    }
}

fn abs3(v: Vec3) -> Vec3 {
    v.map(f64::abs)
}

/// Analytic value and rounding magnitude of a term from the point's duals.
fn analytic_term(term: &Term, p: &PointFields) -> (Vec3, Vec3) {
    let src = (term.get)(p);
    match (term.op, src) {
        (Op::Dt, Src::V(v)) => {
            let d = v.map(|c| c.dt());
            (d, abs3(d))
        }
        (Op::Value, Src::V(v)) => {
            let d = v.map(|c| c.v);
            (d, abs3(d))
        }
        (Op::Div, Src::T(t)) => {
            let val = Vec3::from_array(std::array::from_fn(|j| {
                t.m[0][j].dx(0) + t.m[1][j].dx(1) + t.m[2][j].dx(2)
            }));
            let mag = Vec3::from_array(std::array::from_fn(|j| {
                t.m[0][j].dx(0).abs() + t.m[1][j].dx(1).abs() + t.m[2][j].dx(2).abs()
            }));
            (val, mag)
        }
        (Op::Grad, Src::S(s)) => {
            let g = s.grad();
            (g, abs3(g))
        }
        (Op::RCrossGrad, Src::S(s)) => {
            let g = s.grad();
            (p.r.cross(g), cross_bound(p.r, g))
        }
        (Op::GradCrossR, Src::S(s)) => {
            let g = s.grad();
            (g.cross(p.r), cross_bound(p.r, g))
        }
        _ => unreachable!("term operator and source kind disagree"),
    }
}

fn cross_bound(a: Vec3, b: Vec3) -> Vec3 {
    let (a, b) = (abs3(a), abs3(b));
    Vec3::new(a.y * b.z + a.z * b.y, a.z * b.x + a.x * b.z, a.x * b.y + a.y * b.x)
}

/// Residual fields of several balance laws over a grid.
#[derive(Clone, Debug)]
pub struct Evaluation {
    pub scenario: String,
    pub grid: GridSpec,
    pub mode: DerivativeMode,
    pub fields: BTreeMap<Equation, ResidualField>,
    /// Points dropped next to the fiber interface (finite differences only).
    pub excluded_points: usize,
    pub notes: Vec<String>,
}

impl Evaluation {
    pub fn field(&self, eq: Equation) -> Option<&ResidualField> {
        self.fields.get(&eq)
    }
}

fn eval_grid(scn: &Scenario, spec: &GridSpec, t: f64) -> Result<Vec<PointFields>, VerifyError> {
    (0..spec.len())
        .into_par_iter()
        .map(|i| scn.point(spec.point(i), t))
        .collect()
}

/// Evaluates the residual fields of `equations` on every time sample of
/// `grid`. Analytic mode uses all points; finite-difference mode uses the
/// interior points and, for fiber sources, drops a band of two grid steps
/// around the core interface.
pub fn evaluate(
    scn: &Scenario,
    grid: &GridSpec,
    mode: DerivativeMode,
    equations: &[Equation],
) -> Result<Evaluation, VerifyError> {
    grid.validate()?;
    let analytic = mode == DerivativeMode::Analytic;
    let mut fields: BTreeMap<Equation, ResidualField> = equations
        .iter()
        .filter(|e| !matches!(e, Equation::PlaneWaveClosedForm | Equation::SumConsistency))
        .map(|&e| (e, ResidualField::empty(e, analytic)))
        .collect();
    let mut excluded = 0;
    let mut notes = Vec::new();
    let mut core_points = false;
    let radius = scn.fiber_radius();

    for n in 0..grid.nt {
        let t = grid.time(n);
        let pts = eval_grid(scn, grid, t)?;
        match mode {
            DerivativeMode::Analytic => {
                for p in &pts {
                    if let Some(a) = radius {
                        core_points |= p.position.x.hypot(p.position.y) < a;
                    }
                    for (eq, f) in fields.iter_mut() {
                        let vals: Vec<_> = term_list(*eq, true).iter().map(|tm| analytic_term(tm, p)).collect();
                        f.push([p.position.x, p.position.y, p.position.z, t], &vals);
                    }
                }
            }
            DerivativeMode::Fd { order, time } => {
                let inner = grid.interior(order)?;
                let hw = order.half_width();
                let shifted = match time {
                    TimeDerivative::Analytic => Vec::new(),
                    TimeDerivative::Fd => {
                        let h = (0..3)
                            .filter(|&a| grid.dims[a] > 1)
                            .map(|a| grid.spacing[a])
                            .fold(f64::INFINITY, f64::min);
                        let dt = h / scn.light_speed();
                        let mut v = Vec::new();
                        for k in 1..=hw {
                            let kt = k as f64 * dt;
                            v.push((kt, eval_grid(scn, grid, t + kt)?, eval_grid(scn, grid, t - kt)?));
                        }
                        v
                    }
                };
                let band = 2.0 * grid.max_spacing();
                let mut per_eq: Vec<(Equation, PointTerms)> = Vec::new();
                for eq in fields.keys() {
                    let terms = term_list(*eq, false);
                    let cols = terms
                        .iter()
                        .map(|tm| fd_term(tm, grid, &inner, order, &pts, &shifted))
                        .collect::<Result<Vec<_>, _>>()?;
                    per_eq.push((*eq, cols));
                }
                for idx in 0..inner.len() {
                    let [i, j, k] = inner.unravel(idx);
                    let full = grid.index(i + hw, j + hw, k + hw);
                    let x = pts[full].position;
                    if let Some(a) = radius {
                        let rho = x.x.hypot(x.y);
                        if (rho - a).abs() < band {
                            excluded += 1;
                            continue;
                        }
                        core_points |= rho < a;
                    }
                    for (eq, cols) in &per_eq {
                        let vals: Vec<_> = cols.iter().map(|c| c[idx]).collect();
                        fields.get_mut(eq).expect("equation registered").push([x.x, x.y, x.z, t], &vals);
                    }
                }
            }
        }
    }
    if core_points {
        notes.push(
            "medium caveat: points inside the fiber core use the local permittivity n^2 eps0 in place of eps0".into(),
        );
    }
    Ok(Evaluation {
        scenario: scn.name.clone(),
        grid: *grid,
        mode,
        fields,
        excluded_points: excluded,
        notes,
    })
}

type Shifted = Vec<(f64, Vec<PointFields>, Vec<PointFields>)>;

/// Values and rounding magnitudes of one term at every interior point.
fn fd_term(
    term: &Term,
    grid: &GridSpec,
    inner: &GridSpec,
    order: FdOrder,
    pts: &[PointFields],
    shifted: &Shifted,
) -> Result<Vec<(Vec3, Vec3)>, VerifyError> {
    let hw = order.half_width();
    let full_index = |idx: usize| {
        let [i, j, k] = inner.unravel(idx);
        grid.index(i + hw, j + hw, k + hw)
    };
    let vals: Vec<Src> = pts.iter().map(|p| (term.get)(p)).collect();
    let out = match term.op {
        Op::Value => (0..inner.len())
            .map(|idx| {
                let Src::V(v) = vals[full_index(idx)] else { unreachable!() };
                let d = v.map(|c| c.v);
                (d, abs3(d))
            })
            .collect(),
        Op::Dt if shifted.is_empty() => (0..inner.len())
            .map(|idx| {
                let Src::V(v) = vals[full_index(idx)] else { unreachable!() };
                let d = v.map(|c| c.dt());
                (d, abs3(d))
            })
            .collect(),
        Op::Dt => {
            let dt = shifted[0].0;
            let w = stencil_weights(order);
            (0..inner.len())
                .map(|idx| {
                    let f = full_index(idx);
                    let mut val = Vec3::zero();
                    let mut mag = Vec3::zero();
                    for (k, (_, plus, minus)) in shifted.iter().enumerate() {
                        let (Src::V(a), Src::V(b)) = ((term.get)(&plus[f]), (term.get)(&minus[f])) else {
                            unreachable!()
                        };
                        let (a, b) = (a.map(|c| c.v), b.map(|c| c.v));
                        val += (a - b).scale(w[k] / dt);
                        mag += (abs3(a) + abs3(b)).scale(w[k].abs() / dt);
                    }
                    (val, mag)
                })
                .collect()
        }
        Op::Div => {
            let vals = &vals;
            let comp = |i: usize, j: usize| {
                move |n: usize| match vals[n] {
                    Src::T(t) => t.m[i][j].v,
                    _ => unreachable!(),
                }
            };
            let mut v: Vec<ScalarGrid> = Vec::with_capacity(9);
            let mut b: Vec<ScalarGrid> = Vec::with_capacity(9);
            for i in 0..3 {
                for j in 0..3 {
                    v.push(fd_partial(grid, order, i, comp(i, j))?);
                    b.push(fd_partial_bound(grid, order, i, comp(i, j))?);
                }
            }
            (0..inner.len())
                .map(|idx| {
                    let val = Vec3::from_array(std::array::from_fn(|j| {
                        v[j].data[idx] + v[3 + j].data[idx] + v[6 + j].data[idx]
                    }));
                    let mag = Vec3::from_array(std::array::from_fn(|j| {
                        b[j].data[idx] + b[3 + j].data[idx] + b[6 + j].data[idx]
                    }));
                    (val, mag)
                })
                .collect()
        }
        Op::Grad | Op::RCrossGrad | Op::GradCrossR => {
            let s = |n: usize| match vals[n] {
                Src::S(s) => s.v,
                _ => unreachable!(),
            };
            let g: Vec<ScalarGrid> = (0..3).map(|a| fd_partial(grid, order, a, s)).collect::<Result<_, _>>()?;
            let gb: Vec<ScalarGrid> =
                (0..3).map(|a| fd_partial_bound(grid, order, a, s)).collect::<Result<_, _>>()?;
            (0..inner.len())
                .map(|idx| {
                    let gv = Vec3::new(g[0].data[idx], g[1].data[idx], g[2].data[idx]);
                    let gm = Vec3::new(gb[0].data[idx], gb[1].data[idx], gb[2].data[idx]);
                    let r = pts[full_index(idx)].r;
                    match term.op {
                        Op::Grad => (gv, gm),
                        Op::RCrossGrad => (r.cross(gv), cross_bound(r, gm)),
                        _ => (gv.cross(r), cross_bound(r, gm)),
                    }
                })
                .collect()
        }
    };
    Ok(out)
}

fn stencil_weights(order: FdOrder) -> &'static [f64] {
    match order {
        FdOrder::Two => &[0.5],
        FdOrder::Four => &[2.0 / 3.0, -1.0 / 12.0],
    }
}

/// Summary statistics of a residual field against a relative tolerance.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResidualReport {
    pub equation: Equation,
    pub scenario: String,
    pub max_abs: f64,
    pub max_rel: f64,
    /// `sqrt(sum |r|_inf^2 / sum scale^2)`
    pub l2_rel: f64,
    /// Largest per-point scale.
    pub scale: f64,
    /// Per-component maximum of `|r_c| / scale(point)` in `basis`.
    pub component_max_rel: [f64; 3],
    pub basis: Basis,
    /// `(x, y, z, t)` of the largest relative residual.
    pub worst_point: Option<[f64; 4]>,
    pub grid: GridSpec,
    pub points: usize,
    pub excluded_points: usize,
    pub mode: DerivativeMode,
    pub tolerance: f64,
    pub pass: bool,
    /// Every residual is exactly zero.
    pub exact: bool,
    pub notes: Vec<String>,
}

impl ResidualReport {
    pub fn summary_line(&self) -> String {
        let status = if self.pass { "PASS" } else { "FAIL" };
        let exact = if self.exact { " (exact)" } else { "" };
        let worst = self
            .worst_point
            .map(|p| format!(" worst at ({:.6e}, {:.6e}, {:.6e}, t={:.6e})", p[0], p[1], p[2], p[3]))
            .unwrap_or_default();
        format!(
            "{status} {:?} [{}] max_rel={:.3e} tol={:.1e}{exact}{worst}",
            self.equation, self.scenario, self.max_rel, self.tolerance
        )
    }
}

/// Reduces a residual field in entry order, so the result does not depend on
/// how the field was filled.
pub fn summarize(field: &ResidualField, eval: &Evaluation, basis: Basis, tolerance: f64) -> ResidualReport {
    let mut max_abs = 0.0_f64;
    let mut max_rel = 0.0_f64;
    let mut scale_max = 0.0_f64;
    let mut comp = [0.0_f64; 3];
    let mut worst = None;
    let (mut num, mut den) = (0.0, 0.0);
    let mut exact = true;
    for (k, r) in field.residual.iter().enumerate() {
        let p = field.points[k];
        let rr = basis.rotate(*r, Vec3::new(p[0], p[1], p[2]));
        let a = rr.max_abs();
        let s = field.scale[k];
        exact &= r.max_abs() == 0.0;
        max_abs = max_abs.max(a);
        scale_max = scale_max.max(s);
        num += a * a;
        den += s * s;
        let rel = a / s;
        if rel > max_rel || worst.is_none() {
            max_rel = max_rel.max(rel);
            worst = Some(p);
        }
        for c in 0..3 {
            comp[c] = comp[c].max(rr[c].abs() / s);
        }
    }
    let l2_rel = if den > 0.0 { (num / den).sqrt() } else { 0.0 };
    ResidualReport {
        equation: field.equation,
        scenario: eval.scenario.clone(),
        max_abs,
        max_rel,
        l2_rel,
        scale: scale_max,
        component_max_rel: comp,
        basis,
        worst_point: worst,
        grid: eval.grid,
        points: field.len(),
        excluded_points: eval.excluded_points,
        mode: eval.mode,
        tolerance,
        pass: max_rel <= tolerance && max_rel.is_finite(),
        exact: exact && !field.is_empty(),
        notes: eval.notes.clone(),
    }
}

/// Allowed rounding for the split-vs-total comparison, in units of the
/// summed magnitudes.
pub const SUM_CONSISTENCY_ULPS: f64 = 8.0;

/// Compares the sum of the four split balances with the total balance at
/// every point. Requires all five fields in `eval`.
pub fn sum_consistency(eval: &Evaluation) -> Result<ResidualReport, VerifyError> {
    let need = [
        Equation::DiracSpin,
        Equation::DiracOrbital,
        Equation::EmSpin,
        Equation::EmOrbital,
        Equation::Total,
    ];
    let f: Vec<&ResidualField> = need
        .iter()
        .map(|e| eval.field(*e).ok_or(VerifyError::MissingEquation(*e)))
        .collect::<Result<_, _>>()?;
    let total = f[4];
    let mut field = ResidualField {
        equation: Equation::SumConsistency,
        term_names: vec!["split_sum", "total"],
        term_signs: vec![1.0, -1.0],
        points: total.points.clone(),
        terms: vec![Vec::new(), Vec::new()],
        residual: Vec::with_capacity(total.len()),
        scale: Vec::with_capacity(total.len()),
        magnitude: Vec::with_capacity(total.len()),
    };
    let mut max_rel = 0.0_f64;
    let mut worst = None;
    let mut max_abs = 0.0_f64;
    let mut exact = true;
    for k in 0..total.len() {
        let split = f[0].residual[k] + f[1].residual[k] + f[2].residual[k] + f[3].residual[k];
        let diff = split - total.residual[k];
        let mag = f.iter().fold(Vec3::zero(), |acc, x| acc + x.magnitude[k]);
        let mut rel = 0.0_f64;
        for c in 0..3 {
            let m = mag[c].max(SCALE_FLOOR);
            rel = rel.max(diff[c].abs() / m);
        }
        exact &= diff.max_abs() == 0.0;
        max_abs = max_abs.max(diff.max_abs());
        if rel > max_rel || worst.is_none() {
            max_rel = max_rel.max(rel);
            worst = Some(total.points[k]);
        }
        field.terms[0].push(split);
        field.terms[1].push(total.residual[k]);
        field.residual.push(diff);
        field.scale.push(mag.max_abs().max(SCALE_FLOOR));
        field.magnitude.push(mag);
    }
    let tolerance = SUM_CONSISTENCY_ULPS * f64::EPSILON;
    let mut report = summarize(&field, eval, Basis::Cartesian, tolerance);
    report.max_rel = max_rel;
    report.max_abs = max_abs;
    report.worst_point = worst;
    report.exact = exact && !field.is_empty();
    report.pass = max_rel <= tolerance;
    report.notes.push("relative to the summed magnitudes of every partial entering the five balances".into());
    Ok(report)
}
