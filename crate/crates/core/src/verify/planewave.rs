use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::constants::EPS0;
use crate::diffops::GridSpec;
use crate::em::{EmSource, Handedness, PlaneWaveMode};
use crate::tensor::Vec3;

use super::residual::{evaluate, summarize, Basis, DerivativeMode, Equation, ResidualField, ResidualReport, SCALE_FLOOR};
use super::scenario::Scenario;
use super::VerifyError;

/// Which closed form the two sides are compared against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum ClosedForm {
    /// `eps0 (w1^2 - w2^2)/(2 w1 w2) Im{E1 E2* exp(-i[(w1-w2)t - (k1-k2)z])} z`
    /// taken at face value.
    #[default]
    Paper,
    /// The same expression with the sign fixed by the handedness: negated
    /// for `(x + iy)/sqrt 2`, unchanged for `(x - iy)/sqrt 2`.
    Derived,
}

struct CoPair {
    omega: [f64; 2],
    k: [f64; 2],
    amp: [Complex64; 2],
    hand: Handedness,
}

fn handedness_of(a: crate::tensor::CVec3) -> Option<(Handedness, Complex64)> {
    let n = a.norm_sqr().sqrt();
    [Handedness::Positive, Handedness::Negative].into_iter().find_map(|h| {
        let e = h.unit_vector();
        let s = e.conj().dot(a);
        let rest = a - e.mul_c(s);
        (rest.norm_sqr().sqrt() <= 1e-12 * n).then_some((h, s))
    })
}

fn co_pair(modes: &[PlaneWaveMode]) -> Result<CoPair, VerifyError> {
    let [m1, m2] = modes else {
        return Err(VerifyError::WrongScenario(format!(
            "closed form needs exactly two plane waves, got {}",
            modes.len()
        )));
    };
    let mut amp = [Complex64::default(); 2];
    let mut hands = [Handedness::Positive; 2];
    for (i, m) in [m1, m2].into_iter().enumerate() {
        if m.k_vec.x != 0.0 || m.k_vec.y != 0.0 || m.k_vec.z <= 0.0 {
            return Err(VerifyError::WrongScenario("both waves must propagate along +z".into()));
        }
        let Some((h, s)) = handedness_of(m.amplitude) else {
            return Err(VerifyError::WrongScenario("both waves must be circularly polarized".into()));
        };
        hands[i] = h;
        amp[i] = s;
    }
    if hands[0] != hands[1] {
        return Err(VerifyError::WrongScenario("both waves must share one handedness".into()));
    }
    Ok(CoPair {
        omega: [m1.omega, m2.omega],
        k: [m1.k_vec.z, m2.k_vec.z],
        amp,
        hand: hands[0],
    })
}

/// z component of the closed form at `(z, t)`.
pub fn closed_form_value(modes: &[PlaneWaveMode], z: f64, t: f64, form: ClosedForm) -> Result<f64, VerifyError> {
    let p = co_pair(modes)?;
    Ok(closed_form_z(&p, z, t, form))
}

fn closed_form_z(p: &CoPair, z: f64, t: f64, form: ClosedForm) -> f64 {
    let [w1, w2] = p.omega;
    let [k1, k2] = p.k;
    let phase = -((w1 - w2) * t - (k1 - k2) * z);
    let im = (p.amp[0] * p.amp[1].conj() * Complex64::from_polar(1.0, phase)).im;
    let lit = EPS0 * (w1 * w1 - w2 * w2) / (2.0 * w1 * w2) * im;
    match (form, p.hand) {
        (ClosedForm::Derived, Handedness::Positive) => -lit,
        _ => lit,
    }
}

/// Compares `(1/mu0) grad(A . B)` and `-eps0 dt(E x A)` with the closed form
/// at every point; the residual takes, per component, the larger of the two
/// deviations.
pub fn check_planewave_closedform(
    modes: &[PlaneWaveMode],
    grid: &GridSpec,
    mode: DerivativeMode,
    form: ClosedForm,
    tolerance: f64,
) -> Result<ResidualReport, VerifyError> {
    let pair = co_pair(modes)?;
    let scn = Scenario::em_only("planewave_closedform", EmSource::PlaneWaves(modes.to_vec()), Vec3::zero())?;
    let ev = evaluate(&scn, grid, mode, &[Equation::EmSpin])?;
    let f = &ev.fields[&Equation::EmSpin];
    if f.is_empty() {
        return Err(VerifyError::NoPoints);
    }
    let (dt_spin, grad_h) = (&f.terms[0], &f.terms[2]);
    let mut field = ResidualField {
        equation: Equation::PlaneWaveClosedForm,
        term_names: vec!["grad_helicity", "minus_dt_spin", "closed_form"],
        term_signs: vec![1.0, 1.0, -1.0],
        points: f.points.clone(),
        terms: vec![Vec::new(), Vec::new(), Vec::new()],
        residual: Vec::with_capacity(f.len()),
        scale: Vec::with_capacity(f.len()),
        magnitude: Vec::with_capacity(f.len()),
    };
    for k in 0..f.len() {
        let [_, _, z, t] = f.points[k];
        let c = Vec3::new(0.0, 0.0, closed_form_z(&pair, z, t, form));
        let s1 = grad_h[k];
        let s2 = -dt_spin[k];
        let (d1, d2) = (s1 - c, s2 - c);
        let r = Vec3::from_array(std::array::from_fn(|i| if d1[i].abs() >= d2[i].abs() { d1[i] } else { d2[i] }));
        field.residual.push(r);
        field.scale.push(s1.max_abs().max(s2.max_abs()).max(c.max_abs()).max(SCALE_FLOOR));
        field.magnitude.push(Vec3::zero());
        field.terms[0].push(s1);
        field.terms[1].push(s2);
        field.terms[2].push(c);
    }
    let mut report = summarize(&field, &ev, Basis::Cartesian, tolerance);
    report.notes.push(format!("closed form: {form:?}, handedness {:?}", pair.hand));
    Ok(report)
}

/// Smallest common spatial period along z of co-propagating waves, or
/// `IncommensurateModes` if it exceeds `max_wavelengths` of the longest wave.
pub fn common_period(modes: &[PlaneWaveMode], max_wavelengths: f64) -> Result<f64, VerifyError> {
    if modes.is_empty() {
        return Err(VerifyError::WrongScenario("no modes".into()));
    }
    for m in modes {
        if m.k_vec.x != 0.0 || m.k_vec.y != 0.0 || m.k_vec.z <= 0.0 {
            return Err(VerifyError::WrongScenario("global integral needs waves along +z".into()));
        }
    }
    let two_pi = 2.0 * std::f64::consts::PI;
    let longest = modes.iter().map(|m| two_pi / m.k_vec.z).fold(0.0, f64::max);
    let limit = max_wavelengths * longest;
    let mut period = two_pi / modes[0].k_vec.z;
    for m in &modes[1..] {
        // period * k / 2 pi must be a ratio p/q; the new period is q * period
        let x = period * m.k_vec.z / two_pi;
        let q = rational_denominator(x, 1e-12, limit / period).ok_or(VerifyError::IncommensurateModes {
            max_wavelengths,
        })?;
        period *= q;
        if period > limit {
            return Err(VerifyError::IncommensurateModes { max_wavelengths });
        }
    }
    Ok(period)
}

/// Denominator of the first continued-fraction convergent within `rel` of
/// `x`, if one exists with denominator at most `max_q`.
fn rational_denominator(x: f64, rel: f64, max_q: f64) -> Option<f64> {
    let (mut h0, mut h1) = (0.0_f64, 1.0_f64);
    let (mut k0, mut k1) = (1.0_f64, 0.0_f64);
    let mut r = x;
    for _ in 0..64 {
        let a = r.floor();
        let (h2, k2) = (a * h1 + h0, a * k1 + k0);
        if k2 > max_q {
            return None;
        }
        if (h2 / k2 - x).abs() <= rel * x.abs() {
            return Some(k2);
        }
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        let frac = r - a;
        if frac == 0.0 {
            return None;
        }
        r = 1.0 / frac;
    }
    None
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GlobalIntegralReport {
    pub period: f64,
    pub samples: usize,
    /// `integral of dM/dt dz` over one period on the z axis
    pub integral: [f64; 3],
    /// `period * omega_max * max |M|_inf`
    pub scale: f64,
    pub rel: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub exact: bool,
}

/// Integrates `dM/dt` over one common spatial period along the z axis with
/// the periodic trapezoid rule. On the axis the orbital terms vanish and the
/// flux terms integrate to zero by periodicity.
pub fn global_integral_check(
    modes: &[PlaneWaveMode],
    t: f64,
    tolerance: f64,
) -> Result<GlobalIntegralReport, VerifyError> {
    let period = common_period(modes, 1e6)?;
    let kmax = modes.iter().map(|m| m.k_vec.z).fold(0.0, f64::max);
    let waves = (kmax * period / (2.0 * std::f64::consts::PI)).ceil() as usize;
    let samples = (8 * waves).clamp(64, 1 << 20);
    let scn = Scenario::em_only("global_integral", EmSource::PlaneWaves(modes.to_vec()), Vec3::zero())?;
    let dz = period / samples as f64;
    let mut acc = [0.0_f64; 3];
    let omega_max = modes.iter().map(|m| m.omega).fold(0.0, f64::max);
    let mut peak = 0.0_f64;
    let mut exact = true;
    for n in 0..samples {
        let p = scn.point(Vec3::new(0.0, 0.0, n as f64 * dz), t)?;
        let d = p.total.m.map(|c| c.dt());
        exact &= d.max_abs() == 0.0;
        peak = peak.max(p.total.m.map(|c| c.v).max_abs());
        for c in 0..3 {
            acc[c] += d[c] * dz;
        }
    }
    let scale = (period * omega_max * peak).max(SCALE_FLOOR);
    let rel = acc.iter().fold(0.0_f64, |m, v| m.max(v.abs())) / scale;
    Ok(GlobalIntegralReport {
        period,
        samples,
        integral: acc,
        scale,
        rel,
        tolerance,
        pass: rel <= tolerance,
        exact,
    })
}
