//! Step-index fiber: characteristic equation, beta matching and vector mode
//! fields.
//!
//! Fields carry `exp(i (n phi + beta z - omega t))`. In the core the
//! longitudinal components are `a Jn(u rho)` and `b Jn(u rho)` (E and H); in the
//! cladding they are `a Jn(U) Kn(w rho)/Kn(W)` and likewise for `b`, so both
//! are continuous at `rho = a` by construction. Transverse components follow
//! from the curl equations,
//!
//! `E_t = (i/kappa^2) (beta grad Ez - omega mu0 z x grad Hz)`,
//! `H_t = (i/kappa^2) (beta grad Hz + omega eps z x grad Ez)`,
//!
//! with `kappa^2 = u^2` in the core and `-w^2` in the cladding. Cartesian
//! gradients use the ladder relations
//! `(d/dx +- i d/dy) [Z_n(k rho) e^{i n phi}] = s+- Z_{n+-1} e^{i (n+-1) phi}`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::EmError;
use crate::constants::{C, EPS0, MU0};
use crate::jet::CJet;
use crate::roots::brent;
use crate::special::{bessel_j_deriv, bessel_j_orders, bessel_k_scaled_deriv, bessel_k_scaled_orders};
use crate::tensor::Vec3;

/// Largest azimuthal order a fiber mode may carry.
pub const MAX_AZIMUTHAL: u32 = 10;
/// Points closer to the axis than this are outside the evaluation domain.
pub const AXIS_EXCLUSION: f64 = 1e-9;

const RESIDUAL_TOL: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FiberSpec {
    /// Core radius (m).
    pub radius: f64,
    pub n_core: f64,
    pub n_clad: f64,
}

impl FiberSpec {
    pub fn new(radius: f64, n_core: f64, n_clad: f64) -> Result<Self, EmError> {
        let s = Self {
            radius,
            n_core,
            n_clad,
        };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<(), EmError> {
        if !(self.radius > 0.0) || !self.radius.is_finite() {
            return Err(EmError::InvalidSpec(format!("radius {} must be positive", self.radius)));
        }
        if !(self.n_core > 0.0 && self.n_clad > 0.0) {
            return Err(EmError::InvalidSpec("refractive indices must be positive".into()));
        }
        if self.n_core <= self.n_clad {
            return Err(EmError::Guidance {
                n_core: self.n_core,
                n_clad: self.n_clad,
            });
        }
        Ok(())
    }

    pub fn v_number(&self, omega: f64) -> f64 {
        omega / C * self.radius * (self.n_core * self.n_core - self.n_clad * self.n_clad).sqrt()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ModeFamily {
    HE,
    EH,
    TE,
    TM,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Region {
    Core,
    Cladding,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FiberMode {
    pub spec: FiberSpec,
    pub family: ModeFamily,
    pub n: u32,
    pub m: u32,
    pub omega: f64,
    pub beta: f64,
    /// Transverse E-field scale (V/m).
    pub amplitude: f64,
    pub u: f64,
    pub w: f64,
    /// Longitudinal E and H coefficients in the core, already scaled.
    coef_e: Complex64,
    coef_h: Complex64,
}

/// E and H phasor jets (Cartesian), without the `exp(-i omega t)` factor.
#[derive(Clone, Copy, Debug)]
pub struct FiberFields {
    pub e: [CJet; 3],
    pub h: [CJet; 3],
}

fn check_label(family: ModeFamily, n: u32) -> Result<(), EmError> {
    let ok = match family {
        ModeFamily::TE | ModeFamily::TM => n == 0,
        ModeFamily::HE | ModeFamily::EH => (1..=MAX_AZIMUTHAL).contains(&n),
    };
    if ok {
        Ok(())
    } else {
        Err(EmError::InvalidMode { family, n })
    }
}

/// Bessel data at the interface: `J, J', K'/K` (K ratio from scaled values).
fn interface_bessel(n: u32, uu: f64, ww: f64) -> Result<(f64, f64, f64), EmError> {
    let j = bessel_j_orders(n + 1, uu)?;
    let k = bessel_k_scaled_orders(n + 1, ww)?;
    let n = n as usize;
    let (jp, kp) = if n == 0 {
        (-j[1], -k[1])
    } else {
        (0.5 * (j[n - 1] - j[n + 1]), -0.5 * (k[n - 1] + k[n + 1]))
    };
    Ok((j[n], jp, kp / k[n]))
}

struct Dispersion {
    spec: FiberSpec,
    k0: f64,
    v: f64,
}

impl Dispersion {
    fn new(spec: FiberSpec, omega: f64) -> Self {
        Self {
            spec,
            k0: omega / C,
            v: spec.v_number(omega),
        }
    }

    fn w_of(&self, uu: f64) -> f64 {
        ((self.v - uu) * (self.v + uu)).sqrt()
    }

    fn beta_of(&self, uu: f64) -> f64 {
        let n1k = self.spec.n_core * self.k0;
        let u = uu / self.spec.radius;
        ((n1k - u) * (n1k + u)).sqrt()
    }

    /// Characteristic function, free of poles on `0 < U < V`.
    fn eval(&self, family: ModeFamily, n: u32, uu: f64) -> Result<f64, EmError> {
        let ww = self.w_of(uu);
        let (n1, n2) = (self.spec.n_core, self.spec.n_clad);
        let (j, jp, kr) = interface_bessel(n, uu, ww)?;
        Ok(match family {
            ModeFamily::TE => jp * ww + uu * j * kr,
            ModeFamily::TM => n1 * n1 * jp * ww + n2 * n2 * uu * j * kr,
            ModeFamily::HE | ModeFamily::EH => {
                let y = kr / ww;
                let b = (n1 * n1 + n2 * n2) / (2.0 * n1 * n1);
                let c = (n1 * n1 - n2 * n2) / (2.0 * n1 * n1);
                let beta = self.beta_of(uu);
                let d = f64::from(n) * beta / (n1 * self.k0)
                    * (1.0 / (uu * uu) + 1.0 / (ww * ww));
                let root = (c * c * y * y + d * d).sqrt();
                let x = if family == ModeFamily::HE {
                    -b * y - root
                } else {
                    -b * y + root
                };
                jp / uu - j * x
            }
        })
    }

    /// All roots in increasing U (decreasing beta).
    fn roots(&self, family: ModeFamily, n: u32, limit: usize) -> Result<Vec<f64>, EmError> {
        let lo = 1e-5_f64.min(0.5 * self.v);
        let hi = self.v * (1.0 - 1e-10);
        let step = (self.v / 2000.0).min(0.01);
        let mut out = Vec::new();
        let mut a = lo;
        let mut fa = self.eval(family, n, a)?;
        while a < hi && out.len() < limit {
            let b = (a + step).min(hi);
            let fb = self.eval(family, n, b)?;
            if fa == 0.0 {
                out.push(a);
            } else if fa.signum() != fb.signum() && fb != 0.0 {
                let mut err = None;
                let r = brent(
                    |x| match self.eval(family, n, x) {
                        Ok(v) => v,
                        Err(e) => {
                            err = Some(e);
                            0.0
                        }
                    },
                    a,
                    b,
                    1e-15 * self.v,
                )?;
                if let Some(e) = err {
                    return Err(e);
                }
                out.push(r);
            }
            a = b;
            fa = fb;
        }
        Ok(out)
    }
}

/// Relative residual of the product form of the characteristic equation.
pub fn characteristic_residual(mode: &FiberMode) -> f64 {
    let d = Dispersion::new(mode.spec, mode.omega);
    let uu = mode.u * mode.spec.radius;
    let ww = mode.w * mode.spec.radius;
    let (n1, n2) = (mode.spec.n_core, mode.spec.n_clad);
    let Ok((j, jp, kr)) = interface_bessel(mode.n, uu, ww) else {
        return f64::INFINITY;
    };
    let p1 = jp * ww;
    let p2 = kr * uu * j;
    let p = p1 + p2;
    let q = n1 * n1 * p1 + n2 * n2 * p2;
    match mode.family {
        ModeFamily::TE => p.abs() / (p1.abs() + p2.abs()),
        ModeFamily::TM => q.abs() / (n1 * n1 * p1.abs() + n2 * n2 * p2.abs()),
        _ => {
            let v = d.v;
            let rhs = (f64::from(mode.n) * mode.beta / d.k0).powi(2) * v.powi(4) * (j / (uu * ww)).powi(2);
            let lhs = p * q;
            let scale = (p1.abs() + p2.abs()) * (n1 * n1 * p1.abs() + n2 * n2 * p2.abs()) + rhs.abs();
            (lhs - rhs).abs() / scale
        }
    }
}

impl FiberMode {
    fn from_root(
        spec: FiberSpec,
        omega: f64,
        family: ModeFamily,
        n: u32,
        m: u32,
        uu: f64,
        amplitude: f64,
    ) -> Result<Self, EmError> {
        let d = Dispersion::new(spec, omega);
        let ww = d.w_of(uu);
        let beta = d.beta_of(uu);
        let a_r = spec.radius;
        let (u, w) = (uu / a_r, ww / a_r);
        let (j, jp, kr) = interface_bessel(n, uu, ww)?;
        let eps1 = EPS0 * spec.n_core * spec.n_core;
        let eps2 = EPS0 * spec.n_clad * spec.n_clad;
        let i = Complex64::i();
        let (ce, ch) = match family {
            ModeFamily::TE => (Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)),
            ModeFamily::TM => (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)),
            _ => {
                // b/a from continuity of E_phi or of H_phi, whichever is better conditioned
                let nn = i * (f64::from(n) * beta / a_r) * j * (1.0 / (u * u) + 1.0 / (w * w));
                let den1 = omega * MU0 * (jp / u + j * kr / w);
                let cond1 = den1.abs() / (omega * MU0 * ((jp / u).abs() + (j * kr / w).abs()));
                let d2 = eps1 * jp / u + eps2 * j * kr / w;
                let cond2 = j.abs() / j.abs().max(jp.abs());
                let b = if cond1 >= cond2 { nn / den1 } else { -omega * d2 / nn };
                (Complex64::new(1.0, 0.0), b)
            }
        };
        let mut mode = Self {
            spec,
            family,
            n,
            m,
            omega,
            beta,
            amplitude: 1.0,
            u,
            w,
            coef_e: ce,
            coef_h: ch,
        };
        let res = characteristic_residual(&mode);
        if !(res <= RESIDUAL_TOL) {
            return Err(EmError::NoConvergence(format!(
                "characteristic residual {res:e} for {family:?}{n}{m}"
            )));
        }
        let norm = (ce.norm() * beta / u).max(ch.norm() * omega * MU0 / u);
        mode.coef_e /= norm;
        mode.coef_h /= norm;
        Ok(mode.with_amplitude(amplitude))
    }

    /// Same mode rescaled to a new transverse field scale; beta is untouched.
    pub fn with_amplitude(mut self, amplitude: f64) -> Self {
        let k = amplitude / self.amplitude;
        self.coef_e *= k;
        self.coef_h *= k;
        self.amplitude = amplitude;
        self
    }

    pub fn wavelength(&self) -> f64 {
        2.0 * std::f64::consts::PI * C / self.omega
    }

    pub fn permittivity_at(&self, rho: f64) -> f64 {
        let n = if rho < self.spec.radius {
            self.spec.n_core
        } else {
            self.spec.n_clad
        };
        EPS0 * n * n
    }

    pub fn coefficients(&self) -> (Complex64, Complex64) {
        (self.coef_e, self.coef_h)
    }
}

/// Solves for the `m`-th guided root (counted from the upper beta limit).
pub fn solve_fiber_dispersion(
    spec: FiberSpec,
    omega: f64,
    family: ModeFamily,
    n: u32,
    m: u32,
) -> Result<FiberMode, EmError> {
    spec.validate()?;
    check_label(family, n)?;
    if !(omega > 0.0) || m == 0 {
        return Err(EmError::InvalidSpec("omega must be positive and m >= 1".into()));
    }
    let d = Dispersion::new(spec, omega);
    let roots = d.roots(family, n, m as usize)?;
    let Some(&uu) = roots.get(m as usize - 1) else {
        return Err(EmError::NoGuidedMode {
            family,
            n,
            m,
            v: d.v,
        });
    };
    FiberMode::from_root(spec, omega, family, n, m, uu, 1.0)
}

/// Finds the frequency at which branch `(family2, n2, m2)` has the same beta
/// as `mode1`, starting from `omega_guess`.
pub fn beta_match(
    spec: FiberSpec,
    mode1: &FiberMode,
    family2: ModeFamily,
    n2: u32,
    m2: u32,
    omega_guess: f64,
) -> Result<FiberMode, EmError> {
    check_label(family2, n2)?;
    let target = mode1.beta;
    // beta grows with omega along a branch; unguided counts as "too small"
    let g = |omega: f64| -> Result<f64, EmError> {
        match solve_fiber_dispersion(spec, omega, family2, n2, m2) {
            Ok(md) => Ok((md.beta - target) / target),
            Err(EmError::NoGuidedMode { .. }) => Ok(-1.0),
            Err(e) => Err(e),
        }
    };
    let g0 = g(omega_guess)?;
    let mut lo = omega_guess;
    let mut hi = omega_guess;
    let (mut glo, mut ghi) = (g0, g0);
    let mut step = 1e-4;
    let mut tries = 0;
    while glo.signum() == ghi.signum() && glo != 0.0 {
        tries += 1;
        if tries > 60 {
            return Err(EmError::NoConvergence("could not bracket the beta match".into()));
        }
        if g0 < 0.0 {
            lo = hi;
            glo = ghi;
            hi *= 1.0 + step;
            ghi = g(hi)?;
        } else {
            hi = lo;
            ghi = glo;
            lo *= 1.0 - step.min(0.5);
            glo = g(lo)?;
        }
        step *= 2.0;
    }
    let omega2 = if glo == 0.0 {
        lo
    } else {
        let mut err = None;
        let r = brent(
            |w| match g(w) {
                Ok(v) => v,
                Err(e) => {
                    err = Some(e);
                    0.0
                }
            },
            lo,
            hi,
            1e-14 * omega_guess,
        )?;
        if let Some(e) = err {
            return Err(e);
        }
        r
    };
    if (omega2 - mode1.omega).abs() <= 1e-9 * mode1.omega {
        return Err(EmError::DegenerateMatch);
    }
    let mode2 = solve_fiber_dispersion(spec, omega2, family2, n2, m2)?.with_amplitude(mode1.amplitude);
    let mismatch = (mode2.beta - target).abs() / target;
    if mismatch > 1e-10 {
        return Err(EmError::NoConvergence(format!("beta mismatch {mismatch:e} after matching")));
    }
    Ok(mode2)
}

/// HE11 at `lambda1` and the branch whose beta-matched wavelength lies closest
/// to `lambda2_guess`.
pub fn default_fiber_pair(
    spec: FiberSpec,
    lambda1: f64,
    lambda2_guess: f64,
    amplitude: f64,
) -> Result<(FiberMode, FiberMode), EmError> {
    let two_pi_c = 2.0 * std::f64::consts::PI * C;
    let omega1 = two_pi_c / lambda1;
    let omega_g = two_pi_c / lambda2_guess;
    let mode1 = solve_fiber_dispersion(spec, omega1, ModeFamily::HE, 1, 1)?.with_amplitude(amplitude);
    let d = Dispersion::new(spec, omega_g);
    let mut labels: Vec<(ModeFamily, u32)> = vec![(ModeFamily::TE, 0), (ModeFamily::TM, 0)];
    for n in 1..=MAX_AZIMUTHAL {
        labels.push((ModeFamily::HE, n));
        labels.push((ModeFamily::EH, n));
    }
    let mut best: Option<(f64, ModeFamily, u32, u32)> = None;
    for (family, n) in labels {
        for (idx, &uu) in d.roots(family, n, usize::MAX)?.iter().enumerate() {
            let m = idx as u32 + 1;
            if (family, n, m) == (ModeFamily::HE, 1, 1) {
                continue;
            }
            // d beta / d omega ~ n_core / c for well-guided modes
            let est = omega_g + (mode1.beta - d.beta_of(uu)) * C / spec.n_core;
            let dist = (est - omega_g).abs();
            if best.is_none_or(|b| dist < b.0) {
                best = Some((dist, family, n, m));
            }
        }
    }
    let Some((_, family, n, m)) = best else {
        return Err(EmError::NoGuidedMode {
            family: ModeFamily::HE,
            n: 1,
            m: 2,
            v: d.v,
        });
    };
    let mode2 = beta_match(spec, &mode1, family, n, m, omega_g)?;
    Ok((mode1, mode2))
}

fn phase_jet(m: i32, x: Vec3, inv_rho: &CJet) -> CJet {
    let i = Complex64::i();
    let s = if m >= 0 { 1.0 } else { -1.0 };
    let base = (CJet::coord(0, x.x) + CJet::coord(1, x.y).mul_c(i * s)) * *inv_rho;
    base.powi(m.unsigned_abs())
}

/// Phasor jets of E and H using the formulas of `region`, wherever `x` lies.
pub fn fiber_fields_in_region(mode: &FiberMode, x: Vec3, region: Region) -> Result<FiberFields, EmError> {
    let rho2 = CJet::coord(0, x.x) * CJet::coord(0, x.x) + CJet::coord(1, x.y) * CJet::coord(1, x.y);
    if rho2.v.re.sqrt() < AXIS_EXCLUSION {
        return Err(EmError::InvalidSpec("evaluation point on the fiber axis".into()));
    }
    let rho = rho2.sqrt();
    let inv_rho = rho.recip();
    let r = rho.v.re;
    let n = mode.n as i32;
    let a_r = mode.spec.radius;
    let (kappa, kappa2, s_plus, s_minus, eps) = match region {
        Region::Core => (mode.u, mode.u * mode.u, -mode.u, mode.u, mode.permittivity_at(0.0)),
        Region::Cladding => (
            mode.w,
            -mode.w * mode.w,
            -mode.w,
            -mode.w,
            mode.permittivity_at(2.0 * a_r),
        ),
    };
    let xi = kappa * r;
    let ww = mode.w * a_r;
    let (region_coef, k_norm) = match region {
        Region::Core => (1.0, 1.0),
        Region::Cladding => (
            bessel_j_deriv(n, 0, mode.u * a_r)?,
            bessel_k_scaled_orders(mode.n, ww)?[mode.n as usize],
        ),
    };
    let radial = |order: i32| -> Result<[f64; 3], EmError> {
        let mut z = [0.0; 3];
        for (k, zk) in z.iter_mut().enumerate() {
            *zk = match region {
                Region::Core => bessel_j_deriv(order, k as u32, xi)?,
                Region::Cladding => {
                    bessel_k_scaled_deriv(order, k as u32, xi)? * (ww - xi).exp() / k_norm
                }
            };
        }
        Ok(z)
    };
    let profile = |order: i32| -> Result<CJet, EmError> {
        let z = radial(order)?;
        let rad = rho.compose(z[0].into(), (kappa * z[1]).into(), (kappa * kappa * z[2]).into());
        Ok(rad * phase_jet(order, x, &inv_rho))
    };
    let f = profile(n)?;
    let dp = profile(n + 1)?.scale(s_plus);
    let dm = profile(n - 1)?.scale(s_minus);
    let fx = (dp + dm).scale(0.5);
    let fy = (dp - dm).mul_c(Complex64::new(0.0, -0.5));
    let pz = CJet::coord(2, x.z).mul_c(Complex64::new(0.0, mode.beta)).exp();
    let (a, b) = (mode.coef_e * region_coef, mode.coef_h * region_coef);
    let t = Complex64::new(0.0, 1.0 / kappa2);
    let (wmu, weps) = (mode.omega * MU0, mode.omega * eps);
    let beta = mode.beta;
    let e = [
        (fx.mul_c(a * beta) + fy.mul_c(b * wmu)).mul_c(t) * pz,
        (fy.mul_c(a * beta) - fx.mul_c(b * wmu)).mul_c(t) * pz,
        f.mul_c(a) * pz,
    ];
    let h = [
        (fx.mul_c(b * beta) - fy.mul_c(a * weps)).mul_c(t) * pz,
        (fy.mul_c(b * beta) + fx.mul_c(a * weps)).mul_c(t) * pz,
        f.mul_c(b) * pz,
    ];
    Ok(FiberFields { e, h })
}

impl FiberMode {
    pub fn region_of(&self, x: Vec3) -> Region {
        if x.x.hypot(x.y) < self.spec.radius {
            Region::Core
        } else {
            Region::Cladding
        }
    }

    pub fn fields(&self, x: Vec3) -> Result<FiberFields, EmError> {
        fiber_fields_in_region(self, x, self.region_of(x))
    }

    /// Phasor jets of the vector potential, `E / (i omega)`.
    pub(crate) fn a_jets(&self, x: Vec3) -> Result<[CJet; 3], EmError> {
        let inv = 1.0 / Complex64::new(0.0, self.omega);
        Ok(self.fields(x)?.e.map(|c| c.mul_c(inv)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec() -> FiberSpec {
        FiberSpec::new(50e-6, 1.5, 1.0).unwrap()
    }

    fn omega(lambda: f64) -> f64 {
        2.0 * std::f64::consts::PI * C / lambda
    }

    #[test]
    fn guidance_condition() {
        assert!(matches!(
            FiberSpec::new(50e-6, 1.0, 1.5),
            Err(EmError::Guidance { .. })
        ));
        assert!(FiberSpec::new(50e-6, 1.5, 1.5).is_err());
    }

    #[test]
    fn he11_has_no_cutoff() {
        // V well below the first TE/TM cutoff at 2.405
        let s = FiberSpec::new(1e-6, 1.5, 1.45).unwrap();
        let w = 0.5 / s.v_number(1.0);
        let md = solve_fiber_dispersion(s, w, ModeFamily::HE, 1, 1).unwrap();
        assert!(md.beta > 1.45 * w / C && md.beta < 1.5 * w / C);
        assert!(matches!(
            solve_fiber_dispersion(s, w, ModeFamily::TE, 0, 1),
            Err(EmError::NoGuidedMode { .. })
        ));
        assert!(matches!(
            solve_fiber_dispersion(s, w, ModeFamily::EH, 1, 1),
            Err(EmError::NoGuidedMode { .. })
        ));
    }

    #[test]
    fn he11_at_default_wavelength() {
        let w = omega(4.3e-6);
        let md = solve_fiber_dispersion(spec(), w, ModeFamily::HE, 1, 1).unwrap();
        assert!(md.beta > w / C && md.beta < 1.5 * w / C);
        assert!(characteristic_residual(&md) <= 1e-10);
        let doubled = md.with_amplitude(2.0);
        assert_eq!(doubled.beta, md.beta);
    }

    #[test]
    fn invalid_labels() {
        let w = omega(4.3e-6);
        assert!(matches!(
            solve_fiber_dispersion(spec(), w, ModeFamily::HE, 0, 1),
            Err(EmError::InvalidMode { .. })
        ));
        assert!(matches!(
            solve_fiber_dispersion(spec(), w, ModeFamily::TE, 1, 1),
            Err(EmError::InvalidMode { .. })
        ));
    }

    #[test]
    fn same_branch_match_is_degenerate() {
        let w = omega(4.3e-6);
        let md = solve_fiber_dispersion(spec(), w, ModeFamily::HE, 1, 1).unwrap();
        assert!(matches!(
            beta_match(spec(), &md, ModeFamily::HE, 1, 1, w),
            Err(EmError::DegenerateMatch)
        ));
    }

    #[test]
    fn te_tm_roots_satisfy_product_form() {
        // weak and strong guidance
        for s in [spec(), FiberSpec::new(50e-6, 1.4585, 1.444).unwrap()] {
            let w = omega(4.3e-6);
            for family in [ModeFamily::TE, ModeFamily::TM] {
                for m in 1..=3 {
                    let md = solve_fiber_dispersion(s, w, family, 0, m).unwrap();
                    assert!(characteristic_residual(&md) <= 1e-10, "{family:?}0{m}");
                }
            }
        }
    }

    #[test]
    fn matched_pair_is_consistent() {
        let (m1, m2) = default_fiber_pair(spec(), 4.3e-6, 4.29e-6, 1.0).unwrap();
        assert!((m2.beta - m1.beta).abs() <= 1e-10 * m1.beta);
        assert!(m2.omega != m1.omega);
        assert!(characteristic_residual(&m1) <= 1e-10);
        assert!(characteristic_residual(&m2) <= 1e-10);
        let lambda2 = m2.wavelength();
        assert!((lambda2 - 4.29e-6).abs() < 0.05e-6, "{lambda2}");
    }
}
