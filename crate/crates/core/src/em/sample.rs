//! Point evaluation of real fields from per-mode phasors.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{EmError, FiberMode, PlaneWaveMode};
use crate::constants::EPS0;
use crate::dual::Dual;
use crate::jet::CJet;
use crate::tensor::{CVec3, Ring, Tensor2, Vec3};

/// Closed-form gauge function `zeta`, added as `A -> A + grad zeta`,
/// `phi -> phi - d zeta/dt`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize, Default)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Gauge {
    #[default]
    Zero,
    /// `zeta = alpha . x`
    Linear { alpha: Vec3 },
    /// `zeta = sin(q x) / q`
    Sine { q: f64 },
}

impl Gauge {
    /// `grad zeta` with its space-time partials.
    fn grad(&self, x: Vec3) -> Vec3<Dual<f64>> {
        match *self {
            Gauge::Zero => Vec3::zero(),
            Gauge::Linear { alpha } => alpha.map(Dual::constant),
            Gauge::Sine { q } => {
                let (s, c) = (q * x.x).sin_cos();
                Vec3::new(
                    Dual::new(c, [0.0, -q * s, 0.0, 0.0]),
                    Dual::zero(),
                    Dual::zero(),
                )
            }
        }
    }

    /// `grad (d zeta / dt)` with its partials.
    fn grad_dt(&self, _x: Vec3) -> Vec3<Dual<f64>> {
        // all shipped gauge functions are static
        Vec3::zero()
    }
}

/// One mode's complex amplitudes at the sample point, without `exp(-i omega t)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ModePhasor {
    pub omega: f64,
    pub e: CVec3,
    pub a: CVec3,
}

/// Real fields at one space-time point. Every field is a [`Dual`] carrying its
/// `(d/dt, d/dx, d/dy, d/dz)` derivatives.
#[derive(Clone, Debug, PartialEq)]
pub struct EMFieldSample {
    pub position: Vec3,
    pub time: f64,
    /// Local permittivity (F/m) of the region containing the point.
    pub permittivity: f64,
    pub a_perp: Vec3<Dual<f64>>,
    pub e_perp: Vec3<Dual<f64>>,
    /// `[i][l] = d_i A_l`
    pub grad_a_perp: Tensor2<Dual<f64>>,
    pub a_par: Vec3<Dual<f64>>,
    pub e_par: Vec3<Dual<f64>>,
    pub dt_e_par: Vec3<Dual<f64>>,
    pub phasors: Vec<ModePhasor>,
}

impl EMFieldSample {
    fn empty(position: Vec3, time: f64, permittivity: f64) -> Self {
        Self {
            position,
            time,
            permittivity,
            a_perp: Vec3::zero(),
            e_perp: Vec3::zero(),
            grad_a_perp: Tensor2::zero(),
            a_par: Vec3::zero(),
            e_par: Vec3::zero(),
            dt_e_par: Vec3::zero(),
            phasors: Vec::new(),
        }
    }

    fn add_mode(&mut self, omega: f64, jets: &[CJet; 3]) {
        let tf = Complex64::from_polar(1.0, -omega * self.time);
        let iw = Complex64::new(0.0, omega);
        let mut phasor = ModePhasor {
            omega,
            e: Vec3::zero(),
            a: Vec3::zero(),
        };
        for (l, j) in jets.iter().enumerate() {
            phasor.a[l] = j.v;
            phasor.e[l] = iw * j.v;
            let v = j.v * tf;
            let g: [Complex64; 3] = j.g.map(|d| d * tf);
            let a = Dual::new(v.re, [(-iw * v).re, g[0].re, g[1].re, g[2].re]);
            let e = Dual::new(
                (iw * v).re,
                [(omega * omega * v).re, (iw * g[0]).re, (iw * g[1]).re, (iw * g[2]).re],
            );
            self.a_perp[l] = self.a_perp[l] + a;
            self.e_perp[l] = self.e_perp[l] + e;
            for i in 0..3 {
                let hd = [0, 1, 2].map(|k| (j.h[k][i] * tf).re);
                let gi = Dual::new(g[i].re, [(-iw * g[i]).re, hd[0], hd[1], hd[2]]);
                self.grad_a_perp.m[i][l] = self.grad_a_perp.m[i][l] + gi;
            }
        }
        self.phasors.push(phasor);
    }

    fn apply_gauge(&mut self, gauge: &Gauge) {
        let x = self.position;
        self.a_par = gauge.grad(x);
        // E_par = -grad(phi_shift) - d_t A_par with phi_shift = -d_t zeta
        let g = gauge.grad(x);
        let gdt = gauge.grad_dt(x);
        self.e_par = Vec3::from_array(std::array::from_fn(|i| {
            let v = gdt[i].v - g[i].dt();
            Dual::new(v, [0.0; 4])
        }));
        self.dt_e_par = Vec3::zero();
    }

    /// `B = curl A_perp`.
    pub fn b(&self) -> Vec3<Dual<f64>> {
        let g = &self.grad_a_perp.m;
        Vec3::new(g[1][2] - g[2][1], g[2][0] - g[0][2], g[0][1] - g[1][0])
    }

    /// Total electric field `E_perp + E_par`.
    pub fn e(&self) -> Vec3<Dual<f64>> {
        self.e_perp + self.e_par
    }

    /// `[i][l] = d_i B_l`.
    pub fn grad_b(&self) -> Tensor2<f64> {
        let b = self.b();
        Tensor2::from_fn(|i, l| b[l].dx(i))
    }

    pub fn div_a_perp(&self) -> f64 {
        self.grad_a_perp.m[0][0].v + self.grad_a_perp.m[1][1].v + self.grad_a_perp.m[2][2].v
    }
}

/// Analytic field source.
#[derive(Clone, Debug, PartialEq, Default)]
pub enum EmSource {
    #[default]
    None,
    PlaneWaves(Vec<PlaneWaveMode>),
    Fiber(Vec<FiberMode>),
}

impl EmSource {
    pub fn is_none(&self) -> bool {
        match self {
            EmSource::None => true,
            EmSource::PlaneWaves(m) => m.is_empty(),
            EmSource::Fiber(m) => m.is_empty(),
        }
    }

    pub fn sample(&self, x: Vec3, t: f64, gauge: &Gauge) -> Result<EMFieldSample, EmError> {
        let mut s = match self {
            EmSource::None => EMFieldSample::empty(x, t, EPS0),
            EmSource::PlaneWaves(modes) => {
                let mut s = EMFieldSample::empty(x, t, EPS0);
                for m in modes {
                    s.add_mode(m.omega, &m.a_jets(x));
                }
                s
            }
            EmSource::Fiber(modes) => {
                let eps = modes.first().map_or(EPS0, |m| m.permittivity_at(x.x.hypot(x.y)));
                let mut s = EMFieldSample::empty(x, t, eps);
                for m in modes {
                    s.add_mode(m.omega, &m.a_jets(x)?);
                }
                s
            }
        };
        s.apply_gauge(gauge);
        Ok(s)
    }
}

pub fn eval_plane_waves(modes: &[PlaneWaveMode], x: Vec3, t: f64) -> EMFieldSample {
    let mut s = EMFieldSample::empty(x, t, EPS0);
    for m in modes {
        s.add_mode(m.omega, &m.a_jets(x));
    }
    s
}

pub fn eval_fiber_modes(modes: &[FiberMode], x: Vec3, t: f64) -> Result<EMFieldSample, EmError> {
    EmSource::Fiber(modes.to_vec()).sample(x, t, &Gauge::Zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::C;
    use crate::em::Handedness;

    #[test]
    fn zero_modes_give_zero_fields() {
        let s = eval_plane_waves(&[], Vec3::new(1.0, 2.0, 3.0), 0.5);
        assert_eq!(s.a_perp, Vec3::zero());
        assert_eq!(s.e_perp, Vec3::zero());
        assert_eq!(s.b(), Vec3::zero());
    }

    #[test]
    fn plane_wave_identities() {
        let w = 2.0e15;
        let m = PlaneWaveMode::circular(w, Complex64::new(3.0, 1.0), Handedness::Positive);
        let s = eval_plane_waves(&[m], Vec3::new(1e-7, -2e-7, 3e-7), 1e-16);
        // E = -dA/dt
        for l in 0..3 {
            assert!((s.e_perp[l].v + s.a_perp[l].dt()).abs() < 1e-15 * 3.2);
        }
        // positive handedness: z x e = -i e, so B = k A
        let k = w / C;
        let b = s.b();
        for l in 0..3 {
            assert!((b[l].v - k * s.a_perp[l].v).abs() < 1e-14 * k * 3.2 / w);
        }
        assert!(s.div_a_perp().abs() < 1e-20);
    }

    #[test]
    fn gauge_shift_leaves_perp_fields() {
        let w = 2.0e15;
        let src = EmSource::PlaneWaves(vec![PlaneWaveMode::circular(
            w,
            Complex64::new(1.0, 0.0),
            Handedness::Positive,
        )]);
        let x = Vec3::new(0.2e-6, 0.1e-6, -0.3e-6);
        let s0 = src.sample(x, 1e-15, &Gauge::Zero).unwrap();
        for g in [Gauge::Linear { alpha: Vec3::new(1.0, -2.0, 0.5) }, Gauge::Sine { q: 3e6 }] {
            let s1 = src.sample(x, 1e-15, &g).unwrap();
            assert_eq!(s0.a_perp, s1.a_perp);
            assert_eq!(s0.e(), s1.e());
            assert_eq!(s0.b(), s1.b());
            assert_ne!(s1.a_par, Vec3::zero());
        }
    }
}
