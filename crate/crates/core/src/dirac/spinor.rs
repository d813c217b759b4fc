use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::gamma::{GammaAlgebra, Mat4};
use super::DiracError;
use crate::constants::Units;
use crate::dual::Dual;
use crate::tensor::{ComplexRing, Ring, Vec3};

type C = Complex64;
pub type DC = Dual<Complex64>;

/// Rest-frame spin label along z.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Spin {
    Up,
    Down,
}

/// Positive-energy plane wave `a u exp(i (p.x - E t)/hbar)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpinorMode {
    pub momentum: Vec3,
    pub spin: Spin,
    pub mass: f64,
    pub amplitude: Complex64,
    pub energy: f64,
    /// Unit-normalized spinor.
    pub u: [Complex64; 4],
    pub units: Units,
}

pub fn plane_spinor(
    p: Vec3,
    spin: Spin,
    mass: f64,
    amplitude: Complex64,
    units: Units,
) -> Result<SpinorMode, DiracError> {
    if !(mass > 0.0) {
        return Err(DiracError::NonPositiveMass(mass));
    }
    if !p.is_finite() || !amplitude.is_finite() || !mass.is_finite() {
        return Err(DiracError::NonFinite);
    }
    let c = units.c;
    let mc2 = mass * c * c;
    let energy = (p.dot(p) * c * c + mc2 * mc2).sqrt();
    let chi = match spin {
        Spin::Up => [C::new(1.0, 0.0), C::new(0.0, 0.0)],
        Spin::Down => [C::new(0.0, 0.0), C::new(1.0, 0.0)],
    };
    // sigma . p acting on chi
    let sp = [
        C::new(p.z, 0.0) * chi[0] + C::new(p.x, -p.y) * chi[1],
        C::new(p.x, p.y) * chi[0] - C::new(p.z, 0.0) * chi[1],
    ];
    let k = c / (energy + mc2);
    let norm = ((energy + mc2) / (2.0 * energy)).sqrt();
    let u = [chi[0] * norm, chi[1] * norm, sp[0] * (k * norm), sp[1] * (k * norm)];
    Ok(SpinorMode {
        momentum: p,
        spin,
        mass,
        amplitude,
        energy,
        u,
        units,
    })
}

fn matvec(m: &Mat4, v: &[C; 4]) -> [C; 4] {
    std::array::from_fn(|i| (0..4).map(|k| m[i][k] * v[k]).sum())
}

impl SpinorMode {
    /// `|| (gamma^0 E/c - gamma.p - m c) u ||`.
    pub fn momentum_residual(&self, alg: &GammaAlgebra) -> f64 {
        let c = self.units.c;
        let p = self.momentum.to_array();
        let g0u = matvec(&alg.gamma[0], &self.u);
        let mut r: [C; 4] = std::array::from_fn(|i| g0u[i] * (self.energy / c) - self.u[i] * (self.mass * c));
        for k in 0..3 {
            let gu = matvec(&alg.gamma[k + 1], &self.u);
            for i in 0..4 {
                r[i] -= gu[i] * p[k];
            }
        }
        r.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.u.iter().map(|v| v.norm_sqr()).sum()
    }
}

/// `psi` and its first spatial derivatives at a point, each as a dual carrying
/// one further order of space-time derivatives.
#[derive(Clone, Debug, PartialEq)]
pub struct SpinorSample {
    pub position: Vec3,
    pub time: f64,
    pub psi: [DC; 4],
    /// `[component][axis] = d_axis psi_component`
    pub grad: [[DC; 3]; 4],
    pub units: Units,
}

impl SpinorSample {
    pub fn psi_values(&self) -> [C; 4] {
        self.psi.map(|d| d.v)
    }

    pub fn dt_psi(&self) -> [C; 4] {
        self.psi.map(|d| d.dt())
    }

    pub fn grad_psi(&self) -> [[C; 3]; 4] {
        self.grad.map(|r| r.map(|d| d.v))
    }

    /// `|(i hbar gamma^mu d_mu - m c) psi| / scale`, with scale the largest
    /// of the individual term norms.
    pub fn dirac_residual(&self, alg: &GammaAlgebra, mass: f64) -> f64 {
        let (hbar, c) = (self.units.hbar, self.units.c);
        let ih = C::new(0.0, hbar);
        let psi = self.psi_values();
        let mut terms: Vec<[C; 4]> = Vec::new();
        let t0 = matvec(&alg.gamma[0], &self.dt_psi());
        terms.push(t0.map(|v| v * ih / c));
        let g = self.grad_psi();
        for k in 0..3 {
            let col: [C; 4] = std::array::from_fn(|i| g[i][k]);
            terms.push(matvec(&alg.gamma[k + 1], &col).map(|v| v * ih));
        }
        terms.push(psi.map(|v| -v * (mass * c)));
        let norm = |v: &[C; 4]| v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        let scale = terms.iter().map(norm).fold(0.0, f64::max).max(1e-300);
        let total: [C; 4] = std::array::from_fn(|i| terms.iter().map(|t| t[i]).sum());
        norm(&total) / scale
    }
}

/// Superposition of the modes at `(x, t)`; all modes must share units.
pub fn eval_spinors(modes: &[SpinorMode], x: Vec3, t: f64) -> SpinorSample {
    let units = modes.first().map_or(Units::default(), |m| m.units);
    let mut psi = [DC::zero(); 4];
    let mut grad = [[DC::zero(); 3]; 4];
    for m in modes {
        let hbar = m.units.hbar;
        let k = m.momentum.scale(1.0 / hbar).to_array();
        let w = m.energy / hbar;
        let phase = C::from_polar(1.0, k[0] * x.x + k[1] * x.y + k[2] * x.z - w * t);
        // multipliers for d/dt and d/dx_i
        let d = [C::new(0.0, -w), C::new(0.0, k[0]), C::new(0.0, k[1]), C::new(0.0, k[2])];
        for c in 0..4 {
            let v = m.amplitude * m.u[c] * phase;
            psi[c] = psi[c] + DC::new(v, d.map(|f| f * v));
            for a in 0..3 {
                let ga = v * d[a + 1];
                grad[c][a] = grad[c][a] + DC::new(ga, d.map(|f| f * ga));
            }
        }
    }
    SpinorSample {
        position: x,
        time: t,
        psi,
        grad,
        units,
    }
}

pub(crate) fn dual_matvec(m: &Mat4, v: &[DC; 4]) -> [DC; 4] {
    std::array::from_fn(|i| {
        (0..4).fold(DC::zero(), |acc, k| {
            if m[i][k] == C::new(0.0, 0.0) {
                acc
            } else {
                acc + v[k].mul_c(m[i][k])
            }
        })
    })
}

/// `a^dagger b` for dual spinors.
pub(crate) fn dual_inner(a: &[DC; 4], b: &[DC; 4]) -> DC {
    (0..4).fold(DC::zero(), |acc, i| acc + a[i].conj() * b[i])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dirac::build_algebra;

    #[test]
    fn rest_spinor() {
        let m = plane_spinor(Vec3::zero(), Spin::Up, 1.0, C::new(1.0, 0.0), Units::NATURAL).unwrap();
        assert_eq!(m.u, [C::new(1.0, 0.0), C::new(0.0, 0.0), C::new(0.0, 0.0), C::new(0.0, 0.0)]);
    }

    #[test]
    fn normalized_and_on_shell() {
        let alg = build_algebra();
        for (p, s) in [
            (Vec3::new(0.3, -1.2, 0.7), Spin::Up),
            (Vec3::new(2.0, 0.5, -3.0), Spin::Down),
            (Vec3::new(0.0, 0.0, 5.0), Spin::Up),
        ] {
            let m = plane_spinor(p, s, 1.3, C::new(0.5, 0.5), Units::NATURAL).unwrap();
            assert!((m.norm_sqr() - 1.0).abs() < 1e-15);
            assert!(m.momentum_residual(&alg) < 1e-12);
        }
        assert!(plane_spinor(Vec3::zero(), Spin::Up, 0.0, C::new(1.0, 0.0), Units::NATURAL).is_err());
    }

    #[test]
    fn sample_satisfies_dirac_equation() {
        let alg = build_algebra();
        let modes = [
            plane_spinor(Vec3::new(0.3, 0.0, 1.0), Spin::Up, 1.0, C::new(1.0, 0.0), Units::NATURAL).unwrap(),
            plane_spinor(Vec3::new(-0.5, 0.8, 0.0), Spin::Down, 1.0, C::new(0.3, -0.7), Units::NATURAL).unwrap(),
        ];
        let s = eval_spinors(&modes, Vec3::new(0.4, -1.1, 2.0), 0.75);
        assert!(s.dirac_residual(&alg, 1.0) < 1e-12);
    }

    #[test]
    fn empty_superposition_is_zero() {
        let s = eval_spinors(&[], Vec3::new(1.0, 2.0, 3.0), 0.0);
        assert!(s.psi_values().iter().all(|v| *v == C::new(0.0, 0.0)));
    }
}
