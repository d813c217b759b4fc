use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::EmError;
use crate::constants::C;
use crate::jet::CJet;
use crate::tensor::{CVec3, Vec3};

/// Sense of rotation of a circularly polarized wave along +z, for the
/// `exp(-i omega t)` time convention. `Positive` is `(x + i y)/sqrt 2` and
/// carries spin along +z.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Handedness {
    #[default]
    Positive,
    Negative,
}

impl Handedness {
    pub fn unit_vector(self) -> CVec3 {
        let r = std::f64::consts::FRAC_1_SQRT_2;
        let s = match self {
            Handedness::Positive => 1.0,
            Handedness::Negative => -1.0,
        };
        Vec3::new(Complex64::new(r, 0.0), Complex64::new(0.0, s * r), Complex64::new(0.0, 0.0))
    }
}

/// `E = Re{ amplitude exp(-i (omega t - k.x)) }`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PlaneWaveMode {
    pub omega: f64,
    pub k_vec: Vec3,
    pub amplitude: CVec3,
}

const TOL: f64 = 1e-12;

impl PlaneWaveMode {
    pub fn new(omega: f64, k_vec: Vec3, amplitude: CVec3) -> Result<Self, EmError> {
        if !(omega > 0.0) || !k_vec.is_finite() || !amplitude.is_finite() {
            return Err(EmError::InvalidSpec(
                "plane wave needs omega > 0 and finite vectors".into(),
            ));
        }
        let k = k_vec.norm();
        let disp = k * C / omega - 1.0;
        if disp.abs() > TOL {
            return Err(EmError::Dispersion(disp));
        }
        let kc = Vec3::<Complex64>::from_real(k_vec);
        let a = amplitude.norm_sqr().sqrt();
        if a > 0.0 {
            let t = kc.dot(amplitude).norm() / (k * a);
            if t > TOL {
                return Err(EmError::NotTransverse(t));
            }
        }
        Ok(Self {
            omega,
            k_vec,
            amplitude,
        })
    }

    /// Circularly polarized wave along +z with complex scalar amplitude.
    pub fn circular(omega: f64, amplitude: Complex64, hand: Handedness) -> Self {
        Self {
            omega,
            k_vec: Vec3::new(0.0, 0.0, omega / C),
            amplitude: hand.unit_vector().mul_c(amplitude),
        }
    }

    pub fn wavenumber(&self) -> f64 {
        self.k_vec.norm()
    }

    /// Phasor jets of the vector potential, `amplitude / (i omega) exp(i k.x)`.
    pub(crate) fn a_jets(&self, x: Vec3) -> [CJet; 3] {
        let phase = CJet::plane_phase(self.k_vec.to_array(), x.to_array());
        let inv = 1.0 / Complex64::new(0.0, self.omega);
        self.amplitude.to_array().map(|e| phase.mul_c(e * inv))
    }
}
