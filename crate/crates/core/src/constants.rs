//! Physical constants and unit systems.

use serde::{Deserialize, Serialize};

/// Speed of light in vacuum (m/s), exact.
pub const C: f64 = 299_792_458.0;
/// Vacuum permeability (H/m), classical fixed value.
pub const MU0: f64 = 4.0e-7 * std::f64::consts::PI;
/// Vacuum permittivity (F/m), `1/(mu0 c^2)`.
pub const EPS0: f64 = 1.0 / (MU0 * C * C);
/// Reduced Planck constant (J s).
pub const HBAR: f64 = 1.054_571_817e-34;
/// Elementary charge (C).
pub const E_CHARGE: f64 = 1.602_176_634e-19;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum UnitSystem {
    #[default]
    Si,
    Natural,
}

/// The three constants the Dirac sector depends on.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Units {
    pub hbar: f64,
    pub c: f64,
    pub charge: f64,
}

impl Units {
    pub const SI: Units = Units {
        hbar: HBAR,
        c: C,
        charge: E_CHARGE,
    };

    /// `hbar = c = 1`, unit charge.
    pub const NATURAL: Units = Units {
        hbar: 1.0,
        c: 1.0,
        charge: 1.0,
    };

    pub fn from_system(s: UnitSystem) -> Self {
        match s {
            UnitSystem::Si => Self::SI,
            UnitSystem::Natural => Self::NATURAL,
        }
    }
}

impl Default for Units {
    fn default() -> Self {
        Self::NATURAL
    }
}
