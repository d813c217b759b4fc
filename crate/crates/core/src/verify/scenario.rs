use crate::constants::C;
use crate::dirac::{build_algebra, dirac_densities, eval_spinors, DiracDensities, GammaAlgebra, SpinorMode};
use crate::em::{EmSource, Gauge};
use crate::quantities::{belinfante_quantities, em_quantities, total_am, Belinfante, EMQuantities, TotalAM};
use crate::tensor::Vec3;

use super::VerifyError;

/// A field configuration together with the origin used for every `r`.
#[derive(Clone, Debug)]
pub struct Scenario {
    pub name: String,
    pub em: EmSource,
    pub dirac: Vec<SpinorMode>,
    pub origin: Vec3,
    pub gauge: Gauge,
    algebra: GammaAlgebra,
}

impl Scenario {
    /// Fails with [`VerifyError::CoupledScenario`] when both sectors are
    /// present: the free solutions used here do not solve the coupled system.
    pub fn new(
        name: impl Into<String>,
        em: EmSource,
        dirac: Vec<SpinorMode>,
        origin: Vec3,
        gauge: Gauge,
    ) -> Result<Self, VerifyError> {
        if !em.is_none() && !dirac.is_empty() {
            return Err(VerifyError::CoupledScenario);
        }
        if let Some(first) = dirac.first() {
            if dirac.iter().any(|m| m.units != first.units) {
                return Err(VerifyError::WrongScenario("spinor modes use different unit systems".into()));
            }
        }
        if !origin.is_finite() {
            return Err(VerifyError::WrongScenario("origin must be finite".into()));
        }
        Ok(Self {
            name: name.into(),
            em,
            dirac,
            origin,
            gauge,
            algebra: build_algebra(),
        })
    }

    pub fn em_only(name: impl Into<String>, em: EmSource, origin: Vec3) -> Result<Self, VerifyError> {
        Self::new(name, em, Vec::new(), origin, Gauge::Zero)
    }

    pub fn with_gauge(mut self, gauge: Gauge) -> Self {
        self.gauge = gauge;
        self
    }

    /// Propagation speed entering the Dirac currents (SI `c` for EM-only).
    pub fn light_speed(&self) -> f64 {
        self.dirac.first().map_or(C, |m| m.units.c)
    }

    pub fn fiber_radius(&self) -> Option<f64> {
        match &self.em {
            EmSource::Fiber(modes) => modes.first().map(|m| m.spec.radius),
            _ => None,
        }
    }

    pub fn is_em_only(&self) -> bool {
        self.dirac.is_empty()
    }

    pub fn point(&self, x: Vec3, t: f64) -> Result<PointFields, VerifyError> {
        let s = self.em.sample(x, t, &self.gauge)?;
        let em = em_quantities(&s, self.origin);
        let c = self.light_speed();
        let dirac = if self.dirac.is_empty() {
            None
        } else {
            let sp = eval_spinors(&self.dirac, x, t);
            Some(dirac_densities(&sp, &self.algebra, self.origin))
        };
        let total = total_am(dirac.as_ref(), &em, c);
        let belinfante = belinfante_quantities(&s, dirac.as_ref(), self.origin, c);
        Ok(PointFields {
            position: x,
            time: t,
            r: x - self.origin,
            permittivity: s.permittivity,
            c,
            em,
            dirac,
            total,
            belinfante,
        })
    }
}

/// Every quantity entering the balance laws at one space-time point.
#[derive(Clone, Debug, PartialEq)]
pub struct PointFields {
    pub position: Vec3,
    pub time: f64,
    /// `position - origin`
    pub r: Vec3,
    pub permittivity: f64,
    pub c: f64,
    pub em: EMQuantities,
    pub dirac: Option<DiracDensities>,
    pub total: TotalAM,
    pub belinfante: Belinfante,
}
