//! Electromagnetic angular-momentum densities, currents and torques, the total
//! density and current, and the symmetrized (Belinfante) variants.
//!
//! All quantities are evaluated on real instantaneous fields with dual
//! numbers, so every returned value carries its own exact first space-time
//! derivatives.

use crate::constants::{EPS0, MU0};
use crate::dirac::DiracDensities;
use crate::dual::{position_dual, Dual};
use crate::em::EMFieldSample;
use crate::tensor::{eps_contract, levi_civita, outer, Ring, Tensor2, Vec3};

type D = Dual<f64>;

#[derive(Clone, Debug, PartialEq)]
pub struct EMQuantities {
    /// `eps E_perp x A_perp`
    pub spin_density: Vec3<D>,
    /// `eps E_perp,l (r x grad) A_perp,l`
    pub oam_density: Vec3<D>,
    /// `(1/mu0) A_perp . B`
    pub helicity: D,
    /// `-(1/mu0) A_perp,i B_j`
    pub helicity_current: Tensor2<D>,
    /// `-(1/mu0) eps_ikl B_k (r x grad)_j A_l - eps0 A_i (r x dt E_par)_j`
    pub oam_current: Tensor2<D>,
    /// `(1/mu0) (B . grad) A_perp - eps0 dt E_par x A_perp`
    pub tau: Vec3<D>,
    /// `eps E^2/2 - B^2/(2 mu0) + eps0 dt E_par . A_perp`
    pub n_em: D,
    /// `eps_ijk x_k n_em`
    pub n_tensor: Tensor2<D>,
}

/// `(r x grad)_j A_l` as `[j][l]`.
fn r_cross_grad(r: &Vec3<D>, grad_a: &Tensor2<D>) -> Tensor2<D> {
    Tensor2::from_fn(|j, l| {
        let mut acc = D::zero();
        for k in 0..3 {
            for m in 0..3 {
                let e = levi_civita(j, k, m);
                if e != 0.0 {
                    acc = acc + (r[k] * grad_a.m[m][l]).scale(e);
                }
            }
        }
        acc
    })
}

pub fn em_quantities(s: &EMFieldSample, origin: Vec3) -> EMQuantities {
    let eps = s.permittivity;
    let inv_mu = 1.0 / MU0;
    let r = position_dual(s.position - origin);
    let a = s.a_perp;
    let e_perp = s.e_perp;
    let e = s.e();
    let b = s.b();
    let dte = s.dt_e_par;
    let rg = r_cross_grad(&r, &s.grad_a_perp);

    let spin_density = e_perp.cross(a).scale(eps);
    let oam_density = Vec3::from_array(std::array::from_fn(|j| {
        (0..3).fold(D::zero(), |acc, l| acc + e_perp[l] * rg.m[j][l]).scale(eps)
    }));
    let helicity = a.dot(b).scale(inv_mu);
    let helicity_current = outer(a, b).scale(-inv_mu);
    let r_x_dte = r.cross(dte);
    let oam_current = Tensor2::from_fn(|i, j| {
        let mut acc = D::zero();
        for k in 0..3 {
            for l in 0..3 {
                let ee = levi_civita(i, k, l);
                if ee != 0.0 {
                    acc = acc + (b[k] * rg.m[j][l]).scale(ee);
                }
            }
        }
        acc.scale(-inv_mu) - (a[i] * r_x_dte[j]).scale(EPS0)
    });
    // (B . grad) A_l = B_m d_m A_l
    let b_grad_a = Vec3::from_array(std::array::from_fn(|l| {
        (0..3).fold(D::zero(), |acc, m| acc + b[m] * s.grad_a_perp.m[m][l])
    }));
    let tau = b_grad_a.scale(inv_mu) - dte.cross(a).scale(EPS0);
    let n_em = e.dot(e).scale(0.5 * eps) - b.dot(b).scale(0.5 * inv_mu) + dte.dot(a).scale(EPS0);
    let n_tensor = eps_contract(r).map(|v| v * n_em);
    EMQuantities {
        spin_density,
        oam_density,
        helicity,
        helicity_current,
        oam_current,
        tau,
        n_em,
        n_tensor,
    }
}

impl EMQuantities {
    /// `(r x grad) n_em`, the divergence of `n_tensor` taken directly.
    pub fn div_n_direct(&self, position: Vec3, origin: Vec3) -> Vec3 {
        (position - origin).cross(self.n_em.grad())
    }
}

/// Total angular-momentum density and current.
#[derive(Clone, Debug, PartialEq)]
pub struct TotalAM {
    pub m: Vec3<D>,
    pub t: Tensor2<D>,
    pub chi: D,
}

/// Sums the Dirac and EM sides; `c` converts the Dirac flux terms to
/// current densities (it is 1 in natural units).
pub fn total_am(d: Option<&DiracDensities>, e: &EMQuantities, c: f64) -> TotalAM {
    let mut m = e.spin_density + e.oam_density;
    let mut chi = e.helicity;
    let mut j = e.helicity_current + e.oam_current;
    if let Some(d) = d {
        m = m + d.spin_density + d.oam_density;
        chi = chi + d.chirality.scale(c);
        j = j + d.oam_current.scale(c);
    }
    let t = Tensor2::diagonal(chi) + j + e.n_tensor;
    TotalAM { m, t, chi }
}

/// Symmetrized density, current and the pieces of the symmetrized balance
/// `dt M' + div J' + grad chi' - curl(r U) = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct Belinfante {
    pub m: Vec3<D>,
    pub j: Tensor2<D>,
    pub chi: D,
    /// `(eps E^2 + B^2/mu0) / 2`
    pub u: D,
    /// `curl(r U) = grad U x r`, evaluated from the dual gradient of `u`.
    pub curl_r_u: Vec3,
}

pub fn belinfante_quantities(
    s: &EMFieldSample,
    d: Option<&DiracDensities>,
    origin: Vec3,
    c: f64,
) -> Belinfante {
    let eps = s.permittivity;
    let inv_mu = 1.0 / MU0;
    let r = position_dual(s.position - origin);
    let e = s.e();
    let b = s.b();
    let mut m = r.cross(e.cross(b)).scale(eps);
    // momentum flux J'_ij = -(eps E_i (r x E)_j + B_i (r x B)_j / mu0)
    let mut j = (outer(e, r.cross(e)).scale(eps) + outer(b, r.cross(b)).scale(inv_mu)).scale(-1.0);
    let mut chi = D::zero();
    if let Some(d) = d {
        m = m + d.spin_density + d.oam_density;
        j = j + d.oam_current.scale(c);
        chi = d.chirality.scale(c);
    }
    let u = (e.dot(e).scale(eps) + b.dot(b).scale(inv_mu)).scale(0.5);
    let curl_r_u = u.grad().cross(s.position - origin);
    Belinfante {
        m,
        j,
        chi,
        u,
        curl_r_u,
    }
}
