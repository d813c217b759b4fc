use num_complex::Complex64;

use super::gamma::GammaAlgebra;
use super::spinor::{dual_inner, dual_matvec, SpinorSample, DC};
use crate::dual::{position_dual, Dual};
use crate::tensor::{levi_civita, ComplexRing, Ring, Tensor2, Vec3};

type D = Dual<f64>;

/// Dirac-side densities at one point, each carrying its first space-time
/// derivatives. `r` is measured from the origin passed to [`dirac_densities`].
#[derive(Clone, Debug, PartialEq)]
pub struct DiracDensities {
    /// `(hbar/2) psi^dag Sigma psi`
    pub spin_density: Vec3<D>,
    /// `(hbar/2) psi^dag gamma5 psi`
    pub chirality: D,
    /// `Re{psi^dag (r x p) psi}`
    pub oam_density: Vec3<D>,
    /// `[i][j] = Re{psi-bar gamma^i (r x p)_j psi}`
    pub oam_current: Tensor2<D>,
    /// `-c Re{psi-bar (gamma x p) psi}`
    pub tau: Vec3<D>,
    /// `e psi^dag psi`
    pub charge_density: D,
    /// `e c psi-bar gamma psi`
    pub current: Vec3<D>,
    /// `psi^dag psi`
    pub prob_density: D,
    /// `c psi-bar gamma psi`
    pub prob_current: Vec3<D>,
    /// Largest imaginary part discarded from the Hermitian bilinears, relative
    /// to their magnitude.
    pub max_rel_imag: f64,
}

pub fn dirac_densities(s: &SpinorSample, alg: &GammaAlgebra, origin: Vec3) -> DiracDensities {
    let hbar = s.units.hbar;
    let c = s.units.c;
    let e = s.units.charge;
    let psi = &s.psi;
    let r = position_dual(s.position - origin);
    let mut worst_imag = 0.0_f64;
    let mut hermitian = |z: DC| -> D {
        let rel = z.v.im.abs() / z.v.norm().max(1e-300);
        if z.v.norm() > 0.0 {
            worst_imag = worst_imag.max(rel);
        }
        z.re()
    };

    // p_l psi = -i hbar d_l psi
    let mi_hbar = Complex64::new(0.0, -hbar);
    let p_psi: [[DC; 4]; 3] = std::array::from_fn(|l| std::array::from_fn(|comp| s.grad[comp][l].mul_c(mi_hbar)));
    // (r x p)_j psi
    let rxp_psi: [[DC; 4]; 3] = std::array::from_fn(|j| {
        std::array::from_fn(|comp| {
            let mut acc = DC::zero();
            for k in 0..3 {
                for l in 0..3 {
                    let eps = levi_civita(j, k, l);
                    if eps != 0.0 {
                        acc = acc + (DC::from_real(r[k]) * p_psi[l][comp]).scale(eps);
                    }
                }
            }
            acc
        })
    });

    let spin_density = Vec3::from_array(std::array::from_fn(|j| {
        hermitian(dual_inner(psi, &dual_matvec(&alg.sigma_spin[j], psi))).scale(0.5 * hbar)
    }));
    let chirality = hermitian(dual_inner(psi, &dual_matvec(&alg.gamma5, psi))).scale(0.5 * hbar);
    let prob_density = hermitian(dual_inner(psi, psi));
    let prob_current = Vec3::from_array(std::array::from_fn(|i| {
        hermitian(dual_inner(psi, &dual_matvec(&alg.alpha[i], psi))).scale(c)
    }));

    let oam_density = Vec3::from_array(std::array::from_fn(|j| dual_inner(psi, &rxp_psi[j]).re()));
    let alpha_psi_bar: [[DC; 4]; 3] = std::array::from_fn(|i| dual_matvec(&alg.alpha[i], psi));
    let oam_current = Tensor2::from_fn(|i, j| dual_inner(&alpha_psi_bar[i], &rxp_psi[j]).re());

    let tau = Vec3::from_array(std::array::from_fn(|j| {
        let mut acc = D::zero();
        for k in 0..3 {
            for l in 0..3 {
                let eps = levi_civita(j, k, l);
                if eps != 0.0 {
                    // alpha_k is Hermitian, so psi^dag alpha_k (p_l psi) = (alpha_k psi)^dag p_l psi
                    acc = acc + dual_inner(&alpha_psi_bar[k], &p_psi[l]).re().scale(eps);
                }
            }
        }
        acc.scale(-c)
    }));

    DiracDensities {
        spin_density,
        chirality,
        oam_density,
        oam_current,
        tau,
        charge_density: prob_density.scale(e),
        current: prob_current.scale(e),
        prob_density,
        prob_current,
        max_rel_imag: worst_imag,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::Units;
    use crate::dirac::{build_algebra, eval_spinors, plane_spinor, Spin};

    #[test]
    fn rest_mode_values() {
        let alg = build_algebra();
        let a = Complex64::new(0.6, -0.8) * 1.5;
        let m = plane_spinor(Vec3::zero(), Spin::Up, 1.0, a, Units::NATURAL).unwrap();
        let s = eval_spinors(&[m], Vec3::new(0.3, 0.2, -0.1), 1.7);
        let d = dirac_densities(&s, &alg, Vec3::zero());
        assert!((d.spin_density.z.v - 0.5 * a.norm_sqr()).abs() < 1e-15);
        assert_eq!(d.chirality.v, 0.0);
        for j in 0..3 {
            assert_eq!(d.tau[j].v, 0.0);
        }
        assert!(d.prob_density.dt().abs() < 1e-15);
    }

    #[test]
    fn boosted_spin_up_along_z() {
        let alg = build_algebra();
        let m = plane_spinor(Vec3::new(0.0, 0.0, 2.0), Spin::Up, 1.0, Complex64::new(1.0, 0.0), Units::NATURAL).unwrap();
        let s = eval_spinors(&[m], Vec3::zero(), 0.0);
        let d = dirac_densities(&s, &alg, Vec3::zero());
        assert!(d.spin_density.z.v > 0.0);
        assert!(d.max_rel_imag < 1e-14);
    }
}
