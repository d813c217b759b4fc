//! Dirac-representation gamma matrices.

use num_complex::Complex64;

use crate::tensor::levi_civita;

pub type Mat4 = [[Complex64; 4]; 4];

const O: Complex64 = Complex64::new(0.0, 0.0);
const I1: Complex64 = Complex64::new(1.0, 0.0);
const II: Complex64 = Complex64::new(0.0, 1.0);

pub fn zero() -> Mat4 {
    [[O; 4]; 4]
}

pub fn identity() -> Mat4 {
    let mut m = zero();
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = I1;
    }
    m
}

pub fn mul(a: &Mat4, b: &Mat4) -> Mat4 {
    let mut m = zero();
    for i in 0..4 {
        for j in 0..4 {
            m[i][j] = (0..4).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    m
}

pub fn add(a: &Mat4, b: &Mat4) -> Mat4 {
    std::array::from_fn(|i| std::array::from_fn(|j| a[i][j] + b[i][j]))
}

pub fn sub(a: &Mat4, b: &Mat4) -> Mat4 {
    std::array::from_fn(|i| std::array::from_fn(|j| a[i][j] - b[i][j]))
}

pub fn scale(a: &Mat4, c: Complex64) -> Mat4 {
    a.map(|r| r.map(|v| v * c))
}

pub fn anticommutator(a: &Mat4, b: &Mat4) -> Mat4 {
    add(&mul(a, b), &mul(b, a))
}

pub fn commutator(a: &Mat4, b: &Mat4) -> Mat4 {
    sub(&mul(a, b), &mul(b, a))
}

/// Largest entry magnitude of `a - b`.
pub fn max_diff(a: &Mat4, b: &Mat4) -> f64 {
    let mut m = 0.0_f64;
    for i in 0..4 {
        for j in 0..4 {
            m = m.max((a[i][j] - b[i][j]).norm());
        }
    }
    m
}

fn pauli(k: usize) -> [[Complex64; 2]; 2] {
    match k {
        0 => [[O, I1], [I1, O]],
        1 => [[O, -II], [II, O]],
        _ => [[I1, O], [O, -I1]],
    }
}

fn blocks(tl: [[Complex64; 2]; 2], tr: [[Complex64; 2]; 2], bl: [[Complex64; 2]; 2], br: [[Complex64; 2]; 2]) -> Mat4 {
    let mut m = zero();
    for i in 0..2 {
        for j in 0..2 {
            m[i][j] = tl[i][j];
            m[i][j + 2] = tr[i][j];
            m[i + 2][j] = bl[i][j];
            m[i + 2][j + 2] = br[i][j];
        }
    }
    m
}

#[derive(Clone, Debug, PartialEq)]
pub struct GammaAlgebra {
    /// `gamma^mu`, upper index.
    pub gamma: [Mat4; 4],
    pub gamma5: Mat4,
    /// `Sigma_i = diag(sigma_i, sigma_i)`.
    pub sigma_spin: [Mat4; 3],
    /// `sigma^{mu nu} = (i/2) [gamma^mu, gamma^nu]`.
    pub sigma_munu: [[Mat4; 4]; 4],
    /// Diagonal of the metric, `(+, -, -, -)`.
    pub metric: [f64; 4],
    /// `gamma^0 gamma^i`, used for currents `psi-bar gamma^i psi`.
    pub alpha: [Mat4; 3],
}

/// Builds the algebra and checks its defining relations.
pub fn build_algebra() -> GammaAlgebra {
    let z2 = [[O; 2]; 2];
    let id2 = [[I1, O], [O, I1]];
    let neg = |m: [[Complex64; 2]; 2]| m.map(|r| r.map(|v| -v));
    let g0 = blocks(id2, z2, z2, neg(id2));
    let gk = |k: usize| blocks(z2, pauli(k), neg(pauli(k)), z2);
    let gamma = [g0, gk(0), gk(1), gk(2)];
    let gamma5 = scale(
        &mul(&mul(&gamma[0], &gamma[1]), &mul(&gamma[2], &gamma[3])),
        II,
    );
    let sigma_spin = [0, 1, 2].map(|k| blocks(pauli(k), z2, z2, pauli(k)));
    let sigma_munu = std::array::from_fn(|m| {
        std::array::from_fn(|n| scale(&commutator(&gamma[m], &gamma[n]), Complex64::new(0.0, 0.5)))
    });
    let alpha = [1, 2, 3].map(|k| mul(&gamma[0], &gamma[k]));
    let alg = GammaAlgebra {
        gamma,
        gamma5,
        sigma_spin,
        sigma_munu,
        metric: [1.0, -1.0, -1.0, -1.0],
        alpha,
    };
    alg.self_check();
    alg
}

impl GammaAlgebra {
    fn self_check(&self) {
        let id = identity();
        for m in 0..4 {
            for n in 0..4 {
                let want = if m == n {
                    scale(&id, (2.0 * self.metric[m]).into())
                } else {
                    zero()
                };
                let got = anticommutator(&self.gamma[m], &self.gamma[n]);
                assert!(max_diff(&got, &want) == 0.0, "Clifford relation {m}{n}");
            }
        }
        assert!(max_diff(&mul(&self.gamma5, &self.gamma5), &id) == 0.0);
        // Sigma_i = (i/4) eps_ijk [gamma^j, gamma^k]
        for i in 0..3 {
            let mut s = zero();
            for j in 0..3 {
                for k in 0..3 {
                    let e = levi_civita(i, j, k);
                    if e != 0.0 {
                        let c = commutator(&self.gamma[j + 1], &self.gamma[k + 1]);
                        s = add(&s, &scale(&c, Complex64::new(0.0, 0.25 * e)));
                    }
                }
            }
            assert!(max_diff(&s, &self.sigma_spin[i]) == 0.0, "Sigma_{i}");
        }
    }

    /// `gamma^0 gamma^5`.
    pub fn gamma0_gamma5(&self) -> Mat4 {
        mul(&self.gamma[0], &self.gamma5)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clifford_examples() {
        let g = build_algebra();
        let id = identity();
        assert_eq!(anticommutator(&g.gamma[0], &g.gamma[0]), scale(&id, 2.0.into()));
        assert_eq!(anticommutator(&g.gamma[1], &g.gamma[2]), zero());
        // gamma5 swaps the two blocks
        for i in 0..4 {
            for j in 0..4 {
                let want = if (i + 2) % 4 == j { I1 } else { O };
                assert_eq!(g.gamma5[i][j], want);
            }
        }
    }

    #[test]
    fn spin_current_identity() {
        let g = build_algebra();
        let g05 = g.gamma0_gamma5();
        for k in 0..3 {
            for i in 0..3 {
                for j in 0..3 {
                    let lhs = anticommutator(&g.gamma[k + 1], &g.sigma_munu[i + 1][j + 1]);
                    let rhs = scale(&g05, (2.0 * levi_civita(k, i, j)).into());
                    assert!(max_diff(&lhs, &rhs) <= 4.0 * f64::EPSILON, "{k}{i}{j}");
                }
            }
        }
    }
}
