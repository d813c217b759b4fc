//! Forward-mode dual numbers over space-time.
//!
//! A [`Dual`] carries a value together with its four first partial derivatives
//! `(d/dt, d/dx, d/dy, d/dz)`. Densities built from dual-valued fields come out
//! with their exact first derivatives, which is how the analytic residual path
//! obtains time derivatives, divergences and gradients without hand-expanded
//! product rules.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::tensor::{ComplexRing, Ring, Tensor2, Vec3};

/// Index of the time partial inside [`Dual::d`].
pub const DT: usize = 0;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Dual<T> {
    pub v: T,
    /// `[d/dt, d/dx, d/dy, d/dz]`
    pub d: [T; 4],
}

impl<T: Ring> Dual<T> {
    pub fn new(v: T, d: [T; 4]) -> Self {
        Self { v, d }
    }

    pub fn constant(v: T) -> Self {
        Self { v, d: [T::zero(); 4] }
    }

    /// Partial along spatial axis `axis` (0 = x).
    #[inline]
    pub fn dx(&self, axis: usize) -> T {
        self.d[axis + 1]
    }

    #[inline]
    pub fn dt(&self) -> T {
        self.d[DT]
    }

    pub fn grad(&self) -> Vec3<T> {
        Vec3::new(self.d[1], self.d[2], self.d[3])
    }
}

impl<T: Ring> Add for Dual<T> {
    type Output = Self;
    #[inline]
    fn add(self, o: Self) -> Self {
        Self {
            v: self.v + o.v,
            d: [
                self.d[0] + o.d[0],
                self.d[1] + o.d[1],
                self.d[2] + o.d[2],
                self.d[3] + o.d[3],
            ],
        }
    }
}

impl<T: Ring> Sub for Dual<T> {
    type Output = Self;
    #[inline]
    fn sub(self, o: Self) -> Self {
        Self {
            v: self.v - o.v,
            d: [
                self.d[0] - o.d[0],
                self.d[1] - o.d[1],
                self.d[2] - o.d[2],
                self.d[3] - o.d[3],
            ],
        }
    }
}

impl<T: Ring> Mul for Dual<T> {
    type Output = Self;
    #[inline]
    fn mul(self, o: Self) -> Self {
        Self {
            v: self.v * o.v,
            d: [
                self.d[0] * o.v + self.v * o.d[0],
                self.d[1] * o.v + self.v * o.d[1],
                self.d[2] * o.v + self.v * o.d[2],
                self.d[3] * o.v + self.v * o.d[3],
            ],
        }
    }
}

impl<T: Ring> Neg for Dual<T> {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Self {
            v: -self.v,
            d: [-self.d[0], -self.d[1], -self.d[2], -self.d[3]],
        }
    }
}

impl<T: Ring> Ring for Dual<T> {
    fn zero() -> Self {
        Self::constant(T::zero())
    }
    fn from_f64(x: f64) -> Self {
        Self::constant(T::from_f64(x))
    }
    #[inline]
    fn scale(self, k: f64) -> Self {
        Self {
            v: self.v.scale(k),
            d: [
                self.d[0].scale(k),
                self.d[1].scale(k),
                self.d[2].scale(k),
                self.d[3].scale(k),
            ],
        }
    }
}

impl ComplexRing for Dual<Complex64> {
    type Real = Dual<f64>;

    fn conj(self) -> Self {
        Self {
            v: self.v.conj(),
            d: self.d.map(|c| c.conj()),
        }
    }

    fn re(self) -> Dual<f64> {
        Dual {
            v: self.v.re,
            d: self.d.map(|c| c.re),
        }
    }

    fn im(self) -> Dual<f64> {
        Dual {
            v: self.v.im,
            d: self.d.map(|c| c.im),
        }
    }

    fn from_real(r: Dual<f64>) -> Self {
        Self {
            v: r.v.into(),
            d: r.d.map(Complex64::from),
        }
    }

    #[inline]
    fn mul_c(self, c: Complex64) -> Self {
        Self {
            v: self.v * c,
            d: [self.d[0] * c, self.d[1] * c, self.d[2] * c, self.d[3] * c],
        }
    }
}

/// Position vector as duals: `x` has unit `d/dx`, and so on.
pub fn position_dual(r: Vec3<f64>) -> Vec3<Dual<f64>> {
    Vec3::new(
        Dual::new(r.x, [0.0, 1.0, 0.0, 0.0]),
        Dual::new(r.y, [0.0, 0.0, 1.0, 0.0]),
        Dual::new(r.z, [0.0, 0.0, 0.0, 1.0]),
    )
}

pub fn values(v: Vec3<Dual<f64>>) -> Vec3<f64> {
    v.map(|c| c.v)
}

pub fn tensor_values(t: &Tensor2<Dual<f64>>) -> Tensor2<f64> {
    t.map(|c| c.v)
}

/// Time derivative of a dual vector.
pub fn dt_vec(v: Vec3<Dual<f64>>) -> Vec3<f64> {
    v.map(|c| c.dt())
}

/// Gradient of a dual scalar.
pub fn grad(s: Dual<f64>) -> Vec3<f64> {
    s.grad()
}

/// `(div T)_j = d_i T_ij`.
pub fn div(t: &Tensor2<Dual<f64>>) -> Vec3<f64> {
    Vec3::from_array(std::array::from_fn(|j| {
        t.m[0][j].dx(0) + t.m[1][j].dx(1) + t.m[2][j].dx(2)
    }))
}

/// Spatial Jacobian `J[i][j] = d_i v_j` of a dual vector.
pub fn jacobian(v: Vec3<Dual<f64>>) -> Tensor2<f64> {
    Tensor2::from_fn(|i, j| v[j].dx(i))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_rule() {
        let a = Dual::new(2.0, [1.0, 0.0, 3.0, 0.0]);
        let b = Dual::new(5.0, [0.0, 4.0, 1.0, 0.0]);
        let c = a * b;
        assert_eq!(c.v, 10.0);
        assert_eq!(c.d, [5.0, 8.0, 17.0, 0.0]);
    }

    #[test]
    fn divergence_contracts_first_index() {
        let r = position_dual(Vec3::new(0.3, 0.7, -1.1));
        // T_ij = x delta_i0 delta_j1
        let mut t = Tensor2::<Dual<f64>>::zero();
        t.m[0][1] = r.x;
        let d = div(&t);
        assert_eq!(d.to_array(), [0.0, 1.0, 0.0]);
    }

    #[test]
    fn complex_real_part_keeps_partials() {
        let z = Dual::new(
            Complex64::new(1.0, 2.0),
            [Complex64::new(0.5, -1.0); 4],
        );
        let r = (z * z.conj()).re();
        assert!((r.v - 5.0).abs() < 1e-15);
        // d|z|^2 = 2 Re(z* dz) = 2 (0.5 - 2) = -3
        assert!((r.d[0] + 3.0).abs() < 1e-15);
    }
}
