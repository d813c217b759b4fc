//! Second-order spatial jets of complex scalar fields.
//!
//! A [`CJet`] holds a value, its spatial gradient and its Hessian at one point.
//! Mode profiles are assembled from elementary jets (coordinates, radius,
//! Bessel profiles, phases) with exact product and chain rules, which gives
//! the first and second derivatives of every phasor component without finite
//! differences.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

type C = Complex64;

const ZERO: C = C::new(0.0, 0.0);

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CJet {
    pub v: C,
    pub g: [C; 3],
    pub h: [[C; 3]; 3],
}

impl CJet {
    pub fn constant(v: C) -> Self {
        Self {
            v,
            g: [ZERO; 3],
            h: [[ZERO; 3]; 3],
        }
    }

    pub fn zero() -> Self {
        Self::constant(ZERO)
    }

    /// The coordinate `x_axis` evaluated at `value`.
    pub fn coord(axis: usize, value: f64) -> Self {
        let mut j = Self::constant(value.into());
        j.g[axis] = C::new(1.0, 0.0);
        j
    }

    /// Plane-wave factor `exp(i k.x)` at `x`.
    pub fn plane_phase(k: [f64; 3], x: [f64; 3]) -> Self {
        let phase = k[0] * x[0] + k[1] * x[1] + k[2] * x[2];
        let v = C::from_polar(1.0, phase);
        let ik = k.map(|c| C::new(0.0, c) * v);
        Self {
            v,
            g: ik,
            h: std::array::from_fn(|i| std::array::from_fn(|j| -v * (k[i] * k[j]))),
        }
    }

    /// `f(self)` given `f`, `f'`, `f''` evaluated at `self.v`.
    pub fn compose(&self, f0: C, f1: C, f2: C) -> Self {
        Self {
            v: f0,
            g: self.g.map(|d| f1 * d),
            h: std::array::from_fn(|i| {
                std::array::from_fn(|j| f1 * self.h[i][j] + f2 * self.g[i] * self.g[j])
            }),
        }
    }

    pub fn scale(&self, k: f64) -> Self {
        self.mul_c(k.into())
    }

    pub fn mul_c(&self, c: C) -> Self {
        Self {
            v: self.v * c,
            g: self.g.map(|d| d * c),
            h: self.h.map(|r| r.map(|d| d * c)),
        }
    }

    pub fn recip(&self) -> Self {
        let inv = 1.0 / self.v;
        self.compose(inv, -inv * inv, 2.0 * inv * inv * inv)
    }

    pub fn sqrt(&self) -> Self {
        let s = self.v.sqrt();
        self.compose(s, 0.5 / s, -0.25 / (s * self.v))
    }

    pub fn exp(&self) -> Self {
        let e = self.v.exp();
        self.compose(e, e, e)
    }

    pub fn powi(&self, n: u32) -> Self {
        let mut out = Self::constant(C::new(1.0, 0.0));
        for _ in 0..n {
            out = out * *self;
        }
        out
    }
}

impl Add for CJet {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self {
            v: self.v + o.v,
            g: std::array::from_fn(|i| self.g[i] + o.g[i]),
            h: std::array::from_fn(|i| std::array::from_fn(|j| self.h[i][j] + o.h[i][j])),
        }
    }
}

impl Sub for CJet {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Neg for CJet {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-1.0)
    }
}

impl Mul for CJet {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Self {
            v: self.v * o.v,
            g: std::array::from_fn(|i| self.g[i] * o.v + self.v * o.g[i]),
            h: std::array::from_fn(|i| {
                std::array::from_fn(|j| {
                    self.h[i][j] * o.v
                        + self.g[i] * o.g[j]
                        + o.g[i] * self.g[j]
                        + self.v * o.h[i][j]
                })
            }),
        }
    }
}
