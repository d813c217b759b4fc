//! Three-vectors, rank-2 tensors and Levi-Civita contractions.
//!
//! Tensor index convention: the row index is the transport (current) direction,
//! the column index is the angular-momentum direction. Divergences always
//! contract the first index, `(div T)_j = d_i T_ij`.
//!
//! All types are generic over a [`Ring`] so the same formulas evaluate on plain
//! doubles, on complex numbers and on forward-mode [`Dual`](crate::dual::Dual)
//! numbers carrying space-time derivatives.

use std::fmt::Debug;
use std::ops::{Add, AddAssign, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Commutative ring with the handful of extra operations the field formulas need.
pub trait Ring:
    Copy
    + Debug
    + PartialEq
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn from_f64(x: f64) -> Self;
    /// Multiply by a real constant.
    fn scale(self, k: f64) -> Self;
}

impl Ring for f64 {
    #[inline]
    fn zero() -> Self {
        0.0
    }
    #[inline]
    fn from_f64(x: f64) -> Self {
        x
    }
    #[inline]
    fn scale(self, k: f64) -> Self {
        self * k
    }
}

impl Ring for Complex64 {
    #[inline]
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    #[inline]
    fn from_f64(x: f64) -> Self {
        Complex64::new(x, 0.0)
    }
    #[inline]
    fn scale(self, k: f64) -> Self {
        self * k
    }
}

/// A ring of complex values whose real part lives in `Self::Real`.
pub trait ComplexRing: Ring {
    type Real: Ring;
    fn conj(self) -> Self;
    fn re(self) -> Self::Real;
    fn im(self) -> Self::Real;
    fn from_real(r: Self::Real) -> Self;
    /// Multiply by a complex constant.
    fn mul_c(self, c: Complex64) -> Self;
}

impl ComplexRing for Complex64 {
    type Real = f64;
    #[inline]
    fn conj(self) -> Self {
        Complex64::conj(&self)
    }
    #[inline]
    fn re(self) -> f64 {
        self.re
    }
    #[inline]
    fn im(self) -> f64 {
        self.im
    }
    #[inline]
    fn from_real(r: f64) -> Self {
        Complex64::new(r, 0.0)
    }
    #[inline]
    fn mul_c(self, c: Complex64) -> Self {
        self * c
    }
}

/// Cartesian three-vector. Serialized as `[x, y, z]`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(
    from = "[T; 3]",
    into = "[T; 3]",
    bound(serialize = "T: Serialize + Clone", deserialize = "T: Deserialize<'de>")
)]
pub struct Vec3<T = f64> {
    pub x: T,
    pub y: T,
    pub z: T,
}

impl<T> From<[T; 3]> for Vec3<T> {
    fn from([x, y, z]: [T; 3]) -> Self {
        Self { x, y, z }
    }
}

impl<T> From<Vec3<T>> for [T; 3] {
    fn from(v: Vec3<T>) -> Self {
        [v.x, v.y, v.z]
    }
}

/// Complex three-vector (phasor amplitudes).
pub type CVec3 = Vec3<Complex64>;

impl<T: Ring> Vec3<T> {
    #[inline]
    pub const fn new(x: T, y: T, z: T) -> Self {
        Self { x, y, z }
    }

    pub fn zero() -> Self {
        Self::new(T::zero(), T::zero(), T::zero())
    }

    pub fn from_array(a: [T; 3]) -> Self {
        Self::new(a[0], a[1], a[2])
    }

    pub fn to_array(self) -> [T; 3] {
        [self.x, self.y, self.z]
    }

    pub fn map<U: Ring>(self, f: impl Fn(T) -> U) -> Vec3<U> {
        Vec3::new(f(self.x), f(self.y), f(self.z))
    }

    #[inline]
    pub fn dot(self, o: Self) -> T {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    #[inline]
    pub fn cross(self, o: Self) -> Self {
        Self::new(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )
    }

    #[inline]
    pub fn scale(self, k: f64) -> Self {
        Self::new(self.x.scale(k), self.y.scale(k), self.z.scale(k))
    }

    #[inline]
    pub fn mul_scalar(self, s: T) -> Self {
        Self::new(self.x * s, self.y * s, self.z * s)
    }
}

impl Vec3<f64> {
    pub fn norm(self) -> f64 {
        self.dot(self).sqrt()
    }

    /// Max-norm, the componentwise magnitude used for residual scales.
    pub fn max_abs(self) -> f64 {
        self.x.abs().max(self.y.abs()).max(self.z.abs())
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    pub const fn unit_x() -> Self {
        Self { x: 1.0, y: 0.0, z: 0.0 }
    }

    pub const fn unit_y() -> Self {
        Self { x: 0.0, y: 1.0, z: 0.0 }
    }

    pub const fn unit_z() -> Self {
        Self { x: 0.0, y: 0.0, z: 1.0 }
    }
}

impl Vec3<Complex64> {
    /// Componentwise real part.
    pub fn re(self) -> Vec3<f64> {
        Vec3::new(self.x.re, self.y.re, self.z.re)
    }

    /// Componentwise imaginary part.
    pub fn im(self) -> Vec3<f64> {
        Vec3::new(self.x.im, self.y.im, self.z.im)
    }

    pub fn conj(self) -> Self {
        Self::new(self.x.conj(), self.y.conj(), self.z.conj())
    }

    pub fn from_real(v: Vec3<f64>) -> Self {
        Self::new(v.x.into(), v.y.into(), v.z.into())
    }

    pub fn mul_c(self, c: Complex64) -> Self {
        Self::new(self.x * c, self.y * c, self.z * c)
    }

    pub fn norm_sqr(self) -> f64 {
        self.x.norm_sqr() + self.y.norm_sqr() + self.z.norm_sqr()
    }

    pub fn is_finite(self) -> bool {
        self.re().is_finite() && self.im().is_finite()
    }
}

impl<T: Ring> Add for Vec3<T> {
    type Output = Self;
    #[inline]
    fn add(self, o: Self) -> Self {
        Self::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl<T: Ring> AddAssign for Vec3<T> {
    #[inline]
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}

impl<T: Ring> Sub for Vec3<T> {
    type Output = Self;
    #[inline]
    fn sub(self, o: Self) -> Self {
        Self::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl<T: Ring> Neg for Vec3<T> {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y, -self.z)
    }
}

impl<T: Ring> Mul<T> for Vec3<T> {
    type Output = Self;
    #[inline]
    fn mul(self, s: T) -> Self {
        self.mul_scalar(s)
    }
}

impl<T> Index<usize> for Vec3<T> {
    type Output = T;
    #[inline]
    fn index(&self, i: usize) -> &T {
        match i {
            0 => &self.x,
            1 => &self.y,
            2 => &self.z,
            _ => panic!("Vec3 index {i} out of range"),
        }
    }
}

impl<T> IndexMut<usize> for Vec3<T> {
    #[inline]
    fn index_mut(&mut self, i: usize) -> &mut T {
        match i {
            0 => &mut self.x,
            1 => &mut self.y,
            2 => &mut self.z,
            _ => panic!("Vec3 index {i} out of range"),
        }
    }
}

/// Rank-2 Cartesian tensor, `m[i][j]` with `i` the transport direction.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Tensor2<T = f64> {
    pub m: [[T; 3]; 3],
}

impl<T: Ring> Tensor2<T> {
    pub fn zero() -> Self {
        Self { m: [[T::zero(); 3]; 3] }
    }

    pub fn from_fn(f: impl Fn(usize, usize) -> T) -> Self {
        let mut m = [[T::zero(); 3]; 3];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = f(i, j);
            }
        }
        Self { m }
    }

    /// `T * I`.
    pub fn diagonal(s: T) -> Self {
        Self::from_fn(|i, j| if i == j { s } else { T::zero() })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|i, j| self.m[j][i])
    }

    pub fn row(&self, i: usize) -> Vec3<T> {
        Vec3::from_array(self.m[i])
    }

    pub fn col(&self, j: usize) -> Vec3<T> {
        Vec3::new(self.m[0][j], self.m[1][j], self.m[2][j])
    }

    pub fn map<U: Ring>(&self, f: impl Fn(T) -> U) -> Tensor2<U> {
        Tensor2::from_fn(|i, j| f(self.m[i][j]))
    }

    pub fn scale(&self, k: f64) -> Self {
        self.map(|v| v.scale(k))
    }

    /// Tensor contracted with a vector on the first index: `(v . T)_j = v_i T_ij`.
    pub fn left_dot(&self, v: Vec3<T>) -> Vec3<T> {
        Vec3::new(
            v.x * self.m[0][0] + v.y * self.m[1][0] + v.z * self.m[2][0],
            v.x * self.m[0][1] + v.y * self.m[1][1] + v.z * self.m[2][1],
            v.x * self.m[0][2] + v.y * self.m[1][2] + v.z * self.m[2][2],
        )
    }
}

impl Tensor2<f64> {
    pub fn identity() -> Self {
        Self::diagonal(1.0)
    }

    pub fn max_abs(&self) -> f64 {
        self.m
            .iter()
            .flat_map(|r| r.iter())
            .fold(0.0_f64, |acc, v| acc.max(v.abs()))
    }

    pub fn is_finite(&self) -> bool {
        self.m.iter().flat_map(|r| r.iter()).all(|v| v.is_finite())
    }
}

impl<T: Ring> Add for Tensor2<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::from_fn(|i, j| self.m[i][j] + o.m[i][j])
    }
}

impl<T: Ring> Sub for Tensor2<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::from_fn(|i, j| self.m[i][j] - o.m[i][j])
    }
}

impl<T: Ring> Neg for Tensor2<T> {
    type Output = Self;
    fn neg(self) -> Self {
        self.map(|v| -v)
    }
}

/// `result[i][j] = a_i b_j`.
pub fn outer<T: Ring>(a: Vec3<T>, b: Vec3<T>) -> Tensor2<T> {
    let a = a.to_array();
    let b = b.to_array();
    Tensor2::from_fn(|i, j| a[i] * b[j])
}

/// Sum of the diagonal.
pub fn trace<T: Ring>(t: &Tensor2<T>) -> T {
    t.m[0][0] + t.m[1][1] + t.m[2][2]
}

/// Levi-Civita symbol.
#[inline]
pub fn levi_civita(i: usize, j: usize, k: usize) -> f64 {
    match (i, j, k) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1.0,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1.0,
        _ => 0.0,
    }
}

/// Builds `eps_ijk v_k`.
pub fn eps_contract<T: Ring>(v: Vec3<T>) -> Tensor2<T> {
    let z = T::zero();
    Tensor2 {
        m: [[z, v.z, -v.y], [-v.z, z, v.x], [v.y, -v.x, z]],
    }
}

/// Cross product written as an explicit `eps_ijk a_j b_k` contraction.
pub fn cross_via_eps<T: Ring>(a: Vec3<T>, b: Vec3<T>) -> Vec3<T> {
    let a = a.to_array();
    let b = b.to_array();
    let mut out = [T::zero(); 3];
    for (i, o) in out.iter_mut().enumerate() {
        for j in 0..3 {
            for k in 0..3 {
                let e = levi_civita(i, j, k);
                if e != 0.0 {
                    *o = *o + (a[j] * b[k]).scale(e);
                }
            }
        }
    }
    Vec3::from_array(out)
}
