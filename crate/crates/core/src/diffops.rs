//! Uniform-grid central finite differences and convergence-order estimates.
//!
//! Stencils are applied to interior points only. An operator on a grid with
//! `dims` points per axis returns a grid over the `dims - 2 * half_width`
//! interior points, with its origin shifted inward accordingly.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::tensor::{Tensor2, Vec3};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DiffError {
    #[error("grid too small along axis {axis}: {dims} points, stencil needs at least {needed}")]
    GridTooSmall { axis: usize, dims: usize, needed: usize },
    #[error("zero error norm: the derivative is exact, no convergence order exists")]
    ZeroError,
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("shape mismatch between grids")]
    ShapeMismatch,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub enum FdOrder {
    Two,
    Four,
}

impl FdOrder {
    pub fn value(self) -> u8 {
        match self {
            FdOrder::Two => 2,
            FdOrder::Four => 4,
        }
    }

    /// Points used on each side of the centre.
    pub fn half_width(self) -> usize {
        match self {
            FdOrder::Two => 1,
            FdOrder::Four => 2,
        }
    }

    /// Central first-derivative weights for offsets `1..=half_width`; the
    /// weight of offset `-k` is the negative of offset `k`.
    fn weights(self) -> &'static [f64] {
        match self {
            FdOrder::Two => &[0.5],
            FdOrder::Four => &[2.0 / 3.0, -1.0 / 12.0],
        }
    }
}

impl TryFrom<u8> for FdOrder {
    type Error = String;
    fn try_from(v: u8) -> Result<Self, String> {
        match v {
            2 => Ok(FdOrder::Two),
            4 => Ok(FdOrder::Four),
            _ => Err(format!("finite-difference order must be 2 or 4, got {v}")),
        }
    }
}

impl From<FdOrder> for u8 {
    fn from(o: FdOrder) -> u8 {
        o.value()
    }
}

/// Central difference of `f` at `x` along a single variable.
pub fn central_derivative(f: impl Fn(f64) -> f64, x: f64, h: f64, order: FdOrder) -> f64 {
    let mut acc = 0.0;
    for (k, w) in order.weights().iter().enumerate() {
        let s = (k + 1) as f64 * h;
        acc += w * (f(x + s) - f(x - s));
    }
    acc / h
}

/// Uniform space-time sampling. Spatial points are ordered x-fastest.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridSpec {
    pub origin: Vec3,
    pub spacing: [f64; 3],
    pub dims: [usize; 3],
    #[serde(default)]
    pub t0: f64,
    #[serde(default)]
    pub dt: f64,
    #[serde(default = "one")]
    pub nt: usize,
}

fn one() -> usize {
    1
}

impl GridSpec {
    pub fn new(origin: Vec3, spacing: [f64; 3], dims: [usize; 3]) -> Result<Self, DiffError> {
        let g = Self {
            origin,
            spacing,
            dims,
            t0: 0.0,
            dt: 0.0,
            nt: 1,
        };
        g.validate()?;
        Ok(g)
    }

    /// Cube of `n^3` points with spacing `h` centred on `center`.
    pub fn cube(center: Vec3, h: f64, n: usize) -> Result<Self, DiffError> {
        let half = 0.5 * (n as f64 - 1.0) * h;
        Self::new(center - Vec3::new(half, half, half), [h; 3], [n; 3])
    }

    pub fn with_times(mut self, t0: f64, dt: f64, nt: usize) -> Result<Self, DiffError> {
        self.t0 = t0;
        self.dt = dt;
        self.nt = nt;
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<(), DiffError> {
        if self.dims.contains(&0) || self.nt == 0 {
            return Err(DiffError::InvalidGrid("every dimension needs at least one point".into()));
        }
        for (axis, (&h, &n)) in self.spacing.iter().zip(&self.dims).enumerate() {
            if !(h.is_finite() && (h > 0.0 || n == 1)) {
                return Err(DiffError::InvalidGrid(format!("spacing along axis {axis} must be positive")));
            }
        }
        if !self.origin.is_finite() || !self.t0.is_finite() || !self.dt.is_finite() {
            return Err(DiffError::InvalidGrid("non-finite origin or time".into()));
        }
        if self.nt > 1 && self.dt <= 0.0 {
            return Err(DiffError::InvalidGrid("time step must be positive when nt > 1".into()));
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.dims[0] * self.dims[1] * self.dims[2]
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    #[inline]
    pub fn index(&self, i: usize, j: usize, k: usize) -> usize {
        i + self.dims[0] * (j + self.dims[1] * k)
    }

    #[inline]
    pub fn unravel(&self, idx: usize) -> [usize; 3] {
        let i = idx % self.dims[0];
        let j = (idx / self.dims[0]) % self.dims[1];
        let k = idx / (self.dims[0] * self.dims[1]);
        [i, j, k]
    }

    pub fn point(&self, idx: usize) -> Vec3 {
        let [i, j, k] = self.unravel(idx);
        Vec3::new(
            self.origin.x + i as f64 * self.spacing[0],
            self.origin.y + j as f64 * self.spacing[1],
            self.origin.z + k as f64 * self.spacing[2],
        )
    }

    pub fn time(&self, n: usize) -> f64 {
        self.t0 + n as f64 * self.dt
    }

    pub fn max_spacing(&self) -> f64 {
        self.spacing.iter().zip(&self.dims).filter(|(_, &n)| n > 1).map(|(h, _)| *h).fold(0.0, f64::max)
    }

    /// The interior sub-grid reachable by a stencil of `order`.
    pub fn interior(&self, order: FdOrder) -> Result<Self, DiffError> {
        let hw = order.half_width();
        let needed = 2 * hw + 1;
        for axis in 0..3 {
            if self.dims[axis] < needed {
                return Err(DiffError::GridTooSmall {
                    axis,
                    dims: self.dims[axis],
                    needed,
                });
            }
        }
        let s = hw as f64;
        Ok(Self {
            origin: self.origin + Vec3::new(s * self.spacing[0], s * self.spacing[1], s * self.spacing[2]),
            dims: self.dims.map(|n| n - 2 * hw),
            ..*self
        })
    }
}

/// Dense values over the spatial points of a [`GridSpec`].
#[derive(Clone, Debug, PartialEq)]
pub struct Grid<T> {
    pub spec: GridSpec,
    pub data: Vec<T>,
}

pub type ScalarGrid = Grid<f64>;
pub type VecGrid = Grid<Vec3>;
pub type TensorGrid = Grid<Tensor2>;

impl<T: Send> Grid<T> {
    /// Evaluates `f` at every point; the result does not depend on scheduling.
    pub fn fill(spec: GridSpec, f: impl Fn(Vec3) -> T + Sync) -> Self {
        let data = (0..spec.len()).into_par_iter().map(|i| f(spec.point(i))).collect();
        Self { spec, data }
    }

    pub fn try_fill<E: Send>(spec: GridSpec, f: impl Fn(Vec3) -> Result<T, E> + Sync) -> Result<Self, E> {
        let data = (0..spec.len())
            .into_par_iter()
            .map(|i| f(spec.point(i)))
            .collect::<Result<Vec<_>, E>>()?;
        Ok(Self { spec, data })
    }

    pub fn from_vec(spec: GridSpec, data: Vec<T>) -> Result<Self, DiffError> {
        if data.len() != spec.len() {
            return Err(DiffError::ShapeMismatch);
        }
        Ok(Self { spec, data })
    }

    pub fn map<U: Send>(&self, f: impl Fn(&T) -> U + Sync) -> Grid<U>
    where
        T: Sync,
    {
        Grid {
            spec: self.spec,
            data: self.data.par_iter().map(&f).collect(),
        }
    }

    pub fn at(&self, i: usize, j: usize, k: usize) -> &T {
        &self.data[self.spec.index(i, j, k)]
    }
}

/// Applies a stencil of `order` along `axis` to the scalar view `get` of the
/// grid, at every interior point. Returns the interior grid.
pub fn fd_partial(
    spec: &GridSpec,
    order: FdOrder,
    axis: usize,
    get: impl Fn(usize) -> f64 + Sync,
) -> Result<ScalarGrid, DiffError> {
    fd_stencil(spec, order, axis, |w, a, b| w * (get(a) - get(b)))
}

/// `sum_k |w_k| (|f(+k)| + |f(-k)|) / h` for the same stencil: the size of
/// the numbers a difference cancels, which bounds its rounding error.
pub fn fd_partial_bound(
    spec: &GridSpec,
    order: FdOrder,
    axis: usize,
    get: impl Fn(usize) -> f64 + Sync,
) -> Result<ScalarGrid, DiffError> {
    fd_stencil(spec, order, axis, |w, a, b| w.abs() * (get(a).abs() + get(b).abs()))
}

fn fd_stencil(
    spec: &GridSpec,
    order: FdOrder,
    axis: usize,
    pair: impl Fn(f64, usize, usize) -> f64 + Sync,
) -> Result<ScalarGrid, DiffError> {
    let inner = spec.interior(order)?;
    let hw = order.half_width();
    let h = spec.spacing[axis];
    let stride = match axis {
        0 => 1,
        1 => spec.dims[0],
        _ => spec.dims[0] * spec.dims[1],
    };
    Ok(Grid::fill_indexed(inner, |[i, j, k]| {
        let c = spec.index(i + hw, j + hw, k + hw);
        let mut acc = 0.0;
        for (s, wk) in order.weights().iter().enumerate() {
            let off = (s + 1) * stride;
            acc += pair(*wk, c + off, c - off);
        }
        acc / h
    }))
}

impl<T: Send> Grid<T> {
    fn fill_indexed(spec: GridSpec, f: impl Fn([usize; 3]) -> T + Sync) -> Self {
        let data = (0..spec.len()).into_par_iter().map(|i| f(spec.unravel(i))).collect();
        Self { spec, data }
    }
}

pub fn fd_gradient(f: &ScalarGrid, order: FdOrder) -> Result<VecGrid, DiffError> {
    let parts: Vec<ScalarGrid> = (0..3)
        .map(|axis| fd_partial(&f.spec, order, axis, |i| f.data[i]))
        .collect::<Result<_, _>>()?;
    let spec = parts[0].spec;
    Ok(Grid::fill_indexed(spec, |[i, j, k]| {
        let n = spec.index(i, j, k);
        Vec3::new(parts[0].data[n], parts[1].data[n], parts[2].data[n])
    }))
}

/// `J[i][j] = d_i v_j` at interior points.
pub fn fd_jacobian(v: &VecGrid, order: FdOrder) -> Result<TensorGrid, DiffError> {
    let mut parts = Vec::with_capacity(9);
    for i in 0..3 {
        for j in 0..3 {
            parts.push(fd_partial(&v.spec, order, i, |n| v.data[n][j])?);
        }
    }
    let spec = parts[0].spec;
    Ok(Grid::fill_indexed(spec, |[a, b, c]| {
        let n = spec.index(a, b, c);
        Tensor2::from_fn(|i, j| parts[3 * i + j].data[n])
    }))
}

pub fn fd_divergence(v: &VecGrid, order: FdOrder) -> Result<ScalarGrid, DiffError> {
    let jac = fd_jacobian(v, order)?;
    Ok(jac.map(|t| t.m[0][0] + t.m[1][1] + t.m[2][2]))
}

pub fn fd_curl(v: &VecGrid, order: FdOrder) -> Result<VecGrid, DiffError> {
    let jac = fd_jacobian(v, order)?;
    Ok(jac.map(|t| {
        Vec3::new(
            t.m[1][2] - t.m[2][1],
            t.m[2][0] - t.m[0][2],
            t.m[0][1] - t.m[1][0],
        )
    }))
}

/// `(div T)_j = d_i T_ij` at interior points.
pub fn fd_tensor_divergence(t: &TensorGrid, order: FdOrder) -> Result<VecGrid, DiffError> {
    let mut parts = Vec::with_capacity(9);
    for i in 0..3 {
        for j in 0..3 {
            parts.push(fd_partial(&t.spec, order, i, |n| t.data[n].m[i][j])?);
        }
    }
    let spec = parts[0].spec;
    Ok(Grid::fill_indexed(spec, |[a, b, c]| {
        let n = spec.index(a, b, c);
        Vec3::from_array(std::array::from_fn(|j| {
            parts[j].data[n] + parts[3 + j].data[n] + parts[6 + j].data[n]
        }))
    }))
}

/// Central time derivative of a uniformly sampled series at its interior
/// samples.
pub fn fd_time_derivative(series: &[f64], dt: f64, order: FdOrder) -> Result<Vec<f64>, DiffError> {
    let hw = order.half_width();
    if series.len() < 2 * hw + 1 {
        return Err(DiffError::GridTooSmall {
            axis: 3,
            dims: series.len(),
            needed: 2 * hw + 1,
        });
    }
    let w = order.weights();
    Ok((hw..series.len() - hw)
        .map(|c| {
            w.iter()
                .enumerate()
                .map(|(s, wk)| wk * (series[c + s + 1] - series[c - s - 1]))
                .sum::<f64>()
                / dt
        })
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceOrder {
    pub order: f64,
    /// `log2(e_h / e_h2)` and `log2(e_h2 / e_h4)`
    pub pairwise: [f64; 2],
}

/// Order estimate from error norms at spacings `h`, `h/2`, `h/4`.
pub fn convergence_order(errors: [f64; 3]) -> Result<ConvergenceOrder, DiffError> {
    if errors.iter().any(|e| !e.is_finite() || *e < 0.0) {
        return Err(DiffError::InvalidGrid("error norms must be finite and non-negative".into()));
    }
    if errors.contains(&0.0) {
        return Err(DiffError::ZeroError);
    }
    let p1 = (errors[0] / errors[1]).log2();
    let p2 = (errors[1] / errors[2]).log2();
    Ok(ConvergenceOrder {
        order: 0.5 * (p1 + p2),
        pairwise: [p1, p2],
    })
}
