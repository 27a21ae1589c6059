//! Uniform grids with trapezoidal quadrature weights, sampled complex
//! functions in one and two variables, piecewise-linear interpolation with
//! zero extension, and CSV serialization.
//!
//! Everything downstream — representation-space pairings, group-box
//! integrals, Wigner quadratures — is built on these four primitives.
//! Summations are pairwise in a fixed order so results are reproducible
//! bit-for-bit regardless of parallelism elsewhere.

use num_complex::Complex64;
use std::io::{self, Write};
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GridError {
    #[error("grid needs at least two nodes, got {0}")]
    TooFewNodes(usize),
    #[error("grid bounds must satisfy lower < upper, got [{0}, {1}]")]
    BadBounds(f64, f64),
    #[error("operands live on different grids")]
    GridMismatch,
}

/// Uniformly spaced sample points on `[lower, upper]` with composite
/// trapezoidal weights.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid1D {
    points: Vec<f64>,
    weights: Vec<f64>,
    lower: f64,
    upper: f64,
    step: f64,
}

/// Build a uniform grid of `n ≥ 2` nodes with trapezoidal weights.
pub fn make_uniform_grid(lower: f64, upper: f64, n: usize) -> Result<Arc<Grid1D>, GridError> {
    Grid1D::uniform(lower, upper, n).map(Arc::new)
}

impl Grid1D {
    pub fn uniform(lower: f64, upper: f64, n: usize) -> Result<Grid1D, GridError> {
        if n < 2 {
            return Err(GridError::TooFewNodes(n));
        }
        if !(lower < upper) || !lower.is_finite() || !upper.is_finite() {
            return Err(GridError::BadBounds(lower, upper));
        }
        let step = (upper - lower) / (n - 1) as f64;
        let points: Vec<f64> = (0..n).map(|i| lower + step * i as f64).collect();
        let mut weights = vec![step; n];
        weights[0] = 0.5 * step;
        weights[n - 1] = 0.5 * step;
        Ok(Grid1D {
            points,
            weights,
            lower,
            upper,
            step,
        })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn point(&self, i: usize) -> f64 {
        self.points[i]
    }

    pub fn weight(&self, i: usize) -> f64 {
        self.weights[i]
    }

    pub fn lower(&self) -> f64 {
        self.lower
    }

    pub fn upper(&self) -> f64 {
        self.upper
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    /// Nearest integer index of `x` on the grid, when `x` sits on a node
    /// up to `tol` relative to the spacing. Used for exact-shift paths.
    pub fn node_index_of(&self, x: f64, tol: f64) -> Option<i64> {
        let t = (x - self.lower) / self.step;
        let r = t.round();
        if (t - r).abs() <= tol {
            Some(r as i64)
        } else {
            None
        }
    }

    /// Rescale every node by `s > 0` (weights scale along), preserving the
    /// uniform structure. For `s < 0` the grid is mirrored back to
    /// ascending order.
    pub fn scaled(&self, s: f64) -> Grid1D {
        let s_abs = s.abs();
        let (lower, upper) = if s > 0.0 {
            (self.lower * s, self.upper * s)
        } else {
            (self.upper * s, self.lower * s)
        };
        let n = self.len();
        let step = (upper - lower) / (n - 1) as f64;
        let points: Vec<f64> = (0..n).map(|i| lower + step * i as f64).collect();
        let mut weights = vec![step; n];
        weights[0] = 0.5 * step;
        weights[n - 1] = 0.5 * step;
        let _ = s_abs;
        Grid1D {
            points,
            weights,
            lower,
            upper,
            step,
        }
    }

    /// Grid with the same node count over `[2·lower, 2·upper]` extended to
    /// `2n−1` nodes, so that half of every node lands back on this grid.
    /// Used as the quadrature grid for correlation integrals whose
    /// integrand is evaluated at `u ± x/2`.
    pub fn doubled(&self) -> Grid1D {
        let n = 2 * self.len() - 1;
        let lower = 2.0 * self.lower;
        let upper = 2.0 * self.upper;
        let step = (upper - lower) / (n - 1) as f64;
        let points: Vec<f64> = (0..n).map(|i| lower + step * i as f64).collect();
        let mut weights = vec![step; n];
        weights[0] = 0.5 * step;
        weights[n - 1] = 0.5 * step;
        Grid1D {
            points,
            weights,
            lower,
            upper,
            step,
        }
    }
}

/// Deterministic pairwise summation of `f(lo..hi)`.
pub(crate) fn pairwise_sum<F: Fn(usize) -> Complex64>(lo: usize, hi: usize, f: &F) -> Complex64 {
    if hi - lo <= 32 {
        let mut acc = Complex64::new(0.0, 0.0);
        for i in lo..hi {
            acc += f(i);
        }
        acc
    } else {
        let mid = lo + (hi - lo) / 2;
        pairwise_sum(lo, mid, f) + pairwise_sum(mid, hi, f)
    }
}

pub(crate) fn pairwise_sum_real<F: Fn(usize) -> f64>(lo: usize, hi: usize, f: &F) -> f64 {
    if hi - lo <= 32 {
        let mut acc = 0.0;
        for i in lo..hi {
            acc += f(i);
        }
        acc
    } else {
        let mid = lo + (hi - lo) / 2;
        pairwise_sum_real(lo, mid, f) + pairwise_sum_real(mid, hi, f)
    }
}

fn grids_match(a: &Arc<Grid1D>, b: &Arc<Grid1D>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// Complex samples over a [`Grid1D`].
#[derive(Debug, Clone)]
pub struct SampledFunction1D {
    pub grid: Arc<Grid1D>,
    pub values: Vec<Complex64>,
}

impl SampledFunction1D {
    pub fn from_fn<F: FnMut(f64) -> Complex64>(grid: Arc<Grid1D>, mut f: F) -> Self {
        let values = grid.points().iter().map(|&x| f(x)).collect();
        SampledFunction1D { grid, values }
    }

    pub fn zero(grid: Arc<Grid1D>) -> Self {
        let n = grid.len();
        SampledFunction1D {
            grid,
            values: vec![Complex64::new(0.0, 0.0); n],
        }
    }

    /// Trapezoidal integral `Σ wᵢ f(xᵢ)`.
    pub fn integrate(&self) -> Complex64 {
        let w = self.grid.weights();
        let v = &self.values;
        pairwise_sum(0, v.len(), &|i| w[i] * v[i])
    }

    /// Quadrature pairing `Σ wᵢ conj(f(xᵢ)) g(xᵢ)`.
    pub fn inner_product(&self, g: &SampledFunction1D) -> Result<Complex64, GridError> {
        if !grids_match(&self.grid, &g.grid) {
            return Err(GridError::GridMismatch);
        }
        let w = self.grid.weights();
        Ok(pairwise_sum(0, self.values.len(), &|i| {
            w[i] * self.values[i].conj() * g.values[i]
        }))
    }

    pub fn norm_sq(&self) -> f64 {
        let w = self.grid.weights();
        pairwise_sum_real(0, self.values.len(), &|i| w[i] * self.values[i].norm_sqr())
    }

    /// Piecewise-linear interpolation inside the grid domain, exactly zero
    /// outside.
    pub fn interp_eval(&self, x: f64) -> Complex64 {
        let g = &self.grid;
        if x < g.lower() || x > g.upper() {
            return Complex64::new(0.0, 0.0);
        }
        let t = (x - g.lower()) / g.step();
        let i = (t.floor() as usize).min(g.len() - 2);
        let frac = t - i as f64;
        self.values[i] * (1.0 - frac) + self.values[i + 1] * frac
    }

    pub fn scaled(&self, c: Complex64) -> SampledFunction1D {
        SampledFunction1D {
            grid: Arc::clone(&self.grid),
            values: self.values.iter().map(|v| v * c).collect(),
        }
    }

    /// CSV rows `x,re,im`, one per node, with ≥ 15 significant digits.
    pub fn write_csv<W: Write>(&self, out: &mut W) -> io::Result<()> {
        writeln!(out, "x,re,im")?;
        for (x, v) in self.grid.points().iter().zip(&self.values) {
            writeln!(out, "{:.16e},{:.16e},{:.16e}", x, v.re, v.im)?;
        }
        Ok(())
    }
}

/// Complex samples over a tensor-product grid, row-major in the first
/// coordinate: `values[ix * grid_y.len() + iy]`.
#[derive(Debug, Clone)]
pub struct SampledFunction2D {
    pub grid_x: Arc<Grid1D>,
    pub grid_y: Arc<Grid1D>,
    pub values: Vec<Complex64>,
}

impl SampledFunction2D {
    pub fn from_fn<F: FnMut(f64, f64) -> Complex64>(
        grid_x: Arc<Grid1D>,
        grid_y: Arc<Grid1D>,
        mut f: F,
    ) -> Self {
        let mut values = Vec::with_capacity(grid_x.len() * grid_y.len());
        for &x in grid_x.points() {
            for &y in grid_y.points() {
                values.push(f(x, y));
            }
        }
        SampledFunction2D {
            grid_x,
            grid_y,
            values,
        }
    }

    pub fn zero(grid_x: Arc<Grid1D>, grid_y: Arc<Grid1D>) -> Self {
        let n = grid_x.len() * grid_y.len();
        SampledFunction2D {
            grid_x,
            grid_y,
            values: vec![Complex64::new(0.0, 0.0); n],
        }
    }

    pub fn value(&self, ix: usize, iy: usize) -> Complex64 {
        self.values[ix * self.grid_y.len() + iy]
    }

    /// Tensor-product trapezoidal integral.
    pub fn integrate(&self) -> Complex64 {
        let wx = self.grid_x.weights();
        let wy = self.grid_y.weights();
        let ny = self.grid_y.len();
        pairwise_sum(0, self.values.len(), &|i| {
            wx[i / ny] * wy[i % ny] * self.values[i]
        })
    }

    pub fn inner_product(&self, g: &SampledFunction2D) -> Result<Complex64, GridError> {
        if !grids_match(&self.grid_x, &g.grid_x) || !grids_match(&self.grid_y, &g.grid_y) {
            return Err(GridError::GridMismatch);
        }
        let wx = self.grid_x.weights();
        let wy = self.grid_y.weights();
        let ny = self.grid_y.len();
        Ok(pairwise_sum(0, self.values.len(), &|i| {
            wx[i / ny] * wy[i % ny] * self.values[i].conj() * g.values[i]
        }))
    }

    pub fn norm_sq(&self) -> f64 {
        let wx = self.grid_x.weights();
        let wy = self.grid_y.weights();
        let ny = self.grid_y.len();
        pairwise_sum_real(0, self.values.len(), &|i| {
            wx[i / ny] * wy[i % ny] * self.values[i].norm_sqr()
        })
    }

    /// Bilinear interpolation inside the rectangle, exactly zero outside.
    pub fn interp_eval(&self, x: f64, y: f64) -> Complex64 {
        let gx = &self.grid_x;
        let gy = &self.grid_y;
        if x < gx.lower() || x > gx.upper() || y < gy.lower() || y > gy.upper() {
            return Complex64::new(0.0, 0.0);
        }
        let tx = (x - gx.lower()) / gx.step();
        let ix = (tx.floor() as usize).min(gx.len() - 2);
        let fx = tx - ix as f64;
        let ty = (y - gy.lower()) / gy.step();
        let iy = (ty.floor() as usize).min(gy.len() - 2);
        let fy = ty - iy as f64;
        let ny = gy.len();
        let v00 = self.values[ix * ny + iy];
        let v01 = self.values[ix * ny + iy + 1];
        let v10 = self.values[(ix + 1) * ny + iy];
        let v11 = self.values[(ix + 1) * ny + iy + 1];
        v00 * ((1.0 - fx) * (1.0 - fy))
            + v01 * ((1.0 - fx) * fy)
            + v10 * (fx * (1.0 - fy))
            + v11 * (fx * fy)
    }

    pub fn scaled(&self, c: Complex64) -> SampledFunction2D {
        SampledFunction2D {
            grid_x: Arc::clone(&self.grid_x),
            grid_y: Arc::clone(&self.grid_y),
            values: self.values.iter().map(|v| v * c).collect(),
        }
    }

    /// CSV rows `x,y,re,im`, one per node, with ≥ 15 significant digits.
    pub fn write_csv<W: Write>(&self, out: &mut W) -> io::Result<()> {
        writeln!(out, "x,y,re,im")?;
        let ny = self.grid_y.len();
        for (i, v) in self.values.iter().enumerate() {
            writeln!(
                out,
                "{:.16e},{:.16e},{:.16e},{:.16e}",
                self.grid_x.point(i / ny),
                self.grid_y.point(i % ny),
                v.re,
                v.im
            )?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use proptest::prelude::*;

    #[test]
    fn uniform_grid_rejects_bad_input() {
        assert!(Grid1D::uniform(0.0, 1.0, 1).is_err());
        assert!(Grid1D::uniform(1.0, 0.0, 4).is_err());
        assert!(Grid1D::uniform(1.0, 1.0, 4).is_err());
    }

    #[test]
    fn trapezoid_weights_on_small_grids() {
        let g = Grid1D::uniform(0.0, 1.0, 2).unwrap();
        assert_eq!(g.points(), &[0.0, 1.0]);
        assert_eq!(g.weights(), &[0.5, 0.5]);
        let g = Grid1D::uniform(-1.0, 1.0, 3).unwrap();
        assert_eq!(g.points(), &[-1.0, 0.0, 1.0]);
        assert_eq!(g.weights(), &[0.5, 1.0, 0.5]);
    }

    #[test]
    fn weights_partition_the_interval() {
        let g = Grid1D::uniform(0.0, 2.0 * std::f64::consts::PI, 101).unwrap();
        let sum: f64 = g.weights().iter().sum();
        assert_abs_diff_eq!(sum, 2.0 * std::f64::consts::PI, epsilon = 1e-12);
    }

    #[test]
    fn integrate_constant_exactly() {
        let g = make_uniform_grid(0.0, 1.0, 17).unwrap();
        let f = SampledFunction1D::from_fn(g, |_| Complex64::new(1.0, 0.0));
        assert_abs_diff_eq!(f.integrate().re, 1.0, epsilon = 1e-14);
    }

    #[test]
    fn integrate_sine_and_gaussian() {
        let g = make_uniform_grid(0.0, std::f64::consts::PI, 2001).unwrap();
        let f = SampledFunction1D::from_fn(g, |x| Complex64::new(x.sin(), 0.0));
        assert_abs_diff_eq!(f.integrate().re, 2.0, epsilon = 1e-6);

        let g = make_uniform_grid(-8.0, 8.0, 4001).unwrap();
        let f = SampledFunction1D::from_fn(g, |x| Complex64::new((-x * x).exp(), 0.0));
        assert_abs_diff_eq!(f.integrate().re, std::f64::consts::PI.sqrt(), epsilon = 1e-8);
    }

    #[test]
    fn trapezoid_error_halves_quadratically() {
        // order-2 behavior: doubling n shrinks the error by >= 3.5x
        let err = |n: usize| {
            let g = make_uniform_grid(0.0, std::f64::consts::PI, n).unwrap();
            let f = SampledFunction1D::from_fn(g, |x| Complex64::new(x.sin(), 0.0));
            (f.integrate().re - 2.0).abs()
        };
        let e1 = err(101);
        let e2 = err(201);
        assert!(e1 / e2 >= 3.5, "ratio {}", e1 / e2);
    }

    #[test]
    fn inner_product_is_positive_and_hermitian() {
        let g = make_uniform_grid(-4.0, 4.0, 64).unwrap();
        let f = SampledFunction1D::from_fn(Arc::clone(&g), |x| Complex64::new(x.cos(), x.sin()));
        let h = SampledFunction1D::from_fn(Arc::clone(&g), |x| Complex64::new(x, -0.3 * x * x));
        let ff = f.inner_product(&f).unwrap();
        assert!(ff.re >= 0.0);
        assert_abs_diff_eq!(ff.im, 0.0, epsilon = 1e-14);
        let fh = f.inner_product(&h).unwrap();
        let hf = h.inner_product(&f).unwrap();
        assert_abs_diff_eq!(fh.re, hf.re, epsilon = 1e-12);
        assert_abs_diff_eq!(fh.im, -hf.im, epsilon = 1e-12);
    }

    #[test]
    fn inner_product_rejects_grid_mismatch() {
        let g1 = make_uniform_grid(0.0, 1.0, 8).unwrap();
        let g2 = make_uniform_grid(0.0, 1.0, 9).unwrap();
        let f = SampledFunction1D::zero(g1);
        let h = SampledFunction1D::zero(g2);
        assert!(matches!(f.inner_product(&h), Err(GridError::GridMismatch)));
    }

    #[test]
    fn far_gaussians_are_numerically_orthogonal() {
        let g = make_uniform_grid(-20.0, 20.0, 1601).unwrap();
        let f = SampledFunction1D::from_fn(Arc::clone(&g), |x| {
            Complex64::new((-(x + 10.0) * (x + 10.0)).exp(), 0.0)
        });
        let h = SampledFunction1D::from_fn(Arc::clone(&g), |x| {
            Complex64::new((-(x - 10.0) * (x - 10.0)).exp(), 0.0)
        });
        assert!(f.inner_product(&h).unwrap().norm() < 1e-10);
    }

    #[test]
    fn interp_reproduces_nodes_and_zero_extends() {
        let g = make_uniform_grid(-1.0, 2.0, 13).unwrap();
        let f = SampledFunction1D::from_fn(Arc::clone(&g), |x| Complex64::new(x * x, -x));
        for (i, &x) in g.points().iter().enumerate() {
            assert_eq!(f.interp_eval(x), f.values[i]);
        }
        assert_eq!(f.interp_eval(-1.0001), Complex64::new(0.0, 0.0));
        assert_eq!(f.interp_eval(2.0001), Complex64::new(0.0, 0.0));
    }

    #[test]
    fn interp_exact_on_linear_functions() {
        let g = make_uniform_grid(0.0, 1.0, 11).unwrap();
        let f = SampledFunction1D::from_fn(Arc::clone(&g), |x| Complex64::new(3.0 * x - 1.0, x));
        for i in 0..10 {
            let x = 0.05 + 0.1 * i as f64;
            let v = f.interp_eval(x);
            assert_abs_diff_eq!(v.re, 3.0 * x - 1.0, epsilon = 1e-12);
            assert_abs_diff_eq!(v.im, x, epsilon = 1e-12);
        }
    }

    #[test]
    fn bilinear_interp_and_2d_integral() {
        let gx = make_uniform_grid(0.0, 1.0, 21).unwrap();
        let gy = make_uniform_grid(-1.0, 1.0, 31).unwrap();
        let f = SampledFunction2D::from_fn(Arc::clone(&gx), Arc::clone(&gy), |x, y| {
            Complex64::new(x + 2.0 * y, 0.0)
        });
        // exact for bilinear integrand
        assert_abs_diff_eq!(f.integrate().re, 1.0, epsilon = 1e-12);
        let v = f.interp_eval(0.525, 0.1333);
        assert_abs_diff_eq!(v.re, 0.525 + 2.0 * 0.1333, epsilon = 1e-12);
        assert_eq!(f.interp_eval(1.5, 0.0), Complex64::new(0.0, 0.0));
    }

    #[test]
    fn doubled_grid_halves_back_onto_nodes() {
        let g = make_uniform_grid(-3.0, 3.0, 25).unwrap();
        let d = g.doubled();
        assert_eq!(d.len(), 49);
        for (j, &x) in d.points().iter().enumerate() {
            let idx = g.node_index_of(0.5 * x, 1e-9);
            assert!(idx.is_some(), "node {} at {}", j, x);
        }
    }

    proptest! {
        #[test]
        fn interp_is_linear_in_the_samples(a in -2.0f64..2.0, b in -2.0f64..2.0, x in -4.0f64..4.0) {
            let g = make_uniform_grid(-3.0, 3.0, 41).unwrap();
            let f = SampledFunction1D::from_fn(Arc::clone(&g), |t| Complex64::new(t.sin(), t.cos()));
            let h = SampledFunction1D::from_fn(Arc::clone(&g), |t| Complex64::new(t * t, -t));
            let combo = SampledFunction1D {
                grid: Arc::clone(&g),
                values: f
                    .values
                    .iter()
                    .zip(&h.values)
                    .map(|(u, v)| u * a + v * b)
                    .collect(),
            };
            let lhs = combo.interp_eval(x);
            let rhs = f.interp_eval(x) * a + h.interp_eval(x) * b;
            prop_assert!((lhs - rhs).norm() <= 1e-12 * (1.0 + lhs.norm()));
        }

        #[test]
        fn norm_sq_is_nonnegative(seed in 0u64..1000) {
            let g = make_uniform_grid(-1.0, 1.0, 33).unwrap();
            let f = SampledFunction1D::from_fn(g, |x| {
                Complex64::new((seed as f64 * x).sin(), (seed as f64 + x).cos())
            });
            prop_assert!(f.norm_sq() >= 0.0);
        }
    }
}
