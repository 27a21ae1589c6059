//! Numerical toolkit for generalized continuous wavelet transforms and
//! generalized Wigner functions on three low-dimensional Lie groups: the
//! (1+1)-Poincaré group, the affine Poincaré group (Poincaré plus
//! dilations) and the Weyl–Heisenberg group.
//!
//! The crate builds direct-integral representation vectors on sampled
//! grids, constructs admissible vectors, evaluates wavelet transforms over
//! truncated group boxes, and evaluates the closed-form Wigner kernels on
//! coadjoint-orbit grids. Every identity the library claims (isometry,
//! overlap, covariance, reality, cone support) is checkable by quadrature
//! through [`checks`], which backs both the `check-all` CLI command and the
//! acceptance test suite.
//!
//! Layer map:
//!
//! * [`matfun`] — scalar/2×2-matrix hyperbolic special functions and the
//!   light-cone classifier.
//! * [`grid`] — uniform grids, trapezoidal quadrature, sampled complex
//!   functions, interpolation, CSV serialization.
//! * [`group`] — group elements, Haar and Lie-algebra densities, dual and
//!   coadjoint orbits, Plancherel discretizations.
//! * [`repn`] — unitary irreducible representations, Duflo–Moore
//!   operators, matrix coefficients, rank-one inverse Plancherel sums.
//! * [`wavelet`] — admissible vectors, the group-side wavelet transform,
//!   isometry defects and reconstruction.
//! * [`wigner`] — the orbit-side Wigner kernels, overlap/covariance
//!   checks and the Weyl–Heisenberg inverse transform.
//! * [`config`], [`report`], [`checks`] — batch front end plumbing.

pub mod checks;
pub mod config;
pub mod grid;
pub mod group;
pub mod matfun;
pub mod repn;
pub mod report;
pub mod wavelet;
pub mod wigner;

pub use grid::{make_uniform_grid, Grid1D, SampledFunction1D, SampledFunction2D};
pub use group::{CoadjointPoint, GroupElement, GroupTag, OrbitLabel, SigmaSpec};
pub use matfun::{cone_classify, mat_func, ConeLabel, Mat2, MatFunKind};
