//! Hyperbolic special functions with removable singularities, their 2×2
//! matrix versions on the boost–dilation algebra, and the light-cone
//! classifier.
//!
//! The scalar functions `sinh(x)/x`, `(cosh x - 1)/x`, `(e^x - 1)/x` and
//! `x/(e^x - 1)` are entire (resp. analytic) at the origin but their
//! closed forms cancel catastrophically there; below `|x| = 1e-2` they are
//! evaluated by truncated power series, above by cancellation-free closed
//! forms. The matrix versions act on `X_q(λ,θ) = λI + θσ₁`, which is
//! symmetric with eigenvector matrix independent of `(λ,θ)`, so every
//! matrix function is evaluated exactly through the fixed diagonalization
//! rather than by a matrix power series.

/// Switchover point between power series and closed form.
const SERIES_THRESHOLD: f64 = 1e-2;

/// Unsigned Bernoulli numbers B₁, B₂, B₃ entering the expansion
/// `x/(eˣ−1) = 1 − x/2 + Σ_{k≥1} (−1)^{k−1} B_k x^{2k}/(2k)!`.
const BERNOULLI: [f64; 3] = [1.0 / 6.0, 1.0 / 30.0, 1.0 / 42.0];

/// `sinh(x)/x`, extended by `1 + x²/3! + x⁴/5! + …` at the origin.
pub fn sinch(x: f64) -> f64 {
    if x.abs() < SERIES_THRESHOLD {
        let x2 = x * x;
        1.0 + x2 / 6.0 + x2 * x2 / 120.0 + x2 * x2 * x2 / 5040.0
    } else {
        x.sinh() / x
    }
}

/// `(cosh x − 1)/x`, extended by `x/2! + x³/4! + …` at the origin.
///
/// The closed form is written as `2 sinh²(x/2)/x`, which is free of the
/// `cosh x − 1` cancellation for moderate `x`.
pub fn cosinch(x: f64) -> f64 {
    if x.abs() < SERIES_THRESHOLD {
        let x2 = x * x;
        x * (1.0 / 2.0 + x2 / 24.0 + x2 * x2 / 720.0 + x2 * x2 * x2 / 40320.0)
    } else {
        let s = (0.5 * x).sinh();
        2.0 * s * s / x
    }
}

/// `F(x) = (eˣ − 1)/x = sinch x + cosinch x`, extended by
/// `1 + x/2! + x²/3! + …` at the origin.
pub fn big_f(x: f64) -> f64 {
    if x.abs() < SERIES_THRESHOLD {
        let x2 = x * x;
        1.0 + x / 2.0 + x2 / 6.0 + x2 * x / 24.0 + x2 * x2 / 120.0 + x2 * x2 * x / 720.0
    } else {
        x.exp_m1() / x
    }
}

/// `F(x)⁻¹ = x/(eˣ − 1)`, extended by the Bernoulli series at the origin.
pub fn big_f_inv(x: f64) -> f64 {
    if x.abs() < SERIES_THRESHOLD {
        let x2 = x * x;
        let x4 = x2 * x2;
        // 1 - x/2 + B₁x²/2! - B₂x⁴/4! + B₃x⁶/6!
        1.0 - x / 2.0 + BERNOULLI[0] * x2 / 2.0 - BERNOULLI[1] * x4 / 24.0
            + BERNOULLI[2] * x4 * x2 / 720.0
    } else {
        x / x.exp_m1()
    }
}

/// Real 2×2 matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2 {
    pub m00: f64,
    pub m01: f64,
    pub m10: f64,
    pub m11: f64,
}

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2::new(1.0, 0.0, 0.0, 1.0);
    /// Parity-swap matrix σ₁ = [[0,1],[1,0]].
    pub const SIGMA1: Mat2 = Mat2::new(0.0, 1.0, 1.0, 0.0);
    /// Metric matrix σ₃ = [[1,0],[0,−1]].
    pub const SIGMA3: Mat2 = Mat2::new(1.0, 0.0, 0.0, -1.0);

    pub const fn new(m00: f64, m01: f64, m10: f64, m11: f64) -> Self {
        Mat2 { m00, m01, m10, m11 }
    }

    /// `X_q(λ,θ) = λ I₂ + θ σ₁`, a generic element of the commutative
    /// boost–dilation algebra.
    pub fn x_q(lambda: f64, theta: f64) -> Self {
        Mat2::new(lambda, theta, theta, lambda)
    }

    /// Hyperbolic rotation Λ_θ = exp(X_q(0,θ)).
    pub fn boost(theta: f64) -> Self {
        let c = theta.cosh();
        let s = theta.sinh();
        Mat2::new(c, s, s, c)
    }

    pub fn det(&self) -> f64 {
        self.m00 * self.m11 - self.m01 * self.m10
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        Mat2::new(
            self.m00 * o.m00 + self.m01 * o.m10,
            self.m00 * o.m01 + self.m01 * o.m11,
            self.m10 * o.m00 + self.m11 * o.m10,
            self.m10 * o.m01 + self.m11 * o.m11,
        )
    }

    pub fn apply(&self, v: [f64; 2]) -> [f64; 2] {
        [
            self.m00 * v[0] + self.m01 * v[1],
            self.m10 * v[0] + self.m11 * v[1],
        ]
    }

    pub fn scale(&self, s: f64) -> Mat2 {
        Mat2::new(s * self.m00, s * self.m01, s * self.m10, s * self.m11)
    }
}

/// Which function of `X_q(λ,θ)` to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatFunKind {
    Exp,
    Sinch,
    Cosinch,
    BigF,
    BigFInv,
    /// `e^{A/2} [sinch(A/2)]⁻¹`, scalar form `x/(1 − e^{−x})`.
    ExpHalfOverSinchHalfPos,
    /// `e^{−A/2} [sinch(A/2)]⁻¹`, scalar form `x/(eˣ − 1)`.
    ExpHalfOverSinchHalfNeg,
}

fn scalar_fun(kind: MatFunKind, x: f64) -> f64 {
    match kind {
        MatFunKind::Exp => x.exp(),
        MatFunKind::Sinch => sinch(x),
        MatFunKind::Cosinch => cosinch(x),
        MatFunKind::BigF => big_f(x),
        MatFunKind::BigFInv => big_f_inv(x),
        // e^{x/2}/sinch(x/2) = x/(1-e^{-x}) = F(-x)^{-1}
        MatFunKind::ExpHalfOverSinchHalfPos => big_f_inv(-x),
        // e^{-x/2}/sinch(x/2) = x/(e^x-1) = F(x)^{-1}
        MatFunKind::ExpHalfOverSinchHalfNeg => big_f_inv(x),
    }
}

/// Evaluate `f(X_q(λ,θ))` through the fixed diagonalization
/// `V X_q Vᵀ = diag(λ+θ, λ−θ)` with `V = (1/√2)[[1,1],[−1,1]]`, giving
/// `Vᵀ diag(f(λ+θ), f(λ−θ)) V = [[m,n],[n,m]]` with
/// `m = (f₊+f₋)/2`, `n = (f₊−f₋)/2`.
pub fn mat_func(kind: MatFunKind, lambda: f64, theta: f64) -> Mat2 {
    let fp = scalar_fun(kind, lambda + theta);
    let fm = scalar_fun(kind, lambda - theta);
    let m = 0.5 * (fp + fm);
    let n = 0.5 * (fp - fm);
    Mat2::new(m, n, n, m)
}

/// Region of the plane relative to the light cone `k₀² = k₁²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConeLabel {
    Forward,
    Backward,
    Right,
    Left,
    Lightlike,
    Zero,
}

impl ConeLabel {
    /// The four open cones carry square-integrable representations of the
    /// affine group; the boundary set does not.
    pub fn is_open_cone(&self) -> bool {
        matches!(
            self,
            ConeLabel::Forward | ConeLabel::Backward | ConeLabel::Right | ConeLabel::Left
        )
    }
}

impl std::fmt::Display for ConeLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            ConeLabel::Forward => "forward",
            ConeLabel::Backward => "backward",
            ConeLabel::Right => "right",
            ConeLabel::Left => "left",
            ConeLabel::Lightlike => "lightlike",
            ConeLabel::Zero => "zero",
        };
        f.write_str(s)
    }
}

/// Classify `k = (k₀, k₁)` by the sign of `k₀² − k₁²` and of its
/// components. Total and exclusive on finite inputs.
pub fn cone_classify(k0: f64, k1: f64) -> ConeLabel {
    if k0 == 0.0 && k1 == 0.0 {
        return ConeLabel::Zero;
    }
    let q = k0 * k0 - k1 * k1;
    if q > 0.0 {
        if k0 > 0.0 {
            ConeLabel::Forward
        } else {
            ConeLabel::Backward
        }
    } else if q < 0.0 {
        if k1 > 0.0 {
            ConeLabel::Right
        } else {
            ConeLabel::Left
        }
    } else {
        ConeLabel::Lightlike
    }
}
