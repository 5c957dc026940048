//! 2×2 matrices, the trace-free algebra sl(2,ℝ) and the group SL(2,ℝ).
//!
//! `M(2,ℝ)` carries the indefinite inner product
//! `⟨a,b⟩ = −½(a₁₁b₂₂ − a₁₂b₂₁ − a₂₁b₁₂ + a₂₂b₁₁) = −½·Trace(adj(a)·b)`,
//! for which `⟨A,A⟩ = −det A`; SL(2,ℝ) is the level set `⟨A,A⟩ = −1`.
//! On trace-free matrices it has signature (+,+,−) in the basis
//! `e₁ = diag(1,−1)`, `e₂ = [[0,1],[1,0]]`, `e₃ = [[0,1],[−1,0]]`.

use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat2<S> {
    pub m11: S,
    pub m12: S,
    pub m21: S,
    pub m22: S,
}

impl<S: Scalar> Mat2<S> {
    pub const fn new(m11: S, m12: S, m21: S, m22: S) -> Self {
        Self { m11, m12, m21, m22 }
    }

    pub fn identity() -> Self {
        Self::new(S::one(), S::zero(), S::zero(), S::one())
    }

    pub fn zero() -> Self {
        Self::new(S::zero(), S::zero(), S::zero(), S::zero())
    }

    pub fn diag(a: S, d: S) -> Self {
        Self::new(a, S::zero(), S::zero(), d)
    }

    pub fn scale(&self, k: S) -> Self {
        Self::new(self.m11 * k, self.m12 * k, self.m21 * k, self.m22 * k)
    }

    pub fn trace(&self) -> S {
        self.m11 + self.m22
    }

    pub fn det(&self) -> S {
        self.m11 * self.m22 - self.m12 * self.m21
    }

    pub fn transpose(&self) -> Self {
        Self::new(self.m11, self.m21, self.m12, self.m22)
    }

    /// Inverse via the adjugate; `None` for singular matrices.
    pub fn inverse(&self) -> Option<Self> {
        let d = self.det();
        if d.is_zero() {
            return None;
        }
        let inv = S::one() / d;
        Some(adjugate(self).scale(inv))
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(S) -> T) -> Mat2<T> {
        Mat2::new(f(self.m11), f(self.m12), f(self.m21), f(self.m22))
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> f64 {
        [self.m11, self.m12, self.m21, self.m22]
            .iter()
            .map(|x| x.magnitude())
            .fold(0.0, f64::max)
    }

    /// Splits into trace part `(tr/2)·I` and trace-free part.
    pub fn trace_free_part(&self) -> TraceZero<S> {
        let half = S::from_ratio(1, 2);
        TraceZero::new(
            (self.m11 - self.m22) * half,
            (self.m12 + self.m21) * half,
            (self.m12 - self.m21) * half,
        )
    }
}

impl<S: Scalar> Add for Mat2<S> {
    type Output = Self;
    fn add(self, r: Self) -> Self {
        Self::new(
            self.m11 + r.m11,
            self.m12 + r.m12,
            self.m21 + r.m21,
            self.m22 + r.m22,
        )
    }
}

impl<S: Scalar> Sub for Mat2<S> {
    type Output = Self;
    fn sub(self, r: Self) -> Self {
        Self::new(
            self.m11 - r.m11,
            self.m12 - r.m12,
            self.m21 - r.m21,
            self.m22 - r.m22,
        )
    }
}

impl<S: Scalar> Neg for Mat2<S> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.m11, -self.m12, -self.m21, -self.m22)
    }
}

impl<S: Scalar> Mul for Mat2<S> {
    type Output = Self;
    fn mul(self, r: Self) -> Self {
        Self::new(
            self.m11 * r.m11 + self.m12 * r.m21,
            self.m11 * r.m12 + self.m12 * r.m22,
            self.m21 * r.m11 + self.m22 * r.m21,
            self.m21 * r.m12 + self.m22 * r.m22,
        )
    }
}

/// `adj(m)`, satisfying `m·adj(m) = det(m)·I`.
pub fn adjugate<S: Scalar>(m: &Mat2<S>) -> Mat2<S> {
    Mat2::new(m.m22, -m.m12, -m.m21, m.m11)
}

/// The indefinite inner product `−½·Trace(adj(a)·b)` on `M(2,ℝ)`.
///
/// The trace is taken of `adj(a)·b` without a transpose: that is the form
/// that expands to `−½(a₁₁b₂₂ − a₁₂b₂₁ − a₂₁b₁₂ + a₂₂b₁₁)` and gives
/// `⟨e₃,e₃⟩ = −1`.
pub fn minkowski_inner<S: Scalar>(a: &Mat2<S>, b: &Mat2<S>) -> S {
    let half = S::from_ratio(1, 2);
    -(a.m11 * b.m22 - a.m12 * b.m21 - a.m21 * b.m12 + a.m22 * b.m11) * half
}

/// Trace-free matrix `c1·e₁ + c2·e₂ + c3·e₃ = [[c1, c2+c3],[c2−c3, −c1]]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TraceZero<S> {
    pub c1: S,
    pub c2: S,
    pub c3: S,
}

impl<S: Scalar> TraceZero<S> {
    pub const fn new(c1: S, c2: S, c3: S) -> Self {
        Self { c1, c2, c3 }
    }

    pub fn zero() -> Self {
        Self::new(S::zero(), S::zero(), S::zero())
    }

    /// Basis element `e_{i+1}` for `i ∈ {0,1,2}`.
    pub fn basis(i: usize) -> Self {
        let mut c = [S::zero(); 3];
        c[i] = S::one();
        Self::from_array(c)
    }

    pub fn from_array(c: [S; 3]) -> Self {
        Self::new(c[0], c[1], c[2])
    }

    pub fn to_array(&self) -> [S; 3] {
        [self.c1, self.c2, self.c3]
    }

    pub fn to_matrix(&self) -> Mat2<S> {
        Mat2::new(self.c1, self.c2 + self.c3, self.c2 - self.c3, -self.c1)
    }

    /// Coefficients of a matrix; the trace part is discarded.
    pub fn from_matrix(m: &Mat2<S>) -> Self {
        m.trace_free_part()
    }

    pub fn scale(&self, k: S) -> Self {
        Self::new(self.c1 * k, self.c2 * k, self.c3 * k)
    }

    /// `⟨x,y⟩ = x₁y₁ + x₂y₂ − x₃y₃`.
    pub fn inner(&self, other: &Self) -> S {
        self.c1 * other.c1 + self.c2 * other.c2 - self.c3 * other.c3
    }

    pub fn norm_sq(&self) -> S {
        self.inner(self)
    }

    pub fn max_abs(&self) -> f64 {
        self.to_array()
            .iter()
            .map(|x| x.magnitude())
            .fold(0.0, f64::max)
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(S) -> T) -> TraceZero<T> {
        TraceZero::new(f(self.c1), f(self.c2), f(self.c3))
    }
}

impl<S: Scalar> Add for TraceZero<S> {
    type Output = Self;
    fn add(self, r: Self) -> Self {
        Self::new(self.c1 + r.c1, self.c2 + r.c2, self.c3 + r.c3)
    }
}

impl<S: Scalar> Sub for TraceZero<S> {
    type Output = Self;
    fn sub(self, r: Self) -> Self {
        Self::new(self.c1 - r.c1, self.c2 - r.c2, self.c3 - r.c3)
    }
}

impl<S: Scalar> Neg for TraceZero<S> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.c1, -self.c2, -self.c3)
    }
}

/// `x × y = ½(xy − yx)`. In coefficients this is the Lorentzian cross
/// product: `e₁×e₂ = e₃`, `e₂×e₃ = −e₁`, `e₃×e₁ = −e₂`.
pub fn cross<S: Scalar>(x: &TraceZero<S>, y: &TraceZero<S>) -> TraceZero<S> {
    TraceZero::new(
        y.c2 * x.c3 - x.c2 * y.c3,
        x.c1 * y.c3 - x.c3 * y.c1,
        x.c1 * y.c2 - x.c2 * y.c1,
    )
}

/// A point of SL(2,ℝ).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Sl2Point<S> {
    matrix: Mat2<S>,
}

impl<S: Scalar> Sl2Point<S> {
    /// Checked constructor: `|⟨m,m⟩ + 1| ≤ tol`.
    pub fn new(matrix: Mat2<S>, tol: f64) -> Option<Self> {
        is_sl2(&matrix, tol).then_some(Self { matrix })
    }

    /// Unchecked constructor for matrices known to have determinant one.
    pub fn new_unchecked(matrix: Mat2<S>) -> Self {
        Self { matrix }
    }

    pub fn identity() -> Self {
        Self::new_unchecked(Mat2::identity())
    }

    pub fn matrix(&self) -> &Mat2<S> {
        &self.matrix
    }

    /// `A⁻¹ = adj(A)` on SL(2,ℝ).
    pub fn inverse(&self) -> Mat2<S> {
        adjugate(&self.matrix)
    }

    /// Membership residual `|⟨A,A⟩ + 1|`.
    pub fn residual(&self) -> f64 {
        (minkowski_inner(&self.matrix, &self.matrix) + S::one()).magnitude()
    }
}

pub fn is_sl2<S: Scalar>(m: &Mat2<S>, tol: f64) -> bool {
    debug_assert!(tol > 0.0);
    (minkowski_inner(m, m) + S::one()).magnitude() <= tol
}

/// Closed-form exponential `exp(x)` of a trace-free matrix.
///
/// With `d = det x` one has `x² = −d·I`, so
/// `exp x = cos(√d)·I + sin(√d)/√d·x` for `d > 0`,
/// `cosh(√−d)·I + sinh(√−d)/√−d·x` for `d < 0`, and a truncated series
/// for `|d| < 1e−12`.
pub fn sl2_exp(x: &TraceZero<f64>) -> Sl2Point<f64> {
    let m = x.to_matrix();
    let d = m.det();
    let (c, s) = if d.abs() < 1e-12 {
        (1.0 - d / 2.0 + d * d / 24.0, 1.0 - d / 6.0 + d * d / 120.0)
    } else if d > 0.0 {
        let r = d.sqrt();
        (r.cos(), r.sin() / r)
    } else {
        let r = (-d).sqrt();
        (r.cosh(), r.sinh() / r)
    };
    Sl2Point::new_unchecked(Mat2::identity().scale(c) + m.scale(s))
}
