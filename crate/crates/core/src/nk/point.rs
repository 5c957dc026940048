use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{GeometryError, Result};
use crate::scalar::Scalar;
use crate::sl2::{Mat2, Sl2Point, TraceZero};

/// A point `(A,B)` of SL(2,ℝ)×SL(2,ℝ).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NKPoint<S> {
    pub a: Sl2Point<S>,
    pub b: Sl2Point<S>,
}

impl<S: Scalar> NKPoint<S> {
    pub fn new(a: Sl2Point<S>, b: Sl2Point<S>) -> Self {
        Self { a, b }
    }

    /// Checked constructor from raw matrices.
    pub fn from_matrices(a: Mat2<S>, b: Mat2<S>, tol: f64) -> Result<Self> {
        let pa = Sl2Point::new(a, tol).ok_or_else(|| {
            GeometryError::NotSl2(Sl2Point::new_unchecked(a).residual())
        })?;
        let pb = Sl2Point::new(b, tol).ok_or_else(|| {
            GeometryError::NotSl2(Sl2Point::new_unchecked(b).residual())
        })?;
        Ok(Self::new(pa, pb))
    }

    pub fn identity() -> Self {
        Self::new(Sl2Point::identity(), Sl2Point::identity())
    }

    /// Larger of the two membership residuals `|⟨A,A⟩+1|`, `|⟨B,B⟩+1|`.
    pub fn membership_residual(&self) -> f64 {
        self.a.residual().max(self.b.residual())
    }
}

/// The six left-invariant frame fields.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FrameIndex {
    E1,
    E2,
    E3,
    F1,
    F2,
    F3,
}

impl FrameIndex {
    pub const ALL: [FrameIndex; 6] = [
        FrameIndex::E1,
        FrameIndex::E2,
        FrameIndex::E3,
        FrameIndex::F1,
        FrameIndex::F2,
        FrameIndex::F3,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Self {
        Self::ALL[i]
    }

    pub fn name(self) -> &'static str {
        ["E1", "E2", "E3", "F1", "F2", "F3"][self.index()]
    }
}

impl fmt::Display for FrameIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Coefficients in the frame `(E₁,E₂,E₃,F₁,F₂,F₃)`. Left-invariance makes
/// these base-independent: `(α,β)` with `α = Σ cᵢeᵢ`, `β = Σ cᵢ₊₃eᵢ`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FrameCoeffs<S>(pub [S; 6]);

impl<S: Scalar> FrameCoeffs<S> {
    pub fn zero() -> Self {
        Self([S::zero(); 6])
    }

    pub fn unit(i: FrameIndex) -> Self {
        let mut c = [S::zero(); 6];
        c[i.index()] = S::one();
        Self(c)
    }

    pub fn from_pair(alpha: &TraceZero<S>, beta: &TraceZero<S>) -> Self {
        Self([alpha.c1, alpha.c2, alpha.c3, beta.c1, beta.c2, beta.c3])
    }

    pub fn alpha(&self) -> TraceZero<S> {
        TraceZero::new(self.0[0], self.0[1], self.0[2])
    }

    pub fn beta(&self) -> TraceZero<S> {
        TraceZero::new(self.0[3], self.0[4], self.0[5])
    }

    pub fn scale(&self, k: S) -> Self {
        Self(self.0.map(|x| x * k))
    }

    pub fn get(&self, i: FrameIndex) -> S {
        self.0[i.index()]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| x.is_zero())
    }

    /// Euclidean norm of the coefficient vector (positive definite, unlike g).
    pub fn coeff_norm(&self) -> f64 {
        self.0
            .iter()
            .map(|x| {
                let v = x.to_f64();
                v * v
            })
            .sum::<f64>()
            .sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().map(|x| x.magnitude()).fold(0.0, f64::max)
    }

    pub fn to_f64(&self) -> FrameCoeffs<f64> {
        FrameCoeffs(self.0.map(|x| x.to_f64()))
    }

    /// Linear combination `Σ wᵢ·vᵢ`.
    pub fn combination(terms: &[(S, FrameCoeffs<S>)]) -> Self {
        terms
            .iter()
            .fold(Self::zero(), |acc, (w, v)| acc + v.scale(*w))
    }
}

impl<S: Scalar> Add for FrameCoeffs<S> {
    type Output = Self;
    fn add(self, r: Self) -> Self {
        let mut out = self.0;
        for (o, x) in out.iter_mut().zip(r.0) {
            *o += x;
        }
        Self(out)
    }
}

impl<S: Scalar> Sub for FrameCoeffs<S> {
    type Output = Self;
    fn sub(self, r: Self) -> Self {
        let mut out = self.0;
        for (o, x) in out.iter_mut().zip(r.0) {
            *o -= x;
        }
        Self(out)
    }
}

impl<S: Scalar> Neg for FrameCoeffs<S> {
    type Output = Self;
    fn neg(self) -> Self {
        Self(self.0.map(|x| -x))
    }
}

impl<S: Scalar + fmt::Display> fmt::Display for FrameCoeffs<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            write!(f, "({c}){}", FrameIndex::from_index(i))?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Tangent vector `(Aα, Bβ)` at `base = (A,B)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tangent<S> {
    pub base: NKPoint<S>,
    pub alpha: TraceZero<S>,
    pub beta: TraceZero<S>,
}

impl<S: Scalar> Tangent<S> {
    pub fn new(base: NKPoint<S>, alpha: TraceZero<S>, beta: TraceZero<S>) -> Self {
        Self { base, alpha, beta }
    }

    pub fn from_coeffs(base: NKPoint<S>, c: &FrameCoeffs<S>) -> Self {
        Self::new(base, c.alpha(), c.beta())
    }

    pub fn coeffs(&self) -> FrameCoeffs<S> {
        FrameCoeffs::from_pair(&self.alpha, &self.beta)
    }

    /// Same coefficients at another base point (left translation).
    pub fn with_coeffs(&self, c: FrameCoeffs<S>) -> Self {
        Self::from_coeffs(self.base, &c)
    }

    /// The raw ambient pair `(Aα, Bβ)` in `M(2,ℝ)×M(2,ℝ)`.
    pub fn to_ambient(&self) -> (Mat2<S>, Mat2<S>) {
        (
            *self.base.a.matrix() * self.alpha.to_matrix(),
            *self.base.b.matrix() * self.beta.to_matrix(),
        )
    }

    pub fn coeff_norm(&self) -> f64 {
        self.coeffs().coeff_norm()
    }

    pub fn same_base(&self, other: &Self) -> Result<()> {
        if self.base == other.base {
            Ok(())
        } else {
            Err(GeometryError::BaseMismatch)
        }
    }
}

/// Value of the left-invariant field `i` at `p`.
pub fn frame_field<S: Scalar>(i: FrameIndex, p: &NKPoint<S>) -> Tangent<S> {
    Tangent::from_coeffs(*p, &FrameCoeffs::unit(i))
}
