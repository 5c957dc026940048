use std::fmt;
use std::sync::Arc;

use crate::error::{GeometryError, Result};
use crate::nk::{FrameCoeffs, NKPoint};
use crate::sl2::{Mat2, TraceZero};

/// Membership tolerance applied to every evaluated point.
pub const MEMBERSHIP_TOL: f64 = 1e-8;

/// Left-trivialised first derivatives:
/// `A_s = Aα̃`, `A_t = Aβ̃`, `B_s = Bγ̃`, `B_t = Bδ̃`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FirstDerivatives {
    pub alpha: TraceZero<f64>,
    pub beta: TraceZero<f64>,
    pub gamma: TraceZero<f64>,
    pub delta: TraceZero<f64>,
}

impl FirstDerivatives {
    /// Frame coefficients of `F_s`.
    pub fn fs(&self) -> FrameCoeffs<f64> {
        FrameCoeffs::from_pair(&self.alpha, &self.gamma)
    }

    /// Frame coefficients of `F_t`.
    pub fn ft(&self) -> FrameCoeffs<f64> {
        FrameCoeffs::from_pair(&self.beta, &self.delta)
    }
}

type Eval = Arc<dyn Fn(f64, f64) -> (Mat2<f64>, Mat2<f64>) + Send + Sync>;
type Analytic = Arc<dyn Fn(f64, f64) -> FirstDerivatives + Send + Sync>;
type Domain = Arc<dyn Fn(f64, f64) -> bool + Send + Sync>;

/// A map `(s,t) ↦ (A(s,t), B(s,t))` into SL(2,ℝ)×SL(2,ℝ).
#[derive(Clone)]
pub struct Immersion {
    name: String,
    eval: Eval,
    analytic: Option<Analytic>,
    domain: Domain,
}

impl fmt::Debug for Immersion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Immersion")
            .field("name", &self.name)
            .field("analytic", &self.analytic.is_some())
            .finish()
    }
}

impl Immersion {
    pub fn new(
        name: impl Into<String>,
        eval: impl Fn(f64, f64) -> (Mat2<f64>, Mat2<f64>) + Send + Sync + 'static,
    ) -> Self {
        Self {
            name: name.into(),
            eval: Arc::new(eval),
            analytic: None,
            domain: Arc::new(|_, _| true),
        }
    }

    pub fn with_domain(mut self, domain: impl Fn(f64, f64) -> bool + Send + Sync + 'static) -> Self {
        self.domain = Arc::new(domain);
        self
    }

    pub fn with_analytic(
        mut self,
        d: impl Fn(f64, f64) -> FirstDerivatives + Send + Sync + 'static,
    ) -> Self {
        self.analytic = Some(Arc::new(d));
        self
    }

    /// The same map with analytic derivatives dropped (forces numerics).
    pub fn without_analytic(mut self) -> Self {
        self.analytic = None;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn has_analytic(&self) -> bool {
        self.analytic.is_some()
    }

    pub fn in_domain(&self, s: f64, t: f64) -> bool {
        (self.domain)(s, t)
    }

    /// Raw matrices, with only the domain checked.
    pub fn raw(&self, s: f64, t: f64) -> Result<(Mat2<f64>, Mat2<f64>)> {
        if !self.in_domain(s, t) {
            return Err(GeometryError::Domain { s, t });
        }
        Ok((self.eval)(s, t))
    }

    pub fn raw_flat(&self, s: f64, t: f64) -> Result<[f64; 8]> {
        let (a, b) = self.raw(s, t)?;
        Ok(flatten(&a, &b))
    }

    pub fn point(&self, s: f64, t: f64) -> Result<NKPoint<f64>> {
        let (a, b) = self.raw(s, t)?;
        NKPoint::from_matrices(a, b, MEMBERSHIP_TOL)
    }

    pub fn analytic(&self, s: f64, t: f64) -> Option<FirstDerivatives> {
        if !self.in_domain(s, t) {
            return None;
        }
        self.analytic.as_ref().map(|d| d(s, t))
    }
}

pub(crate) fn flatten(a: &Mat2<f64>, b: &Mat2<f64>) -> [f64; 8] {
    [a.m11, a.m12, a.m21, a.m22, b.m11, b.m12, b.m21, b.m22]
}

pub(crate) fn unflatten(v: &[f64; 8]) -> (Mat2<f64>, Mat2<f64>) {
    (
        Mat2::new(v[0], v[1], v[2], v[3]),
        Mat2::new(v[4], v[5], v[6], v[7]),
    )
}
