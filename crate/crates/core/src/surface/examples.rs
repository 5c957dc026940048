//! Closed-form almost complex surfaces and a few test immersions.

use std::f64::consts::SQRT_2;

use crate::error::{GeometryError, Result};
use crate::nk::NKPoint;
use crate::sl2::{adjugate, sl2_exp, Mat2, TraceZero};

use super::immersion::{FirstDerivatives, Immersion, MEMBERSHIP_TOL};

pub const FLAT_POSITIVE: &str = "flat-positive";
pub const FLAT_NEGATIVE: &str = "flat-negative";
pub const HYPERBOLIC_ST: &str = "hyperbolic-st";
pub const HYPERBOLIC_QUADRIC: &str = "hyperbolic-quadric";

pub const REGISTRY: [&str; 4] = [FLAT_POSITIVE, FLAT_NEGATIVE, HYPERBOLIC_ST, HYPERBOLIC_QUADRIC];

/// Half-width of the excluded annulus around the unit circle in the
/// `(s,t)` chart of the hyperbolic surface.
pub const HYPERBOLIC_ANNULUS: f64 = 0.05;

fn sqrt3() -> f64 {
    3f64.sqrt()
}

fn e(i: usize) -> TraceZero<f64> {
    TraceZero::basis(i)
}

/// `u = (√3s − t)/√2`, `w = (√3s + t)/√2`.
fn flat_phases(s: f64, t: f64) -> (f64, f64) {
    ((sqrt3() * s - t) / SQRT_2, (sqrt3() * s + t) / SQRT_2)
}

/// Flat, totally geodesic, positive definite: diagonal exponentials.
pub fn example_flat_positive() -> Immersion {
    Immersion::new(FLAT_POSITIVE, |s, t| {
        let (u, w) = flat_phases(s, t);
        (Mat2::diag(u.exp(), (-u).exp()), Mat2::diag(w.exp(), (-w).exp()))
    })
    .with_analytic(|_, _| FirstDerivatives {
        alpha: e(0).scale((1.5f64).sqrt()),
        beta: e(0).scale(-1.0 / SQRT_2),
        gamma: e(0).scale((1.5f64).sqrt()),
        delta: e(0).scale(1.0 / SQRT_2),
    })
}

fn rotation(u: f64) -> Mat2<f64> {
    Mat2::new(u.cos(), u.sin(), -u.sin(), u.cos())
}

/// Flat, totally geodesic, negative definite: rotations.
pub fn example_flat_negative() -> Immersion {
    Immersion::new(FLAT_NEGATIVE, |s, t| {
        let (u, w) = flat_phases(s, t);
        (rotation(u), rotation(w))
    })
    .with_analytic(|_, _| FirstDerivatives {
        alpha: e(2).scale((1.5f64).sqrt()),
        beta: e(2).scale(-1.0 / SQRT_2),
        gamma: e(2).scale((1.5f64).sqrt()),
        delta: e(2).scale(1.0 / SQRT_2),
    })
}

/// `ρ = s² + t² − 1`.
fn rho(s: f64, t: f64) -> f64 {
    s * s + t * t - 1.0
}

/// The isothermal parametrisation of `ε₁² + ε₂² − ε₃² = −3/4`.
pub fn epsilon(s: f64, t: f64) -> TraceZero<f64> {
    let r = rho(s, t);
    let k = sqrt3();
    TraceZero::new(-k * s / r, -k * t / r, k / 2.0 * (s * s + t * t + 1.0) / r)
}

/// `(ε_s, ε_t)` in closed form.
pub fn epsilon_derivatives(s: f64, t: f64) -> (TraceZero<f64>, TraceZero<f64>) {
    let r2 = rho(s, t).powi(2);
    let k = sqrt3();
    let es = TraceZero::new(
        k * (s * s - t * t + 1.0) / r2,
        2.0 * k * s * t / r2,
        -2.0 * k * s / r2,
    );
    let et = TraceZero::new(
        2.0 * k * s * t / r2,
        k * (t * t - s * s + 1.0) / r2,
        -2.0 * k * t / r2,
    );
    (es, et)
}

pub fn hyperbolic_domain(s: f64, t: f64) -> bool {
    rho(s, t).abs() >= HYPERBOLIC_ANNULUS
}

/// Totally geodesic, P-normal, `K = −4/3`: `A = ½I + ε`, `B = ½I − ε`.
pub fn example_hyperbolic() -> Immersion {
    Immersion::new(HYPERBOLIC_ST, |s, t| {
        let m = epsilon(s, t).to_matrix();
        let h = Mat2::identity().scale(0.5);
        (h + m, h - m)
    })
    .with_domain(hyperbolic_domain)
    .with_analytic(|s, t| {
        let m = epsilon(s, t).to_matrix();
        let h = Mat2::identity().scale(0.5);
        let (a, b) = (h + m, h - m);
        let (es, et) = epsilon_derivatives(s, t);
        let (ms, mt) = (es.to_matrix(), et.to_matrix());
        FirstDerivatives {
            alpha: (adjugate(&a) * ms).trace_free_part(),
            beta: (adjugate(&a) * mt).trace_free_part(),
            gamma: (adjugate(&b) * -ms).trace_free_part(),
            delta: (adjugate(&b) * -mt).trace_free_part(),
        }
    })
}

/// Stereographic map of the disk chart onto `y₁² + y₂² − y₃² = −1`.
pub fn quadric_coordinates(s: f64, t: f64) -> [f64; 3] {
    let r = rho(s, t);
    [-2.0 * s / r, -2.0 * t / r, (s * s + t * t + 1.0) / r]
}

/// Residual `y₁² + y₂² − y₃² + 1`.
pub fn quadric_residual(y: &[f64; 3]) -> f64 {
    y[0] * y[0] + y[1] * y[1] - y[2] * y[2] + 1.0
}

fn quadric_matrices(y: &[f64; 3]) -> (Mat2<f64>, Mat2<f64>) {
    let k = sqrt3() / 2.0;
    let a = Mat2::new(
        k * y[0] + 0.5,
        k * (y[1] + y[2]),
        k * (y[1] - y[2]),
        0.5 - k * y[0],
    );
    let b = Mat2::new(
        0.5 - k * y[0],
        -k * (y[1] + y[2]),
        -k * (y[1] - y[2]),
        k * y[0] + 0.5,
    );
    (a, b)
}

/// The hyperbolic surface in the hyperboloid chart `y ↦ (A(y), B(y))`.
pub fn hyperboloid_point(y: &[f64; 3], tol: f64) -> Result<NKPoint<f64>> {
    let res = quadric_residual(y);
    if res.abs() > tol {
        return Err(GeometryError::InvalidConfig(format!(
            "point is off the hyperbolic quadric (residual {res:e})"
        )));
    }
    let (a, b) = quadric_matrices(y);
    NKPoint::from_matrices(a, b, MEMBERSHIP_TOL)
}

/// The hyperboloid chart pulled back along [`quadric_coordinates`]; no
/// analytic derivatives, so every derivative is numerical.
pub fn example_hyperbolic_quadric() -> Immersion {
    Immersion::new(HYPERBOLIC_QUADRIC, |s, t| quadric_matrices(&quadric_coordinates(s, t)))
        .with_domain(hyperbolic_domain)
}

pub fn lookup(name: &str) -> Result<Immersion> {
    match name {
        FLAT_POSITIVE => Ok(example_flat_positive()),
        FLAT_NEGATIVE => Ok(example_flat_negative()),
        HYPERBOLIC_ST => Ok(example_hyperbolic()),
        HYPERBOLIC_QUADRIC => Ok(example_hyperbolic_quadric()),
        _ => Err(GeometryError::UnknownSurface {
            name: name.to_string(),
            known: REGISTRY.join(", "),
        }),
    }
}

/// `(s,t) ↦ (I, I)`.
pub fn constant() -> Immersion {
    Immersion::new("constant", |_, _| (Mat2::identity(), Mat2::identity())).with_analytic(|_, _| {
        FirstDerivatives {
            alpha: TraceZero::zero(),
            beta: TraceZero::zero(),
            gamma: TraceZero::zero(),
            delta: TraceZero::zero(),
        }
    })
}

/// `(s,t) ↦ (exp(s e₁), exp(t e₂))`: a product of geodesics, not almost complex.
pub fn geodesic_product() -> Immersion {
    Immersion::new("geodesic-product", |s, t| {
        (*sl2_exp(&e(0).scale(s)).matrix(), *sl2_exp(&e(1).scale(t)).matrix())
    })
    .with_analytic(|_, _| FirstDerivatives {
        alpha: e(0),
        beta: TraceZero::zero(),
        gamma: TraceZero::zero(),
        delta: e(1),
    })
}

/// `(s,t) ↦ (C, C)` with `C = exp(s e₁)·exp(t e₂)`; invariant under the
/// factor swap, so `P` fixes every tangent vector.
pub fn swap_symmetric() -> Immersion {
    Immersion::new("swap-symmetric", |s, t| {
        let c = *sl2_exp(&e(0).scale(s)).matrix() * *sl2_exp(&e(1).scale(t)).matrix();
        (c, c)
    })
}
