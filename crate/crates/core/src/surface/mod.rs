//! Almost complex surfaces: closed-form examples, numeric jets and the
//! induced geometry.
//!
//! Sign convention for the Gauss formula: `∇̃_XY = ∇_XY + h(X,Y)`, with `∇̃`
//! the ambient connection and `∇` the induced one.

pub mod epsilon;
pub mod examples;
pub mod geometry;
pub mod immersion;
pub mod jet;

pub use examples::{
    example_flat_negative, example_flat_positive, example_hyperbolic, example_hyperbolic_quadric, lookup,
    REGISTRY,
};
pub use geometry::{
    almost_complex_residual, gauss_curvature, induced_metric, integrability_residual, p_tangency,
    rotated_integrability_residual, second_fundamental_form, shape_operator, CurvatureEstimate, InducedMetric,
    PClass, PTangency, SecondFundamentalForm, Signature,
};
pub use immersion::{FirstDerivatives, Immersion};
pub use jet::{numeric_jet, SurfaceJet, DEFAULT_STEP};
