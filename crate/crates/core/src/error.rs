use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("tangent vectors are attached to different base points")]
    BaseMismatch,
    #[error("point ({s}, {t}) lies outside the immersion domain")]
    Domain { s: f64, t: f64 },
    #[error("matrix is not in SL(2,R) (residual {0:e})")]
    NotSl2(f64),
    #[error("singular matrix")]
    Singular,
    #[error("induced metric is degenerate (|det| = {0:e})")]
    DegenerateMetric(f64),
    #[error("vector is not normal to the surface (residual {0:e})")]
    NotNormal(f64),
    #[error("unknown surface '{name}'; registered surfaces: {known}")]
    UnknownSurface { name: String, known: String },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("root outside Q(sqrt 3): {0}")]
    NonQuadraticRoot(String),
}

pub type Result<T> = std::result::Result<T, GeometryError>;
