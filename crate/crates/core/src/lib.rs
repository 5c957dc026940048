//! Nearly Kähler geometry of SL(2,R) x SL(2,R): exact structure tensors,
//! almost complex surfaces, a moving-frame analysis of parallel surfaces,
//! and the verification suites behind the `nksl2` command.

#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod linalg;
pub mod nk;
pub mod scalar;
pub mod sl2;

pub use error::{GeometryError, Result};
pub use scalar::{QSqrt3, Scalar};
pub mod par;
pub mod sample;
pub mod diff;
pub mod surface;
pub mod moving_frame;
pub mod verify;
