//! The nearly Kähler structure on SL(2,ℝ)×SL(2,ℝ).

pub mod algebra;
pub mod frame;
pub mod point;
pub mod printed;
pub mod structure;

pub use frame::{
    covariant, flow_connection, frame_curvature, frame_nabla_g, koszul_connection, levi_civita_frame,
    lie_bracket, nabla_j_frame, tabulated_connection, FrameTable,
};
pub use point::{frame_field, FrameCoeffs, FrameIndex, NKPoint, Tangent};
pub use structure::*;
