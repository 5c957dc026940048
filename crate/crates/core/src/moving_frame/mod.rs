//! Moving-frame analysis of P-normal almost complex surfaces: the adapted
//! frame, the connection in terms of the unknown functions `a₁, a₂, a₃, b₁`,
//! the resulting curvature equations, and the algebraic system whose
//! solution set rules out a constant-curvature case.

pub mod connection;
pub mod frame;
pub mod parallel;
pub mod poly;

pub use connection::*;
pub use frame::{exact_adapted_frame, g_mult_table, printed_g_table, FrameVec};
pub use parallel::*;
pub use poly::{Poly, UPoly, Var};
