//! Seeded sampling of points and tangent vectors.
//!
//! Every sample index gets its own ChaCha stream, so results do not depend
//! on evaluation order (sequential or parallel).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::nk::algebra::nk_metric;
use crate::nk::{FrameCoeffs, NKPoint, Tangent};
use crate::sl2::{sl2_exp, TraceZero};

/// Below this `|g(v,v)|` a candidate unit vector is rejected and redrawn.
pub const NULL_CONE_GUARD: f64 = 0.1;

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// Independent stream `index` under `seed`.
    pub fn for_index(seed: u64, index: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(index);
        Self { rng }
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn trace_zero(&mut self, radius: f64) -> TraceZero<f64> {
        TraceZero::new(
            self.uniform(-radius, radius),
            self.uniform(-radius, radius),
            self.uniform(-radius, radius),
        )
    }

    /// `(exp α, exp β)` with coefficients of `α`, `β` in `[−1,1]`.
    pub fn point(&mut self) -> NKPoint<f64> {
        let a = sl2_exp(&self.trace_zero(1.0));
        let b = sl2_exp(&self.trace_zero(1.0));
        NKPoint::new(a, b)
    }

    pub fn coeffs(&mut self) -> FrameCoeffs<f64> {
        FrameCoeffs(std::array::from_fn(|_| self.uniform(-1.0, 1.0)))
    }

    pub fn tangent(&mut self, p: &NKPoint<f64>) -> Tangent<f64> {
        let c = self.coeffs();
        Tangent::from_coeffs(*p, &c)
    }

    /// A vector with `|g(v,v)| = 1`, plus the sign of `g(v,v)`.
    pub fn unit_tangent(&mut self, p: &NKPoint<f64>) -> (Tangent<f64>, f64) {
        loop {
            let c = self.coeffs();
            let n = nk_metric(&c, &c);
            if n.abs() >= NULL_CONE_GUARD {
                let v = c.scale(1.0 / n.abs().sqrt());
                return (Tangent::from_coeffs(*p, &v), n.signum());
            }
        }
    }
}
