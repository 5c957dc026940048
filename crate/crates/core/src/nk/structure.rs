//! Tangent-level API. Each operation checks that its arguments share a base
//! point and delegates to the coefficient forms in [`super::algebra`].

use crate::error::Result;
use crate::scalar::Scalar;
use crate::sl2::{adjugate, Mat2};

use super::algebra;
use super::point::{FrameCoeffs, NKPoint, Tangent};

fn same<S: Scalar>(xs: &[&Tangent<S>]) -> Result<()> {
    for w in xs.windows(2) {
        w[0].same_base(w[1])?;
    }
    Ok(())
}

pub fn product_metric<S: Scalar>(x: &Tangent<S>, y: &Tangent<S>) -> Result<S> {
    same(&[x, y])?;
    Ok(algebra::product_metric(&x.coeffs(), &y.coeffs()))
}

pub fn nk_metric<S: Scalar>(x: &Tangent<S>, y: &Tangent<S>) -> Result<S> {
    same(&[x, y])?;
    Ok(algebra::nk_metric(&x.coeffs(), &y.coeffs()))
}

pub fn apply_j<S: Scalar>(x: &Tangent<S>) -> Tangent<S> {
    x.with_coeffs(algebra::apply_j(&x.coeffs()))
}

pub fn apply_p<S: Scalar>(x: &Tangent<S>) -> Tangent<S> {
    x.with_coeffs(algebra::apply_p(&x.coeffs()))
}

pub fn apply_q<S: Scalar>(x: &Tangent<S>) -> Tangent<S> {
    x.with_coeffs(algebra::apply_q(&x.coeffs()))
}

pub fn tensor_g<S: Scalar>(x: &Tangent<S>, y: &Tangent<S>) -> Result<Tangent<S>> {
    same(&[x, y])?;
    Ok(x.with_coeffs(algebra::tensor_g(&x.coeffs(), &y.coeffs())))
}

pub fn curvature<S: Scalar>(u: &Tangent<S>, v: &Tangent<S>, w: &Tangent<S>) -> Result<Tangent<S>> {
    same(&[u, v, w])?;
    Ok(u.with_coeffs(algebra::curvature(&u.coeffs(), &v.coeffs(), &w.coeffs())))
}

pub fn nabla_g<S: Scalar>(x: &Tangent<S>, y: &Tangent<S>, z: &Tangent<S>) -> Result<Tangent<S>> {
    same(&[x, y, z])?;
    Ok(x.with_coeffs(algebra::nabla_g(&x.coeffs(), &y.coeffs(), &z.coeffs())))
}

pub fn g_gg<S: Scalar>(
    x: &Tangent<S>,
    y: &Tangent<S>,
    z: &Tangent<S>,
    w: &Tangent<S>,
) -> Result<S> {
    same(&[x, y, z, w])?;
    Ok(algebra::g_gg(&x.coeffs(), &y.coeffs(), &z.coeffs(), &w.coeffs()))
}

pub fn g_of_g<S: Scalar>(x: &Tangent<S>, z: &Tangent<S>, w: &Tangent<S>) -> Result<Tangent<S>> {
    same(&[x, z, w])?;
    Ok(x.with_coeffs(algebra::g_of_g(&x.coeffs(), &z.coeffs(), &w.coeffs())))
}

pub fn connection_shift<S: Scalar>(x: &Tangent<S>, y: &Tangent<S>) -> Result<Tangent<S>> {
    same(&[x, y])?;
    Ok(x.with_coeffs(algebra::connection_shift(&x.coeffs(), &y.coeffs())))
}

/// Converts a flat ambient derivative `D_XY ∈ M(2,ℝ)²` at `p` into `∇̃_XY`:
/// `∇̃_XY = D_XY − ½⟨X,Y⟩F − ½⟨X,QY⟩QF − ½(JG(X,PY)+JG(Y,PX))`,
/// with `F = (A,B)` the position vector.
pub fn ambient_to_nk<S: Scalar>(
    d: &(Mat2<S>, Mat2<S>),
    x: &Tangent<S>,
    y: &Tangent<S>,
    p: &NKPoint<S>,
) -> Result<Tangent<S>> {
    Ok(ambient_to_nk_with_residual(d, x, y, p)?.0)
}

/// As [`ambient_to_nk`], also returning the trace left over after removing
/// the position terms (zero for an exact `D_XY`).
pub fn ambient_to_nk_with_residual<S: Scalar>(
    d: &(Mat2<S>, Mat2<S>),
    x: &Tangent<S>,
    y: &Tangent<S>,
    p: &NKPoint<S>,
) -> Result<(Tangent<S>, f64)> {
    same(&[x, y])?;
    if x.base != *p {
        return Err(crate::error::GeometryError::BaseMismatch);
    }
    let (xc, yc) = (x.coeffs(), y.coeffs());
    let pm = algebra::product_metric(&xc, &yc);
    let pq = algebra::product_metric(&xc, &algebra::apply_q(&yc));
    let half = S::from_ratio(1, 2);
    // Left-trivialised: F ↦ (I,I), QF ↦ (−I,I).
    let ca = half * (pm - pq);
    let cb = half * (pm + pq);
    let ma = adjugate(p.a.matrix()) * d.0 - Mat2::identity().scale(ca);
    let mb = adjugate(p.b.matrix()) * d.1 - Mat2::identity().scale(cb);
    let residual = ma.trace().magnitude().max(mb.trace().magnitude());
    let product = FrameCoeffs::from_pair(&ma.trace_free_part(), &mb.trace_free_part());
    let nk = product - algebra::connection_shift(&xc, &yc);
    Ok((x.with_coeffs(nk), residual))
}
