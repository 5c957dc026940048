//! The nearly Kähler structure in left-invariant coefficients.
//!
//! Every tensor here is left-invariant, so it is fully described by its
//! action on frame coefficients `(α,β)`. These are the closed forms; the
//! independent frame/Koszul derivations live in [`super::frame`].

use crate::scalar::Scalar;
use crate::sl2::cross;

use super::point::FrameCoeffs;

type V<S> = FrameCoeffs<S>;

fn r<S: Scalar>(n: i64, d: i64) -> S {
    S::from_ratio(n, d)
}

/// Product metric `⟨(α,β),(γ,δ)⟩ = ⟨α,γ⟩ + ⟨β,δ⟩`.
pub fn product_metric<S: Scalar>(x: &V<S>, y: &V<S>) -> S {
    x.alpha().inner(&y.alpha()) + x.beta().inner(&y.beta())
}

/// `g(X,Y) = ⅔⟨X,Y⟩ − ⅓⟨PX,Y⟩`.
pub fn nk_metric<S: Scalar>(x: &V<S>, y: &V<S>) -> S {
    r::<S>(2, 3) * product_metric(x, y) - r::<S>(1, 3) * product_metric(&apply_p(x), y)
}

/// `J(α,β) = (1/√3)(α − 2β, 2α − β)`.
pub fn apply_j<S: Scalar>(x: &V<S>) -> V<S> {
    let k = S::one() / S::sqrt3();
    let (a, b) = (x.alpha(), x.beta());
    let two = S::from_int(2);
    V::from_pair(&(a - b.scale(two)).scale(k), &(a.scale(two) - b).scale(k))
}

/// Factor swap `P(α,β) = (β,α)`.
pub fn apply_p<S: Scalar>(x: &V<S>) -> V<S> {
    V::from_pair(&x.beta(), &x.alpha())
}

/// Product structure `Q(α,β) = (−α,β)`.
pub fn apply_q<S: Scalar>(x: &V<S>) -> V<S> {
    V::from_pair(&(-x.alpha()), &x.beta())
}

/// `G(X,Y) = (∇̃_X J)Y` in closed form:
/// `(2/(3√3))·(−α×γ − α×δ + γ×β + 2β×δ,  −2α×γ + α×δ − γ×β + β×δ)`.
pub fn tensor_g<S: Scalar>(x: &V<S>, y: &V<S>) -> V<S> {
    let (a, b, c, d) = (x.alpha(), x.beta(), y.alpha(), y.beta());
    let ac = cross(&a, &c);
    let ad = cross(&a, &d);
    let cb = cross(&c, &b);
    let bd = cross(&b, &d);
    let two = S::from_int(2);
    let k = r::<S>(2, 3) / S::sqrt3();
    let first = -ac - ad + cb + bd.scale(two);
    let second = -ac.scale(two) + ad - cb + bd;
    V::from_pair(&first.scale(k), &second.scale(k))
}

/// Closed-form Riemann tensor of `g`:
/// ```text
/// R(U,V)W = −5/6 (g(V,W)U − g(U,W)V)
///           −1/6 (g(JV,W)JU − g(JU,W)JV − 2g(JU,V)JW)
///           −2/3 (g(PV,W)PU − g(PU,W)PV + g(JPV,W)JPU − g(JPU,W)JPV)
/// ```
/// with the convention `R(X,Y) = ∇_X∇_Y − ∇_Y∇_X − ∇_[X,Y]`.
pub fn curvature<S: Scalar>(u: &V<S>, v: &V<S>, w: &V<S>) -> V<S> {
    let g = nk_metric::<S>;
    let (ju, jv, jw) = (apply_j(u), apply_j(v), apply_j(w));
    let (pu, pv) = (apply_p(u), apply_p(v));
    let (jpu, jpv) = (apply_j(&pu), apply_j(&pv));
    let two = S::from_int(2);
    let t1 = V::combination(&[(g(v, w), *u), (-g(u, w), *v)]).scale(r(-5, 6));
    let t2 = V::combination(&[
        (g(&jv, w), ju),
        (-g(&ju, w), jv),
        (-two * g(&ju, v), jw),
    ])
    .scale(r(-1, 6));
    let t3 = V::combination(&[
        (g(&pv, w), pu),
        (-g(&pu, w), pv),
        (g(&jpv, w), jpu),
        (-g(&jpu, w), jpv),
    ])
    .scale(r(-2, 3));
    t1 + t2 + t3
}

/// `(∇̃G)(X,Y,Z) = (∇̃_X G)(Y,Z) = −⅔(g(X,Z)JY − g(X,Y)JZ − g(JY,Z)X)`.
pub fn nabla_g<S: Scalar>(x: &V<S>, y: &V<S>, z: &V<S>) -> V<S> {
    let g = nk_metric::<S>;
    let (jy, jz) = (apply_j(y), apply_j(z));
    V::combination(&[(g(x, z), jy), (-g(x, y), jz), (-g(&jy, z), *x)]).scale(r(-2, 3))
}

/// `g(G(X,Y),G(Z,W)) = −⅔(g(X,Z)g(Y,W) − g(X,W)g(Y,Z) + g(JX,Z)g(JW,Y) − g(JX,W)g(JZ,Y))`.
pub fn g_gg<S: Scalar>(x: &V<S>, y: &V<S>, z: &V<S>, w: &V<S>) -> S {
    let g = nk_metric::<S>;
    let (jx, jz, jw) = (apply_j(x), apply_j(z), apply_j(w));
    r::<S>(-2, 3)
        * (g(x, z) * g(y, w) - g(x, w) * g(y, z) + g(&jx, z) * g(&jw, y)
            - g(&jx, w) * g(&jz, y))
}

/// `G(X,G(Z,W)) = ⅔(g(X,Z)W − g(X,W)Z + g(JX,Z)JW − g(JX,W)JZ)`.
pub fn g_of_g<S: Scalar>(x: &V<S>, z: &V<S>, w: &V<S>) -> V<S> {
    let g = nk_metric::<S>;
    let jx = apply_j(x);
    V::combination(&[
        (g(x, z), *w),
        (-g(x, w), *z),
        (g(&jx, z), apply_j(w)),
        (-g(&jx, w), apply_j(z)),
    ])
    .scale(r(2, 3))
}

/// `½(JG(X,PY) + JG(Y,PX))`, the difference `∇ᴱ_XY − ∇̃_XY` between the
/// product-metric and nearly Kähler connections.
pub fn connection_shift<S: Scalar>(x: &V<S>, y: &V<S>) -> V<S> {
    let a = apply_j(&tensor_g(x, &apply_p(y)));
    let b = apply_j(&tensor_g(y, &apply_p(x)));
    (a + b).scale(r(1, 2))
}

/// Levi-Civita connection of the product metric on left-invariant fields:
/// `∇ᴱ_XY = (α×γ, β×δ)`.
pub fn product_connection<S: Scalar>(x: &V<S>, y: &V<S>) -> V<S> {
    V::from_pair(&cross(&x.alpha(), &y.alpha()), &cross(&x.beta(), &y.beta()))
}
