//! The adapted frame `e₁ = v, e₂ = Jv, e₃ = Pv, e₄ = JPv, e₅ = G(v,Pv),
//! e₆ = −G(Jv,Pv)` along a P-normal almost complex surface, and the
//! structure tensors expressed in it.

use num_traits::Zero;

use crate::nk::algebra::{apply_j, apply_p, nk_metric, tensor_g};
use crate::nk::point::FrameCoeffs;
use crate::scalar::{QSqrt3, Rational, Scalar};
use crate::sl2::{adjugate, Mat2, TraceZero};

use super::poly::rat;

/// A vector `Σ cᵢ eᵢ` in the adapted frame.
pub type FrameVec = [Rational; 6];

pub fn zero_vec() -> FrameVec {
    [Rational::zero(); 6]
}

pub fn basis_vec(i: usize) -> FrameVec {
    let mut v = zero_vec();
    v[i] = Rational::from_integer(1);
    v
}

fn signed(i: usize, n: i128, d: i128) -> FrameVec {
    let mut v = zero_vec();
    v[i] = rat(n, d);
    v
}

/// `g(eᵢ,eᵢ)`; the frame is orthogonal.
pub fn frame_metric(i: usize) -> Rational {
    if i < 4 {
        rat(1, 1)
    } else {
        rat(-2, 3)
    }
}

/// `J eᵢ = sign · e_k` as `(k, sign)`.
pub fn j_action(i: usize) -> (usize, i128) {
    [(1, 1), (0, -1), (3, 1), (2, -1), (5, 1), (4, -1)][i]
}

/// `P eᵢ = sign · e_k` as `(k, sign)`.
pub fn p_action(i: usize) -> (usize, i128) {
    [(2, 1), (3, -1), (0, 1), (1, -1), (4, 1), (5, -1)][i]
}

fn apply_perm(v: &FrameVec, action: fn(usize) -> (usize, i128)) -> FrameVec {
    let mut out = zero_vec();
    for (i, c) in v.iter().enumerate() {
        let (k, s) = action(i);
        out[k] += *c * Rational::from_integer(s);
    }
    out
}

pub fn frame_j(v: &FrameVec) -> FrameVec {
    apply_perm(v, j_action)
}

pub fn frame_p(v: &FrameVec) -> FrameVec {
    apply_perm(v, p_action)
}

pub fn frame_g_metric(x: &FrameVec, y: &FrameVec) -> Rational {
    (0..6).fold(Rational::zero(), |acc, i| acc + frame_metric(i) * x[i] * y[i])
}

/// `G(eᵢ, eⱼ)` for `i < j`; indices are zero-based.
fn g_upper(i: usize, j: usize, corrected: bool) -> FrameVec {
    match (i, j) {
        (0, 1) | (2, 3) | (4, 5) => zero_vec(),
        (0, 2) => signed(4, 1, 1),
        (0, 3) => signed(5, -1, 1),
        (0, 4) => signed(2, 2, 3),
        (0, 5) => signed(3, -2, 3),
        (1, 2) => signed(5, -1, 1),
        (1, 3) => signed(4, -1, 1),
        (1, 4) => signed(3, -2, 3),
        (1, 5) => signed(2, -2, 3),
        (2, 4) if corrected => signed(0, -2, 3),
        (2, 4) => signed(0, 2, 3),
        (2, 5) => signed(1, 2, 3),
        (3, 4) => signed(1, 2, 3),
        (3, 5) => signed(0, 2, 3),
        _ => unreachable!("g_upper({i},{j})"),
    }
}

fn g_lookup(i: usize, j: usize, corrected: bool) -> FrameVec {
    use std::cmp::Ordering::*;
    match i.cmp(&j) {
        Equal => zero_vec(),
        Less => g_upper(i, j, corrected),
        Greater => g_upper(j, i, corrected).map(|c| -c),
    }
}

/// `G(eᵢ, eⱼ)` in the adapted frame.
pub fn g_mult_table(i: usize, j: usize) -> FrameVec {
    g_lookup(i, j, true)
}

/// The table as commonly printed; differs from [`g_mult_table`] only in the
/// sign of `G(e₃,e₅) = ±⅔e₁`.
pub fn printed_g_table(i: usize, j: usize) -> FrameVec {
    g_lookup(i, j, false)
}

/// Bilinear extension of [`g_mult_table`].
pub fn frame_tensor_g(x: &FrameVec, y: &FrameVec) -> FrameVec {
    let mut out = zero_vec();
    for i in 0..6 {
        for j in 0..6 {
            let k = x[i] * y[j];
            if k.is_zero() {
                continue;
            }
            let g = g_mult_table(i, j);
            for m in 0..6 {
                out[m] += k * g[m];
            }
        }
    }
    out
}

/// The adapted frame at the origin of the hyperbolic example
/// `A = ½I + ε, B = ½I − ε`, where every entry lies in ℚ(√3).
pub fn exact_adapted_frame() -> [FrameCoeffs<QSqrt3>; 6] {
    type Q = QSqrt3;
    let half = Q::ratio(1, 2);
    let r3 = Q::sqrt3();
    // ε(0,0) = (0, 0, −√3/2), ε_s = (√3, 0, 0).
    let eps = TraceZero::from_array([Q::zero(), Q::zero(), -r3 * half]).to_matrix();
    let eps_s = TraceZero::from_array([r3, Q::zero(), Q::zero()]).to_matrix();
    let h = Mat2::identity().scale(half);
    let (a, b) = (h + eps, h - eps);
    let alpha = (adjugate(&a) * eps_s).trace_free_part();
    let gamma = (adjugate(&b) * -eps_s).trace_free_part();
    let fs = FrameCoeffs::from_pair(&alpha, &gamma);
    let len = nk_metric(&fs, &fs).sqrt_exact().expect("|F_s|² is a square in Q(√3)");
    let v = fs.scale(Q::one() / len);
    let jv = apply_j(&v);
    let pv = apply_p(&v);
    [v, jv, pv, apply_j(&pv), tensor_g(&v, &pv), -tensor_g(&jv, &pv)]
}

/// Coordinates of `x` in an orthogonal frame, by `g(x,eₖ)/g(eₖ,eₖ)`.
pub fn frame_coordinates<S: Scalar>(frame: &[FrameCoeffs<S>; 6], x: &FrameCoeffs<S>) -> [S; 6] {
    std::array::from_fn(|k| nk_metric(x, &frame[k]) / nk_metric(&frame[k], &frame[k]))
}

pub fn to_exact(v: &FrameVec) -> [QSqrt3; 6] {
    v.map(QSqrt3::from_rational)
}
