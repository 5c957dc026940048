//! Frame-level derivations: brackets from matrix commutators, the Koszul
//! connection of the left-invariant metric, and everything built on a
//! connection table (∇J, curvature, ∇G). These are deliberately independent
//! of the closed forms in [`super::algebra`].

use crate::error::Result;
use crate::linalg;
use crate::scalar::Scalar;
use crate::sl2::{sl2_exp, Mat2, TraceZero};

use super::algebra::{apply_j, nk_metric, tensor_g};
use super::point::{FrameCoeffs, FrameIndex, NKPoint, Tangent};
use super::printed;
use super::structure::ambient_to_nk;

type V<S> = FrameCoeffs<S>;

/// A connection on left-invariant fields: `table[i][j] = ∇_{X_i} X_j`.
pub type FrameTable<S> = [[FrameCoeffs<S>; 6]; 6];

fn unit<S: Scalar>(i: usize) -> V<S> {
    V::unit(FrameIndex::from_index(i))
}

fn block_matrix<S: Scalar>(i: FrameIndex) -> (usize, Mat2<S>) {
    let n = i.index();
    (n / 3, TraceZero::<S>::basis(n % 3).to_matrix())
}

/// `[X_i, X_j]` from the matrix commutator of the underlying basis elements.
pub fn lie_bracket<S: Scalar>(i: FrameIndex, j: FrameIndex) -> FrameCoeffs<S> {
    let (bi, mi) = block_matrix::<S>(i);
    let (bj, mj) = block_matrix::<S>(j);
    if bi != bj {
        return V::zero();
    }
    let c = (mi * mj - mj * mi).trace_free_part();
    if bi == 0 {
        V::from_pair(&c, &TraceZero::zero())
    } else {
        V::from_pair(&TraceZero::zero(), &c)
    }
}

/// The Levi-Civita table `∇̃_{X_i} X_j` as tabulated.
pub fn levi_civita_frame<S: Scalar>(i: FrameIndex, j: FrameIndex) -> FrameCoeffs<S> {
    printed::printed_levi_civita(i, j)
}

pub fn tabulated_connection<S: Scalar>() -> FrameTable<S> {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| levi_civita_frame(FrameIndex::from_index(i), FrameIndex::from_index(j)))
    })
}

/// Koszul formula on left-invariant fields (all `g(X_i,X_j)` constant):
/// `2g(∇_XY,Z) = g([X,Y],Z) − g([Y,Z],X) + g([Z,X],Y)`, solved against the
/// Gram matrix.
pub fn koszul_connection<S: Scalar>() -> FrameTable<S> {
    let g = |a: &V<S>, b: &V<S>| nk_metric(a, b);
    let gram: Vec<Vec<S>> = (0..6)
        .map(|k| (0..6).map(|m| g(&unit(m), &unit(k))).collect())
        .collect();
    let half = S::from_ratio(1, 2);
    let br = |a: usize, b: usize| lie_bracket::<S>(FrameIndex::from_index(a), FrameIndex::from_index(b));
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let rhs: Vec<S> = (0..6)
                .map(|k| {
                    half * (g(&br(i, j), &unit(k)) - g(&br(j, k), &unit(i))
                        + g(&br(k, i), &unit(j)))
                })
                .collect();
            let sol = linalg::solve(gram.clone(), rhs).expect("frame Gram matrix is invertible");
            FrameCoeffs(std::array::from_fn(|m| sol[m]))
        })
    })
}

/// `∇_X Y` for constant-coefficient fields `X`, `Y`.
pub fn covariant<S: Scalar>(table: &FrameTable<S>, x: &V<S>, y: &V<S>) -> V<S> {
    let mut out = V::zero();
    for i in 0..6 {
        if x.0[i].is_zero() {
            continue;
        }
        for j in 0..6 {
            if y.0[j].is_zero() {
                continue;
            }
            out = out + table[i][j].scale(x.0[i] * y.0[j]);
        }
    }
    out
}

/// `(∇_{X_i}J)X_j = ∇_{X_i}(JX_j) − J∇_{X_i}X_j` (Leibniz rule; `J` has
/// constant coefficients on the frame).
pub fn nabla_j_from<S: Scalar>(table: &FrameTable<S>, i: FrameIndex, j: FrameIndex) -> V<S> {
    let xi = V::unit(i);
    let xj = V::unit(j);
    covariant(table, &xi, &apply_j(&xj)) - apply_j(&table[i.index()][j.index()])
}

/// `(∇̃_{X_i}J)X_j` from the tabulated connection.
pub fn nabla_j_frame<S: Scalar>(i: FrameIndex, j: FrameIndex) -> FrameCoeffs<S> {
    nabla_j_from(&tabulated_connection(), i, j)
}

/// `R(X_i,X_j)X_k = ∇_i∇_jX_k − ∇_j∇_iX_k − ∇_{[X_i,X_j]}X_k`.
pub fn frame_curvature<S: Scalar>(
    table: &FrameTable<S>,
    i: FrameIndex,
    j: FrameIndex,
    k: FrameIndex,
) -> V<S> {
    let (xi, xj, xk) = (V::unit(i), V::unit(j), V::unit(k));
    let jk = table[j.index()][k.index()];
    let ik = table[i.index()][k.index()];
    covariant(table, &xi, &jk) - covariant(table, &xj, &ik)
        - covariant(table, &lie_bracket(i, j), &xk)
}

/// `(∇_{X_i}G)(X_j,X_k) = ∇_i(G(X_j,X_k)) − G(∇_iX_j, X_k) − G(X_j, ∇_iX_k)`.
pub fn frame_nabla_g<S: Scalar>(
    table: &FrameTable<S>,
    i: FrameIndex,
    j: FrameIndex,
    k: FrameIndex,
) -> V<S> {
    let (xi, xj, xk) = (V::unit(i), V::unit(j), V::unit(k));
    covariant(table, &xi, &tensor_g(&xj, &xk))
        - tensor_g(&table[i.index()][j.index()], &xk)
        - tensor_g(&xj, &table[i.index()][k.index()])
}

/// Numerical `∇̃_{X_i}X_j` at `p`: differentiate the raw field `X_j` along
/// the flow `τ ↦ (A·exp(τα_i), B·exp(τβ_i))` by central differences, then
/// convert the flat ambient derivative with [`ambient_to_nk`].
pub fn flow_connection(
    i: FrameIndex,
    j: FrameIndex,
    p: &NKPoint<f64>,
    step: f64,
) -> Result<FrameCoeffs<f64>> {
    let xi = V::<f64>::unit(i);
    let xj = V::<f64>::unit(j);
    let field_at = |tau: f64| {
        let ea = sl2_exp(&xi.alpha().scale(tau));
        let eb = sl2_exp(&xi.beta().scale(tau));
        let a = *p.a.matrix() * *ea.matrix();
        let b = *p.b.matrix() * *eb.matrix();
        (a * xj.alpha().to_matrix(), b * xj.beta().to_matrix())
    };
    let stencil = |h: f64| {
        let (p1a, p1b) = field_at(h);
        let (m1a, m1b) = field_at(-h);
        let (p2a, p2b) = field_at(2.0 * h);
        let (m2a, m2b) = field_at(-2.0 * h);
        let d = |p1: Mat2<f64>, m1: Mat2<f64>, p2: Mat2<f64>, m2: Mat2<f64>| {
            ((p1 - m1).scale(8.0) - (p2 - m2)).scale(1.0 / (12.0 * h))
        };
        (d(p1a, m1a, p2a, m2a), d(p1b, m1b, p2b, m2b))
    };
    let (da, db) = stencil(step);
    let x = Tangent::from_coeffs(*p, &xi);
    let y = Tangent::from_coeffs(*p, &xj);
    Ok(ambient_to_nk(&(da, db), &x, &y, p)?.coeffs())
}
