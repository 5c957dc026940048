//! The ambient connection along the adapted frame, parametrised by
//! `a₁, a₂, a₃, b₁`, and the equations it must satisfy.

use num_traits::Zero;

use crate::scalar::{Rational, Scalar};

use super::frame::{
    basis_vec, frame_g_metric, frame_j, frame_metric, frame_p, g_mult_table, FrameVec,
};
use super::poly::{rat, Poly, Var, NVARS};

/// A frame vector with polynomial coefficients.
pub type PVec = [Poly; 6];

/// Values of the unknown functions at a point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FrameConnection<S> {
    pub a1: S,
    pub a2: S,
    pub a3: S,
    pub b1: S,
}

/// First derivatives of the unknowns along `e₁` and `e₂`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DerivativeInputs<S> {
    pub e1_a1: S,
    pub e2_a1: S,
    pub e1_a2: S,
    pub e2_a2: S,
    pub e1_a3: S,
    pub e2_a3: S,
    pub e1_b1: S,
    pub e2_b1: S,
}

impl<S: Scalar> DerivativeInputs<S> {
    pub fn zero() -> Self {
        let z = S::zero();
        Self { e1_a1: z, e2_a1: z, e1_a2: z, e2_a2: z, e1_a3: z, e2_a3: z, e1_b1: z, e2_b1: z }
    }
}

/// The evaluation point for [`Poly::eval`], ordered as [`Var::ALL`].
pub fn assignment<S: Scalar>(c: &FrameConnection<S>, d: &DerivativeInputs<S>) -> [S; NVARS] {
    [
        c.a1, c.a2, c.a3, c.b1, d.e1_a1, d.e2_a1, d.e1_a2, d.e2_a2, d.e1_a3, d.e2_a3, d.e1_b1, d.e2_b1,
    ]
}

fn pzero() -> PVec {
    std::array::from_fn(|_| Poly::zero())
}

pub fn lift(v: &FrameVec) -> PVec {
    std::array::from_fn(|i| Poly::constant(v[i]))
}

fn add(x: &PVec, y: &PVec) -> PVec {
    std::array::from_fn(|i| x[i].clone() + y[i].clone())
}

fn sub(x: &PVec, y: &PVec) -> PVec {
    std::array::from_fn(|i| x[i].clone() - y[i].clone())
}

fn scale(x: &PVec, k: &Poly) -> PVec {
    std::array::from_fn(|i| x[i].clone() * k.clone())
}

fn pj(x: &PVec) -> PVec {
    let mut out = pzero();
    for (i, c) in x.iter().enumerate() {
        let img = frame_j(&basis_vec(i));
        for k in 0..6 {
            if !img[k].is_zero() {
                out[k] = out[k].clone() + c.scale(img[k]);
            }
        }
    }
    out
}

/// `G(x, e_j)` for a polynomial vector `x`.
fn pg_left(x: &PVec, j: usize) -> PVec {
    let mut out = pzero();
    for (m, c) in x.iter().enumerate() {
        let g = g_mult_table(m, j);
        for k in 0..6 {
            if !g[k].is_zero() {
                out[k] = out[k].clone() + c.scale(g[k]);
            }
        }
    }
    out
}

/// `∇̃_{e_a} e_j` for `a ∈ {0, 1}` (zero-based), as affine expressions.
pub fn frame_connection_table() -> [[PVec; 6]; 2] {
    let a1 = Poly::var(Var::A1);
    let a2 = Poly::var(Var::A2);
    let a3 = Poly::var(Var::A3);
    let b1 = Poly::var(Var::B1);
    let z = Poly::zero;
    let half = || Poly::ratio(1, 2);
    let t = |p: Poly| p.scale(rat(2, 3));
    [
        [
            [z(), a1.clone(), z(), z(), a2.clone(), a3.clone()],
            [-a1.clone(), z(), z(), z(), -a3.clone(), a2.clone()],
            [z(), z(), z(), -a1.clone(), a2.clone(), half() - a3.clone()],
            [z(), z(), a1.clone(), z(), half() + a3.clone(), a2.clone()],
            [t(a2.clone()), t(-a3.clone()), t(a2.clone()), t(half() + a3.clone()), z(), z()],
            [t(a3.clone()), t(a2.clone()), t(half() - a3.clone()), t(a2.clone()), z(), z()],
        ],
        [
            [z(), b1.clone(), z(), z(), -a3.clone(), a2.clone()],
            [-b1.clone(), z(), z(), z(), -a2.clone(), -a3.clone()],
            [z(), z(), z(), -b1.clone(), half() - a3.clone(), -a2.clone()],
            [z(), z(), b1.clone(), z(), a2.clone(), -(half() + a3.clone())],
            [t(-a3.clone()), t(-a2.clone()), t(half() - a3.clone()), t(a2.clone()), z(), z()],
            [t(a2.clone()), t(-a3.clone()), t(-a2.clone()), t(-(half() + a3.clone())), z(), z()],
        ],
    ]
}

/// Evaluates the table at a point.
pub fn eval_connection_table<S: Scalar>(c: &FrameConnection<S>) -> [[[S; 6]; 6]; 2] {
    let vals = assignment(c, &DerivativeInputs::zero());
    let t = frame_connection_table();
    std::array::from_fn(|a| std::array::from_fn(|j| std::array::from_fn(|k| t[a][j][k].eval(&vals))))
}

/// `∇̃_{e_a} x` for `x = Σ cₘ eₘ` with polynomial coefficients. With
/// `tangential`, only the `e₁, e₂` part of the table is used (the induced
/// connection).
fn covariant(table: &[[PVec; 6]; 2], a: usize, x: &PVec, tangential: bool) -> PVec {
    let mut out: PVec = std::array::from_fn(|m| {
        x[m].frame_derivative(a + 1).expect("connection coefficients are affine in the unknowns")
    });
    let range = if tangential { 0..2 } else { 0..6 };
    for m in range.clone() {
        if x[m].is_zero() {
            continue;
        }
        for k in range.clone() {
            out[k] = out[k].clone() + x[m].clone() * table[a][m][k].clone();
        }
    }
    out
}

/// `[e₁, e₂] = −a₁e₁ − b₁e₂`.
pub fn frame_bracket() -> PVec {
    let mut v = pzero();
    v[0] = -Poly::var(Var::A1);
    v[1] = -Poly::var(Var::B1);
    v
}

fn curvature_from_table(k: usize, tangential: bool) -> PVec {
    let t = frame_connection_table();
    let ek = lift(&basis_vec(k));
    let d2 = covariant(&t, 1, &ek, tangential);
    let d1 = covariant(&t, 0, &ek, tangential);
    let br = frame_bracket();
    let along_bracket = add(&scale(&t[0][k], &br[0]), &scale(&t[1][k], &br[1]));
    sub(&sub(&covariant(&t, 0, &d2, tangential), &covariant(&t, 1, &d1, tangential)), &along_bracket)
}

/// `R̃(e₁,e₂)e_k` computed from the connection table.
pub fn table_curvature(k: usize) -> PVec {
    curvature_from_table(k, false)
}

/// The closed-form ambient curvature `R̃(u,v)w` in frame coordinates.
pub fn frame_curvature_closed(u: &FrameVec, v: &FrameVec, w: &FrameVec) -> FrameVec {
    let g = frame_g_metric;
    let (ju, jv, jw) = (frame_j(u), frame_j(v), frame_j(w));
    let (pu, pv) = (frame_p(u), frame_p(v));
    let (jpu, jpv) = (frame_j(&pu), frame_j(&pv));
    let two = rat(2, 1);
    let terms: [(Rational, &FrameVec); 9] = [
        (rat(-5, 6) * g(v, w), u),
        (rat(5, 6) * g(u, w), v),
        (rat(-1, 6) * g(&jv, w), &ju),
        (rat(1, 6) * g(&ju, w), &jv),
        (rat(1, 6) * two * g(&ju, v), &jw),
        (rat(-2, 3) * g(&pv, w), &pu),
        (rat(2, 3) * g(&pu, w), &pv),
        (rat(-2, 3) * g(&jpv, w), &jpu),
        (rat(2, 3) * g(&jpu, w), &jpv),
    ];
    let mut out = [Rational::zero(); 6];
    for (c, x) in terms {
        for i in 0..6 {
            out[i] += c * x[i];
        }
    }
    out
}

/// `(∇̃_X G)(Y,Z) = −⅔(g(X,Z)JY − g(X,Y)JZ − g(JY,Z)X)` in frame coordinates.
pub fn frame_nabla_g_closed(x: &FrameVec, y: &FrameVec, z: &FrameVec) -> FrameVec {
    let g = frame_g_metric;
    let (jy, jz) = (frame_j(y), frame_j(z));
    let (c1, c2, c3) = (g(x, z), -g(x, y), -g(&jy, z));
    std::array::from_fn(|i| rat(-2, 3) * (c1 * jy[i] + c2 * jz[i] + c3 * x[i]))
}

/// A named polynomial that must vanish identically.
#[derive(Clone, Debug, PartialEq)]
pub struct Identity {
    pub label: String,
    pub residual: Poly,
}

fn collect(out: &mut Vec<Identity>, label: impl Fn(usize) -> String, v: &PVec) {
    for (m, p) in v.iter().enumerate() {
        out.push(Identity { label: label(m), residual: p.clone() });
    }
}

/// `g(∇̃_{e_a}e_j, e_k) + g(e_j, ∇̃_{e_a}e_k)`.
pub fn metric_compatibility() -> Vec<Identity> {
    let t = frame_connection_table();
    let mut out = Vec::new();
    for a in 0..2 {
        for j in 0..6 {
            for k in j..6 {
                let r = t[a][j][k].scale(frame_metric(k)) + t[a][k][j].scale(frame_metric(j));
                out.push(Identity { label: format!("g-skew e{} (e{},e{})", a + 1, j + 1, k + 1), residual: r });
            }
        }
    }
    out
}

/// `∇̃_{e_a}(Je_j) − G(e_a,e_j) − J∇̃_{e_a}e_j`.
pub fn j_compatibility() -> Vec<Identity> {
    let t = frame_connection_table();
    let mut out = Vec::new();
    for a in 0..2 {
        for j in 0..6 {
            let je = lift(&frame_j(&basis_vec(j)));
            let lhs = covariant(&t, a, &je, false);
            let rhs = add(&lift(&g_mult_table(a, j)), &pj(&t[a][j]));
            collect(&mut out, |m| format!("J e{} e{} [e{}]", a + 1, j + 1, m + 1), &sub(&lhs, &rhs));
        }
    }
    out
}

/// `∇̃_{e_a}(G(e_i,e_j)) − G(∇̃_{e_a}e_i, e_j) − G(e_i, ∇̃_{e_a}e_j) − (∇̃_{e_a}G)(e_i,e_j)`.
pub fn g_compatibility() -> Vec<Identity> {
    let t = frame_connection_table();
    let mut out = Vec::new();
    for a in 0..2 {
        for i in 0..6 {
            for j in 0..6 {
                let gij = lift(&g_mult_table(i, j));
                let lhs = covariant(&t, a, &gij, false);
                let left = pg_left(&t[a][i], j);
                let right: PVec = pg_left(&t[a][j], i).map(|p| -p);
                let closed = lift(&frame_nabla_g_closed(&basis_vec(a), &basis_vec(i), &basis_vec(j)));
                let r = sub(&sub(&sub(&lhs, &left), &right), &closed);
                collect(&mut out, |m| format!("G e{} (e{},e{}) [e{}]", a + 1, i + 1, j + 1, m + 1), &r);
            }
        }
    }
    out
}

/// Identities that fail, i.e. have a non-zero residual.
pub fn failures(ids: &[Identity]) -> Vec<&Identity> {
    ids.iter().filter(|i| !i.residual.is_zero()).collect()
}

/// Scales `p` so that its largest monomial (in display order) has
/// coefficient ±3 or 1, giving a canonical representative up to sign.
fn normalise(p: &Poly) -> Poly {
    let (_, lead) = p
        .terms()
        .max_by_key(|(e, _)| (e.iter().map(|&k| k as u32).sum::<u32>(), **e))
        .expect("non-zero");
    p.scale(rat(3, 1) / *lead)
}

/// The distinct (up to scale) non-zero components of
/// `R̃(e₁,e₂)e_k` from the table minus the closed form, over all `k`.
pub fn curvature_equations() -> Vec<Poly> {
    let (e1, e2) = (basis_vec(0), basis_vec(1));
    let mut eqs: Vec<Poly> = Vec::new();
    for k in 0..6 {
        let closed = lift(&frame_curvature_closed(&e1, &e2, &basis_vec(k)));
        for p in sub(&table_curvature(k), &closed) {
            if p.is_zero() || eqs.iter().any(|q| p.constant_ratio(q).is_some()) {
                continue;
            }
            eqs.push(normalise(&p));
        }
    }
    eqs
}

/// The three curvature equations in their usual printed form, specialised
/// to `a₂² + a₃² = 7/12`.
pub fn printed_curvature_equations() -> [Poly; 3] {
    let v = |x| Poly::var(x);
    let (a1, a2, a3, b1) = (v(Var::A1), v(Var::A2), v(Var::A3), v(Var::B1));
    [
        (a1.clone() * a1.clone() + b1.clone() * b1.clone() - v(Var::E2A1) + v(Var::E1B1)).scale(rat(-3, 1))
            + Poly::ratio(5, 3),
        (a1.clone() * a3.clone() + a2.clone() * b1.clone()).scale(rat(2, 1)) + v(Var::E1A2) - v(Var::E2A3),
        (a1 * a2 - a3 * b1).scale(rat(2, 1)) - v(Var::E2A2) - v(Var::E1A3),
    ]
}

/// Residuals of the printed equations at a point.
pub fn curvature_consistency<S: Scalar>(c: &FrameConnection<S>, d: &DerivativeInputs<S>) -> [S; 3] {
    let vals = assignment(c, d);
    printed_curvature_equations().map(|p| p.eval(&vals))
}

/// Residuals of the equations derived from the table, without any
/// assumption on `a₂² + a₃²`.
pub fn curvature_consistency_general<S: Scalar>(c: &FrameConnection<S>, d: &DerivativeInputs<S>) -> Vec<S> {
    let vals = assignment(c, d);
    curvature_equations().iter().map(|p| p.eval(&vals)).collect()
}

/// Gaussian curvature of the induced metric, `g(R(e₁,e₂)e₂, e₁)` for the
/// induced connection.
pub fn intrinsic_gauss_curvature() -> Poly {
    curvature_from_table(1, true)[0].clone()
}

/// `a₂² + a₃²` forced by a Gaussian curvature `K`: `K = −4/3 + (4/3)(a₂² + a₃²)`.
pub fn gauss_constraint(k: Rational) -> Rational {
    (k + rat(4, 3)) * rat(3, 4)
}

#[cfg(test)]
mod tests {
    use super::super::frame::{exact_adapted_frame, frame_coordinates, to_exact};
    use super::*;
    use crate::nk::algebra::{curvature, nabla_g};
    use crate::scalar::QSqrt3;

    fn v(x: Var) -> Poly {
        Poly::var(x)
    }

    #[test]
    fn metric_compatibility_holds() {
        assert!(failures(&metric_compatibility()).is_empty());
    }

    #[test]
    fn j_compatibility_holds() {
        let ids = j_compatibility();
        let bad = failures(&ids);
        assert!(bad.is_empty(), "{:?}", bad.iter().take(4).collect::<Vec<_>>());
    }

    #[test]
    fn g_compatibility_holds() {
        let ids = g_compatibility();
        let bad = failures(&ids);
        assert!(bad.is_empty(), "{} failures, first {:?}", bad.len(), bad.iter().take(4).collect::<Vec<_>>());
    }

    #[test]
    fn closed_forms_match_exact_frame() {
        let f = exact_adapted_frame();
        for u in 0..6 {
            for w in 0..6 {
                for x in 0..6 {
                    let r = frame_coordinates(&f, &curvature(&f[u], &f[w], &f[x]));
                    let e = (basis_vec(u), basis_vec(w), basis_vec(x));
                    assert_eq!(r, to_exact(&frame_curvature_closed(&e.0, &e.1, &e.2)));
                    let n = frame_coordinates(&f, &nabla_g(&f[u], &f[w], &f[x]));
                    assert_eq!(n, to_exact(&frame_nabla_g_closed(&e.0, &e.1, &e.2)));
                }
            }
        }
    }

    #[test]
    fn table_at_zero() {
        let t = eval_connection_table(&FrameConnection { a1: 0.0, a2: 0.0, a3: 0.0, b1: 0.0 });
        assert_eq!(t[0][2], [0.0, 0.0, 0.0, 0.0, 0.0, 0.5]);
        assert_eq!(t[1][3], [0.0, 0.0, 0.0, 0.0, 0.0, -0.5]);
    }

    #[test]
    fn derived_curvature_system() {
        let (a1, a2, a3, b1) = (v(Var::A1), v(Var::A2), v(Var::A3), v(Var::B1));
        let r = a2.clone() * a2.clone() + a3.clone() * a3.clone();
        let gauss = (a1.clone() * a1.clone() + b1.clone() * b1.clone() + v(Var::E1B1) - v(Var::E2A1))
            .scale(rat(3, 1))
            + r.scale(rat(4, 1))
            - Poly::int(4);
        let codazzi1 = (a1.clone() * a3.clone() + a2.clone() * b1.clone()).scale(rat(2, 1)) + v(Var::E1A2)
            - v(Var::E2A3);
        let codazzi2 = (a1 * a2 - a3 * b1).scale(rat(2, 1)) - v(Var::E2A2) - v(Var::E1A3);
        let eqs = curvature_equations();
        assert_eq!(eqs.len(), 3, "{}", eqs.iter().map(|e| e.to_string()).collect::<Vec<_>>().join("; "));
        for expected in [&gauss, &codazzi1, &codazzi2] {
            assert!(eqs.iter().any(|e| e.constant_ratio(expected).is_some()), "missing {expected}");
        }
        // The printed first equation is the derived one at a₂² + a₃² = 7/12.
        let printed = printed_curvature_equations();
        assert_eq!(gauss.clone() + printed[0].clone(), (r - Poly::ratio(7, 12)).scale(rat(4, 1)));
        assert_eq!(printed[1], codazzi1);
        assert_eq!(printed[2], codazzi2);
    }

    #[test]
    fn gauss_curvature_routes_agree() {
        let k = intrinsic_gauss_curvature();
        let (a2, a3) = (v(Var::A2), v(Var::A3));
        let r = a2.clone() * a2 + a3.clone() * a3;
        // The derived Gauss equation reads −3K + 4r − 4 = 0.
        let gauss = curvature_equations()
            .into_iter()
            .find(|e| !e.partial(Var::E1B1).is_zero())
            .unwrap();
        let rewritten = k.scale(rat(-3, 1)) + r.scale(rat(4, 1)) - Poly::int(4);
        assert!(gauss.constant_ratio(&rewritten).is_some(), "{gauss} vs {rewritten}");
        assert_eq!(gauss_constraint(rat(-4, 3)), rat(0, 1));
        assert_eq!(gauss_constraint(rat(-5, 9)), rat(7, 12));
    }

    #[test]
    fn exact_and_float_evaluation_agree() {
        let c = FrameConnection {
            a1: QSqrt3::ratio(1, 3),
            a2: QSqrt3::sqrt3_times(1, 4),
            a3: QSqrt3::ratio(-1, 4),
            b1: QSqrt3::ratio(2, 5),
        };
        let mut d = DerivativeInputs::zero();
        d.e1_b1 = QSqrt3::ratio(1, 7);
        d.e2_a3 = QSqrt3::ratio(-3, 2);
        let exact = curvature_consistency(&c, &d);
        let cf = FrameConnection { a1: 1.0 / 3.0, a2: 3f64.sqrt() / 4.0, a3: -0.25, b1: 0.4 };
        let mut df = DerivativeInputs::<f64>::zero();
        df.e1_b1 = 1.0 / 7.0;
        df.e2_a3 = -1.5;
        let float = curvature_consistency(&cf, &df);
        for i in 0..3 {
            assert!((exact[i].to_f64() - float[i]).abs() < 1e-14);
        }
    }
}
