use nksl2::diff;
use nksl2::moving_frame::poly::rat;
use nksl2::moving_frame::{
    curvature_consistency, eval_connection_table, g_mult_table, gauss_constraint, metric_compatibility,
    printed_g_table, DerivativeInputs, FrameConnection,
};
use nksl2::scalar::{QSqrt3, Scalar};

fn e(i: usize, c: (i128, i128)) -> [nksl2::scalar::Rational; 6] {
    let mut v = [rat(0, 1); 6];
    v[i] = rat(c.0, c.1);
    v
}

#[test]
fn g_table_entries() {
    assert_eq!(g_mult_table(0, 0), [rat(0, 1); 6]);
    assert_eq!(g_mult_table(0, 2), e(4, (1, 1)));
    assert_eq!(g_mult_table(1, 3), e(4, (-1, 1)));
    // Printed as 2/3 e1; the exact frame gives the opposite sign.
    assert_eq!(printed_g_table(2, 4), e(0, (2, 3)));
    assert_eq!(g_mult_table(2, 4), e(0, (-2, 3)));
}

#[test]
fn connection_rows_along_e1_and_e2() {
    let c = FrameConnection { a1: 0.3, a2: -0.7, a3: 1.1, b1: 0.25 };
    let t = eval_connection_table(&c);
    assert_eq!(t[0][0], [0.0, c.a1, 0.0, 0.0, c.a2, c.a3]);
    assert_eq!(t[1][1], [-c.b1, 0.0, 0.0, 0.0, -c.a2, -c.a3]);
}

#[test]
fn table_is_metric_compatible_at_zero() {
    let metric = [1.0, 1.0, 1.0, 1.0, -2.0 / 3.0, -2.0 / 3.0];
    let t = eval_connection_table(&FrameConnection { a1: 0.0, a2: 0.0, a3: 0.0, b1: 0.0 });
    for row in &t {
        for i in 0..6 {
            for j in 0..6 {
                let s = row[i][j] * metric[j] + row[j][i] * metric[i];
                assert_eq!(s, 0.0, "i={i} j={j}");
            }
        }
    }
    assert!(metric_compatibility().iter().all(|id| id.residual.is_zero()));
}

#[test]
fn gauss_constraint_values() {
    assert_eq!(gauss_constraint(rat(-5, 9)), rat(7, 12));
    assert_eq!(gauss_constraint(rat(-4, 3)), rat(0, 1));
    assert_eq!(gauss_constraint(rat(0, 1)), rat(1, 1));
}

#[test]
fn constant_frame_is_inconsistent() {
    let z = QSqrt3::zero();
    let r = curvature_consistency(&FrameConnection { a1: z, a2: z, a3: z, b1: z }, &DerivativeInputs::zero());
    assert_eq!(r, [QSqrt3::ratio(5, 3), z, z]);
}

#[test]
fn balanced_inputs_give_zero_residuals() {
    let z = QSqrt3::zero();
    let c = FrameConnection { a1: QSqrt3::ratio(1, 3), a2: z, a3: z, b1: z };
    let mut d = DerivativeInputs::zero();
    // 3(1/9 + e1(b1)) = 5/3.
    d.e1_b1 = QSqrt3::ratio(4, 9);
    assert_eq!(curvature_consistency(&c, &d), [z, z, z]);
}

// A synthetic field on a coordinate patch where e1 = ∂x and e2 = ∂y.
fn field(x: f64, y: f64) -> [f64; 4] {
    [
        (x + 2.0 * y).sin(),
        0.3 * x * y + 0.1,
        (0.5 * x - y).cos(),
        x * x - 0.4 * y,
    ]
}

fn hand_expansion(f: [f64; 4], dx: [f64; 4], dy: [f64; 4]) -> [f64; 3] {
    let [a1, a2, a3, b1] = f;
    [
        -3.0 * (a1 * a1 + b1 * b1 - dy[0] + dx[3]) + 5.0 / 3.0,
        2.0 * (a1 * a3 + a2 * b1) + dx[1] - dy[2],
        2.0 * (a1 * a2 - a3 * b1) - dy[1] - dx[2],
    ]
}

#[test]
fn finite_difference_inputs_match_expansion() {
    for &(x, y) in &[(0.1, -0.2), (0.7, 0.4), (-1.3, 0.9)] {
        let dx = diff::first(|s| Ok(field(s, y)), x, 1e-3).unwrap().value;
        let dy = diff::first(|t| Ok(field(x, t)), y, 1e-3).unwrap().value;
        let f = field(x, y);
        let c = FrameConnection { a1: f[0], a2: f[1], a3: f[2], b1: f[3] };
        let d = DerivativeInputs {
            e1_a1: dx[0],
            e2_a1: dy[0],
            e1_a2: dx[1],
            e2_a2: dy[1],
            e1_a3: dx[2],
            e2_a3: dy[2],
            e1_b1: dx[3],
            e2_b1: dy[3],
        };
        let got = curvature_consistency(&c, &d);
        // Analytic derivatives of the synthetic field.
        let ax = [(x + 2.0 * y).cos(), 0.3 * y, -0.5 * (0.5 * x - y).sin(), 2.0 * x];
        let ay = [2.0 * (x + 2.0 * y).cos(), 0.3 * x, (0.5 * x - y).sin(), -0.4];
        let want = hand_expansion(f, ax, ay);
        for k in 0..3 {
            assert!((got[k] - want[k]).abs() < 1e-8, "k={k}: {} vs {}", got[k], want[k]);
        }
    }
}
