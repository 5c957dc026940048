use nksl2::moving_frame::poly::{rat, Poly, Var};
use nksl2::nk::algebra::{
    apply_j, apply_p, apply_q, g_gg, g_of_g, nk_metric, product_metric, tensor_g,
};
use nksl2::nk::FrameCoeffs;
use nksl2::scalar::{QSqrt3, Scalar};
use nksl2::sl2::{cross, minkowski_inner, sl2_exp, Mat2, TraceZero};
use nksl2::surface::{example_hyperbolic, example_hyperbolic_quadric, lookup};
use nksl2::verify::{cmd_structure, SuiteConfig};
use proptest::prelude::*;

type V = FrameCoeffs<f64>;

fn coeffs() -> impl Strategy<Value = V> {
    prop::array::uniform6(-1.0..1.0f64).prop_map(FrameCoeffs)
}

fn mat() -> impl Strategy<Value = Mat2<f64>> {
    prop::array::uniform4(-2.0..2.0f64).prop_map(|[a, b, c, d]| Mat2::new(a, b, c, d))
}

fn qmat() -> impl Strategy<Value = Mat2<QSqrt3>> {
    prop::array::uniform4((-20i128..20, 1i128..9)).prop_map(|e| {
        let q = |(n, d): (i128, i128)| QSqrt3::ratio(n, d);
        Mat2::new(q(e[0]), q(e[1]), q(e[2]), q(e[3]))
    })
}

fn trace_zero(r: f64) -> impl Strategy<Value = TraceZero<f64>> {
    prop::array::uniform3(-r..r).prop_map(TraceZero::from_array)
}

/// A point of the disk `s² + t² < 0.8²`.
fn disk_point() -> impl Strategy<Value = (f64, f64)> {
    (0.0..0.8f64, 0.0..std::f64::consts::TAU).prop_map(|(r, a)| (r * a.cos(), r * a.sin()))
}

fn gap(a: &V, b: &V) -> f64 {
    (*a - *b).max_abs()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn minkowski_inner_is_symmetric_bilinear(a in mat(), b in mat(), c in mat(), k in -3.0..3.0f64) {
        prop_assert!((minkowski_inner(&a, &b) - minkowski_inner(&b, &a)).abs() <= 1e-12);
        let lhs = minkowski_inner(&(a.scale(k) + b), &c);
        let rhs = k * minkowski_inner(&a, &c) + minkowski_inner(&b, &c);
        prop_assert!((lhs - rhs).abs() <= 1e-12 * (1.0 + lhs.abs()));
    }

    #[test]
    fn minkowski_inner_exact(a in qmat(), b in qmat(), c in qmat(), k in (-9i128..9, 1i128..5)) {
        let k = QSqrt3::ratio(k.0, k.1);
        prop_assert_eq!(minkowski_inner(&a, &b), minkowski_inner(&b, &a));
        prop_assert_eq!(
            minkowski_inner(&(a.scale(k) + b), &c),
            k * minkowski_inner(&a, &c) + minkowski_inner(&b, &c)
        );
    }

    #[test]
    fn exponential_lands_on_the_group(x in trace_zero(2.0)) {
        let det = sl2_exp(&x).matrix().det();
        prop_assert!((det - 1.0).abs() <= 1e-10, "det {}", det);
    }

    #[test]
    fn cross_product_is_a_lie_bracket(x in trace_zero(1.0), y in trace_zero(1.0), z in trace_zero(1.0)) {
        prop_assert!((cross(&x, &y) + cross(&y, &x)).max_abs() <= 1e-14);
        let jacobi = cross(&x, &cross(&y, &z)) + cross(&y, &cross(&z, &x)) + cross(&z, &cross(&x, &y));
        prop_assert!(jacobi.max_abs() <= 1e-13);
    }

    #[test]
    fn tensor_g_skew_identities(x in coeffs(), y in coeffs(), z in coeffs()) {
        let gxy = tensor_g(&x, &y);
        prop_assert!(tensor_g(&x, &x).max_abs() <= 1e-12);
        prop_assert!((gxy + tensor_g(&y, &x)).max_abs() <= 1e-12);
        prop_assert!((tensor_g(&x, &apply_j(&y)) + apply_j(&gxy)).max_abs() <= 1e-12);
        prop_assert!((nk_metric(&gxy, &z) + nk_metric(&tensor_g(&x, &z), &y)).abs() <= 1e-12);
    }

    #[test]
    fn almost_product_structure(x in coeffs(), y in coeffs()) {
        prop_assert!((apply_p(&apply_j(&x)) + apply_j(&apply_p(&x))).max_abs() <= 1e-12);
        prop_assert!(gap(&apply_p(&apply_p(&x)), &x) <= 1e-12);
        prop_assert!(gap(&apply_q(&apply_q(&x)), &x) <= 1e-12);
        prop_assert!(gap(&apply_j(&apply_j(&x)), &x.scale(-1.0)) <= 1e-12);
        let k = -1.0 / 3f64.sqrt();
        let q = (apply_p(&apply_j(&x)).scale(2.0) - apply_j(&x)).scale(k);
        prop_assert!(gap(&apply_q(&x), &q) <= 1e-12);
        prop_assert!((nk_metric(&apply_j(&x), &apply_j(&y)) - nk_metric(&x, &y)).abs() <= 1e-12);
        prop_assert!((nk_metric(&apply_p(&x), &apply_p(&y)) - nk_metric(&x, &y)).abs() <= 1e-12);
    }

    #[test]
    fn metric_conversions(x in coeffs(), y in coeffs()) {
        let pm = product_metric(&x, &y);
        let g = nk_metric(&x, &y);
        prop_assert!((pm - 2.0 * g - nk_metric(&x, &apply_p(&y))).abs() <= 1e-12);
        prop_assert!((g - 0.25 * (pm + product_metric(&apply_j(&x), &apply_j(&y)))).abs() <= 1e-12);
    }

    #[test]
    fn g_closed_forms(x in coeffs(), y in coeffs(), z in coeffs(), w in coeffs()) {
        let gg = nk_metric(&tensor_g(&x, &y), &tensor_g(&z, &w));
        prop_assert!((g_gg(&x, &y, &z, &w) - gg).abs() <= 1e-12);
        prop_assert!(gap(&g_of_g(&x, &z, &w), &tensor_g(&x, &tensor_g(&z, &w))) <= 1e-12);
    }

    #[test]
    fn hyperbolic_surface_pointwise((s, t) in disk_point()) {
        let f = example_hyperbolic();
        prop_assert!(f.point(s, t).unwrap().membership_residual() <= 1e-10);
        let d = f.analytic(s, t).unwrap();
        prop_assert!((d.ft() - apply_j(&d.fs())).coeff_norm() <= 1e-12);
        let fs = d.fs();
        let (a, b) = (fs.alpha(), fs.beta());
        let ambient = a.inner(&a) + b.inner(&b);
        prop_assert!((ambient - 2.0 * nk_metric(&fs, &fs) - nk_metric(&fs, &apply_p(&fs))).abs() <= 1e-10 * (1.0 + ambient.abs()));
    }

    #[test]
    fn charts_describe_the_same_surface((s, t) in disk_point()) {
        let p = example_hyperbolic().point(s, t).unwrap();
        let q = example_hyperbolic_quadric().point(s, t).unwrap();
        prop_assert!((*p.a.matrix() - *q.a.matrix()).max_abs() <= 1e-10);
        prop_assert!((*p.b.matrix() - *q.b.matrix()).max_abs() <= 1e-10);
    }

    #[test]
    fn flat_surfaces_stay_on_the_group(s in -1.0..1.0f64, t in -1.0..1.0f64) {
        for name in ["flat-positive", "flat-negative"] {
            let f = lookup(name).unwrap();
            prop_assert!(f.point(s, t).unwrap().membership_residual() <= 1e-10);
        }
    }

    #[test]
    fn qsqrt3_field_operations(a in (-50i128..50, 1i128..20), b in (-50i128..50, 1i128..20), c in (1i128..30, 1i128..30)) {
        let x = QSqrt3::ratio(a.0, a.1) + QSqrt3::sqrt3_times(b.0, b.1);
        let y = QSqrt3::ratio(c.0, c.1) + QSqrt3::sqrt3_times(1, 2);
        prop_assert_eq!(x.checked_div(&y).unwrap() * y, x);
        prop_assert_eq!((x * x).sqrt_exact().map(|r| r * r), Some(x * x));
        prop_assert!(((x * y).to_f64() - x.to_f64() * y.to_f64()).abs() <= 1e-9 * (1.0 + (x * y).to_f64().abs()));
    }

    #[test]
    fn poly_evaluation_is_a_ring_map(
        c in prop::collection::vec((-5i128..5, 0usize..3, 0usize..3), 1..5),
        d in prop::collection::vec((-5i128..5, 0usize..3, 0usize..3), 1..5),
        at in prop::array::uniform12(-4i128..4),
    ) {
        let build = |terms: &[(i128, usize, usize)]| {
            terms.iter().fold(Poly::zero(), |acc, &(k, i, j)| {
                let mut m = Poly::constant(rat(k, 1));
                for _ in 0..i { m = m * Poly::var(Var::A2); }
                for _ in 0..j { m = m * Poly::var(Var::A3); }
                acc + m
            })
        };
        let (p, q) = (build(&c), build(&d));
        let vals = at.map(|v| QSqrt3::ratio(v, 3));
        prop_assert_eq!((p.clone() * q.clone()).eval(&vals), p.eval(&vals) * q.eval(&vals));
        prop_assert_eq!((p.clone() + q.clone()).eval(&vals), p.eval(&vals) + q.eval(&vals));
        prop_assert_eq!((p.clone() - p).eval(&vals), QSqrt3::zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn structure_reports_are_deterministic(seed in any::<u64>()) {
        let cfg = SuiteConfig { seed, samples: 10, timing: false, ..Default::default() };
        prop_assert_eq!(cmd_structure(&cfg).unwrap().to_json(), cmd_structure(&cfg).unwrap().to_json());
    }

    #[test]
    fn exact_records_ignore_seed_and_tolerance(seed in any::<u64>(), tol in 1e-14..1e-6f64) {
        let base = cmd_structure(&SuiteConfig { samples: 5, ..Default::default() }).unwrap();
        let other = cmd_structure(&SuiteConfig { seed, tol, samples: 5, ..Default::default() }).unwrap();
        for c in base.checks.iter().filter(|c| c.tolerance == "0") {
            prop_assert_eq!(Some(c), other.check(&c.name));
        }
    }
}
