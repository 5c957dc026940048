//! Surface suite: a registered immersion swept over a parameter grid.

use std::f64::consts::FRAC_1_SQRT_2;
use std::time::Instant;

use crate::error::Result;
use crate::nk::algebra::{apply_p, nk_metric, product_metric};
use crate::par;
use crate::scalar::{QSqrt3, Scalar};
use crate::sl2::{Mat2, TraceZero};
use crate::surface::epsilon::{adapted_frame, chart_gap, epsilon_surface_check};
use crate::surface::examples::{FLAT_NEGATIVE, FLAT_POSITIVE, HYPERBOLIC_QUADRIC, HYPERBOLIC_ST};
use crate::surface::geometry::{integrability_residual, rotated_integrability_residual};
use crate::surface::jet::first_derivatives;
use crate::surface::{
    almost_complex_residual, gauss_curvature, induced_metric, lookup, p_tangency, second_fundamental_form,
    Immersion, PClass, Signature,
};

use super::{max_of, Check, Report, SuiteConfig};

/// Radius of the disk sampled on the hyperbolic surface.
pub const HYPERBOLIC_RADIUS: f64 = 0.8;

struct Expect {
    k: f64,
    k_label: &'static str,
    class: PClass,
    signature: Signature,
    /// `g₁₁ = g₂₂` for the flat examples.
    unit: Option<f64>,
    hyperbolic: bool,
}

fn expectations(name: &str) -> Expect {
    match name {
        FLAT_POSITIVE | FLAT_NEGATIVE => {
            let positive = name == FLAT_POSITIVE;
            Expect {
                k: 0.0,
                k_label: "0",
                class: PClass::PTangent,
                signature: if positive { Signature::PositiveDefinite } else { Signature::NegativeDefinite },
                unit: Some(if positive { 1.0 } else { -1.0 }),
                hyperbolic: false,
            }
        }
        _ => Expect {
            k: -4.0 / 3.0,
            k_label: "-4/3",
            class: PClass::PNormal,
            signature: Signature::PositiveDefinite,
            unit: None,
            hyperbolic: true,
        },
    }
}

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![0.5 * (lo + hi)];
    }
    (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect()
}

/// The sample grid: `[−1,1]²` for the flat examples, the square inscribed
/// in the disk of radius [`HYPERBOLIC_RADIUS`] for the hyperbolic ones.
pub fn surface_grid(name: &str, n: usize) -> Vec<(f64, f64)> {
    let half = if matches!(name, HYPERBOLIC_ST | HYPERBOLIC_QUADRIC) { HYPERBOLIC_RADIUS * FRAC_1_SQRT_2 } else { 1.0 };
    let axis = linspace(-half, half, n);
    axis.iter().flat_map(|&s| axis.iter().map(move |&t| (s, t))).collect()
}

/// Ten points of the disk where the two hyperbolic charts are compared.
pub fn chart_points() -> Vec<(f64, f64)> {
    (0..10)
        .map(|k| {
            let r = 0.08 * (k + 1) as f64;
            let th = 0.9 * k as f64;
            (r * th.cos(), r * th.sin())
        })
        .collect()
}

#[derive(Clone, Debug)]
struct PointRecord {
    membership: f64,
    almost_complex: f64,
    class_ok: bool,
    p_residual: f64,
    signature_ok: bool,
    metric: f64,
    pictures: f64,
    h: f64,
    k: f64,
    k_err: f64,
    integrability: f64,
    rotated: f64,
    frame: f64,
    error: Option<String>,
}

impl PointRecord {
    fn failed(e: String) -> Self {
        let n = f64::NAN;
        Self {
            membership: n,
            almost_complex: n,
            class_ok: false,
            p_residual: n,
            signature_ok: false,
            metric: n,
            pictures: n,
            h: n,
            k: n,
            k_err: n,
            integrability: n,
            rotated: n,
            frame: n,
            error: Some(e),
        }
    }
}

fn evaluate(f: &Immersion, ex: &Expect, s: f64, t: f64, cfg: &SuiteConfig) -> Result<PointRecord> {
    let step = cfg.step;
    let p = f.point(s, t)?;
    let tan = p_tangency(f, s, t, step, cfg.tol)?;
    let p_residual = match ex.class {
        PClass::PTangent => max_of([tan.tangent_residual, tan.pattern.0, tan.pattern.1]),
        _ => tan.normal_residual,
    };
    let m = induced_metric(f, s, t, step)?;
    let metric = match ex.unit {
        Some(u) => max_of([(m.g11 - u).abs(), m.g12.abs(), (m.g22 - u).abs()]),
        None => max_of([(m.g11 - m.g22).abs(), m.g12.abs()]) / m.g11.abs(),
    };
    let d = first_derivatives(f, s, t, step)?;
    let fs = d.fs();
    let pictures = (product_metric(&fs, &fs) - 2.0 * nk_metric(&fs, &fs) - nk_metric(&fs, &apply_p(&fs))).abs();
    let sff = second_fundamental_form(f, s, t, step)?;
    let k = gauss_curvature(f, s, t, step)?.k;
    let (i1, i2) = integrability_residual(f, s, t, step)?;
    let (r1, r2) = rotated_integrability_residual(f, s, t, step)?;
    let frame = if ex.hyperbolic {
        let fr = adapted_frame(f, s, t, step)?;
        let lens = [1.0, 1.0, 1.0, 1.0, -2.0 / 3.0, -2.0 / 3.0];
        max_of((0..36).map(|n| {
            let (i, j) = (n / 6, n % 6);
            let expected = if i == j { lens[i] } else { 0.0 };
            (nk_metric(&fr[i], &fr[j]) - expected).abs()
        }))
    } else {
        0.0
    };
    Ok(PointRecord {
        membership: p.membership_residual(),
        almost_complex: almost_complex_residual(f, s, t, step)?,
        class_ok: tan.class == ex.class,
        p_residual,
        signature_ok: m.signature() == ex.signature,
        metric,
        pictures,
        h: sff.max_norm(),
        k,
        k_err: (k - ex.k).abs(),
        integrability: i1.max(i2),
        rotated: r1.max(r2),
        frame,
        error: None,
    })
}

fn grid_witness(n: usize, rows: &[PointRecord]) -> Option<String> {
    match rows.iter().find_map(|r| r.error.clone()) {
        Some(e) => Some(format!("{n} points; error: {e}")),
        None => Some(format!("{n} points")),
    }
}

fn epsilon_checks(f: &Immersion, grid: &[(f64, f64)], cfg: &SuiteConfig) -> Vec<Check> {
    let k = 2.0 / 3f64.sqrt();
    let rows = par::map(grid, |&(s, t)| epsilon_surface_check(f, s, t, cfg.step));
    let mut quad = Vec::new();
    let mut pde = Vec::new();
    let mut shape = Vec::new();
    for r in rows {
        match r {
            Ok(e) => {
                quad.push(e.quadric);
                pde.push(max_of(e.pde.into_iter().chain([e.derivative_gap])));
                let s = e.scalar_shape_operator;
                shape.push(max_of([
                    (s[0][0] - k).abs(),
                    (s[1][1] - k).abs(),
                    s[0][1].abs(),
                    s[1][0].abs(),
                    (e.normal_norm_sq + 1.0).abs(),
                    e.center_offset,
                ]));
            }
            Err(_) => {
                quad.push(f64::NAN);
                pde.push(f64::NAN);
                shape.push(f64::NAN);
            }
        }
    }
    let charts = chart_points();
    let gaps: Vec<f64> = charts.iter().map(|&(s, t)| chart_gap(s, t).map(|(g, q)| g.max(q)).unwrap_or(f64::NAN)).collect();
    vec![
        Check::measured("epsilon-quadric", max_of(quad), cfg.tol, Some("|e1²+e2²-e3²+3/4|".into())),
        Check::measured(
            "epsilon-pde",
            max_of(pde),
            cfg.curv_tol,
            Some("second-order system and e_s = α, e_t = β".into()),
        ),
        Check::measured(
            "epsilon-shape-operator",
            max_of(shape),
            cfg.curv_tol,
            Some("S = (2/√3)I with <ξ,ξ> = -1".into()),
        ),
        Check::measured(
            "chart-agreement",
            max_of(gaps),
            cfg.tol,
            Some(format!("{} matched points, (s,t) chart vs hyperboloid chart", charts.len())),
        ),
    ]
}

/// The basis in the flat-positive derivation must be `{diag(1,−1), offdiag(1,1), offdiag(1,−1)}`
/// for `αα = (α₁² + α₂² − α₃²)I` to hold.
fn basis_record() -> Check {
    type Q = QSqrt3;
    let c = [Q::from_ratio(1, 2), Q::from_ratio(1, 3), Q::from_ratio(1, 5)];
    let square = |m: Mat2<Q>| m * m;
    let proper = TraceZero::from_array(c).to_matrix();
    let e1 = TraceZero::<Q>::basis(0).to_matrix();
    let e3 = TraceZero::<Q>::basis(2).to_matrix();
    let repeated = e1.scale(c[0]) + e1.scale(c[1]) + e3.scale(c[2]);
    let target = c[0] * c[0] + c[1] * c[1] - c[2] * c[2];
    let ok = |m: Mat2<Q>| square(m) == Mat2::identity().scale(target);
    let alpha = TraceZero::<f64>::basis(0).scale(1.5f64.sqrt());
    Check::info(
        "basis-second-element",
        format!(
            "αα = (α1²+α2²-α3²)I holds with offdiag(1,1): {}, with diag(1,-1) repeated: {}; <α,α> = {} for α = √(3/2)e1",
            ok(proper),
            ok(repeated),
            alpha.norm_sq()
        ),
    )
}

pub fn cmd_surface(name: &str, cfg: &SuiteConfig) -> Result<Report> {
    cfg.validate()?;
    let f = lookup(name)?;
    let started = Instant::now();
    let ex = expectations(name);
    let grid = surface_grid(name, cfg.grid);
    let rows: Vec<PointRecord> = par::map(&grid, |&(s, t)| {
        evaluate(&f, &ex, s, t, cfg).unwrap_or_else(|e| PointRecord::failed(format!("({s}, {t}): {e}")))
    });
    let w = grid_witness(grid.len(), &rows);
    let col = |g: fn(&PointRecord) -> f64| max_of(rows.iter().map(g));
    let class_ok = rows.iter().all(|r| r.class_ok);
    let sig_ok = rows.iter().all(|r| r.signature_ok);
    let ks: Vec<f64> = rows.iter().map(|r| r.k).collect();
    let k_range = (ks.iter().cloned().fold(f64::INFINITY, f64::min), ks.iter().cloned().fold(f64::NEG_INFINITY, f64::max));

    let class_name = match ex.class {
        PClass::PTangent => "p-tangent (Pv = v, PJv = -Jv)",
        PClass::PNormal => "p-normal",
        PClass::Mixed => "mixed",
    };
    let sig_name = match ex.signature {
        Signature::PositiveDefinite => "positive definite",
        Signature::NegativeDefinite => "negative definite",
        Signature::Indefinite => "indefinite",
        Signature::Degenerate => "degenerate",
    };
    let p_res = if class_ok { col(|r| r.p_residual) } else { 1.0 };
    let mut checks = vec![
        Check::measured("sl2-membership", col(|r| r.membership), cfg.tol, w.clone()),
        Check::measured("almost-complex", col(|r| r.almost_complex), cfg.tol, w.clone()),
        Check::measured(
            "p-tangency",
            p_res,
            cfg.tol,
            Some(format!("expected {class_name}; all points {}", if class_ok { "agree" } else { "do not agree" })),
        ),
        Check::measured(
            "metric-signature",
            if sig_ok { col(|r| r.metric) } else { 1.0 },
            cfg.tol,
            Some(format!(
                "{sig_name}{}",
                if ex.unit.is_some() { ", g11 = g22 = ±1, g12 = 0" } else { ", conformal" }
            )),
        ),
        Check::measured("metric-pictures", col(|r| r.pictures), cfg.tol, Some("<Fs,Fs> = 2g(Fs,Fs) + g(Fs,PFs)".into())),
        Check::measured("second-fundamental-form", col(|r| r.h), cfg.curv_tol, Some("max component norm".into())),
        Check::measured(
            "gauss-curvature",
            col(|r| r.k_err),
            cfg.curv_tol,
            Some(format!("expected K = {}; observed [{:.9}, {:.9}]", ex.k_label, k_range.0, k_range.1)),
        ),
        Check::measured("integrability", col(|r| r.integrability), cfg.curv_tol, w.clone()),
        Check::measured("integrability-rotated", col(|r| r.rotated), cfg.curv_tol, Some("θ = π/3".into())),
    ];
    if ex.hyperbolic {
        checks.push(Check::measured(
            "adapted-frame",
            col(|r| r.frame),
            cfg.tol,
            Some("Gram diag(1,1,1,1,-2/3,-2/3)".into()),
        ));
        checks.extend(epsilon_checks(&f, &grid, cfg));
    }
    if name == FLAT_POSITIVE {
        checks.push(basis_record());
    }
    Ok(Report::new(format!("surface:{name}"), cfg, checks, started))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grids() {
        let g = surface_grid(HYPERBOLIC_ST, 5);
        assert_eq!(g.len(), 25);
        assert!(g.iter().all(|(s, t)| (s * s + t * t).sqrt() <= HYPERBOLIC_RADIUS + 1e-12));
        assert_eq!(surface_grid(FLAT_POSITIVE, 5)[0], (-1.0, -1.0));
        assert!(chart_points().iter().all(|(s, t)| s * s + t * t <= 0.64 + 1e-12));
    }

    #[test]
    fn unknown_surface() {
        let e = cmd_surface("torus", &SuiteConfig::default()).unwrap_err();
        assert!(e.to_string().contains("flat-positive"));
    }

    #[test]
    fn flat_negative_suite() {
        let r = cmd_surface(FLAT_NEGATIVE, &SuiteConfig { grid: 3, ..Default::default() }).unwrap();
        assert!(r.pass, "{}", r.to_text());
        assert!(r.check("metric-signature").unwrap().witness.as_ref().unwrap().contains("negative definite"));
    }
}
