//! The auxiliary surface `ε` in `(sl(2,ℝ), ⟨,⟩)` behind the hyperbolic
//! example (`A = ½I + ε`, `B = ½I − ε`), chart consistency, and the adapted
//! frame of a P-normal surface.

use crate::diff;
use crate::error::Result;
use crate::nk::algebra::{apply_j, apply_p, tensor_g};
use crate::nk::FrameCoeffs;
use crate::sl2::{cross, TraceZero};

use super::examples::{epsilon, example_hyperbolic, hyperboloid_point, quadric_coordinates, quadric_residual};
use super::geometry::{induced_metric, rotated_pair, shape_operator_matrix, InducedMetric};
use super::immersion::Immersion;

/// Pointwise report on the `ε`-surface.
#[derive(Clone, Copy, Debug)]
pub struct EpsilonPoint {
    /// `|ε₁² + ε₂² − ε₃² + 3/4|`.
    pub quadric: f64,
    /// `max(‖ε_s − α‖, ‖ε_t − β‖)` against the immersion's rotated frame.
    pub derivative_gap: f64,
    /// Residuals of the three second-order equations (`ss`, `st`, `tt`).
    pub pde: [f64; 3],
    /// `e^{2ω} = ⟨ε_s, ε_s⟩`.
    pub conformal_factor: f64,
    /// `⟨ξ, ξ⟩` for `ξ = −(ε_s×ε_t)/e^{2ω}`.
    pub normal_norm_sq: f64,
    /// Coefficients `c` of `h(∂_i,∂_j) = c_ij·ξ`.
    pub h: [[f64; 2]; 2],
    /// `A_ξ` with `⟨A_ξX, Y⟩ = ⟨h(X,Y), ξ⟩`.
    pub shape_operator: [[f64; 2]; 2],
    /// `S = ⟨ξ,ξ⟩·A_ξ`, so that `h(X,Y) = ⟨SX,Y⟩ξ`.
    pub scalar_shape_operator: [[f64; 2]; 2],
    /// `‖ε − (√3/2)ξ‖`; the combination is constant (zero).
    pub center_offset: f64,
}

fn arr(v: &TraceZero<f64>) -> [f64; 3] {
    v.to_array()
}

fn tz(a: &[f64; 3]) -> TraceZero<f64> {
    TraceZero::from_array(*a)
}

pub fn epsilon_surface_check(f: &Immersion, s: f64, t: f64, step: f64) -> Result<EpsilonPoint> {
    let eps = |x: f64, y: f64| -> Result<[f64; 3]> {
        if !f.in_domain(x, y) {
            return Err(crate::error::GeometryError::Domain { s: x, t: y });
        }
        Ok(arr(&epsilon(x, y)))
    };
    let e0 = tz(&eps(s, t)?);
    let quadric = (e0.norm_sq() + 0.75).abs();

    let es = tz(&diff::first(|x| eps(x, t), s, step)?.value);
    let et = tz(&diff::first(|y| eps(s, y), t, step)?.value);
    let ess = tz(&diff::second(|x| eps(x, t), s, step)?.value);
    let ett = tz(&diff::second(|y| eps(s, y), t, step)?.value);
    let est = tz(&diff::mixed(eps, s, t, step)?.value);

    let (alpha, beta) = rotated_pair(f, s, t, step)?;
    let derivative_gap = (es - alpha).max_abs().max((et - beta).max_abs());

    let omega = |x: f64, y: f64| -> Result<[f64; 1]> {
        let m = induced_metric(f, x, y, step)?;
        Ok([0.5 * m.g11.abs().ln()])
    };
    let h_outer = super::geometry::OUTER_STEP_FACTOR * step;
    let w_s = diff::first(|x| omega(x, t), s, h_outer)?.value[0];
    let w_t = diff::first(|y| omega(s, y), t, h_outer)?.value[0];
    let k = 2.0 / 3f64.sqrt();
    let c = cross(&es, &et);
    let pde = [
        (ess - (et.scale(-w_t) + es.scale(w_s) - c.scale(k))).max_abs(),
        (est - (es.scale(w_t) + et.scale(w_s))).max_abs(),
        (ett - (et.scale(w_t) - es.scale(w_s) - c.scale(k))).max_abs(),
    ];

    let e2w = es.inner(&es);
    let xi = c.scale(-1.0 / e2w);
    let normal_norm_sq = xi.inner(&xi);
    let metric = InducedMetric {
        g11: e2w,
        g12: es.inner(&et),
        g22: et.inner(&et),
        omega: None,
    };
    let hx = [[ess.inner(&xi), est.inner(&xi)], [est.inner(&xi), ett.inner(&xi)]];
    let h = hx.map(|r| r.map(|v| v / normal_norm_sq));
    let a = shape_operator_matrix(hx, &metric)?;
    let scalar = a.map(|r| r.map(|v| v * normal_norm_sq));
    let center_offset = (e0 - xi.scale(3f64.sqrt() / 2.0)).max_abs();

    Ok(EpsilonPoint {
        quadric,
        derivative_gap,
        pde,
        conformal_factor: e2w,
        normal_norm_sq,
        h,
        shape_operator: a,
        scalar_shape_operator: scalar,
        center_offset,
    })
}

/// Largest entry gap between the `(s,t)` chart and the hyperboloid chart at
/// the matched point `y(s,t)`, plus the quadric residual of `y`.
pub fn chart_gap(s: f64, t: f64) -> Result<(f64, f64)> {
    let y = quadric_coordinates(s, t);
    let p = example_hyperbolic().point(s, t)?;
    let q = hyperboloid_point(&y, 1e-9)?;
    let gap = (*p.a.matrix() - *q.a.matrix())
        .max_abs()
        .max((*p.b.matrix() - *q.b.matrix()).max_abs());
    Ok((gap, quadric_residual(&y).abs()))
}

/// `e₁ = v, e₂ = Jv, e₃ = Pv, e₄ = JPv, e₅ = G(v,Pv), e₆ = −G(Jv,Pv)` with
/// `v = F_s/√|g(F_s,F_s)|`.
pub fn adapted_frame(f: &Immersion, s: f64, t: f64, step: f64) -> Result<[FrameCoeffs<f64>; 6]> {
    let d = super::jet::first_derivatives(f, s, t, step)?;
    let fs = d.fs();
    let n = crate::nk::algebra::nk_metric(&fs, &fs).abs().sqrt();
    let v = fs.scale(1.0 / n);
    let jv = apply_j(&v);
    let pv = apply_p(&v);
    Ok([
        v,
        jv,
        pv,
        apply_j(&pv),
        tensor_g(&v, &pv),
        -tensor_g(&jv, &pv),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nk::algebra::nk_metric;

    #[test]
    fn epsilon_surface_at_a_point() {
        let f = example_hyperbolic();
        let r = epsilon_surface_check(&f, 0.2, -0.1, 1e-3).unwrap();
        assert!(r.quadric < 1e-12);
        assert!(r.derivative_gap < 1e-9);
        assert!(r.pde.iter().all(|v| *v < 1e-6), "{:?}", r.pde);
        assert!((r.normal_norm_sq + 1.0).abs() < 1e-9);
        let k = 2.0 / 3f64.sqrt();
        assert!((r.scalar_shape_operator[0][0] - k).abs() < 1e-6);
        assert!((r.scalar_shape_operator[1][1] - k).abs() < 1e-6);
        assert!(r.scalar_shape_operator[0][1].abs() < 1e-6);
        assert!((r.shape_operator[0][0] + k).abs() < 1e-6);
        assert!(r.h[0][1].abs() < 1e-6);
        assert!((r.h[0][0] - k * r.conformal_factor).abs() < 1e-5);
        assert!(r.center_offset < 1e-9);
    }

    #[test]
    fn charts_agree() {
        let (gap, q) = chart_gap(0.3, -0.5).unwrap();
        assert!(gap < 1e-12 && q < 1e-12);
    }

    #[test]
    fn adapted_frame_gram() {
        let fr = adapted_frame(&example_hyperbolic(), 0.1, 0.3, 1e-3).unwrap();
        let lens = [1.0, 1.0, 1.0, 1.0, -2.0 / 3.0, -2.0 / 3.0];
        for i in 0..6 {
            for j in 0..6 {
                let expected = if i == j { lens[i] } else { 0.0 };
                assert!((nk_metric(&fr[i], &fr[j]) - expected).abs() < 1e-10, "({i},{j})");
            }
        }
    }
}
