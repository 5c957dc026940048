use crate::diff;
use crate::error::{GeometryError, Result};
use crate::nk::{NKPoint, Tangent};
use crate::sl2::{adjugate, Mat2};

use super::immersion::{unflatten, FirstDerivatives, Immersion};

pub const DEFAULT_STEP: f64 = 1e-3;

/// First and second derivative data of an immersion at one point.
#[derive(Clone, Debug)]
pub struct SurfaceJet {
    pub s: f64,
    pub t: f64,
    pub step: f64,
    pub point: NKPoint<f64>,
    pub fs: Tangent<f64>,
    pub ft: Tangent<f64>,
    /// The first derivatives in use (analytic when available).
    pub first: FirstDerivatives,
    pub numeric_first: FirstDerivatives,
    /// Largest coefficient gap between analytic and numeric first derivatives.
    pub analytic_gap: Option<f64>,
    pub ss: (Mat2<f64>, Mat2<f64>),
    pub st: (Mat2<f64>, Mat2<f64>),
    pub tt: (Mat2<f64>, Mat2<f64>),
    /// Largest `|tr(A⁻¹A_s)|`-type trace removed by projection.
    pub trace_residual: f64,
    /// Richardson correction size over all derivatives.
    pub error_estimate: f64,
}

fn check_step(step: f64) -> Result<()> {
    if step > 0.0 && step.is_finite() {
        Ok(())
    } else {
        Err(GeometryError::InvalidConfig(format!("step must be positive, got {step}")))
    }
}

/// Numerical `(α̃, β̃, γ̃, δ̃)`, the trace that was projected away, and the
/// Richardson error indicator.
pub fn numeric_first_derivatives(
    f: &Immersion,
    s: f64,
    t: f64,
    step: f64,
) -> Result<(FirstDerivatives, f64, f64)> {
    check_step(step)?;
    let (a, b) = f.raw(s, t)?;
    let ds = diff::first(|x| f.raw_flat(x, t), s, step)?;
    let dt = diff::first(|y| f.raw_flat(s, y), t, step)?;
    let (as_, bs) = unflatten(&ds.value);
    let (at, bt) = unflatten(&dt.value);
    let (ia, ib) = (adjugate(&a), adjugate(&b));
    let raw = [ia * as_, ia * at, ib * bs, ib * bt];
    let trace = raw.iter().map(|m| m.trace().abs()).fold(0.0, f64::max);
    let d = FirstDerivatives {
        alpha: raw[0].trace_free_part(),
        beta: raw[1].trace_free_part(),
        gamma: raw[2].trace_free_part(),
        delta: raw[3].trace_free_part(),
    };
    Ok((d, trace, ds.error.max(dt.error)))
}

/// Analytic first derivatives when the immersion has them, numerical otherwise.
pub fn first_derivatives(f: &Immersion, s: f64, t: f64, step: f64) -> Result<FirstDerivatives> {
    if let Some(d) = f.analytic(s, t) {
        return Ok(d);
    }
    if !f.in_domain(s, t) {
        return Err(GeometryError::Domain { s, t });
    }
    Ok(numeric_first_derivatives(f, s, t, step)?.0)
}

pub fn first_derivative_gap(a: &FirstDerivatives, b: &FirstDerivatives) -> f64 {
    (a.fs() - b.fs()).max_abs().max((a.ft() - b.ft()).max_abs())
}

pub fn numeric_jet(f: &Immersion, s: f64, t: f64, step: f64) -> Result<SurfaceJet> {
    check_step(step)?;
    let point = f.point(s, t)?;
    let (numeric_first, trace_residual, err1) = numeric_first_derivatives(f, s, t, step)?;
    let analytic = f.analytic(s, t);
    let analytic_gap = analytic.map(|a| first_derivative_gap(&a, &numeric_first));
    let first = analytic.unwrap_or(numeric_first);

    let dss = diff::second(|x| f.raw_flat(x, t), s, step)?;
    let dtt = diff::second(|y| f.raw_flat(s, y), t, step)?;
    let dst = diff::mixed(|x, y| f.raw_flat(x, y), s, t, step)?;

    Ok(SurfaceJet {
        s,
        t,
        step,
        point,
        fs: Tangent::from_coeffs(point, &first.fs()),
        ft: Tangent::from_coeffs(point, &first.ft()),
        first,
        numeric_first,
        analytic_gap,
        ss: unflatten(&dss.value),
        st: unflatten(&dst.value),
        tt: unflatten(&dtt.value),
        trace_residual,
        error_estimate: err1.max(dss.error).max(dst.error).max(dtt.error),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::examples::*;
    use crate::sl2::TraceZero;

    #[test]
    fn constant_immersion_has_zero_derivatives() {
        let j = numeric_jet(&constant().without_analytic(), 0.2, 0.1, 1e-3).unwrap();
        assert!(j.fs.coeffs().is_zero());
        assert!(j.ft.coeffs().is_zero());
        assert_eq!(j.ss.0.max_abs(), 0.0);
    }

    #[test]
    fn flat_positive_alpha_at_origin() {
        let f = example_flat_positive().without_analytic();
        let j = numeric_jet(&f, 0.0, 0.0, 1e-3).unwrap();
        let expected = TraceZero::basis(0).scale(1.5f64.sqrt());
        assert!((j.first.alpha - expected).max_abs() < 1e-10);
    }

    #[test]
    fn hyperbolic_alpha_at_origin() {
        // α̃(0,0) = [[√3/2, −3/2], [−3/2, −√3/2]].
        let f = example_hyperbolic().without_analytic();
        let j = numeric_jet(&f, 0.0, 0.0, 1e-3).unwrap();
        let m = j.first.alpha.to_matrix();
        let k = 3f64.sqrt() / 2.0;
        assert!((m - Mat2::new(k, -1.5, -1.5, -k)).max_abs() < 1e-10);
    }

    #[test]
    fn analytic_and_numeric_agree() {
        for f in [example_flat_positive(), example_flat_negative(), example_hyperbolic()] {
            let step = 1e-3;
            let j = numeric_jet(&f, 0.3, -0.2, step).unwrap();
            assert!(j.analytic_gap.unwrap() <= 10.0 * step * step, "{}", f.name());
            assert!(j.trace_residual < 1e-9);
        }
    }

    #[test]
    fn halving_the_step_shrinks_the_gap() {
        let f = example_hyperbolic();
        let a = f.analytic(0.3, 0.2).unwrap();
        let gap = |h| {
            let (d, _, _) = numeric_first_derivatives(&f, 0.3, 0.2, h).unwrap();
            first_derivative_gap(&a, &d)
        };
        let (g1, g2) = (gap(0.08), gap(0.04));
        assert!(g1 / g2 >= 3.5, "{g1} {g2}");
    }

    #[test]
    fn stencil_outside_domain_is_an_error() {
        let f = example_hyperbolic();
        assert!(numeric_jet(&f, 0.9735, 0.0, 1e-3).is_err());
    }
}
