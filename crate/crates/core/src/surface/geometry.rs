use std::f64::consts::FRAC_PI_3;

use serde::Serialize;

use crate::diff;
use crate::error::{GeometryError, Result};
use crate::linalg::inverse2;
use crate::nk::algebra::{apply_j, apply_p, nk_metric};
use crate::nk::{FrameCoeffs, Tangent};
use crate::sl2::{cross, TraceZero};

use super::immersion::Immersion;
use super::jet::{first_derivatives, numeric_jet, SurfaceJet};

/// Metric-derivative stencils use this multiple of the jet step, keeping
/// nested differences clear of round-off.
pub const OUTER_STEP_FACTOR: f64 = 10.0;

/// Relative tolerance used by [`p_tangency`] when none is given.
pub const CLASSIFY_TOL: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Signature {
    PositiveDefinite,
    NegativeDefinite,
    Indefinite,
    Degenerate,
}

/// `g₁₁ ds² + 2g₁₂ ds dt + g₂₂ dt²`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct InducedMetric {
    pub g11: f64,
    pub g12: f64,
    pub g22: f64,
    /// `ω` with `|g₁₁| = |g₂₂| = e^{2ω}`, when the metric is conformal here.
    pub omega: Option<f64>,
}

impl InducedMetric {
    pub fn from_vectors(fs: &FrameCoeffs<f64>, ft: &FrameCoeffs<f64>) -> Self {
        let (g11, g12, g22) = (nk_metric(fs, fs), nk_metric(fs, ft), nk_metric(ft, ft));
        let scale = g11.abs().max(g22.abs());
        let conformal = scale > 0.0 && (g11 - g22).abs() <= 1e-9 * scale && g12.abs() <= 1e-9 * scale;
        Self {
            g11,
            g12,
            g22,
            omega: conformal.then(|| 0.5 * g11.abs().ln()),
        }
    }

    pub fn det(&self) -> f64 {
        self.g11 * self.g22 - self.g12 * self.g12
    }

    pub fn matrix(&self) -> [[f64; 2]; 2] {
        [[self.g11, self.g12], [self.g12, self.g22]]
    }

    pub fn inverse(&self) -> Result<[[f64; 2]; 2]> {
        let scale = self.g11.abs().max(self.g22.abs()).max(1.0);
        if self.det().abs() <= 1e-12 * scale * scale {
            return Err(GeometryError::DegenerateMetric(self.det().abs()));
        }
        inverse2(self.matrix()).ok_or(GeometryError::DegenerateMetric(self.det().abs()))
    }

    pub fn signature(&self) -> Signature {
        let scale = self.g11.abs().max(self.g22.abs()).max(1.0);
        let det = self.det();
        if det.abs() <= 1e-12 * scale * scale {
            Signature::Degenerate
        } else if det < 0.0 {
            Signature::Indefinite
        } else if self.g11 > 0.0 {
            Signature::PositiveDefinite
        } else {
            Signature::NegativeDefinite
        }
    }
}

pub fn induced_metric(f: &Immersion, s: f64, t: f64, step: f64) -> Result<InducedMetric> {
    let d = first_derivatives(f, s, t, step)?;
    Ok(InducedMetric::from_vectors(&d.fs(), &d.ft()))
}

/// Normal components of `∇̃_{F_i}F_j`.
#[derive(Clone, Copy, Debug)]
pub struct SecondFundamentalForm {
    pub h_ss: Tangent<f64>,
    pub h_st: Tangent<f64>,
    pub h_tt: Tangent<f64>,
    pub fs: Tangent<f64>,
    pub ft: Tangent<f64>,
    pub metric: InducedMetric,
    /// Trace left after removing the position terms from the raw second
    /// derivatives; a consistency diagnostic of the jet.
    pub trace_residual: f64,
}

impl SecondFundamentalForm {
    /// Coefficient norms of `h_ss`, `h_st`, `h_tt`.
    pub fn component_norms(&self) -> [f64; 3] {
        [self.h_ss.coeff_norm(), self.h_st.coeff_norm(), self.h_tt.coeff_norm()]
    }

    pub fn max_norm(&self) -> f64 {
        self.component_norms().into_iter().fold(0.0, f64::max)
    }

    /// Largest `|g(h_ij, F_k)|`; zero up to round-off by construction.
    pub fn orthogonality_residual(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for h in [&self.h_ss, &self.h_st, &self.h_tt] {
            for fk in [&self.fs, &self.ft] {
                worst = worst.max(nk_metric(&h.coeffs(), &fk.coeffs()).abs());
            }
        }
        worst
    }
}

/// Tangential and normal parts of `v` relative to `span{F_s, F_t}`.
pub fn split_tangent(
    v: &FrameCoeffs<f64>,
    fs: &FrameCoeffs<f64>,
    ft: &FrameCoeffs<f64>,
    metric: &InducedMetric,
) -> Result<(FrameCoeffs<f64>, FrameCoeffs<f64>)> {
    let inv = metric.inverse()?;
    let (a, b) = (nk_metric(v, fs), nk_metric(v, ft));
    let c1 = inv[0][0] * a + inv[0][1] * b;
    let c2 = inv[1][0] * a + inv[1][1] * b;
    let tangential = fs.scale(c1) + ft.scale(c2);
    Ok((tangential, *v - tangential))
}

pub fn second_fundamental_form_from_jet(jet: &SurfaceJet) -> Result<SecondFundamentalForm> {
    let (fs, ft, p) = (jet.fs, jet.ft, jet.point);
    let metric = InducedMetric::from_vectors(&fs.coeffs(), &ft.coeffs());
    let mut trace_residual: f64 = 0.0;
    let mut normal = |d, x: &Tangent<f64>, y: &Tangent<f64>| -> Result<Tangent<f64>> {
        let (v, tr) = crate::nk::structure::ambient_to_nk_with_residual(d, x, y, &p)?;
        trace_residual = trace_residual.max(tr);
        let (_, n) = split_tangent(&v.coeffs(), &fs.coeffs(), &ft.coeffs(), &metric)?;
        Ok(v.with_coeffs(n))
    };
    let h_ss = normal(&jet.ss, &fs, &fs)?;
    let h_st = normal(&jet.st, &fs, &ft)?;
    let h_tt = normal(&jet.tt, &ft, &ft)?;
    Ok(SecondFundamentalForm { h_ss, h_st, h_tt, fs, ft, metric, trace_residual })
}

pub fn second_fundamental_form(f: &Immersion, s: f64, t: f64, step: f64) -> Result<SecondFundamentalForm> {
    second_fundamental_form_from_jet(&numeric_jet(f, s, t, step)?)
}

/// `A = G⁻¹H` from `H_ij = g(h(∂_i,∂_j), ξ)`.
pub fn shape_operator_matrix(h_xi: [[f64; 2]; 2], metric: &InducedMetric) -> Result<[[f64; 2]; 2]> {
    let inv = metric.inverse()?;
    let mut out = [[0.0; 2]; 2];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, v) in row.iter_mut().enumerate() {
            *v = inv[i][0] * h_xi[0][j] + inv[i][1] * h_xi[1][j];
        }
    }
    Ok(out)
}

/// Matrix of `A_ξ` in the `(F_s, F_t)` basis, `g(A_ξX, Y) = g(h(X,Y), ξ)`.
pub fn shape_operator(
    sff: &SecondFundamentalForm,
    xi: &Tangent<f64>,
    metric: &InducedMetric,
) -> Result<[[f64; 2]; 2]> {
    let x = xi.coeffs();
    let scale = x.coeff_norm() * sff.fs.coeff_norm().max(sff.ft.coeff_norm()).max(1.0);
    let off = nk_metric(&x, &sff.fs.coeffs()).abs().max(nk_metric(&x, &sff.ft.coeffs()).abs());
    if off > 1e-6 * scale.max(1.0) {
        return Err(GeometryError::NotNormal(off));
    }
    let g = |h: &Tangent<f64>| nk_metric(&h.coeffs(), &x);
    let h_xi = [[g(&sff.h_ss), g(&sff.h_st)], [g(&sff.h_st), g(&sff.h_tt)]];
    shape_operator_matrix(h_xi, metric)
}

/// `S` with `h(X,Y) = g(SX,Y)ξ`, i.e. `S = g(ξ,ξ)·A_ξ` for `|g(ξ,ξ)| = 1`.
pub fn scalar_shape_operator(a_xi: [[f64; 2]; 2], xi_norm_sq: f64) -> [[f64; 2]; 2] {
    a_xi.map(|row| row.map(|v| v * xi_norm_sq))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PClass {
    PTangent,
    PNormal,
    Mixed,
}

#[derive(Clone, Copy, Debug)]
pub struct PTangency {
    pub class: PClass,
    /// Relative size of the normal parts of `PF_s`, `PF_t`.
    pub tangent_residual: f64,
    /// Relative size of `g(PF_s,F_s)`, `g(PF_s,F_t)`, `g(PF_t,F_t)`.
    pub normal_residual: f64,
    /// `(‖Pv − v‖, ‖PJv + Jv‖)` with `v = F_s/√|g(F_s,F_s)|`.
    pub pattern: (f64, f64),
}

pub fn p_tangency(f: &Immersion, s: f64, t: f64, step: f64, tol: f64) -> Result<PTangency> {
    let d = first_derivatives(f, s, t, step)?;
    let (fs, ft) = (d.fs(), d.ft());
    let metric = InducedMetric::from_vectors(&fs, &ft);
    let scale = metric.g11.abs().max(metric.g22.abs());
    let (pfs, pft) = (apply_p(&fs), apply_p(&ft));
    let (_, ns) = split_tangent(&pfs, &fs, &ft, &metric)?;
    let (_, nt) = split_tangent(&pft, &fs, &ft, &metric)?;
    let tangent_residual = ns.coeff_norm().max(nt.coeff_norm()) / scale.sqrt();
    let normal_residual = [nk_metric(&pfs, &fs), nk_metric(&pfs, &ft), nk_metric(&pft, &ft)]
        .into_iter()
        .map(f64::abs)
        .fold(0.0, f64::max)
        / scale;
    let v = fs.scale(1.0 / scale.sqrt());
    let jv = apply_j(&v);
    let pattern = (
        (apply_p(&v) - v).coeff_norm(),
        (apply_p(&jv) + jv).coeff_norm(),
    );
    let class = if tangent_residual <= tol {
        PClass::PTangent
    } else if normal_residual <= tol {
        PClass::PNormal
    } else {
        PClass::Mixed
    };
    Ok(PTangency { class, tangent_residual, normal_residual, pattern })
}

/// `‖F_t − JF_s‖` in frame coefficients.
pub fn almost_complex_residual(f: &Immersion, s: f64, t: f64, step: f64) -> Result<f64> {
    let d = first_derivatives(f, s, t, step)?;
    Ok((d.ft() - apply_j(&d.fs())).coeff_norm())
}

/// First and second partials of `E`, `F`, `G` needed by Brioschi's formula.
#[derive(Clone, Copy, Debug, Default)]
pub struct MetricJet {
    pub e: f64,
    pub f: f64,
    pub g: f64,
    pub e_s: f64,
    pub e_t: f64,
    pub f_s: f64,
    pub f_t: f64,
    pub g_s: f64,
    pub g_t: f64,
    pub e_tt: f64,
    pub f_st: f64,
    pub g_ss: f64,
}

fn det3(m: [[f64; 3]; 3]) -> f64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// Brioschi's formula for the Gaussian curvature of `E ds² + 2F ds dt + G dt²`.
pub fn brioschi(m: &MetricJet) -> f64 {
    let a = [
        [
            -0.5 * m.e_tt + m.f_st - 0.5 * m.g_ss,
            0.5 * m.e_s,
            m.f_s - 0.5 * m.e_t,
        ],
        [m.f_t - 0.5 * m.g_s, m.e, m.f],
        [0.5 * m.g_t, m.f, m.g],
    ];
    let b = [
        [0.0, 0.5 * m.e_t, 0.5 * m.g_s],
        [0.5 * m.e_t, m.e, m.f],
        [0.5 * m.g_s, m.f, m.g],
    ];
    let det = m.e * m.g - m.f * m.f;
    (det3(a) - det3(b)) / (det * det)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CurvatureMethod {
    Brioschi,
    Conformal,
}

#[derive(Clone, Copy, Debug)]
pub struct CurvatureEstimate {
    pub k: f64,
    pub method: CurvatureMethod,
    pub brioschi: f64,
    pub conformal: Option<f64>,
    /// Richardson indicator, or the gap between the two methods if larger.
    pub error: f64,
}

fn metric_fn(f: &Immersion, step: f64) -> impl Fn(f64, f64) -> Result<[f64; 3]> + '_ {
    move |s, t| {
        let m = induced_metric(f, s, t, step)?;
        Ok([m.g11, m.g12, m.g22])
    }
}

/// Gaussian curvature from the induced metric. Brioschi's formula is always
/// evaluated; when the metric is conformal (`E = G`, `F = 0`) on the stencil,
/// `K = −Δ ln|λ| / (2λ)` with `λ = E` is used and the two are compared.
pub fn gauss_curvature(f: &Immersion, s: f64, t: f64, step: f64) -> Result<CurvatureEstimate> {
    let h = OUTER_STEP_FACTOR * step;
    let m = metric_fn(f, step);
    let c = m(s, t)?;
    let ds = diff::first(|x| m(x, t), s, h)?;
    let dt = diff::first(|y| m(s, y), t, h)?;
    let dss = diff::second(|x| m(x, t), s, h)?;
    let dtt = diff::second(|y| m(s, y), t, h)?;
    let dst = diff::mixed(&m, s, t, h)?;
    let jet = MetricJet {
        e: c[0],
        f: c[1],
        g: c[2],
        e_s: ds.value[0],
        e_t: dt.value[0],
        f_s: ds.value[1],
        f_t: dt.value[1],
        g_s: ds.value[2],
        g_t: dt.value[2],
        e_tt: dtt.value[0],
        f_st: dst.value[1],
        g_ss: dss.value[2],
    };
    let k_b = brioschi(&jet);
    let mut error = [ds.error, dt.error, dss.error, dtt.error, dst.error]
        .into_iter()
        .fold(0.0, f64::max);

    let conformal_here = |x: f64, y: f64| -> Result<bool> {
        let v = m(x, y)?;
        let scale = v[0].abs().max(v[2].abs());
        Ok(scale > 0.0 && (v[0] - v[2]).abs() <= 1e-9 * scale && v[1].abs() <= 1e-9 * scale)
    };
    let mut conformal = true;
    for (x, y) in [(s, t), (s + 2.0 * h, t), (s - 2.0 * h, t), (s, t + 2.0 * h), (s, t - 2.0 * h)] {
        conformal &= conformal_here(x, y)?;
    }
    let k_c = if conformal {
        let log = |x: f64, y: f64| -> Result<[f64; 1]> { Ok([m(x, y)?[0].abs().ln()]) };
        let lss = diff::second(|x| log(x, t), s, h)?;
        let ltt = diff::second(|y| log(s, y), t, h)?;
        error = error.max(lss.error).max(ltt.error);
        Some(-(lss.value[0] + ltt.value[0]) / (2.0 * c[0]))
    } else {
        None
    };
    Ok(match k_c {
        Some(k) => CurvatureEstimate {
            k,
            method: CurvatureMethod::Conformal,
            brioschi: k_b,
            conformal: k_c,
            error: error.max((k - k_b).abs()),
        },
        None => CurvatureEstimate {
            k: k_b,
            method: CurvatureMethod::Brioschi,
            brioschi: k_b,
            conformal: None,
            error,
        },
    })
}

fn rotate(a: &TraceZero<f64>, b: &TraceZero<f64>, theta: f64) -> (TraceZero<f64>, TraceZero<f64>) {
    let (c, s) = (theta.cos(), theta.sin());
    (a.scale(c) + b.scale(s), b.scale(c) - a.scale(s))
}

fn frame_pair(f: &Immersion, step: f64, theta: f64) -> impl Fn(f64, f64) -> Result<[f64; 6]> + '_ {
    move |s, t| {
        let d = first_derivatives(f, s, t, step)?;
        let (a, b) = rotate(&d.alpha, &d.beta, theta);
        Ok([a.c1, a.c2, a.c3, b.c1, b.c2, b.c3])
    }
}

fn split6(v: &[f64; 6]) -> (TraceZero<f64>, TraceZero<f64>) {
    (TraceZero::new(v[0], v[1], v[2]), TraceZero::new(v[3], v[4], v[5]))
}

/// `(‖α̃_t − β̃_s − 2α̃×β̃‖, ‖α̃_s + β̃_t + (2/√3)α̃×β̃‖)`.
pub fn integrability_residual(f: &Immersion, s: f64, t: f64, step: f64) -> Result<(f64, f64)> {
    let h = OUTER_STEP_FACTOR * step;
    let ab = frame_pair(f, step, 0.0);
    let (a, b) = split6(&ab(s, t)?);
    let (a_s, b_s) = split6(&diff::first(|x| ab(x, t), s, h)?.value);
    let (a_t, b_t) = split6(&diff::first(|y| ab(s, y), t, h)?.value);
    let c = cross(&a, &b);
    let r1 = a_t - b_s - c.scale(2.0);
    let r2 = a_s + b_t + c.scale(2.0 / 3f64.sqrt());
    Ok((r1.max_abs(), r2.max_abs()))
}

/// The same system after rotating `(α̃, β̃)` by `θ = π/3`:
/// `(‖α_t − β_s‖, ‖α_s + β_t + (4/√3)α×β‖)`.
pub fn rotated_integrability_residual(f: &Immersion, s: f64, t: f64, step: f64) -> Result<(f64, f64)> {
    let h = OUTER_STEP_FACTOR * step;
    let ab = frame_pair(f, step, FRAC_PI_3);
    let (a, b) = split6(&ab(s, t)?);
    let (a_s, b_s) = split6(&diff::first(|x| ab(x, t), s, h)?.value);
    let (a_t, b_t) = split6(&diff::first(|y| ab(s, y), t, h)?.value);
    let c = cross(&a, &b);
    let r1 = a_t - b_s;
    let r2 = a_s + b_t + c.scale(4.0 / 3f64.sqrt());
    Ok((r1.max_abs(), r2.max_abs()))
}

/// `(α, β)`: the first derivatives `(α̃, β̃)` rotated by `π/3`.
pub fn rotated_pair(f: &Immersion, s: f64, t: f64, step: f64) -> Result<(TraceZero<f64>, TraceZero<f64>)> {
    Ok(split6(&frame_pair(f, step, FRAC_PI_3)(s, t)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::examples::*;

    const STEP: f64 = 1e-3;

    #[test]
    fn flat_metrics() {
        let m = induced_metric(&example_flat_positive(), 0.4, -0.3, STEP).unwrap();
        assert!((m.g11 - 1.0).abs() < 1e-14 && (m.g22 - 1.0).abs() < 1e-14 && m.g12.abs() < 1e-14);
        assert_eq!(m.signature(), Signature::PositiveDefinite);
        let m = induced_metric(&example_flat_negative(), 0.4, -0.3, STEP).unwrap();
        assert!((m.g11 + 1.0).abs() < 1e-14 && (m.g22 + 1.0).abs() < 1e-14);
        assert_eq!(m.signature(), Signature::NegativeDefinite);
    }

    #[test]
    fn hyperbolic_metric_is_conformal() {
        let m = induced_metric(&example_hyperbolic(), 0.0, 0.0, STEP).unwrap();
        assert!(m.g12.abs() < 1e-12);
        assert!((m.g11 - m.g22).abs() < 1e-12 && m.g11 > 0.0);
        assert!((m.g11 - 3.0).abs() < 1e-12);
        assert!(m.omega.is_some());
    }

    #[test]
    fn brioschi_on_non_conformal_metrics() {
        // ds² + cosh²(s) dt² has K = −1.
        let s: f64 = 0.4;
        let (c, sh) = (s.cosh(), s.sinh());
        let m = MetricJet {
            e: 1.0,
            g: c * c,
            g_s: 2.0 * c * sh,
            g_ss: 2.0 * (c * c + sh * sh),
            ..Default::default()
        };
        assert!((brioschi(&m) + 1.0).abs() < 1e-12);
        // Graph of z = x² + y²: E = 1+4x², F = 4xy, G = 1+4y², K = 4/(1+4x²+4y²)².
        let (x, y): (f64, f64) = (0.3, -0.2);
        let m = MetricJet {
            e: 1.0 + 4.0 * x * x,
            f: 4.0 * x * y,
            g: 1.0 + 4.0 * y * y,
            e_s: 8.0 * x,
            f_s: 4.0 * y,
            f_t: 4.0 * x,
            g_t: 8.0 * y,
            f_st: 4.0,
            ..Default::default()
        };
        let k = 4.0 / (1.0 + 4.0 * x * x + 4.0 * y * y).powi(2);
        assert!((brioschi(&m) - k).abs() < 1e-12);
    }

    #[test]
    fn curvature_of_examples() {
        let k = gauss_curvature(&example_flat_positive(), 0.2, 0.1, STEP).unwrap();
        assert!(k.k.abs() < 1e-6);
        let k = gauss_curvature(&example_hyperbolic(), 0.2, 0.1, STEP).unwrap();
        assert_eq!(k.method, CurvatureMethod::Conformal);
        assert!((k.k + 4.0 / 3.0).abs() < 1e-6, "{k:?}");
        assert!((k.brioschi + 4.0 / 3.0).abs() < 1e-6, "{k:?}");
    }

    #[test]
    fn classification() {
        let p = p_tangency(&example_flat_positive(), 0.1, 0.2, STEP, CLASSIFY_TOL).unwrap();
        assert_eq!(p.class, PClass::PTangent);
        assert!(p.pattern.0 < 1e-12 && p.pattern.1 < 1e-12);
        let p = p_tangency(&example_hyperbolic(), 0.1, 0.2, STEP, CLASSIFY_TOL).unwrap();
        assert_eq!(p.class, PClass::PNormal);
        let p = p_tangency(&swap_symmetric(), 0.3, 0.3, STEP, CLASSIFY_TOL).unwrap();
        assert_eq!(p.class, PClass::PTangent);
    }

    #[test]
    fn geodesic_product_is_not_almost_complex() {
        assert!(almost_complex_residual(&geodesic_product(), 0.1, 0.1, STEP).unwrap() > 0.5);
        assert!(almost_complex_residual(&example_flat_negative(), 0.1, 0.1, STEP).unwrap() < 1e-14);
    }

    #[test]
    fn totally_geodesic_examples() {
        let h = second_fundamental_form(&example_flat_positive(), 0.3, 0.1, STEP).unwrap();
        assert!(h.max_norm() < 1e-6, "{:?}", h.component_norms());
        let h = second_fundamental_form(&example_hyperbolic(), 0.3, 0.1, STEP).unwrap();
        assert!(h.max_norm() < 1e-5, "{:?}", h.component_norms());
        let xi = Tangent::from_coeffs(h.fs.base, &apply_p(&h.fs.coeffs()));
        let a = shape_operator(&h, &xi, &h.metric).unwrap();
        assert!(a.iter().flatten().all(|v| v.abs() < 1e-5));
    }

    #[test]
    fn shape_operator_is_linear_and_checks_normality() {
        let h = second_fundamental_form(&example_hyperbolic(), 0.3, 0.1, STEP).unwrap();
        let m = h.metric;
        let hx = [[1.0, 0.5], [0.5, -2.0]];
        let a1 = shape_operator_matrix(hx, &m).unwrap();
        let a2 = shape_operator_matrix(hx.map(|r| r.map(|v| 2.0 * v)), &m).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert!((a2[i][j] - 2.0 * a1[i][j]).abs() < 1e-12);
            }
        }
        assert!(matches!(shape_operator(&h, &h.fs, &m), Err(GeometryError::NotNormal(_))));
    }

    #[test]
    fn integrability() {
        let (a, b) = integrability_residual(&example_hyperbolic(), 0.2, -0.3, STEP).unwrap();
        assert!(a < 1e-8 && b < 1e-8, "{a} {b}");
        let (a, b) = rotated_integrability_residual(&example_hyperbolic(), 0.2, -0.3, STEP).unwrap();
        assert!(a < 1e-8 && b < 1e-8, "{a} {b}");
        let (a, b) = integrability_residual(&example_flat_positive(), 0.2, -0.3, STEP).unwrap();
        assert!(a < 1e-12 && b < 1e-12);
    }
}
