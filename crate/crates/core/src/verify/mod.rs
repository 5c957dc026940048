//! Verification suites and their reports.
//!
//! Each suite returns a [`Report`] of named [`Check`]s in a fixed order.
//! Failures are recorded, never raised, so one run gives the full picture.

use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;

use crate::error::{GeometryError, Result};

pub mod frame_case;
pub mod structure;
pub mod surface;

pub use frame_case::cmd_frame_case;
pub use structure::cmd_structure;
pub use surface::cmd_surface;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteConfig {
    /// Tolerance for algebraic and first-order checks.
    pub tol: f64,
    /// Tolerance for curvature and second-order checks.
    pub curv_tol: f64,
    pub step: f64,
    /// Grid points per axis for surface sweeps.
    pub grid: usize,
    pub seed: u64,
    pub samples: usize,
    pub format: Format,
    /// Restricts `all` to one registered surface.
    pub surface: Option<String>,
    /// When false, `elapsed_ms` is written as 0 for byte-stable output.
    pub timing: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            tol: 1e-8,
            curv_tol: 1e-4,
            step: 1e-3,
            grid: 5,
            seed: 2024,
            samples: 200,
            format: Format::Text,
            surface: None,
            timing: true,
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        let positive = |name: &str, v: f64| {
            if v > 0.0 && v.is_finite() {
                Ok(())
            } else {
                Err(GeometryError::InvalidConfig(format!("{name} must be positive, got {v}")))
            }
        };
        positive("tol", self.tol)?;
        positive("curv-tol", self.curv_tol)?;
        positive("step", self.step)?;
        if self.step > 0.05 {
            return Err(GeometryError::InvalidConfig(format!("step {} is too large (max 0.05)", self.step)));
        }
        if self.grid == 0 || self.samples == 0 {
            return Err(GeometryError::InvalidConfig("grid and samples must be at least 1".into()));
        }
        if let Some(name) = &self.surface {
            crate::surface::lookup(name)?;
        }
        Ok(())
    }
}

/// Decimal rendering used for residuals and tolerances.
pub fn decimal(x: f64) -> String {
    if x == 0.0 {
        "0".into()
    } else if x.is_nan() {
        "NaN".into()
    } else if x.is_infinite() {
        "inf".into()
    } else {
        format!("{x:.6e}")
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub max_residual: String,
    pub tolerance: String,
    pub pass: bool,
    pub witness: Option<String>,
    /// Numeric residual behind `max_residual`.
    #[serde(skip)]
    pub residual: f64,
}

impl Check {
    /// Passes iff `residual ≤ tol`; NaN fails.
    pub fn measured(name: impl Into<String>, residual: f64, tol: f64, witness: Option<String>) -> Self {
        Self {
            name: name.into(),
            max_residual: decimal(residual),
            tolerance: decimal(tol),
            pass: residual <= tol,
            witness,
            residual,
        }
    }

    /// An exact comparison; `residual` is the largest exact difference.
    pub fn exact(name: impl Into<String>, residual: f64, witness: Option<String>) -> Self {
        Self::measured(name, residual, 0.0, witness)
    }

    /// A pass/fail outcome with no natural residual.
    pub fn verdict(name: impl Into<String>, ok: bool, witness: String) -> Self {
        Self::exact(name, if ok { 0.0 } else { 1.0 }, Some(witness))
    }

    /// An informational record; always passes.
    pub fn info(name: impl Into<String>, witness: String) -> Self {
        Self::exact(format!("info:{}", name.into()), 0.0, Some(witness))
    }

    pub fn is_info(&self) -> bool {
        self.name.contains("info:")
    }

    fn prefixed(mut self, prefix: &str) -> Self {
        self.name = format!("{prefix}/{}", self.name);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub suite: String,
    pub config: SuiteConfig,
    pub checks: Vec<Check>,
    pub pass: bool,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn new(suite: impl Into<String>, cfg: &SuiteConfig, checks: Vec<Check>, started: Instant) -> Self {
        let pass = checks.iter().all(|c| c.pass);
        let elapsed_ms = if cfg.timing { started.elapsed().as_millis() as u64 } else { 0 };
        Self { suite: suite.into(), config: cfg.clone(), checks, pass, elapsed_ms }
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "suite: {}", self.suite);
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            let status = if c.is_info() {
                "INFO"
            } else if c.pass {
                "PASS"
            } else {
                "FAIL"
            };
            let _ = write!(
                out,
                "  {status}  {:<width$}  residual {:>13}  tol {:>13}",
                c.name, c.max_residual, c.tolerance
            );
            if let Some(w) = &c.witness {
                let _ = write!(out, "  {w}");
            }
            out.push('\n');
        }
        let failed = self.failures().len();
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        let _ = writeln!(
            out,
            "{verdict}: {} checks, {failed} failed, {} ms",
            self.checks.len(),
            self.elapsed_ms
        );
        out
    }

    pub fn render(&self) -> String {
        match self.config.format {
            Format::Text => self.to_text(),
            Format::Json => self.to_json(),
        }
    }
}

/// Surfaces covered by `all`: the configured one, or the whole registry.
fn surfaces_for(cfg: &SuiteConfig) -> Vec<String> {
    match &cfg.surface {
        Some(s) => vec![s.clone()],
        None => crate::surface::REGISTRY.iter().map(|s| s.to_string()).collect(),
    }
}

/// Every suite, concatenated with suite-prefixed check names.
pub fn cmd_report_all(cfg: &SuiteConfig) -> Result<Report> {
    cfg.validate()?;
    let started = Instant::now();
    let mut checks = Vec::new();
    let sub = cmd_structure(cfg)?;
    checks.extend(sub.checks.into_iter().map(|c| c.prefixed("structure")));
    for name in surfaces_for(cfg) {
        let sub = cmd_surface(&name, cfg)?;
        checks.extend(sub.checks.into_iter().map(|c| c.prefixed(&format!("surface:{name}"))));
    }
    let sub = cmd_frame_case(cfg)?;
    checks.extend(sub.checks.into_iter().map(|c| c.prefixed("frame-case")));
    Ok(Report::new("all", cfg, checks, started))
}

/// Max of a slice, propagating NaN.
pub(crate) fn max_of(xs: impl IntoIterator<Item = f64>) -> f64 {
    xs.into_iter().fold(0.0, |m, x| if x.is_nan() || m.is_nan() { f64::NAN } else { m.max(x) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_validation() {
        assert!(SuiteConfig::default().validate().is_ok());
        let bad = SuiteConfig { tol: 0.0, ..Default::default() };
        assert!(matches!(bad.validate(), Err(GeometryError::InvalidConfig(_))));
        let bad = SuiteConfig { grid: 0, ..Default::default() };
        assert!(bad.validate().is_err());
        let bad = SuiteConfig { surface: Some("torus".into()), ..Default::default() };
        assert!(matches!(bad.validate(), Err(GeometryError::UnknownSurface { .. })));
    }

    #[test]
    fn check_semantics() {
        assert!(Check::measured("a", 1e-9, 1e-8, None).pass);
        assert!(!Check::measured("a", f64::NAN, 1e-8, None).pass);
        assert!(!Check::exact("a", 1e-300, None).pass);
        assert!(Check::info("x", "w".into()).pass);
        assert_eq!(decimal(0.0), "0");
        assert_eq!(decimal(1.5e-9), "1.500000e-9");
    }

    #[test]
    fn max_propagates_nan() {
        assert!(max_of([1.0, f64::NAN, 0.5]).is_nan());
        assert_eq!(max_of([1.0, 3.0]), 3.0);
        assert_eq!(max_of([]), 0.0);
    }
}
