//! Acceptance run: one PASS/FAIL line per criterion, at the stated
//! tolerances and runtime limits. Run with `--nocapture` to see the lines.

use std::time::{Duration, Instant};

use nksl2::moving_frame::poly::rat;
use nksl2::moving_frame::{nonexistence_certificate, solve_by_factoring, solve_by_resultant};
use nksl2::nk::algebra::tensor_g;
use nksl2::nk::frame::nabla_j_from;
use nksl2::nk::printed::{printed_levi_civita, printed_nabla_j};
use nksl2::nk::{koszul_connection, FrameCoeffs, FrameIndex};
use nksl2::scalar::QSqrt3;
use nksl2::verify::{cmd_frame_case, cmd_structure, cmd_surface, Check, Report, SuiteConfig};

struct Outcome {
    criterion: usize,
    title: &'static str,
    failures: Vec<String>,
}

impl Outcome {
    fn new(criterion: usize, title: &'static str) -> Self {
        Self { criterion, title, failures: Vec::new() }
    }

    fn require(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }

    fn within(&mut self, label: &str, value: f64, limit: f64) {
        self.require(value <= limit, format!("{label}: {value:e} > {limit:e}"));
    }

    fn runtime(&mut self, elapsed: Duration, limit_ms: u128) {
        let ms = elapsed.as_millis();
        self.require(ms < limit_ms, format!("runtime {ms} ms ≥ {limit_ms} ms"));
    }

    fn line(&self) -> String {
        if self.failures.is_empty() {
            format!("PASS criterion {}: {}", self.criterion, self.title)
        } else {
            format!("FAIL criterion {}: {} [{}]", self.criterion, self.title, self.failures.join("; "))
        }
    }
}

fn record<'a>(r: &'a Report, name: &str) -> &'a Check {
    r.check(name).unwrap_or_else(|| panic!("{} has no record {name}", r.suite))
}

fn all_frame() -> impl Iterator<Item = (FrameIndex, FrameIndex)> {
    FrameIndex::ALL.into_iter().flat_map(|i| FrameIndex::ALL.into_iter().map(move |j| (i, j)))
}

fn connection_tables() -> Outcome {
    let mut o = Outcome::new(1, "connection tables exact in Q(√3)");
    let started = Instant::now();
    let koszul = koszul_connection::<QSqrt3>();
    let mut nabla = 0;
    let mut nabla_j = 0;
    for (i, j) in all_frame() {
        if koszul[i.index()][j.index()] == printed_levi_civita::<QSqrt3>(i, j) {
            nabla += 1;
        }
        // The blank table entry is compared with G(E1,F1) = 0.
        let printed = printed_nabla_j::<QSqrt3>(i, j)
            .unwrap_or_else(|| tensor_g(&FrameCoeffs::unit(i), &FrameCoeffs::unit(j)));
        if nabla_j_from(&koszul, i, j) == printed {
            nabla_j += 1;
        }
    }
    o.runtime(started.elapsed(), 1000);
    o.require(nabla == 36, format!("{nabla}/36 connection entries"));
    o.require(nabla_j == 36, format!("{nabla_j}/36 ∇J entries"));
    let cfg = SuiteConfig { samples: 1, ..Default::default() };
    let r = cmd_structure(&cfg).unwrap();
    for name in ["levi-civita-table", "nabla-j-table"] {
        o.within(name, record(&r, name).residual, 0.0);
    }
    o
}

fn nearly_kaehler_axioms(r: &Report) -> Outcome {
    let mut o = Outcome::new(2, "nearly Kähler axioms on 200 samples ≤ 1e-12, exact on the frame");
    for name in ["g-skew-sampled", "pjq-sampled", "metric-conversions-sampled"] {
        o.within(name, record(r, name).residual, 1e-12);
    }
    o.within("nk-axioms-frame", record(r, "nk-axioms-frame").residual, 0.0);
    o.within("tensor-g-vs-nabla-j", record(r, "tensor-g-vs-nabla-j").residual, 0.0);
    o
}

fn curvature(r: &Report) -> Outcome {
    let mut o = Outcome::new(3, "curvature exact on frame triples; ∇G, g(G,G), G∘G ≤ 1e-12");
    o.within("curvature-frame-triples", record(r, "curvature-frame-triples").residual, 0.0);
    o.require(
        record(r, "curvature-frame-triples").witness.as_deref().unwrap_or("").contains("120"),
        "120 distinct triples not reported",
    );
    o.within("g-identities-frame", record(r, "g-identities-frame").residual, 0.0);
    for name in ["nabla-g-sampled", "g-identities-sampled", "curvature-symmetries-sampled"] {
        o.within(name, record(r, name).residual, 1e-12);
    }
    o
}

fn flat_surfaces(cfg: &SuiteConfig) -> Outcome {
    let mut o = Outcome::new(4, "flat surfaces on a 5×5 grid over [-1,1]²");
    let started = Instant::now();
    let reports = ["flat-positive", "flat-negative"].map(|n| cmd_surface(n, cfg).unwrap());
    o.runtime(started.elapsed(), 2000);
    for r in &reports {
        let s = &r.suite;
        o.within(&format!("{s} membership"), record(r, "sl2-membership").residual, 1e-10);
        o.within(&format!("{s} Ft - JFs"), record(r, "almost-complex").residual, 1e-8);
        let p = record(r, "p-tangency");
        o.require(p.pass && p.witness.as_deref().unwrap_or("").contains("p-tangent"), format!("{s} P-tangency"));
        o.within(&format!("{s} h"), record(r, "second-fundamental-form").residual, 1e-6);
        o.within(&format!("{s} K"), record(r, "gauss-curvature").residual, 1e-6);
    }
    o.require(
        record(&reports[1], "metric-signature").witness.as_deref().unwrap_or("").contains("negative definite"),
        "flat-negative is not negative definite",
    );
    o
}

fn hyperbolic_surface(cfg: &SuiteConfig) -> Outcome {
    let mut o = Outcome::new(5, "hyperbolic surface inside radius 0.8, quadric and chart agreement");
    for name in ["hyperbolic-st", "hyperbolic-quadric"] {
        let r = cmd_surface(name, cfg).unwrap();
        let p = record(&r, "p-tangency");
        o.require(p.pass && p.witness.as_deref().unwrap_or("").contains("p-normal"), format!("{name} P-normal"));
        o.within(&format!("{name} h"), record(&r, "second-fundamental-form").residual, 1e-5);
        o.within(&format!("{name} K + 4/3"), record(&r, "gauss-curvature").residual, 1e-4);
        o.within(&format!("{name} quadric"), record(&r, "epsilon-quadric").residual, 1e-10);
        o.within(&format!("{name} charts"), record(&r, "chart-agreement").residual, 1e-10);
    }
    o
}

fn certificate() -> Outcome {
    let mut o = Outcome::new(6, "exact solution set, norms {0, 1/4}, disjoint from 7/12");
    let started = Instant::now();
    let solutions = solve_by_resultant().unwrap();
    let cert = nonexistence_certificate(rat(-5, 9)).unwrap();
    o.runtime(started.elapsed(), 100);

    let q = |n, d| QSqrt3::ratio(n, d);
    let expected = [
        (q(0, 1), q(0, 1)),
        (q(0, 1), q(1, 2)),
        (QSqrt3::sqrt3_times(1, 4), q(-1, 4)),
        (QSqrt3::sqrt3_times(-1, 4), q(-1, 4)),
    ];
    let found: Vec<_> = solutions.iter().map(|s| (s.a2, s.a3)).collect();
    o.require(found.len() == 4, format!("{} solutions", found.len()));
    for e in &expected {
        o.require(found.contains(e), format!("missing ({}, {})", e.0, e.1));
    }
    o.require(solve_by_factoring().unwrap() == solutions, "factoring and resultant routes disagree");
    let mut norms: Vec<String> = solutions.iter().map(|s| s.norm_sq.to_string()).collect();
    norms.sort();
    norms.dedup();
    o.require(norms == ["0", "1/4"], format!("norms {norms:?}"));
    o.require(cert.required_norm_sq == "7/12", format!("constraint {}", cert.required_norm_sq));
    o.require(!cert.any_match, "a solution meets the constraint");
    o
}

fn discrepancy_records(structure: &Report, frame: &Report) -> Outcome {
    let mut o = Outcome::new(7, "discrepancy records with exact witnesses");
    let w = |r: &Report, n: &str| r.check(n).and_then(|c| c.witness.clone()).unwrap_or_default();
    let bracket = w(structure, "info:bracket-e2-e3");
    o.require(bracket.contains("-2E3") && bracket.contains("-2E1"), format!("bracket witness '{bracket}'"));
    let blank = w(structure, "info:blank-nabla-j-e1-f1");
    o.require(blank.contains("empty") && blank.ends_with('0'), format!("blank entry witness '{blank}'"));
    let unique = w(frame, "info:unique-null-solution");
    o.require(unique.contains("unique null") && unique.contains("4 elements"), format!("solution witness '{unique}'"));
    for (r, n) in [(structure, "info:bracket-e2-e3"), (structure, "info:blank-nabla-j-e1-f1"), (frame, "info:unique-null-solution")] {
        o.require(r.check(n).is_some_and(|c| c.is_info() && c.pass), format!("{n} is not an informational record"));
    }
    o
}

#[test]
fn acceptance() {
    let mut outcomes = vec![connection_tables()];

    let structure_cfg = SuiteConfig { tol: 1e-12, samples: 200, ..Default::default() };
    let structure = cmd_structure(&structure_cfg).unwrap();
    outcomes.push(nearly_kaehler_axioms(&structure));
    outcomes.push(curvature(&structure));

    let surface_cfg = SuiteConfig { grid: 5, ..Default::default() };
    outcomes.push(flat_surfaces(&surface_cfg));
    outcomes.push(hyperbolic_surface(&surface_cfg));
    outcomes.push(certificate());

    let frame = cmd_frame_case(&SuiteConfig::default()).unwrap();
    outcomes.push(discrepancy_records(&structure, &frame));

    for o in &outcomes {
        println!("{}", o.line());
    }
    let failed: Vec<_> = outcomes.iter().filter(|o| !o.failures.is_empty()).map(|o| o.criterion).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
