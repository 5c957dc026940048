//! `nksl2`: runs the verification suites and prints a report.
//!
//! Exit status: 0 when every check passes, 1 when any check fails,
//! 2 on a usage error.

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use nksl2::error::GeometryError;
use nksl2::verify::{self, Format, Report, SuiteConfig};

#[derive(Parser, Debug)]
#[command(name = "nksl2", version, about = "Verification harness for the nearly Kähler SL(2,R) x SL(2,R)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Structure tensors, connection tables and curvature.
    Structure,
    /// Almost complex surface checks for a registered immersion.
    Surface { name: String },
    /// Adapted-frame tables, Gauss constraint and the parallel-surface certificate.
    FrameCase,
    /// Every suite.
    All,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(clap::Args, Debug)]
struct Opts {
    /// Tolerance for algebraic and first-order checks.
    #[arg(long, global = true, default_value_t = 1e-8)]
    tol: f64,
    /// Tolerance for curvature and second-order checks.
    #[arg(long, global = true, default_value_t = 1e-4)]
    curv_tol: f64,
    /// Finite-difference step.
    #[arg(long, global = true, default_value_t = 1e-3)]
    step: f64,
    /// Grid points per axis for surface sweeps.
    #[arg(long, global = true, default_value_t = 5)]
    grid: usize,
    #[arg(long, global = true, default_value_t = 2024)]
    seed: u64,
    /// Random samples for the structure suite.
    #[arg(long, global = true, default_value_t = 200)]
    samples: usize,
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Restrict `all` to one surface.
    #[arg(long, global = true)]
    surface: Option<String>,
    /// Report elapsed_ms as 0 so output is byte-stable.
    #[arg(long, global = true)]
    no_timing: bool,
}

impl Opts {
    fn config(&self) -> SuiteConfig {
        SuiteConfig {
            tol: self.tol,
            curv_tol: self.curv_tol,
            step: self.step,
            grid: self.grid,
            seed: self.seed,
            samples: self.samples,
            format: match self.format {
                FormatArg::Text => Format::Text,
                FormatArg::Json => Format::Json,
            },
            surface: self.surface.clone(),
            timing: !self.no_timing,
        }
    }
}

fn run(cli: &Cli) -> Result<Report, GeometryError> {
    let cfg = cli.opts.config();
    cfg.validate()?;
    match &cli.command {
        Command::Structure => verify::cmd_structure(&cfg),
        Command::Surface { name } => verify::cmd_surface(name, &cfg),
        Command::FrameCase => verify::cmd_frame_case(&cfg),
        Command::All => verify::cmd_report_all(&cfg),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(report) => {
            let mut out = report.render();
            if !out.ends_with('\n') {
                out.push('\n');
            }
            // A closed pipe (e.g. `| head`) is not an error worth reporting.
            let _ = std::io::stdout().lock().write_all(out.as_bytes());
            ExitCode::from(if report.pass { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
