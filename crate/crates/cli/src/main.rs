//! `cm`: batch front end for metric affine space computations.
//!
//! Every command reads JSON inputs (or `-` for stdin), writes a report to
//! stdout and diagnostics to stderr. Exit codes: 0 success, 2 parse error,
//! 3 invariant violation, 4 reference/dimension error, 5 singular metric.

mod commands;
mod error;
mod input;
mod report;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use cmgeom::Tolerances;

use crate::commands::Context;
use crate::error::{CliError, CliResult};

#[derive(Parser)]
#[command(
    name = "cm",
    version,
    about = "Cayley-Menger toolkit for metric affine spaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct MetricArgs {
    /// Metric space file: {"n": .., "D": [[..]]}
    #[arg(long, value_name = "FILE")]
    metric: String,
    /// Emit the machine-readable JSON report
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ValuesArgs {
    #[command(flatten)]
    base: MetricArgs,
    /// Comma-separated values at R_0, ..., R_n
    #[arg(long, value_name = "v0,v1,..", allow_hyphen_values = true)]
    values: String,
}

#[derive(Subcommand)]
enum Command {
    /// Check a distance matrix and report inertia, non-degeneracy and radical
    Validate(MetricArgs),
    /// Squared pseudodistance between two named points
    Dist {
        #[command(flatten)]
        base: MetricArgs,
        /// Point file: {"points": [{"name": .., "coords": [..]}]}
        #[arg(long, value_name = "FILE")]
        points: Option<String>,
        /// First point (a name from the point file, or R0..Rn)
        p: String,
        /// Second point
        q: String,
    },
    /// Recover a point from its Cayley-Menger coordinates
    Localize(ValuesArgs),
    /// Fit a sphere to referential values of a quadratic function
    SphereFit(ValuesArgs),
    /// Cayley-Menger matrix and its signature
    CmMatrix(MetricArgs),
    /// Signature of the Cayley-Menger form versus the metric inertia
    Signature(MetricArgs),
    /// Pseudo-Euclidean coordinates realizing the metric
    Embed(MetricArgs),
    /// Pull the metric back along an affine map and check functoriality
    Functorial {
        #[command(flatten)]
        base: MetricArgs,
        /// Map file: {"map": [[..]]}, (n+1) rows
        #[arg(long, value_name = "FILE")]
        map: String,
    },
    /// Build a quadratic function from its values at the referential and midpoints
    Interpolate {
        /// Values file: {"values": [[..]]}
        #[arg(long, value_name = "FILE")]
        values: String,
        #[arg(long)]
        json: bool,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Validate(_) => "validate",
            Command::Dist { .. } => "dist",
            Command::Localize(_) => "localize",
            Command::SphereFit(_) => "sphere-fit",
            Command::CmMatrix(_) => "cm-matrix",
            Command::Signature(_) => "signature",
            Command::Embed(_) => "embed",
            Command::Functorial { .. } => "functorial",
            Command::Interpolate { .. } => "interpolate",
        }
    }

    fn json(&self) -> bool {
        match self {
            Command::Validate(a)
            | Command::CmMatrix(a)
            | Command::Signature(a)
            | Command::Embed(a) => a.json,
            Command::Localize(v) | Command::SphereFit(v) => v.base.json,
            Command::Dist { base, .. } | Command::Functorial { base, .. } => base.json,
            Command::Interpolate { json, .. } => *json,
        }
    }
}

fn tolerances_from_env() -> CliResult<Tolerances> {
    match std::env::var("CM_TOL") {
        Err(_) => Ok(Tolerances::default()),
        Ok(text) => match text.trim().parse::<f64>() {
            Ok(base) if base.is_finite() && base > 0.0 => Ok(Tolerances::new(base)),
            _ => Err(CliError::parse(format!(
                "CM_TOL must be a positive number, got {text:?}"
            ))),
        },
    }
}

fn run(command: &Command, tol: Tolerances) -> CliResult<report::Report> {
    let ctx = Context { tol };
    match command {
        Command::Validate(a) => ctx.validate(&a.metric),
        Command::Dist { base, points, p, q } => ctx.dist(&base.metric, points.as_deref(), p, q),
        Command::Localize(v) => ctx.localize(&v.base.metric, &v.values),
        Command::SphereFit(v) => ctx.sphere_fit(&v.base.metric, &v.values),
        Command::CmMatrix(a) => ctx.cm_matrix(&a.metric, "cm-matrix"),
        Command::Signature(a) => ctx.cm_matrix(&a.metric, "signature"),
        Command::Embed(a) => ctx.embed(&a.metric),
        Command::Functorial { base, map } => ctx.functorial(&base.metric, map),
        Command::Interpolate { values, .. } => ctx.interpolate(values),
    }
}

fn emit(value: &serde_json::Value, json: bool) {
    let text = if json {
        serde_json::to_string_pretty(value).expect("report serializes") + "\n"
    } else {
        report::render_text(value)
    };
    // A closed pipe (e.g. `| head`) is not an error worth a panic.
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.command.json();
    let name = cli.command.name();

    match tolerances_from_env().and_then(|tol| run(&cli.command, tol)) {
        Ok(report) => {
            for w in &report.warnings {
                eprintln!("warning: {w}");
            }
            emit(&report.to_json(), json);
            ExitCode::SUCCESS
        }
        Err(err) => {
            let tol = tolerances_from_env().unwrap_or_default();
            match &err.path {
                Some(path) => eprintln!("error: {} (at {path})", err.message),
                None => eprintln!("error: {}", err.message),
            }
            emit(&report::error_report(name, &err, &tol), json);
            ExitCode::from(err.kind.code() as u8)
        }
    }
}
