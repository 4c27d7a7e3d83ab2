//! `mubgeo`: build, verify and transform the geometry-underpinned operators
//! of a prime-dimensional Hilbert space.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 bad input.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use mubgeo::formats::{
    matrix_from_json, matrix_to_json, probabilities_from_csv, probabilities_to_csv, quasi_from_csv, quasi_to_csv,
    quasi_to_json, MatrixFile,
};
use mubgeo::geometry::{self, line_points, lines_through_point};
use mubgeo::mub::{self, mub_state};
use mubgeo::operators::{self, line_operator_direct, point_operator};
use mubgeo::phasespace::DensityMatrix;
use mubgeo::{AxiomReport, LineLabel, Modulus, PhaseSpace64, PointLabel, QuasiDistribution64, Tolerance64};

#[derive(Parser)]
#[command(
    name = "mubgeo",
    version,
    about = "Finite-geometry operators of prime-dimensional Hilbert spaces"
)]
struct Cli {
    /// Comparison tolerance.
    #[arg(long, global = true, env = "MUBGEO_EPS", default_value_t = 1e-10)]
    eps: f64,

    /// Output format for distributions.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Scope {
    Geometry,
    Mub,
    Operators,
    Duality,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ShowKind {
    /// Points on the line `--j`.
    Line,
    /// Lines through the point `--alpha`.
    Point,
    /// `P_j` for `--j`, or `A_α` for `--alpha`.
    Operator,
    /// The MUB state `|m;b>` for `--alpha`, as a d×1 matrix.
    State,
}

#[derive(Subcommand)]
enum Command {
    /// Run the exhaustive verifiers and print a JSON report.
    Verify {
        #[arg(long, value_enum, default_value_t = Scope::All)]
        scope: Scope,
        #[arg(long)]
        d: u64,
    },
    /// Print incidences, operators or states.
    Show {
        #[arg(value_enum)]
        kind: ShowKind,
        #[arg(long)]
        d: u64,
        /// Line label `m_minus1,m0`.
        #[arg(long, allow_hyphen_values = true)]
        j: Option<String>,
        /// Point label `m,b` (`b = -1` for the computational basis).
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
    },
    /// Map a Hermitian matrix to its quasi-distribution over lines.
    Map {
        #[arg(long)]
        d: u64,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Rebuild a matrix from a quasi-distribution CSV.
    Reconstruct {
        #[arg(long)]
        d: u64,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// MUB probabilities `tr(ρ A_α)` of a density matrix, as CSV.
    Probabilities {
        #[arg(long)]
        d: u64,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Quasi-distribution and density matrix from MUB probabilities.
    Tomography {
        #[arg(long)]
        d: u64,
        /// Probabilities CSV with header `m,b,value`.
        #[arg(long)]
        input: PathBuf,
        /// Reconstructed matrix (JSON).
        #[arg(long)]
        output: Option<PathBuf>,
        /// Quasi-distribution (CSV).
        #[arg(long)]
        quasi_output: Option<PathBuf>,
    },
}

enum Outcome {
    Success,
    ChecksFailed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::ChecksFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<Outcome> {
    let tol = Tolerance64::new(cli.eps)?;
    match cli.command {
        Command::Verify { scope, d } => verify(scope, modulus(d)?, tol),
        Command::Show { kind, d, j, alpha } => {
            show(kind, modulus(d)?, j.as_deref(), alpha.as_deref())?;
            Ok(Outcome::Success)
        }
        Command::Map { d, input, output } => {
            let ps = PhaseSpace64::with_tolerance(modulus(d)?, tol);
            let m = read_matrix(&input, ps.modulus())?;
            let v = ps.map_operator(&m).context("cannot map input")?;
            emit(output.as_deref(), &render_quasi(&v, cli.format))?;
            Ok(Outcome::Success)
        }
        Command::Reconstruct { d, input, output } => {
            let ps = PhaseSpace64::with_tolerance(modulus(d)?, tol);
            let v = quasi_from_csv(ps.modulus(), &read(&input)?)
                .with_context(|| format!("invalid quasi-distribution {}", input.display()))?;
            emit(output.as_deref(), &matrix_to_json(&ps.reconstruct(&v)?))?;
            Ok(Outcome::Success)
        }
        Command::Probabilities { d, input, output } => {
            let ps = PhaseSpace64::with_tolerance(modulus(d)?, tol);
            let rho = DensityMatrix::new(read_matrix(&input, ps.modulus())?, tol)?;
            emit(
                output.as_deref(),
                &probabilities_to_csv(&ps.probabilities_from_state(&rho)?),
            )?;
            Ok(Outcome::Success)
        }
        Command::Tomography {
            d,
            input,
            output,
            quasi_output,
        } => {
            let ps = PhaseSpace64::with_tolerance(modulus(d)?, tol);
            let p = probabilities_from_csv(ps.modulus(), &read(&input)?)
                .with_context(|| format!("invalid probabilities {}", input.display()))?;
            let (v, rho) = ps.tomography(&p)?;
            emit(quasi_output.as_deref(), &render_quasi(&v, cli.format))?;
            emit(output.as_deref(), &matrix_to_json(&rho))?;
            Ok(Outcome::Success)
        }
    }
}

fn modulus(d: u64) -> Result<Modulus> {
    Modulus::new(d).map_err(|e| anyhow!("--d {d}: {e}"))
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn read_matrix(path: &Path, d: Modulus) -> Result<mubgeo::CMatrix64> {
    let m = matrix_from_json(&read(path)?).with_context(|| format!("invalid matrix file {}", path.display()))?;
    if m.dim() != d.dim() {
        bail!(
            "matrix in {} is {}x{}, expected d={d}",
            path.display(),
            m.dim(),
            m.dim()
        );
    }
    Ok(m)
}

fn emit(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("cannot write {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn render_quasi(v: &QuasiDistribution64, format: Format) -> String {
    match format {
        Format::Csv => quasi_to_csv(v),
        Format::Json => quasi_to_json(v),
    }
}

fn parse_pair(s: &str, flag: &str) -> Result<(i64, i64)> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| anyhow!("{flag} expects two comma-separated integers, got {s:?}"))?;
    let parse = |x: &str| {
        x.trim()
            .parse::<i64>()
            .with_context(|| format!("{flag}: bad integer {x:?}"))
    };
    Ok((parse(a)?, parse(b)?))
}

fn line_arg(d: Modulus, j: Option<&str>) -> Result<LineLabel> {
    let (a, b) = parse_pair(j.ok_or_else(|| anyhow!("--j is required"))?, "--j")?;
    Ok(LineLabel::from_ints(d, a, b)?)
}

fn point_arg(d: Modulus, alpha: Option<&str>) -> Result<PointLabel> {
    let (m, b) = parse_pair(alpha.ok_or_else(|| anyhow!("--alpha is required"))?, "--alpha")?;
    Ok(PointLabel::from_ints(d, m, b)?)
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn show(kind: ShowKind, d: Modulus, j: Option<&str>, alpha: Option<&str>) -> Result<()> {
    match kind {
        ShowKind::Line => println!("{}", join(line_points(line_arg(d, j)?))),
        ShowKind::Point => println!("{}", join(lines_through_point(point_arg(d, alpha)?))),
        ShowKind::Operator => {
            let m = match (j, alpha) {
                (Some(_), None) => line_operator_direct::<f64>(line_arg(d, j)?).matrix,
                (None, Some(_)) => point_operator::<f64>(point_arg(d, alpha)?).matrix,
                _ => bail!("show operator takes exactly one of --j or --alpha"),
            };
            print!("{}", matrix_to_json(&m));
        }
        ShowKind::State => {
            let s = mub_state::<f64>(point_arg(d, alpha)?);
            print!("{}", MatrixFile::from_state(&s).to_json());
        }
    }
    Ok(())
}

fn verify(scope: Scope, d: Modulus, tol: Tolerance64) -> Result<Outcome> {
    let want = |s: Scope| scope == s || scope == Scope::All;
    let mut report = AxiomReport::new(d.get());
    if want(Scope::Geometry) {
        report.merge(geometry::verify_dapg_axioms(d));
        report.merge(geometry::verify_apg_axioms(d));
    }
    if want(Scope::Duality) {
        report.merge(geometry::verify_duality(d));
    }
    if want(Scope::Mub) {
        report.merge(mub::verify_eigenrelation(d, tol));
        report.merge(mub::verify_unbiasedness(d, tol));
    }
    if want(Scope::Operators) {
        report.merge(operators::verify_operator_identities(d, tol));
    }
    println!("{}", report.to_json());
    let n = d.dim();
    eprintln!(
        "d={d}: {} lines, {} points; {} checks over {} cases; {}",
        n * n,
        n * (n + 1),
        report.checks.len(),
        report.total_cases(),
        if report.passed { "all passed" } else { "FAILED" }
    );
    for c in report.failures() {
        eprintln!("  {}: {}", c.axiom, c.counterexample);
    }
    Ok(if report.passed {
        Outcome::Success
    } else {
        Outcome::ChecksFailed
    })
}
