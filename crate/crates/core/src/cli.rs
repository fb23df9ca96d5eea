//! Command-line front end. The binary is a thin wrapper around [`run`].
//!
//! Exit codes: 0 success, 1 verification failure, 2 invalid input, 3 I/O error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bruhat::schubert_dim;
use crate::curve_nbhd::{gamma, quantum_report_with_cap};
use crate::error::{Error, Result};
use crate::moment_graph::{GraphKind, MomentGraph, DEFAULT_SIZE_CAP};
use crate::root_system::{DegreeVector, FlagContext};
use crate::verify::{grid, reports_to_json, reports_to_table, run_grid};
use crate::weyl::{enumerate_wodd, enumerate_wp, CosetRep, Notation};

/// Environment variable overriding the default `|W^P|` size cap.
pub const SIZE_CAP_ENV: &str = "ODDFLAG_SIZE_CAP";

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "oddflag",
    version,
    about = "Moment graphs and curve neighborhoods of IF(1..m;2n+1)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Rendering of barred values in heads.
    #[arg(long, global = true, value_enum, default_value_t = NotationArg::Bar)]
    notation: NotationArg,

    /// Worker threads (0 = rayon default). Does not affect output.
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,

    /// Refuse instances with |W^P| above this bound.
    #[arg(long, global = true)]
    size_cap: Option<u128>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List W^P (or W^odd) with Schubert dimensions.
    Enumerate {
        #[command(flatten)]
        point: Point,
        /// Restrict to W^odd.
        #[arg(long)]
        odd: bool,
    },
    /// Export a moment graph.
    Graph {
        #[command(flatten)]
        point: Point,
        #[arg(long, value_enum, default_value_t = KindArg::Odd)]
        kind: KindArg,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
        /// Output file (stdout when absent).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Curve neighborhood of a Schubert variety as JSON.
    Neighborhood {
        #[command(flatten)]
        point: Point,
        /// Head such as "1|2" or "b3|2".
        #[arg(long = "lambda")]
        lambda: String,
        /// Comma-separated degree, or "1^m".
        #[arg(long)]
        degree: String,
        #[arg(long, value_enum, default_value_t = KindArg::Odd)]
        kind: KindArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run all checks over a grid; exit 0 iff every check passes.
    Verify {
        /// Range of n, "a..b"; every 1 <= m <= n is included.
        #[arg(long, default_value = "1..5")]
        grid: String,
        /// Single point instead of a grid (requires -m).
        #[arg(short, requires = "m")]
        n: Option<usize>,
        #[arg(short, requires = "n")]
        m: Option<usize>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Table)]
        format: ReportFormat,
    },
    /// The q_1⋯q_m part of τ_Div ⋆ τ_id.
    Report {
        #[command(flatten)]
        point: Point,
        #[arg(long, value_enum, default_value_t = ReportFormat::Table)]
        format: ReportFormat,
    },
}

#[derive(Args, Debug)]
struct Point {
    #[arg(short)]
    n: usize,
    #[arg(short)]
    m: usize,
}

impl Point {
    fn ctx(&self) -> Result<FlagContext> {
        FlagContext::new(self.n, self.m)
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum NotationArg {
    Raw,
    Bar,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum KindArg {
    Even,
    Odd,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Format {
    Dot,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ReportFormat {
    Table,
    Json,
}

impl From<KindArg> for GraphKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Even => GraphKind::Even,
            KindArg::Odd => GraphKind::Odd,
        }
    }
}

/// Parses `1,0,1` or the shorthand `k^m` / `k^<count>`.
pub fn parse_degree(s: &str, ctx: &FlagContext) -> Result<DegreeVector> {
    let bad = || Error::Parse(format!("bad degree {s:?}"));
    let d = if let Some((value, count)) = s.split_once('^') {
        let value: u32 = value.trim().parse().map_err(|_| bad())?;
        let count = match count.trim() {
            "m" => ctx.m,
            c => c.parse().map_err(|_| bad())?,
        };
        DegreeVector(vec![value; count])
    } else {
        DegreeVector(
            s.split(',')
                .map(|t| t.trim().parse::<u32>().map_err(|_| bad()))
                .collect::<Result<_>>()?,
        )
    };
    if d.len() != ctx.m {
        return Err(Error::DegreeLength {
            got: d.len(),
            expected: ctx.m,
        });
    }
    Ok(d)
}

/// Parses `a..b` into `(a, b)`.
pub fn parse_grid(s: &str) -> Result<(usize, usize)> {
    let bad = || Error::Parse(format!("bad grid {s:?}, expected \"a..b\""));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let a: usize = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim().parse().map_err(|_| bad())?;
    if a == 0 || a > b {
        return Err(bad());
    }
    Ok((a, b))
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Io(_) => EXIT_IO,
        Error::ComponentMismatch { .. } => EXIT_VERIFY_FAILED,
        _ => EXIT_INVALID,
    }
}

fn emit(text: &str, out_path: Option<&PathBuf>, stdout: &mut Vec<u8>) -> Result<()> {
    match out_path {
        Some(p) => std::fs::write(p, text)?,
        None => stdout.extend_from_slice(text.as_bytes()),
    }
    Ok(())
}

fn size_cap(flag: Option<u128>) -> Result<u128> {
    if let Some(c) = flag {
        return Ok(c);
    }
    match std::env::var(SIZE_CAP_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("{SIZE_CAP_ENV}={v:?} is not an integer"))),
        Err(_) => Ok(DEFAULT_SIZE_CAP),
    }
}

fn execute(cli: Cli, stdout: &mut Vec<u8>) -> Result<i32> {
    let notation = match cli.notation {
        NotationArg::Raw => Notation::Raw,
        NotationArg::Bar => Notation::Bar,
    };
    let cap = size_cap(cli.size_cap)?;
    match cli.command {
        Command::Enumerate { point, odd } => {
            let ctx = point.ctx()?;
            crate::moment_graph::check_size(&ctx, cap)?;
            let reps = if odd {
                enumerate_wodd(&ctx)
            } else {
                enumerate_wp(&ctx)
            };
            let mut text = String::new();
            for r in reps {
                text.push_str(&format!(
                    "{}\t{}\n",
                    r.render(&ctx, notation),
                    schubert_dim(&r, &ctx)?
                ));
            }
            emit(&text, None, stdout)?;
        }
        Command::Graph {
            point,
            kind,
            format,
            out,
        } => {
            let g = MomentGraph::build_with_cap(point.ctx()?, kind.into(), cap)?;
            let text = match format {
                Format::Dot => g.to_dot(notation),
                Format::Json => g.to_json(notation)?,
            };
            emit(&text, out.as_ref(), stdout)?;
        }
        Command::Neighborhood {
            point,
            lambda,
            degree,
            kind,
            out,
        } => {
            let ctx = point.ctx()?;
            let lambda = CosetRep::parse(&lambda, &ctx)?;
            let degree = parse_degree(&degree, &ctx)?;
            let g = MomentGraph::build_with_cap(ctx, kind.into(), cap)?;
            let result = gamma(&g, &lambda, &degree)?;
            emit(&result.to_json(notation)?, out.as_ref(), stdout)?;
        }
        Command::Verify {
            grid: spec,
            n,
            m,
            format,
        } => {
            let points = match (n, m) {
                (Some(n), Some(m)) => vec![FlagContext::new(n, m)?],
                _ => {
                    let (a, b) = parse_grid(&spec)?;
                    grid(a, b)?
                }
            };
            let reports = run_grid(&points, cap)?;
            let text = match format {
                ReportFormat::Table => reports_to_table(&reports, notation),
                ReportFormat::Json => reports_to_json(&reports, notation)?,
            };
            emit(&text, None, stdout)?;
            if reports.iter().any(|r| !r.passed) {
                return Ok(EXIT_VERIFY_FAILED);
            }
        }
        Command::Report { point, format } => {
            let report = quantum_report_with_cap(point.ctx()?, cap)?;
            let text = match format {
                ReportFormat::Table => report.render_text(notation),
                ReportFormat::Json => report.to_json(notation)?,
            };
            emit(&text, None, stdout)?;
        }
    }
    Ok(EXIT_OK)
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
        }
    };
    let workers = cli.workers;
    let mut buf = Vec::new();
    let outcome = if workers > 0 {
        match rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
            Ok(pool) => pool.install(|| execute(cli, &mut buf)),
            Err(e) => {
                let _ = writeln!(stderr, "error: {e}");
                return EXIT_INVALID;
            }
        }
    } else {
        execute(cli, &mut buf)
    };
    if let Err(e) = stdout.write_all(&buf).and_then(|_| stdout.flush()) {
        let _ = writeln!(stderr, "error: {e}");
        return EXIT_IO;
    }
    match outcome {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}
