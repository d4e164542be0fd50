//! `nilsol`: analyse nilpotent Lie algebras from structure-constant files.
//!
//! `analyze` exits 0 for a soliton, 1 for a nonsoliton and 2 when the test
//! does not apply. Malformed input exits 64; other failures exit above 64.

mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use nilsol_core::claims::{reproduce, ReproduceOptions};
use nilsol_core::exactla::parse_rational;
use nilsol_core::{
    family_extended, parse_algebra, serialize, DiagonalMetric, Error, LieAlgebra, Rational,
    SolitonVerdict,
};
use serde::Serialize;

use report::{AnalysisReport, DerReport, FamilyReport, GramReport, ReproduceReport, RicciReport};

const EX_USAGE: u8 = 64;
const EX_DATAERR: u8 = 65;
const EX_NOINPUT: u8 = 66;
const EX_CANTCREAT: u8 = 73;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "nilsol",
    version,
    about = "Exact soliton and derivation analysis for nilpotent Lie algebras"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Full report: type, Gram matrix, soliton verdict, Der(g), pre-Einstein derivation.
    Analyze { file: PathBuf },
    /// Generate a family member and analyse it.
    Family {
        /// Base dimension, 8 or 9.
        #[arg(long)]
        m: u32,
        /// Number of Heisenberg generator pairs.
        #[arg(long, default_value_t = 0)]
        k: usize,
        /// Positive rational parameter.
        #[arg(long, value_parser = rational, default_value = "1")]
        q: Rational,
        /// Write the structure-constant file here instead of stdout.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Recompute the tabulated claims and report each one.
    Reproduce {
        #[arg(long, value_parser = rational, default_value = "1")]
        q: Rational,
        #[arg(long, default_value_t = 2)]
        max_k: usize,
    },
    /// Index set and Gram matrix of root vectors.
    Gram { file: PathBuf },
    /// Basis of the derivation algebra.
    Der { file: PathBuf },
    /// Ricci form and endomorphism of a diagonal inner product.
    Ricci {
        file: PathBuf,
        /// Squared norms of the basis vectors, comma or space separated. Defaults to all 1.
        #[arg(long)]
        metric: Option<String>,
    },
}

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

/// Failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidParameter(_)
            | Error::NonPositiveMetric
            | Error::DimensionMismatch { .. } => EX_USAGE,
            _ => EX_DATAERR,
        };
        Failure::new(code, e.to_string())
    }
}

fn load(path: &Path) -> Result<LieAlgebra, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::new(EX_NOINPUT, format!("{}: {e}", path.display())))?;
    parse_algebra(&text).map_err(|e| {
        let mut message = format!("{}: {e}", path.display());
        if let Error::JacobiViolation(defects) = &e {
            for d in defects {
                message.push_str(&format!("\n  {d}"));
            }
        }
        Failure::new(EX_USAGE, message)
    })
}

fn emit<T: Serialize>(format: Format, value: &T, text: impl FnOnce() -> String) {
    match format {
        Format::Text => print!("{}", text()),
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(value).expect("report serializes")
        ),
    }
}

fn parse_metric(spec: Option<&str>, n: usize) -> Result<DiagonalMetric, Failure> {
    let Some(spec) = spec else {
        return Ok(DiagonalMetric::identity(n));
    };
    let q = spec
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| parse_rational(s).map_err(|e| Failure::new(EX_USAGE, format!("--metric: {e}"))))
        .collect::<Result<Vec<_>, _>>()?;
    if q.len() != n {
        return Err(Failure::new(
            EX_USAGE,
            format!(
                "--metric has {} entries for a {n}-dimensional algebra",
                q.len()
            ),
        ));
    }
    Ok(DiagonalMetric::new(q)?)
}

#[derive(Serialize)]
struct FamilyOutput<'a> {
    algebra: &'a str,
    report: &'a FamilyReport,
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let format = cli.format;
    match cli.command {
        Command::Analyze { file } => {
            let g = load(&file)?;
            if let Err(e) = g.nilpotency_type() {
                return Err(e.into());
            }
            let (report, verdict) = AnalysisReport::new(&g)?;
            emit(format, &report, || report.render());
            Ok(match verdict {
                SolitonVerdict::Soliton { .. } => 0,
                SolitonVerdict::Nonsoliton { .. } => 1,
                SolitonVerdict::Inapplicable(_) => 2,
            })
        }
        Command::Family { m, k, q, output } => {
            let f = family_extended(m, k, &q)?;
            let text = serialize(&f.algebra);
            let report = FamilyReport::new(&f)?;
            if let Some(path) = &output {
                std::fs::write(path, &text)
                    .map_err(|e| Failure::new(EX_CANTCREAT, format!("{}: {e}", path.display())))?;
            }
            match (format, output.is_some()) {
                (Format::Json, _) => emit(
                    format,
                    &FamilyOutput {
                        algebra: &text,
                        report: &report,
                    },
                    String::new,
                ),
                (Format::Text, true) => print!("{}", report.render()),
                // The report goes into comments so stdout is itself a valid file.
                (Format::Text, false) => {
                    for line in report.render().lines() {
                        println!("# {line}");
                    }
                    print!("{text}");
                }
            }
            Ok(0)
        }
        Command::Reproduce { q, max_k } => {
            let claims = reproduce(&ReproduceOptions {
                q: q.clone(),
                max_k,
            })?;
            let report = ReproduceReport::new(&q, max_k, &claims);
            emit(format, &report, || report.render());
            Ok(u8::from(ReproduceReport::failed(&claims)))
        }
        Command::Gram { file } => {
            let g = load(&file)?;
            let report = GramReport::new(&g)?;
            emit(format, &report, || {
                let mut out = String::new();
                report.render(&mut out);
                out
            });
            Ok(0)
        }
        Command::Der { file } => {
            let report = DerReport::new(&load(&file)?);
            emit(format, &report, || report.render());
            Ok(0)
        }
        Command::Ricci { file, metric } => {
            let g = load(&file)?;
            let metric = parse_metric(metric.as_deref(), g.dim())?;
            let report = RicciReport::new(&g, &metric)?;
            emit(format, &report, || report.render());
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EX_USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("nilsol: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
