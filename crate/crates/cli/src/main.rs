use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;

use cjones::jones::{bracket_jones_oracle, report_for};
use cjones::qdet::{rho, MatrixDump};
use cjones::walks::{enumerate_walks, walk_weight, Walk};
use cjones::{colored_jones, BraidWord, Error, JonesResult, LaurentPoly, Method, PositiveBraidReport};

type Big = LaurentPoly<BigInt>;

#[derive(Parser)]
#[command(name = "cjones", version, about = "Exact colored Jones polynomials of braid closures")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Print timings and sizes to stderr.
    #[arg(short, long, global = true)]
    verbose: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Compute J'(N) of the closure.
    Compute(ColorArgs),
    /// List the walks and their weights.
    Walks {
        #[command(flatten)]
        braid: BraidArgs,
        /// Include walks whose paths share a cell.
        #[arg(long)]
        all: bool,
    },
    /// Print the matrix ρ.
    Matrix(BraidArgs),
    /// Check the leading coefficients of a positive braid knot.
    CheckPositive(ColorArgs),
    /// Compare J'(2) against the Kauffman bracket.
    Oracle(BraidArgs),
}

#[derive(Args)]
struct BraidArgs {
    /// Whitespace-separated nonzero integers, e.g. "1 -2 1 -2".
    #[arg(long, allow_hyphen_values = true)]
    braid: String,
    /// Number of strands; defaults to one more than the largest generator.
    #[arg(long)]
    strands: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct ColorArgs {
    #[command(flatten)]
    braid: BraidArgs,
    #[arg(long, default_value_t = 2)]
    color: u32,
    #[arg(long, default_value_t = Method::Both, value_parser = parse_method)]
    method: Method,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn parse_method(s: &str) -> Result<Method, String> {
    s.parse()
}

#[derive(Serialize)]
struct ComputeOutput<'a> {
    #[serde(flatten)]
    result: &'a JonesResult<BigInt>,
    #[serde(skip_serializing_if = "Option::is_none")]
    positive_report: Option<PositiveBraidReport<BigInt>>,
}

#[derive(Serialize)]
struct WalkOutput<'a> {
    #[serde(flatten)]
    walk: &'a Walk,
    weight: String,
}

#[derive(Serialize)]
struct OracleOutput {
    braid: BraidWord,
    bracket: Big,
    pipeline: Big,
    agree: bool,
}

fn parse_braid(args: &BraidArgs) -> Result<BraidWord, Error> {
    let strands = match args.strands {
        Some(m) => m,
        None => {
            let max = args
                .braid
                .split_whitespace()
                .filter_map(|t| t.parse::<i64>().ok())
                .map(i64::unsigned_abs)
                .max()
                .unwrap_or(0);
            max as usize + 1
        }
    };
    BraidWord::parse(&args.braid, strands)
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable output")
}

enum Failure {
    Domain(Error),
    /// Two independent computations disagree.
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::PipelineMismatch { .. } => Failure::Mismatch(e.to_string()),
            other => Failure::Domain(other),
        }
    }
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let start = Instant::now();
    let out = match &cli.command {
        Command::Compute(args) => {
            let braid = parse_braid(&args.braid)?;
            let result = colored_jones::<BigInt>(&braid, args.color, args.method)?;
            match args.braid.format {
                Format::Text => result.polynomial.to_string(),
                Format::Json => {
                    let positive_report =
                        braid.is_positive().then(|| report_for(&braid, &result.polynomial, args.color));
                    to_json(&ComputeOutput { result: &result, positive_report })
                }
            }
        }
        Command::CheckPositive(args) => {
            let braid = parse_braid(&args.braid)?;
            let report = cjones::positive_braid_report::<BigInt>(&braid, args.color, args.method)?;
            match args.braid.format {
                Format::Json => to_json(&report),
                Format::Text => {
                    let coeffs: Vec<String> = report.leading_coefficients.iter().map(|c| c.to_string()).collect();
                    format!(
                        "N = {}\nL_N = {}\nlowest degree = {}\nleading coefficients = [{}]\nverdict = {}",
                        report.color,
                        report.l_n,
                        report.lowest_degree.map_or("none".to_string(), |d| d.to_string()),
                        coeffs.join(", "),
                        report.verdict
                    )
                }
            }
        }
        Command::Walks { braid, all } => {
            let word = parse_braid(braid)?;
            let walks = enumerate_walks(&word, !all);
            let weights: Vec<String> = walks.iter().map(|w| walk_weight::<BigInt>(&word, w).to_string()).collect();
            if cli.verbose {
                eprintln!("{} walks", walks.len());
            }
            match braid.format {
                Format::Json => {
                    let rows: Vec<WalkOutput> =
                        walks.iter().zip(&weights).map(|(walk, w)| WalkOutput { walk, weight: w.clone() }).collect();
                    to_json(&rows)
                }
                Format::Text => walks
                    .iter()
                    .zip(&weights)
                    .map(|(w, weight)| format!("J={:?} ends={:?}: {weight}", w.starts, w.ends))
                    .collect::<Vec<_>>()
                    .join("\n"),
            }
        }
        Command::Matrix(args) => {
            let braid = parse_braid(args)?;
            let r = rho::<BigInt>(&braid);
            match args.format {
                Format::Json => to_json(&MatrixDump::from(&r)),
                Format::Text => {
                    let mut lines = Vec::new();
                    for i in 1..=r.dim() {
                        for j in 1..=r.dim() {
                            lines.push(format!("({i},{j}): {}", r.get(i, j)));
                        }
                    }
                    lines.join("\n")
                }
            }
        }
        Command::Oracle(args) => {
            let braid = parse_braid(args)?;
            let bracket: Big = bracket_jones_oracle(&braid)?;
            let pipeline = colored_jones::<BigInt>(&braid, 2, Method::Both)?.polynomial;
            if bracket != pipeline {
                return Err(Failure::Mismatch(format!("bracket gives {bracket}, pipeline gives {pipeline}")));
            }
            match args.format {
                Format::Text => bracket.to_string(),
                Format::Json => to_json(&OracleOutput { braid, bracket, pipeline, agree: true }),
            }
        }
    };
    if cli.verbose {
        eprintln!("elapsed: {:?}", start.elapsed());
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // Usage errors are domain errors here; 2 is reserved for pipeline disagreement.
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(&cli) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Mismatch(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
