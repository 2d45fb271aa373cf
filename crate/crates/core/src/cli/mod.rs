//! The `domatic` command line.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage or input error,
//! 3 oracle size cap exceeded.

pub mod bench;
pub mod source;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{parse_edge_list, Graph};
use crate::oracle::domatic_polynomial_oracle;
use crate::polynomial::DomaticPolynomial;
use crate::tree_count::TreeCounter;
use bench::Family;
use source::GraphSpec;
use verify::{run_verify, VerifyConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

pub const DEFAULT_MAX_ORACLE_N: usize = 14;

#[derive(Debug, Parser)]
#[command(
    name = "domatic",
    version,
    about = "Count domatic partitions and weak 2-colorings of graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the domatic polynomial of one graph and print a JSON report.
    Poly(PolyArgs),
    /// Compare the tree engine against the oracle on random trees.
    Verify(VerifyArgs),
    /// Time the tree engine on a family of trees; prints CSV.
    Bench(BenchArgs),
    /// Write a generated graph in edge-list format.
    Gen(GenArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Oracle,
    Tree,
    Auto,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct InputArgs {
    /// Edge-list file.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Generator spec: path:N, star:R, complete:N, corona:<spec>:R, random-tree:N:SEED.
    #[arg(long = "gen")]
    pub gen: Option<String>,
}

#[derive(Debug, Args)]
pub struct PolyArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum, default_value_t = Method::Auto)]
    pub method: Method,
    /// Also run the oracle on trees and report whether the engines agree.
    #[arg(long)]
    pub cross_check: bool,
    #[arg(long, default_value_t = DEFAULT_MAX_ORACLE_N)]
    pub max_oracle_n: usize,
    /// Omit the duration field.
    #[arg(long)]
    pub no_timing: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub max_n: usize,
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = DEFAULT_MAX_ORACLE_N)]
    pub max_oracle_n: usize,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    /// Comma-separated, increasing sizes.
    #[arg(long = "n", value_delimiter = ',', required = true)]
    pub sizes: Vec<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Leave the ms column empty.
    #[arg(long)]
    pub no_timing: bool,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    pub spec: String,
    /// Output path; standard output when absent.
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub input: String,
    pub engine: Method,
    pub n: usize,
    pub polynomial: DomaticPolynomial,
    pub domatic_number: usize,
    pub w2: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub duration_ms: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub engines_agree: Option<bool>,
}

/// Failure of a subcommand, carrying its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let result = match cli.command {
        Command::Poly(a) => cmd_poly(&a, out),
        Command::Verify(a) => cmd_verify(&a, out),
        Command::Bench(a) => cmd_bench(&a, out),
        Command::Gen(a) => cmd_gen(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn load(input: &InputArgs) -> Result<(String, Graph)> {
    match (&input.input, &input.gen) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path)?;
            Ok((format!("file:{}", path.display()), parse_edge_list(&text)?))
        }
        (None, Some(spec)) => {
            let spec: GraphSpec = spec.parse()?;
            Ok((format!("gen:{spec}"), spec.build()?))
        }
        (None, None) => Err(Error::arg("one of --input or --gen is required")),
    }
}

pub fn poly_report(
    descriptor: String,
    g: &Graph,
    method: Method,
    cross_check: bool,
    max_oracle_n: usize,
) -> std::result::Result<RunReport, (i32, String)> {
    let is_tree = g.is_tree();
    let engine = match method {
        Method::Auto if is_tree => Method::Tree,
        Method::Auto => Method::Oracle,
        m => m,
    };
    if engine == Method::Tree && !is_tree {
        return Err((
            EXIT_USAGE,
            "the tree engine requires a tree; use --method oracle".into(),
        ));
    }
    let oracle_fits = g.order() <= max_oracle_n;
    if engine == Method::Oracle && !oracle_fits {
        return Err((
            EXIT_CAP,
            format!(
                "graph has {} vertices, oracle cap is {max_oracle_n} (see --max-oracle-n)",
                g.order()
            ),
        ));
    }

    let start = Instant::now();
    let fail = |e: Error| (EXIT_USAGE, e.to_string());
    let polynomial = match engine {
        Method::Tree => {
            let w2 = TreeCounter::default().w2(g).map_err(fail)?;
            DomaticPolynomial::from_terms([(1, BigUint::from(1u8)), (2, w2)]).map_err(fail)?
        }
        _ => domatic_polynomial_oracle(g).map_err(fail)?,
    };
    let duration_ms = start.elapsed().as_secs_f64() * 1e3;

    let engines_agree = if cross_check && is_tree && oracle_fits {
        let other = match engine {
            Method::Tree => domatic_polynomial_oracle(g).map_err(fail)?,
            _ => {
                let w2 = TreeCounter::default().w2(g).map_err(fail)?;
                DomaticPolynomial::from_terms([(1, BigUint::from(1u8)), (2, w2)]).map_err(fail)?
            }
        };
        Some(other == polynomial)
    } else {
        None
    };

    let w2 = if g.order() < 2 {
        BigUint::zero()
    } else {
        polynomial.coefficient(2)
    };
    Ok(RunReport {
        input: descriptor,
        engine,
        n: g.order(),
        domatic_number: polynomial.degree(),
        w2: w2.to_string(),
        polynomial,
        duration_ms: Some(duration_ms),
        engines_agree,
    })
}

fn cmd_poly(a: &PolyArgs, out: &mut dyn Write) -> std::result::Result<i32, Failure> {
    let (descriptor, g) = load(&a.input)?;
    let mut report = poly_report(descriptor, &g, a.method, a.cross_check, a.max_oracle_n)
        .map_err(|(code, message)| Failure { code, message })?;
    if a.no_timing {
        report.duration_ms = None;
    }
    let json = serde_json::to_string(&report).map_err(|e| Error::arg(e.to_string()))?;
    writeln!(out, "{json}").map_err(Error::from)?;
    Ok(match report.engines_agree {
        Some(false) => EXIT_MISMATCH,
        _ => EXIT_OK,
    })
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> std::result::Result<i32, Failure> {
    if a.max_n > a.max_oracle_n {
        return Err(Failure {
            code: EXIT_CAP,
            message: format!("--max-n {} exceeds the oracle cap {}", a.max_n, a.max_oracle_n),
        });
    }
    let cfg = VerifyConfig {
        max_n: a.max_n,
        samples: a.samples,
        seed: a.seed,
    };
    let mut counter = TreeCounter::default();
    let mismatch = run_verify(cfg, |t| counter.w2(t), out)?;
    Ok(if mismatch.is_some() { EXIT_MISMATCH } else { EXIT_OK })
}

fn cmd_bench(a: &BenchArgs, out: &mut dyn Write) -> std::result::Result<i32, Failure> {
    if a.sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::arg("--n values must be strictly increasing").into());
    }
    let rows = bench::bench_rows(a.family, &a.sizes, a.seed)?;
    bench::write_csv(&rows, !a.no_timing, out)?;
    Ok(EXIT_OK)
}

fn cmd_gen(a: &GenArgs, out: &mut dyn Write) -> std::result::Result<i32, Failure> {
    let spec: GraphSpec = a.spec.parse()?;
    let text = spec.build()?.to_edge_list();
    match &a.out {
        Some(path) => std::fs::write(path, text).map_err(Error::from)?,
        None => out.write_all(text.as_bytes()).map_err(Error::from)?,
    }
    Ok(EXIT_OK)
}
