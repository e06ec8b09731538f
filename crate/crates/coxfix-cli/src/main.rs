//! `coxfix`: batch front-end running named verification suites over
//! Coxeter groups and emitting machine-readable reports.
//!
//! Exit codes: 0 all checks pass, 1 some check fails, 2 configuration or
//! resource error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use coxfix_core::catalog::{catalog, catalog_listing};
use coxfix_core::matrix::CoxeterMatrix;
use coxfix_core::suites::{run_suite, SuiteConfig, SUITE_NAMES};
use coxfix_core::CoxError;

#[derive(Parser)]
#[command(
    name = "coxfix",
    version,
    about = "Coxeter group order/topology verification suites"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a named verification suite
    Verify(Box<VerifyArgs>),
    /// List built-in group types and their diagram numbering
    Catalog,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name; see `coxfix catalog` output footer for the list
    suite: String,

    /// Catalog name (e.g. A3, B4, I2(7), affA2) or path to a matrix file
    #[arg(long)]
    group: String,

    /// Diagram automorphism as 1-based generator images, e.g. 3,2,1;
    /// repeat to generate a larger group
    #[arg(long = "perm", value_name = "IMAGES")]
    perms: Vec<String>,

    /// Twisting automorphism for twisted suites: `id` or `perm`
    #[arg(long, default_value = "id")]
    theta: String,

    /// Ball radius; omit to enumerate the whole (finite) group
    #[arg(short = 'L', long = "radius")]
    radius: Option<u32>,

    /// Cap on interval length in twisted sweeps
    #[arg(long)]
    max_interval: Option<u32>,

    /// Cap on the length of interval tops when the ball is a truncation
    #[arg(long)]
    max_top: Option<u32>,

    /// Face-count guardrail per order complex
    #[arg(long, default_value_t = 2_000_000)]
    max_faces: usize,

    /// Node cap for group and parabolic enumeration
    #[arg(long, default_value_t = 1_000_000)]
    ball_cap: usize,

    /// Sample size for sampling suites; 0 means exhaustive
    #[arg(long, default_value_t = 0)]
    samples: usize,

    /// Seed for sampling suites
    #[arg(long, default_value_t = 2023)]
    seed: u64,

    /// Expected folded type for fold-matrices (catalog name)
    #[arg(long)]
    expect: Option<String>,

    /// Enable the large gated cases (E6 folding; minutes, not seconds)
    #[arg(long)]
    extended: bool,

    /// Write the TSV report to this path
    #[arg(short = 'o', long = "output")]
    output: Option<PathBuf>,
}

fn resolve_group(spec: &str) -> Result<CoxeterMatrix, CoxError> {
    if Path::new(spec).exists() {
        let text = std::fs::read_to_string(spec)?;
        return CoxeterMatrix::parse(&text);
    }
    catalog(spec)
}

fn parse_perm(spec: &str) -> Result<Vec<u8>, CoxError> {
    spec.split(',')
        .map(|tok| {
            let v: usize = tok.trim().parse().map_err(|_| {
                CoxError::Precondition(format!(
                    "bad perm entry `{tok}`; expected 1-based generator indices"
                ))
            })?;
            if v == 0 || v > 255 {
                return Err(CoxError::Precondition(format!(
                    "perm entry {v} out of range"
                )));
            }
            Ok((v - 1) as u8)
        })
        .collect()
}

fn verify(args: &VerifyArgs) -> Result<bool, CoxError> {
    let matrix = resolve_group(&args.group)?;
    let mut config = SuiteConfig::new(args.group.clone(), matrix);
    config.perms = args
        .perms
        .iter()
        .map(|p| parse_perm(p))
        .collect::<Result<Vec<_>, _>>()?;
    config.theta_id = match args.theta.as_str() {
        "id" => true,
        "perm" => false,
        other => {
            return Err(CoxError::Precondition(format!(
                "--theta must be `id` or `perm`, got `{other}`"
            )))
        }
    };
    config.radius = args.radius;
    config.max_interval = args.max_interval;
    config.max_top_length = args.max_top;
    config.face_cap = args.max_faces;
    config.ball_cap = args.ball_cap;
    config.samples = args.samples;
    config.seed = args.seed;
    config.expect = args.expect.clone();
    config.extended = args.extended;

    let report = run_suite(&args.suite, &config)?;
    for check in &report.checks {
        println!("{}", check.stdout_line());
    }
    if let Some(path) = &args.output {
        std::fs::write(path, report.to_tsv())?;
    }
    eprintln!("{}", report.summary());
    Ok(report.all_pass())
}

fn print_catalog() {
    println!("built-in group types (generator numbering is 1-based):");
    for (name, desc) in catalog_listing() {
        println!("  {name:<10} {desc}");
    }
    println!();
    println!("matrix file format: line 1 `rank n`, then n rows of n entries, `inf` allowed");
    println!();
    println!("suites: {}", SUITE_NAMES.join(", "));
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Catalog => {
            print_catalog();
            ExitCode::SUCCESS
        }
        Command::Verify(args) => match verify(&args) {
            Ok(true) => ExitCode::SUCCESS,
            Ok(false) => ExitCode::from(1),
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
    }
}
