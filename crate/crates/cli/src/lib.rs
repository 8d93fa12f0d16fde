//! Subcommand dispatch for the `macforge` binary.

pub mod commands;
pub mod report;
pub mod verify;

use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::json;
use thiserror::Error;

use macforge_core::generate::{all_complexes, seeded_random_complexes};
use macforge_core::gw::GwField;
use macforge_core::io::parse_complex_input;
use macforge_core::splitting::Flavor;
use macforge_core::{ComplexError, OracleError, ParseError, SimplicialComplex};

use crate::commands::Model;
use crate::report::Report;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_VALIDATION: i32 = 3;
pub const EXIT_CHECK_FAILED: i32 = 4;

/// Largest `m` accepted by `oracle-verify --exhaustive`.
pub const MAX_EXHAUSTIVE_M: usize = 5;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot parse {path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error("invalid complex: {0}")]
    Complex(#[from] ComplexError),
    #[error("{0}")]
    Oracle(#[from] OracleError),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Read { .. } | CliError::Parse { .. } => EXIT_PARSE,
            CliError::Complex(_) | CliError::Oracle(_) | CliError::Usage(_) => EXIT_VALIDATION,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "macforge", version, about = "Invariants of moment-angle complexes and their A¹ refinement")]
pub struct Cli {
    /// Render Markdown instead of JSON.
    #[arg(long, global = true)]
    pub markdown: bool,
    /// Accept vertices that lie in no facet; such subsets are left out of decomposition sums.
    #[arg(long, global = true)]
    pub allow_ghost: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cellular A¹-homology, A¹-Betti table, Euler characteristics and splitting summary.
    Invariants {
        path: PathBuf,
        #[arg(long, default_value = "generic")]
        field: GwField,
    },
    /// Stable wedge decomposition of the chosen polyhedral product.
    Splitting {
        path: PathBuf,
        #[arg(long, default_value = "motivic")]
        flavor: Flavor,
    },
    /// Homology of K, Z_K and the real moment-angle complex.
    Homology {
        path: PathBuf,
        /// Include the shapes of the boundary matrices of K.
        #[arg(long)]
        dump_matrices: bool,
    },
    /// A¹-Euler characteristic by every available route.
    Euler {
        path: PathBuf,
        #[arg(long, default_value = "generic")]
        field: GwField,
    },
    /// A¹-Betti table checked against the Koszul complex.
    Betti {
        path: PathBuf,
        /// Also compute Koszul Tor ranks over F_p.
        #[arg(long)]
        prime: Option<u64>,
    },
    /// Affine models of Z_K^{A¹}.
    Affine {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "dual")]
        model: Model,
    },
    /// Run the oracle equivalence suites on one complex, all small complexes, or random ones.
    OracleVerify {
        #[arg(conflicts_with_all = ["exhaustive", "random"], required_unless_present_any = ["exhaustive", "random"])]
        path: Option<PathBuf>,
        /// Every complex on at most this many vertices.
        #[arg(long, conflicts_with = "random")]
        exhaustive: Option<usize>,
        /// `N M`: N random complexes on M vertices.
        #[arg(long, num_args = 2, value_names = ["N", "M"])]
        random: Option<Vec<usize>>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Exit code plus the text destined for stdout and stderr.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn load_complex(path: &PathBuf, allow_ghost: bool) -> Result<SimplicialComplex, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Read { path: path.clone(), source })?;
    let input = parse_complex_input(&text).map_err(|source| CliError::Parse { path: path.clone(), source })?;
    Ok(input.build(allow_ghost)?)
}

fn oracle_corpus(
    path: &Option<PathBuf>,
    exhaustive: Option<usize>,
    random: &Option<Vec<usize>>,
    seed: u64,
    allow_ghost: bool,
) -> Result<(Vec<SimplicialComplex>, Option<SimplicialComplex>), CliError> {
    if let Some(m) = exhaustive {
        if !(1..=MAX_EXHAUSTIVE_M).contains(&m) {
            return Err(CliError::Usage(format!("--exhaustive takes 1..={MAX_EXHAUSTIVE_M}, got {m}")));
        }
        return Ok(((1..=m).flat_map(all_complexes).collect(), None));
    }
    if let Some(nm) = random {
        let (n, m) = (nm[0], nm[1]);
        if !(1..=macforge_core::simplicial::MAX_VERTICES).contains(&m) {
            return Err(ComplexError::MTooLarge { m }.into());
        }
        return Ok((seeded_random_complexes(n, &[m], seed), None));
    }
    let path = path.as_ref().expect("clap requires a path without --exhaustive or --random");
    let k = load_complex(path, allow_ghost)?;
    Ok((vec![k.clone()], Some(k)))
}

fn build_report(cli: &Cli) -> Result<Report, CliError> {
    let ghost = cli.allow_ghost;
    Ok(match &cli.command {
        Command::Invariants { path, field } => commands::invariants(&load_complex(path, ghost)?, *field),
        Command::Splitting { path, flavor } => commands::splitting(&load_complex(path, ghost)?, *flavor),
        Command::Homology { path, dump_matrices } => commands::homology(&load_complex(path, ghost)?, *dump_matrices),
        Command::Euler { path, field } => commands::euler(&load_complex(path, ghost)?, *field),
        Command::Betti { path, prime } => commands::betti(&load_complex(path, ghost)?, *prime)?,
        Command::Affine { path, model } => commands::affine(&load_complex(path, ghost)?, *model),
        Command::OracleVerify { path, exhaustive, random, seed } => {
            let (corpus, single) = oracle_corpus(path, *exhaustive, random, *seed, ghost)?;
            let options = json!({ "exhaustive": exhaustive, "random": random, "seed": seed });
            let base = Report {
                command: "oracle-verify".into(),
                input: single.as_ref().map(report::InputEcho::of),
                options: serde_json::Value::Null,
                payload: serde_json::Value::Null,
                checks: Vec::new(),
                warnings: Vec::new(),
                markdown: String::new(),
            };
            verify::oracle_report(&corpus, options, base)
        }
    })
}

/// Renders a finished report and picks the exit code from its checks.
pub fn finish(report: &Report, markdown: bool) -> Outcome {
    let stdout = if markdown { report.to_markdown() } else { report.to_json() };
    let failed: Vec<&str> = report.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
    if failed.is_empty() {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    } else {
        let stderr = format!("error: checks failed: {}\n", failed.join("; "));
        Outcome { code: EXIT_CHECK_FAILED, stdout, stderr }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    match build_report(cli) {
        Ok(report) => finish(&report, cli.markdown),
        Err(e) => Outcome { code: e.exit_code(), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Check;

    fn empty_report() -> Report {
        Report {
            command: "test".into(),
            input: None,
            options: serde_json::Value::Null,
            payload: serde_json::Value::Null,
            checks: vec![Check::new("a", true)],
            warnings: Vec::new(),
            markdown: String::new(),
        }
    }

    #[test]
    fn failed_check_exits_4() {
        let mut r = empty_report();
        assert_eq!(finish(&r, false).code, EXIT_OK);
        r.checks.push(Check::new("b", false));
        let out = finish(&r, false);
        assert_eq!(out.code, EXIT_CHECK_FAILED);
        assert!(out.stderr.contains("b"));
        assert!(out.stdout.contains("\"passed\": false"));
    }

    #[test]
    fn exhaustive_bound_is_a_validation_error() {
        let cli = Cli::parse_from(["macforge", "oracle-verify", "--exhaustive", "6"]);
        assert_eq!(run(&cli).code, EXIT_VALIDATION);
    }

    #[test]
    fn oracle_verify_needs_a_source() {
        assert!(Cli::try_parse_from(["macforge", "oracle-verify"]).is_err());
        assert!(Cli::try_parse_from(["macforge", "oracle-verify", "--random", "3"]).is_err());
        assert!(Cli::try_parse_from(["macforge", "oracle-verify", "--random", "3", "4", "--seed", "1"]).is_ok());
    }
}
