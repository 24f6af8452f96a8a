//! `cdiff`: c-differential analysis of functions over small finite fields.

mod bench;
mod reproduce;
mod run;

use clap::{Parser, Subcommand};

/// Exit codes: 0 ok, 1 property refutation found, 2 parse error,
/// 3 precondition failure.
#[derive(Parser)]
#[command(name = "cdiff", version, about = "c-differential analysis over F_{p^n}")]
pub struct Cli {
    /// Field spec, e.g. "p=2 n=6" or "p=2 n=6 modulus=91"
    #[arg(long, global = true)]
    field: Option<String>,
    /// Function spec, e.g. "mono d=5", "poly 3:1 5:1", "lut 0 1 3 2"
    #[arg(long, global = true)]
    func: Option<String>,
    /// Comma-separated list of c encodings
    #[arg(long, global = true, value_delimiter = ',')]
    c: Vec<u64>,
    /// Analyze every c in the field
    #[arg(long, global = true)]
    all_c: bool,
    /// Output format
    #[arg(long, global = true, default_value = "text")]
    format: run::Format,
    /// Worker threads (default: available parallelism)
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Seed for generated corpora
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Cross-check fast criteria against the brute-force oracle
    #[arg(long, global = true)]
    verify: bool,
    /// Write the report here instead of stdout
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
    /// Render elements as polynomials in text output
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Per-c uniformities with PcN/APcN flags
    Analyze,
    /// Enumerate all PcN/APcN parameters plus interaction audits
    EnumerateC,
    /// Bad-shift set, subspace check, and trichotomy for given c
    Shifts,
    /// Walsh spectrum, nonlinearity, and spectral PcN checks
    Walsh,
    /// DDT / cDDT table dumps
    Ddt {
        /// Dump the table as CSV to this path (and verify re-ingestion)
        #[arg(long)]
        dump: Option<std::path::PathBuf>,
        /// Compute via the autocorrelation/FWHT route (p = 2)
        #[arg(long)]
        via_autocorrelation: bool,
    },
    /// Quadratic (DO) subspace characterizations per c
    Quadratic,
    /// Affine invariance checks and L∘F composition conditions
    Affine {
        /// Which check to run
        #[arg(long, value_enum)]
        check: run::AffineCheck,
        /// Linearized map, e.g. "lin 2:1 0:9"
        #[arg(long)]
        lin: Option<String>,
        /// Second linearized map L' for the EA check
        #[arg(long)]
        lin_prime: Option<String>,
        /// Affine map A1 (fp check), e.g. "lin 1:3 +g:5"
        #[arg(long)]
        a1: Option<String>,
        /// Affine map A2 (fp check)
        #[arg(long)]
        a2: Option<String>,
        #[arg(long, default_value_t = 0)]
        gamma: u64,
        #[arg(long, default_value_t = 0)]
        gamma_prime: u64,
        /// Translation samples for the frobenius check
        #[arg(long, value_delimiter = ',')]
        gammas: Vec<u64>,
        /// Maximum nonzero coefficients in the search family
        #[arg(long, default_value_t = 3)]
        max_terms: u32,
        /// Candidate budget for the search family
        #[arg(long, default_value_t = 1 << 20)]
        budget: u64,
    },
    /// Re-run a named reproduction scenario
    Reproduce {
        /// One of: example-3-1, table-1, inverse-f28, binomial-f25, closure-f25
        name: String,
    },
    /// Compare the PcN classification methods across field sizes
    Bench {
        #[arg(long, default_value_t = 4)]
        min_n: u32,
        #[arg(long, default_value_t = 8)]
        max_n: u32,
        /// Timed repetitions per method (medians are reported)
        #[arg(long, default_value_t = 5)]
        runs: u32,
        /// Op budget above which the literal triple check is skipped
        #[arg(long, default_value_t = 1 << 27)]
        triple_budget: u64,
    },
}

fn main() {
    let cli = Cli::parse();
    #[cfg(feature = "parallel")]
    if let Some(t) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    match dispatch(&cli) {
        Ok(run::Outcome::Clean) => {}
        Ok(run::Outcome::RefutationFound) => std::process::exit(1),
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(exit_code(&err));
        }
    }
}

fn dispatch(cli: &Cli) -> anyhow::Result<run::Outcome> {
    match &cli.command {
        Command::Analyze => run::analyze(cli),
        Command::EnumerateC => run::enumerate_c(cli),
        Command::Shifts => run::shifts(cli),
        Command::Walsh => run::walsh(cli),
        Command::Ddt { dump, via_autocorrelation } => {
            run::ddt(cli, dump.as_deref(), *via_autocorrelation)
        }
        Command::Quadratic => run::quadratic(cli),
        Command::Affine {
            check,
            lin,
            lin_prime,
            a1,
            a2,
            gamma,
            gamma_prime,
            gammas,
            max_terms,
            budget,
        } => run::affine(
            cli,
            run::AffineArgs {
                check: *check,
                lin: lin.as_deref(),
                lin_prime: lin_prime.as_deref(),
                a1: a1.as_deref(),
                a2: a2.as_deref(),
                gamma: *gamma,
                gamma_prime: *gamma_prime,
                gammas,
                max_terms: *max_terms,
                budget: *budget,
            },
        ),
        Command::Reproduce { name } => reproduce::run(cli, name),
        Command::Bench { min_n, max_n, runs, triple_budget } => {
            bench::run(cli, *min_n, *max_n, *runs, *triple_budget)
        }
    }
}

fn exit_code(err: &anyhow::Error) -> i32 {
    match err.downcast_ref::<cdiff_core::Error>() {
        Some(cdiff_core::Error::Parse { .. })
        | Some(cdiff_core::Error::InvalidField(_))
        | Some(cdiff_core::Error::InvalidElement { .. }) => 2,
        Some(cdiff_core::Error::Refutation(_)) => 1,
        Some(_) => 3,
        None => 3,
    }
}
