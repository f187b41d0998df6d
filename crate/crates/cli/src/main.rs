mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use albert_forge::Error;

#[derive(Parser, Debug)]
#[command(name = "albert-forge", version, about = "Exact computations with split octonions, the Albert space and E6-type groups")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Field order(s); comma separated or repeated.
    #[arg(long, global = true, value_delimiter = ',', conflicts_with_all = ["p", "k"])]
    pub q: Vec<u32>,
    /// Field characteristic, used with --k.
    #[arg(long, global = true, requires = "k")]
    pub p: Option<u32>,
    /// Extension degree, used with --p.
    #[arg(long, global = true, requires = "p")]
    pub k: Option<u32>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads (0: one per core).
    #[arg(long, global = true, env = "ALBERT_FORGE_THREADS", default_value_t = 0)]
    pub threads: usize,
    /// Work cap: vectors, kernel computations or orbit points depending on the command.
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dump the octonion basis multiplication table.
    Table,
    /// Run invariant suites; every suite runs when --suite is omitted.
    Verify {
        #[arg(long, value_enum)]
        suite: Vec<SuiteArg>,
        /// Random instances per randomized check.
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
    },
    /// Count white, grey and black vectors.
    Census {
        #[arg(long, value_enum)]
        mode: CensusMode,
        /// Structured mode: count cases without emitting vectors.
        #[arg(long)]
        count_only: bool,
    },
    /// Breadth-first orbit of a point.
    Orbit {
        /// Start vector as JSON.
        #[arg(long)]
        start: String,
        #[arg(long, value_enum, default_value_t = GenSet::Standard)]
        gens: GenSet,
    },
    /// Certify that det plus the translated Dickson cubic is the zero polynomial.
    Dickson,
    /// Group-order identities as exact integers.
    Orders,
    /// Color of a vector, plus its point type over a quadratic field.
    Classify {
        /// Vector as JSON.
        vector: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Octonion,
    Albert,
    Generators,
    Twisted,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CensusMode {
    Brute,
    Structured,
    Closed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GenSet {
    Standard,
    Stabilizer,
}

/// Outcome of a command that ran to completion.
pub enum Outcome {
    Ok,
    Failed,
}

/// Errors mapped to exit codes.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Config(String),
    #[error(transparent)]
    Lib(#[from] Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Lib(Error::Budget(_)) => 3,
            _ => 2,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.common.threads > 0 {
        // ignore the error if a pool already exists
        let _ = rayon::ThreadPoolBuilder::new().num_threads(cli.common.threads).build_global();
    }
    let start = std::time::Instant::now();
    let result = commands::run(&cli.common, &cli.command);
    eprintln!("elapsed: {:.3}s", start.elapsed().as_secs_f64());
    match result {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
