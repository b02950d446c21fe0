//! `hullkit`: exact analysis of linear codes over finite fields, covering hulls
//! and LCD verdicts, weight/Tutte enumeration, and constructive monomial
//! transforms to LCD codes.
//!
//! Exit codes: 0 success, 1 malformed input, 2 budget exceeded,
//! 3 no witness found, 4 internal-consistency failure.

mod codefile;
mod commands;
mod error;
mod gv;
mod verify;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use commands::Ctx;
use hullkit::lcdize::{Strategy, DEFAULT_SEED};
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "hullkit",
    version,
    about = "Exact hull, enumerator, and LCD analysis of linear codes over GF(q)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Emit a JSON report mirroring every printed field
    #[arg(long, global = true)]
    json: bool,

    /// Cap on q^k for codeword enumeration
    #[arg(long, global = true, default_value_t = hullkit::DEFAULT_CODEWORD_BUDGET)]
    budget_codewords: u64,

    /// Cap on 2^n for column-subset enumeration
    #[arg(long, global = true, default_value_t = hullkit::DEFAULT_SUBSET_BUDGET)]
    budget_subsets: u64,

    /// Cap on worker threads (default: all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StrategyArg {
    /// Lexicographic scan of the small grid; deterministic witness
    Grid,
    /// Seeded sampling with grid fallback
    Random,
}

#[derive(Subcommand)]
enum Command {
    /// Hull dimension, hull basis, Gram rank, and LCD verdict
    Hull {
        file: PathBuf,
        /// Use the Hermitian inner product (square q)
        #[arg(long)]
        hermitian: bool,
    },
    /// Weight enumerator by exhaustive codeword enumeration
    Wenum { file: PathBuf },
    /// Extended weight enumerator from column-subset ranks
    Extwenum {
        file: PathBuf,
        /// Cross-check against extension-field interpolation
        #[arg(long)]
        oracle: bool,
    },
    /// Tutte polynomial of the column matroid
    Tutte { file: PathBuf },
    /// Hull dimension read off the enumerator (GF(2) and GF(3) only)
    Invariant { file: PathBuf },
    /// Monomial transform making the code LCD
    Lcdize {
        file: PathBuf,
        /// Target Hermitian LCD (square q)
        #[arg(long)]
        hermitian: bool,
        #[arg(long, value_enum, default_value_t = StrategyArg::Random)]
        strategy: StrategyArg,
        /// Seed for the random strategy
        #[arg(long)]
        seed: Option<u64>,
        /// Write the transformed code to this file
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact minimum distance
    Mindist { file: PathBuf },
    /// Gilbert-Varshamov existence condition for [n,k,d] over GF(q)
    Gv { n: u64, k: u64, d: u64, q: u64 },
    /// Golden checks over the two built-in reference codes
    VerifyPaper,
}

fn run(cli: Cli) -> Result<(), error::CliError> {
    let ctx = Ctx {
        json: cli.json,
        budget_codewords: cli.budget_codewords,
        budget_subsets: cli.budget_subsets,
    };
    match cli.command {
        Command::Hull { file, hermitian } => commands::hull(&ctx, &file, hermitian),
        Command::Wenum { file } => commands::wenum(&ctx, &file),
        Command::Extwenum { file, oracle } => commands::extwenum(&ctx, &file, oracle),
        Command::Tutte { file } => commands::tutte_cmd(&ctx, &file),
        Command::Invariant { file } => commands::invariant(&ctx, &file),
        Command::Lcdize {
            file,
            hermitian,
            strategy,
            seed,
            out,
        } => {
            let strategy = match strategy {
                StrategyArg::Grid => Strategy::Grid,
                StrategyArg::Random => Strategy::Random {
                    seed: seed.unwrap_or(DEFAULT_SEED),
                },
            };
            commands::lcdize_cmd(&ctx, &file, hermitian, strategy, out.as_deref())
        }
        Command::Mindist { file } => commands::mindist(&ctx, &file),
        Command::Gv { n, k, d, q } => commands::gv_cmd(&ctx, n, k, d, q),
        Command::VerifyPaper => {
            verify::verify_cmd(cli.json, cli.budget_codewords, cli.budget_subsets)
        }
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e)
            if e.kind() == ErrorKind::DisplayHelp || e.kind() == ErrorKind::DisplayVersion =>
        {
            print!("{e}");
            return;
        }
        Err(e) => {
            eprint!("{e}");
            std::process::exit(1);
        }
    };
    if let Some(threads) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .ok();
    }
    if let Err(e) = run(cli) {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
