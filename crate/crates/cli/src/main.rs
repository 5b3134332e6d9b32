mod commands;
mod error;
mod record;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crate::error::CliError;
use crate::render::Format;

#[derive(Debug, Parser)]
#[command(
    name = "parabolic",
    version,
    about = "Classify parabolic subalgebras of simple Lie algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
pub struct StrategyArgs {
    /// How Richardson partitions are obtained.
    #[arg(long, default_value = "closed-form")]
    pub partition_method: String,

    /// How birationality of the moment map is decided.
    #[arg(long, default_value = "blocks")]
    pub birational_method: String,

    /// Random samples per parabolic for the oracle partition method.
    #[arg(long, default_value_t = 3)]
    pub trials: usize,

    /// First seed for the oracle partition method.
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify one parabolic subalgebra.
    Classify {
        /// Lie type such as C3 or E7.
        #[arg(long)]
        kind: String,

        /// Outer half of the Levi block palindrome, e.g. 2,2.
        #[arg(
            long,
            conflicts_with = "coloring",
            required_unless_present = "coloring"
        )]
        blocks: Option<String>,

        /// Central Levi block, when the number of blocks is odd.
        #[arg(long, requires = "blocks")]
        central: Option<usize>,

        /// Dynkin coloring, e.g. 1,0,1; 1 marks a simple root outside the Levi.
        #[arg(long)]
        coloring: Option<String>,

        #[arg(long, value_enum, default_value = "table")]
        format: Format,

        #[command(flatten)]
        strategy: StrategyArgs,
    },

    /// List parabolics of a type or family, optionally filtered.
    Enumerate {
        /// A type such as C3 or E7, or a classical family letter with --rank/--max-rank.
        #[arg(long)]
        kind: String,

        #[arg(long, conflicts_with = "max_rank")]
        rank: Option<usize>,

        /// Every rank of the family from the smallest up to this one.
        #[arg(long)]
        max_rank: Option<usize>,

        /// Enumerate Levi block vectors instead of colorings (classical only).
        #[arg(long)]
        by_blocks: bool,

        /// Keep only parabolics with a Richardson element in g_1.
        #[arg(long)]
        nice: bool,

        /// Keep only parabolics whose moment map is birational.
        #[arg(long)]
        birational: bool,

        /// Keep only parabolics given by an sl2-triple.
        #[arg(long)]
        sl2: bool,

        /// Keep only parabolics whose Richardson orbit has normal closure.
        #[arg(long)]
        normal: bool,

        #[arg(long, value_enum, default_value = "table")]
        format: Format,

        #[command(flatten)]
        strategy: StrategyArgs,
    },

    /// Cross-check closed forms against the matrix oracle and the two birationality tests.
    Verify {
        /// Classical family letter or type; all of A, B, C, D when omitted.
        #[arg(long)]
        kind: Option<String>,

        /// Largest matrix size N to sweep.
        #[arg(long = "max-n", alias = "max-N", default_value_t = 12)]
        max_n: usize,

        #[arg(long, default_value_t = 3)]
        trials: usize,

        #[arg(long, default_value_t = 1)]
        seed: u64,

        /// Print only failing cases and the summary.
        #[arg(long)]
        quiet: bool,
    },

    /// Write the exceptional tables with recomputed orbit dimensions.
    Export {
        /// G2, F4, E6, E7 or E8; all of them when omitted.
        #[arg(long)]
        kind: Option<String>,

        /// `appendix` for the nice parabolics with G_x = P_x, `non-sl2` for the
        /// Richardson orbits not coming from an sl2-triple.
        #[arg(long, default_value = "appendix")]
        table: String,

        #[arg(long, value_enum, default_value = "json")]
        format: Format,

        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let result = match cli.command {
        Command::Classify {
            kind,
            blocks,
            central,
            coloring,
            format,
            strategy,
        } => commands::classify(
            &mut out,
            &kind,
            blocks.as_deref(),
            central,
            coloring.as_deref(),
            format,
            &strategy,
        ),
        Command::Enumerate {
            kind,
            rank,
            max_rank,
            by_blocks,
            nice,
            birational,
            sl2,
            normal,
            format,
            strategy,
        } => {
            let filters = commands::Filters {
                nice,
                birational,
                sl2,
                normal,
            };
            commands::enumerate(
                &mut out, &kind, rank, max_rank, by_blocks, filters, format, &strategy,
            )
        }
        Command::Verify {
            kind,
            max_n,
            trials,
            seed,
            quiet,
        } => commands::verify(&mut out, kind.as_deref(), max_n, trials, seed, quiet),
        Command::Export {
            kind,
            table,
            format,
            out: path,
        } => commands::export(&mut out, kind.as_deref(), &table, format, path.as_deref()),
    };
    match result {
        Ok(()) | Err(CliError::ClosedPipe) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
