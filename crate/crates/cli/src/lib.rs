//! Command-line harness for the `metaparts` roster.
//!
//! Subcommands: `list`, `run`, `compare`, `manifest`, `metadata`. Data files
//! carry no timestamps, so identical arguments give byte-identical files.
//! Exit codes are 0 on success, 2 for usage errors and 3 for runtime errors;
//! every failure prints one `error[usage]:` or `error[runtime]:` line.

mod commands;
mod error;
pub mod experiment;
pub mod output;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use error::CliError;
pub use experiment::{parse_seeds, ExperimentConfig, Summary};

/// Environment variable naming the default output directory.
pub const OUT_DIR_ENV: &str = "METAPARTS_OUT_DIR";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(
    name = "metaparts",
    version,
    about = "Run, compare and inspect the metaparts optimizer roster"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List every algorithm with its summary, year and citation band.
    List {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run one algorithm on one benchmark and write a trace file per seed.
    Run(RunArgs),
    /// Median and IQR of the final best per algorithm, with the random-search row.
    Compare(CompareArgs),
    /// Concept and feature tags of one algorithm, or of all plus the tag index.
    Manifest {
        /// Algorithm id, or `all`.
        id: Option<String>,
        /// Same as the positional id.
        #[arg(long = "algo", conflicts_with = "id")]
        algo: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Name, year, citation band and tags of every algorithm.
    Metadata {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Debug, Args)]
pub struct Shared {
    #[arg(long, default_value = "sphere")]
    pub benchmark: String,
    #[arg(long, default_value_t = 2)]
    pub dims: usize,
    /// Parameter override, `key=value`; repeatable. `population_size` is accepted.
    #[arg(long = "param", value_name = "KEY=VALUE")]
    pub params: Vec<String>,
}

#[derive(Debug, Args)]
pub struct RunArgs {
    #[arg(long)]
    pub algo: String,
    #[command(flatten)]
    pub shared: Shared,
    #[arg(long, default_value_t = 1000)]
    pub budget: usize,
    /// Seed list such as `42`, `0..30` (end excluded) or `1,5..8`.
    #[arg(long, default_value = "0")]
    pub seeds: String,
    /// Output directory for trace files.
    #[arg(long, env = OUT_DIR_ENV, default_value = "traces")]
    pub out: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    /// Algorithm ids, comma-separated or repeated; `all` for the whole roster.
    #[arg(long, value_delimiter = ',')]
    pub algo: Vec<String>,
    #[command(flatten)]
    pub shared: Shared,
    #[arg(long, default_value_t = 5000)]
    pub budget: usize,
    #[arg(long, default_value = "0..30")]
    pub seeds: String,
    /// Also write the summary into this directory.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

/// Runs a parsed command, writing its report to `out`.
pub fn execute(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::List { format } => commands::list(format, out),
        Command::Run(args) => commands::run(&args, out),
        Command::Compare(args) => commands::compare(&args, out),
        Command::Manifest { id, algo, format } => {
            let id = id.or(algo).unwrap_or_else(|| "all".to_string());
            commands::manifest(&id, format, out)
        }
        Command::Metadata { format } => commands::metadata(format, out),
    }
}

/// Parses `args`, runs the command and returns the process exit code.
/// Reports go to `out`, error lines to `err`.
pub fn main_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = write!(out, "{e}");
            return 0;
        }
        Err(e) => {
            let rendered = e.render().to_string();
            let first = rendered.lines().next().unwrap_or("invalid arguments");
            let msg = first.strip_prefix("error: ").unwrap_or(first);
            let _ = writeln!(err, "{}", CliError::Usage(msg.to_string()).line());
            return 2;
        }
    };
    match execute(cli, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "{}", e.line());
            e.exit_code()
        }
    }
}
