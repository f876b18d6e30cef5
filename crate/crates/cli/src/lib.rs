//! Command-line front end for `fuzzysoft-core`.
//!
//! [`run`] parses the arguments, dispatches to the library and returns a
//! [`RunReport`]; the binary only prints it and exits with its status.

pub mod commands;
pub mod error;
pub mod formats;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

pub use error::{CliError, CliResult, Diagnostic, Severity};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "fuzzysoft",
    version,
    about = "Fuzzy sets, soft sets, graded decisions and their topologies"
)]
pub struct Cli {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Mean grade interval, representative value and grade of a grade distribution
    Assess {
        /// `label:count` pairs such as `A:3,B:7`, or a file holding them
        #[arg(long)]
        grades: String,
        /// Grade scale JSON, best grade first
        #[arg(long)]
        scale: Option<PathBuf>,
    },
    /// Choice values and ranking of a decision table (JSON or CSV)
    Decide {
        table: PathBuf,
        /// Use the table's parameter weights
        #[arg(long)]
        weighted: bool,
        /// Grade scale JSON, overriding any scale in the table
        #[arg(long)]
        scale: Option<PathBuf>,
    },
    /// Soft set algebra
    Soft {
        #[command(subcommand)]
        op: SoftOp,
    },
    /// Check a fuzzy or soft family against the topology axioms
    Topology {
        family: PathBuf,
        /// Report the separation class (fuzzy families)
        #[arg(long)]
        separation: bool,
        /// Target family for a continuity check
        #[arg(long, requires = "map")]
        codomain: Option<PathBuf>,
        /// Map JSON from this family's universe to the codomain's
        #[arg(long, requires = "codomain")]
        map: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum SoftOp {
    Union {
        a: PathBuf,
        b: PathBuf,
    },
    Intersect {
        a: PathBuf,
        b: PathBuf,
    },
    Complement {
        a: PathBuf,
    },
    /// Every soft subset, null set last
    Subsets {
        a: PathBuf,
    },
    /// Binary matrix as CSV
    Tabular {
        a: PathBuf,
    },
    /// Whether the first soft set is a soft subset of the second
    CheckSubset {
        a: PathBuf,
        b: PathBuf,
    },
}

/// Outcome of one invocation: exit status, rendered output and diagnostics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunReport {
    pub status: u8,
    pub payload: String,
    pub diagnostics: Vec<Diagnostic>,
}

impl RunReport {
    fn success(payload: String) -> Self {
        RunReport {
            status: 0,
            payload,
            diagnostics: Vec::new(),
        }
    }

    fn failure(err: CliError) -> Self {
        RunReport {
            status: err.exit_code(),
            payload: String::new(),
            diagnostics: vec![Diagnostic::error(err.to_string(), err.location())],
        }
    }
}

pub fn run<I, T>(args: I) -> RunReport
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => RunReport::success(rendered),
                _ => RunReport {
                    status: 1,
                    payload: String::new(),
                    diagnostics: vec![Diagnostic::error(
                        rendered
                            .trim_start_matches("error: ")
                            .trim_end()
                            .to_string(),
                        None,
                    )],
                },
            }
        }
    }
}

pub fn execute(cli: &Cli) -> RunReport {
    let outcome = match &cli.command {
        Command::Assess { grades, scale } => commands::assess(grades, scale.as_deref(), cli.format),
        Command::Decide {
            table,
            weighted,
            scale,
        } => commands::decide(table, *weighted, scale.as_deref(), cli.format),
        Command::Soft { op } => commands::soft(op, cli.format),
        Command::Topology {
            family,
            separation,
            codomain,
            map,
        } => commands::topology(
            family,
            *separation,
            codomain.as_deref().zip(map.as_deref()),
            cli.format,
        ),
    };
    match outcome {
        Ok(payload) => RunReport::success(payload),
        Err(e) => RunReport::failure(e),
    }
}
