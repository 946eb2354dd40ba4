//! Job files in, reproducible reports out.

pub mod error;
pub mod job;
pub mod report;
pub mod run;

use std::path::PathBuf;

use clap::{Parser, ValueEnum};

pub use error::CliError;
pub use job::{parse_input, render, resolve, validate, JobSpec};
pub use report::Report;
pub use run::{catalog_jobs, run, RunOptions, Verb};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Markdown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::Subcommand)]
pub enum Command {
    /// Axioms, saturation, counit and Haar state.
    Check,
    /// Natural, dual and bar cohomology dimensions.
    Cohomology,
    /// Codiagonal search and the Kronecker codiagonal.
    Codiagonal,
    /// Invariant means on monoids.
    Mean,
    /// Cohomology vanishing and identification cross-checks.
    Verify,
    /// Everything above.
    Report,
}

impl From<Command> for Verb {
    fn from(c: Command) -> Verb {
        match c {
            Command::Check => Verb::Check,
            Command::Cohomology => Verb::Cohomology,
            Command::Codiagonal => Verb::Codiagonal,
            Command::Mean => Verb::Mean,
            Command::Verify => Verb::Verify,
            Command::Report => Verb::Report,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "hopfcoh", version, about = "Exact cohomology of finite Hopf *-algebras")]
pub struct Args {
    #[command(subcommand)]
    pub command: Command,
    /// Job file (TOML).
    #[arg(long, global = true, conflicts_with = "catalog")]
    pub input: Option<PathBuf>,
    /// Builtin algebra such as `group_algebra:S3`, or `all`.
    #[arg(long, global = true)]
    pub catalog: Option<String>,
    /// Largest degree n+1 for which coboundaries are built [default: 3].
    #[arg(long, global = true)]
    pub degree_cap: Option<usize>,
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,
    /// Record wall-clock times. Reports are then no longer reproducible.
    #[arg(long, global = true)]
    pub timings: bool,
}

pub struct Output {
    pub text: String,
    pub consistent: bool,
}

/// Everything `main` does except printing and exiting.
pub fn execute(args: &Args) -> Result<Output, CliError> {
    let jobs = match (&args.input, &args.catalog) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            vec![parse_input(&text)?]
        }
        (None, Some(name)) => catalog_jobs(name)?,
        (None, None) => return Err(CliError::Input { field: "arguments".into(), message: "give --input FILE or --catalog NAME".into() }),
    };
    let opts = RunOptions { verb: args.command.into(), degree_cap: args.degree_cap, timings: args.timings };
    let report = run(&jobs, &opts)?;
    let text = match args.format {
        Format::Json => report.to_json(),
        Format::Markdown => report.to_markdown(),
    };
    if let Some(path) = &args.output {
        std::fs::write(path, &text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    }
    Ok(Output { text, consistent: report.consistent })
}
