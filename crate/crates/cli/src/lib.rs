//! `mdgauge`: reproduce the tables, run the verification suites and
//! evaluate field strengths and actions from a TOML run configuration.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 for
//! usage and configuration errors.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

pub mod commands;
pub mod config;
pub mod report;
pub mod suites;

pub use config::{Resolved, RunConfig};
pub use report::{Check, Report, LITERAL_RULE_TAG};

pub const EXIT_PASS: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("config error: {0}")]
    Config(String),
    #[error(transparent)]
    Core(#[from] mdgauge::Error),
    #[error("{0}")]
    Io(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Markdown,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Clifford,
    Boxsq,
    Fieldstrength,
    Gauge,
    Actions,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Variant {
    Covariant,
    Literal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ActionKind {
    Ym,
    Fermion,
    Total,
    All,
}

#[derive(Debug, Parser)]
#[command(name = "mdgauge", version, about = "Verifier for metric-deformed gauge theory")]
pub struct Cli {
    /// TOML run configuration.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Output format (reports default to json, tables to markdown).
    #[arg(long, global = true, value_enum)]
    pub format: Option<OutputFormat>,
    /// Base seed, overriding the configuration.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Write outputs into this directory instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Regenerate the metric, Dirac-operator and field-strength tables.
    Tables {
        /// Table id or `all`.
        #[arg(long, default_value = "all")]
        which: String,
        /// Compare against the files in this directory; exit 1 on any difference.
        #[arg(long)]
        check: Option<PathBuf>,
    },
    /// Run an invariant suite.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        /// Gauge transformation law for the gauge suite.
        #[arg(long, value_enum)]
        variant: Option<Variant>,
    },
    /// Dump the closed-form field strength and compare it with the commutator oracle.
    FieldStrength,
    /// Evaluate the Yang-Mills, fermionic and total actions.
    Action {
        #[arg(long, value_enum, default_value = "all")]
        kind: ActionKind,
        /// Repeat after a seeded gauge transformation and report the shift.
        #[arg(long)]
        gauge_check: bool,
    },
    /// Convergence order of the closed form against the oracle over several seeds.
    OracleConvergence {
        #[arg(long, default_value_t = 3)]
        seeds: u64,
    },
}

/// What a command produced: text to emit under a file name, and a verdict.
pub struct Output {
    pub files: Vec<(String, String)>,
    pub pass: bool,
}

impl Output {
    pub fn report(report: &Report, format: OutputFormat) -> Result<Self, CliError> {
        let text = match format {
            OutputFormat::Json => report.to_json(),
            OutputFormat::Markdown => report.to_markdown(),
            OutputFormat::Csv => return Err(CliError::Config("reports support json and markdown".into())),
        };
        let ext = if format == OutputFormat::Json { "json" } else { "md" };
        Ok(Self { files: vec![(format!("{}.{ext}", report.command), text)], pass: report.pass })
    }
}

/// Loads and validates the configuration named on the command line.
pub fn resolve(cli: &Cli) -> Result<Resolved, CliError> {
    let (mut config, base) = match &cli.config {
        Some(path) => (RunConfig::load(path)?, path.parent().map(Path::to_path_buf).unwrap_or_default()),
        None => (RunConfig::default(), PathBuf::from(".")),
    };
    if let Some(seed) = cli.seed {
        config.seed = seed;
    }
    if let Command::Verify { variant: Some(v), .. } = cli.command {
        config.transform.rule = match v {
            Variant::Covariant => mdgauge::TransformRule::Covariant,
            Variant::Literal => mdgauge::TransformRule::Literal,
        };
    }
    Resolved::new(config, &base)
}

pub fn execute(cli: &Cli) -> Result<Output, CliError> {
    let report_format = cli.format.unwrap_or(OutputFormat::Json);
    match &cli.command {
        Command::Tables { which, check } => {
            commands::tables(which, cli.format.unwrap_or(OutputFormat::Markdown), check.as_deref(), cli.out.is_some())
        }
        Command::Verify { suite, .. } => Output::report(&suites::verify(&resolve(cli)?, *suite)?, report_format),
        Command::FieldStrength => Output::report(&commands::field_strength(&resolve(cli)?)?, report_format),
        Command::Action { kind, gauge_check } => {
            Output::report(&commands::action(&resolve(cli)?, *kind, *gauge_check)?, report_format)
        }
        Command::OracleConvergence { seeds } => {
            Output::report(&commands::oracle_convergence(&resolve(cli)?, *seeds)?, report_format)
        }
    }
}

fn emit(out: Option<&Path>, files: &[(String, String)]) -> Result<(), CliError> {
    match out {
        Some(dir) => {
            std::fs::create_dir_all(dir).map_err(|e| CliError::Io(format!("cannot create {}: {e}", dir.display())))?;
            for (name, text) in files {
                let path = dir.join(name);
                std::fs::write(&path, text).map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))?;
            }
        }
        None => {
            let joined: Vec<&str> = files.iter().map(|(_, t)| t.as_str()).collect();
            print!("{}", joined.join("\n"));
        }
    }
    Ok(())
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn run<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
        }
    };
    let output = match execute(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("mdgauge: {e}");
            return EXIT_USAGE;
        }
    };
    if let Err(e) = emit(cli.out.as_deref(), &output.files) {
        eprintln!("mdgauge: {e}");
        return EXIT_USAGE;
    }
    if output.pass {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}
