//! Command-line front end for `lorentz-optics`.
//!
//! Single evaluations print JSON, sweeps print CSV with a header row; either
//! can be overridden with `--format`. Output goes to standard output unless
//! `--out` names a file; relative `--out` paths are resolved against
//! `LORENTZ_OPTICS_OUT_DIR` when that variable is set.
//!
//! Exit codes: 0 on success, 1 on a domain error (or a failing invariant
//! check), 2 on a usage error.

pub mod args;
mod commands;
pub mod output;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use thiserror::Error;

pub use commands::check::CHECK_NAMES;
use commands::{cavity, check, decomp, layers, lens, osc, polar};
use output::{Format, Output};

/// Environment variable naming the directory for relative `--out` paths.
pub const OUT_DIR_ENV: &str = "LORENTZ_OPTICS_OUT_DIR";

#[derive(Debug, Clone, Parser)]
#[command(
    name = "lorentz-optics",
    version,
    about = "Lorentz-group matrix methods for ray and polarization optics"
)]
pub struct CommandPlan {
    /// Output format; single results default to json, sweeps to csv.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Jones vectors, coherency matrices, Stokes parameters and Mueller matrices.
    Polar {
        #[command(subcommand)]
        cmd: polar::PolarCmd,
    },
    /// ABCD lens systems and three-lens synthesis.
    Lens {
        #[command(subcommand)]
        cmd: lens::LensCmd,
    },
    /// Round trips of the symmetric two-mirror cavity.
    Cavity(cavity::CavityArgs),
    /// Periodic multilayer stacks.
    Layers {
        #[command(subcommand)]
        cmd: layers::LayersCmd,
    },
    /// Factorizations of real unimodular matrices.
    Decomp {
        #[command(subcommand)]
        cmd: decomp::DecompCmd,
    },
    /// Squeezed oscillator state and its two-mode expansion.
    Osc {
        #[command(subcommand)]
        cmd: osc::OscCmd,
    },
    /// Run the invariant suite.
    Check(check::CheckArgs),
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Domain(#[from] lorentz_optics::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{failed} of {total} invariant checks failed")]
    ChecksFailed { failed: usize, total: usize },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }

    fn io(path: &Path, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.to_owned(),
            source,
        }
    }
}

/// Parses arguments without the program name.
pub fn parse<I, T>(argv: I) -> Result<CommandPlan, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let full =
        std::iter::once(OsString::from("lorentz-optics")).chain(argv.into_iter().map(Into::into));
    CommandPlan::try_parse_from(full)
}

/// Rendered result of a plan. `deferred` is an error to report after the
/// bytes are written, used when invariant checks fail.
#[derive(Debug)]
pub struct Rendered {
    pub bytes: Vec<u8>,
    pub deferred: Option<CliError>,
}

/// Runs a plan and renders its result without writing it anywhere.
pub fn render(plan: &CommandPlan) -> Result<Rendered, CliError> {
    let (output, deferred) = dispatch(&plan.command)?;
    let bytes = output.render(plan.format).ok_or_else(|| {
        CliError::Usage("this subcommand produces a single result; use --format json".into())
    })?;
    Ok(Rendered { bytes, deferred })
}

fn dispatch(command: &Command) -> Result<(Output, Option<CliError>), CliError> {
    let output = match command {
        Command::Polar { cmd } => polar::run(cmd)?,
        Command::Lens { cmd } => lens::run(cmd)?,
        Command::Cavity(a) => cavity::run(a)?,
        Command::Layers { cmd } => layers::run(cmd)?,
        Command::Decomp { cmd } => decomp::run(cmd)?,
        Command::Osc { cmd } => osc::run(cmd)?,
        Command::Check(a) => {
            let report = check::run(a)?;
            let failed = report.failed();
            let deferred = (failed > 0).then_some(CliError::ChecksFailed {
                failed,
                total: report.results.len(),
            });
            return Ok((report.output(), deferred));
        }
    };
    Ok((output, None))
}

/// Output path after applying [`OUT_DIR_ENV`].
pub fn resolve_out(path: &Path, env_dir: Option<&Path>) -> PathBuf {
    match env_dir {
        Some(dir) if path.is_relative() => dir.join(path),
        _ => path.to_owned(),
    }
}

fn write_sink(plan: &CommandPlan, bytes: &[u8]) -> Result<(), CliError> {
    match &plan.out {
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(bytes)
                .and_then(|_| stdout.flush())
                .map_err(|e| CliError::io(Path::new("<stdout>"), e))
        }
        Some(path) => {
            let env_dir = std::env::var_os(OUT_DIR_ENV).map(PathBuf::from);
            let target = resolve_out(path, env_dir.as_deref());
            if let Some(parent) = target.parent().filter(|p| !p.as_os_str().is_empty()) {
                std::fs::create_dir_all(parent).map_err(|e| CliError::io(parent, e))?;
            }
            std::fs::write(&target, bytes).map_err(|e| CliError::io(&target, e))
        }
    }
}

/// Runs a plan, writes its result, and returns the process exit code.
pub fn execute(plan: &CommandPlan) -> i32 {
    let result = render(plan).and_then(|r| {
        write_sink(plan, &r.bytes)?;
        r.deferred.map_or(Ok(()), Err)
    });
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
