//! Command-line surface over the `coulomb1d` library.
//!
//! Data goes to stdout, diagnostics to stderr. Exit codes: 0 success,
//! 1 verification or numerical failure, 2 usage error.

pub mod commands;
pub mod config;
pub mod output;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

pub use config::{Format, RunConfig, CONFIG_ENV};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "coulomb1d", version, about = "Scattering on the one-dimensional Coulomb potential alpha/|x|")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// key = value configuration file; defaults to $COULOMB1D_CONFIG
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    #[arg(long, global = true)]
    pub unitarity_tol: Option<f64>,
    #[arg(long, global = true)]
    pub residual_tol: Option<f64>,
    #[arg(long, global = true)]
    pub energy_tol: Option<f64>,
    /// Significant digits of reported numbers (1..=17)
    #[arg(long, global = true)]
    pub digits: Option<usize>,
    /// Any configuration key, as key=value; repeatable
    #[arg(long = "set", global = true, value_name = "KEY=VALUE")]
    pub set: Vec<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// R-case coefficients at one (alpha, k)
    Scatter(commands::ScatterArgs),
    /// R and T over an (alpha, k) grid
    Sweep(commands::SweepArgs),
    /// Located bound states for alpha < 0
    BoundStates(commands::BoundArgs),
    /// Coefficient of the delta-shaped correction
    Correction(commands::CorrectionArgs),
    /// Run verification suites
    Verify(commands::VerifyArgs),
}

/// Failure of a run, carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: message.into() }
    }

    pub fn failed(message: impl Into<String>) -> Self {
        Failure { code: EXIT_FAILED, message: message.into() }
    }
}

impl From<coulomb1d::Error> for Failure {
    fn from(e: coulomb1d::Error) -> Self {
        use coulomb1d::Error as E;
        match e {
            E::Domain(_) | E::EmptyRange(_) | E::AlphaZero | E::WrongHalfAxis { .. } => Failure::usage(e.to_string()),
            _ => Failure::failed(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::failed(format!("output: {e}"))
    }
}

fn resolve_config(g: &GlobalArgs, env_config: Option<PathBuf>) -> Result<RunConfig, Failure> {
    let mut c = RunConfig::default();
    if let Some(path) = g.config.clone().or(env_config) {
        c.apply_file(&path).map_err(|e| Failure::usage(e.0))?;
    }
    for kv in &g.set {
        let (k, v) = kv.split_once('=').ok_or_else(|| Failure::usage(format!("--set expects KEY=VALUE, got '{kv}'")))?;
        c.set(k.trim(), v.trim()).map_err(|e| Failure::usage(e.0))?;
    }
    if let Some(v) = g.unitarity_tol {
        c.unitarity_tol = v;
    }
    if let Some(v) = g.residual_tol {
        c.residual_tol = v;
    }
    if let Some(v) = g.energy_tol {
        c.energy_tol = v;
    }
    if let Some(v) = g.digits {
        c.digits = v;
    }
    if g.format.is_some() {
        c.format = g.format;
    }
    c.validate().map_err(|e| Failure::usage(e.0))?;
    Ok(c)
}

/// Parse `args` (program name first) and run; returns the exit code.
pub fn run<I, S>(args: I, env_config: Option<PathBuf>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = resolve_config(&cli.global, env_config).and_then(|cfg| commands::dispatch(&cli.command, &cfg, out));
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
