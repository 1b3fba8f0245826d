//! Command line front end for `sinesum`.
//!
//! `run` parses an argument vector, dispatches to the library and renders
//! the result as text, JSON or CSV. Exit codes: 0 on success, 1 when any
//! check fails, 2 on usage and domain errors.

mod commands;
pub mod output;
pub mod table;

use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

pub use output::{Format, Table};
pub use table::{emit_table, TableKind, TableSpec};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: &'static str,
    pub message: String,
}

impl CliError {
    pub fn new(code: &'static str, message: impl Into<String>) -> Self {
        Self { code, message: message.into() }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "error[{}]: {}", self.code, self.message)
    }
}

macro_rules! from_lib_error {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                Self::new(e.code(), e.to_string())
            }
        }
    )*};
}
from_lib_error!(sinesum::CscError, sinesum::ZetaError, sinesum::IdentityError);

#[derive(Debug, Parser)]
#[command(name = "sinesum", version, about = "Dyadic cosecant power sums, their closed forms and zeta values")]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Working precision in bits
    #[arg(long, global = true, default_value_t = sinesum::DEFAULT_PRECISION,
          value_parser = parse_precision)]
    pub precision: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the output to FILE instead of standard output
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<std::path::PathBuf>,
    /// Report wall time
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum RowKind {
    /// Odd power expansion over csc((2j-1)pi/2^n)
    Odd,
    /// First row of the transfer matrix
    First,
    /// Even power expansion over the half-angle sines
    Even,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    Simpson,
    Gauss,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// S(s, n) by direct summation, checked against its closed form
    Sum {
        #[arg(long)]
        s: u32,
        #[arg(long)]
        n: u32,
        /// Relative tolerance, a number or 2^-E
        #[arg(long, default_value = "2^-200", value_parser = parse_tol)]
        tol: f64,
    },
    /// One exact coefficient row
    Row {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = RowKind::Odd)]
        kind: RowKind,
    },
    /// The full transfer matrix M_n
    Matrix {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
        /// Even power matrix instead
        #[arg(long)]
        even: bool,
    },
    /// Run identity and trigonometric lemma sweeps
    Verify {
        /// all, identities, trig, or a single identity or lemma tag
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 10)]
        max_m: i64,
        #[arg(long, default_value_t = 12)]
        max_n: i64,
    },
    /// Zeta values: odd through the integral, even exactly, or Z(m, n)
    #[command(group(clap::ArgGroup::new("which").required(true).args(["odd", "even", "s"])))]
    Zeta {
        /// Odd argument 2j+1 >= 3
        #[arg(long)]
        odd: Option<u32>,
        /// k for zeta(2k)
        #[arg(long)]
        even: Option<u32>,
        /// m for the prelimit Z(m, n)
        #[arg(long, requires = "n")]
        s: Option<u32>,
        #[arg(long)]
        n: Option<u32>,
        /// Absolute tolerance for the odd integral
        #[arg(long, default_value = "1e-15", value_parser = parse_tol)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Method::Simpson)]
        method: Method,
    },
    /// Tables of even sums, odd rows or odd limit convergence
    Table {
        #[arg(long, value_parser = |s: &str| s.parse::<TableKind>())]
        kind: TableKind,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long, conflicts_with_all = ["n_min", "n_max"])]
        n: Option<u32>,
        #[arg(long, requires = "n_max")]
        n_min: Option<u32>,
        #[arg(long, requires = "n_min")]
        n_max: Option<u32>,
    },
}

fn parse_precision(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(p) if (64..=8192).contains(&p) => Ok(p),
        _ => Err(format!("`{s}` is not a precision in 64..=8192 bits")),
    }
}

/// Accepts a decimal number or `2^-E`.
pub fn parse_tol(s: &str) -> Result<f64, String> {
    let v = match s.strip_prefix("2^") {
        Some(e) => e.parse::<i32>().map(|e| 2f64.powi(e)).map_err(|_| format!("bad exponent in `{s}`"))?,
        None => s.parse::<f64>().map_err(|_| format!("`{s}` is not a number"))?,
    };
    if v.is_finite() && v > 0.0 {
        Ok(v)
    } else {
        Err(format!("tolerance `{s}` must be positive and finite"))
    }
}

/// Parse `argv` (program name first), execute, and write the rendered
/// output. Returns the process exit code.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = output::write_all(stderr, &text);
                2
            } else {
                let _ = output::write_all(stdout, &text);
                0
            };
        }
    };
    let start = Instant::now();
    let report = match commands::execute(&cli.command, cli.common.precision) {
        Ok(r) => r,
        Err(e) => {
            let _ = output::write_all(stderr, &format!("{e}\n"));
            return 2;
        }
    };
    let meta = output::Meta {
        precision: cli.common.precision,
        elapsed_ms: cli.common.timing.then(|| start.elapsed().as_secs_f64() * 1e3),
    };
    let rendered = output::render(&report, cli.common.format, &meta);
    let written = match &cli.common.out {
        Some(path) => std::fs::write(path, rendered.as_bytes()),
        None => output::write_all(stdout, &rendered),
    };
    if let Err(e) = written {
        let _ = output::write_all(stderr, &format!("{}\n", CliError::new("IO", e.to_string())));
        return 2;
    }
    i32::from(report.failed)
}
