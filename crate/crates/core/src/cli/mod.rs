//! Command-line front end. [`run`] parses arguments, dispatches, and returns
//! the process exit status: 0 on success, 1 on a runtime error or failed
//! verification, 2 on a usage error.

mod commands;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::context::{Caps, Connection};
use crate::error::Error;
use crate::group::{GroupParams, DEFAULT_MAX_ORDER};
use crate::spectra::{MatrixKind, Method, DEFAULT_MAX_MATRIX, DEFAULT_TOLERANCE};
use crate::partition::DEFAULT_MAX_TUPLES;

/// Environment variable overriding the enumeration cap.
pub const MAX_ORDER_ENV: &str = "REFLECTRA_MAX_ORDER";

#[derive(Debug, Parser)]
#[command(
    name = "reflectra",
    version,
    about = "Cayley graphs on the reflections of G(r,p,n) and their integral spectra"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Largest group matrix dimension to build.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_MATRIX)]
    pub max_matrix: usize,

    /// Largest number of partition tuples to enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_TUPLES)]
    pub max_tuples: usize,

    /// Write data output to this file instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args, Clone, Copy)]
pub struct GroupArgs {
    pub r: u32,
    pub p: u32,
    pub n: u32,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Order, degrees, reflection count and class counts of G(r,p,n).
    Group {
        #[command(flatten)]
        group: GroupArgs,
        /// Also list every element in enumeration order.
        #[arg(long)]
        elements: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Conjugacy classes with representatives, sizes, and rational classes.
    Classes {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// The reflections of G(r,p,n) and their orders.
    Reflections {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Reflection length and codimension per conjugacy class.
    Lengths {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Export a group matrix.
    Matrix {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, value_enum, default_value_t = ConnectionArg::AllReflections)]
        connection_set: ConnectionArg,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Spectrum of the adjacency, distance or codimension matrix.
    Spectrum {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, value_enum, default_value_t = MethodArg::Numeric)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = ConnectionArg::AllReflections)]
        connection_set: ConnectionArg,
        /// Distance-to-integer tolerance for rounding eigenvalues.
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tolerance: f64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Roots, factored Poincaré polynomials, ξ and χ(1) of a partition tuple.
    Poincare {
        #[arg(long)]
        r: u32,
        /// Partitions separated by "|", rows by ",", e.g. "3,1||2".
        #[arg(long, allow_hyphen_values = true)]
        tuple: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Codimension spectrum of G(r,1,n) from Young-diagram contents.
    CodimSpectrum {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        n: u32,
        /// List the contribution of every partition tuple.
        #[arg(long)]
        entries: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run a verification suite.
    Verify {
        /// integrality, dihedral, tables, length-codim, rational-length, radius,
        /// bipartite, combinatorial-vs-numeric, galois, class-algebra,
        /// standard-generators, or all.
        suite: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Include per-check runtimes in the report.
        #[arg(long)]
        timings: bool,
        /// Suppress progress messages on stderr.
        #[arg(long, short)]
        quiet: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Adjacency,
    Distance,
    Codimension,
}

impl From<KindArg> for MatrixKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Adjacency => MatrixKind::Adjacency,
            KindArg::Distance => MatrixKind::Distance,
            KindArg::Codimension => MatrixKind::Codimension,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Numeric,
    ClassAlgebra,
    Combinatorial,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Numeric => Method::Numeric,
            MethodArg::ClassAlgebra => Method::ClassAlgebra,
            MethodArg::Combinatorial => Method::Combinatorial,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConnectionArg {
    AllReflections,
    Standard,
}

impl From<ConnectionArg> for Connection {
    fn from(c: ConnectionArg) -> Self {
        match c {
            ConnectionArg::AllReflections => Connection::AllReflections,
            ConnectionArg::Standard => Connection::Standard,
        }
    }
}

/// Everything a spectrum or matrix command needs.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub params: GroupParams,
    pub kind: MatrixKind,
    pub method: Method,
    pub connection: Connection,
    pub tolerance: f64,
    pub caps: Caps,
    pub format: Format,
    pub output: Option<PathBuf>,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Library(#[from] Error),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
    /// A verification ran to completion and reported failures.
    #[error("{0} verification check(s) failed")]
    Failed(usize),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

fn enumeration_cap() -> Result<usize, CliError> {
    match std::env::var(MAX_ORDER_ENV) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&c| c > 0)
            .ok_or_else(|| CliError::Usage(format!("{MAX_ORDER_ENV} must be a positive integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_ORDER),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(rendered.as_bytes())
            } else {
                stdout.write_all(rendered.as_bytes())
            };
            return e.exit_code();
        }
    };
    match commands::dispatch(cli, stdout) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
