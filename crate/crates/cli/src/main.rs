use std::fmt;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use commenergy::groups::DEFAULT_ORDER_CAP;
use commenergy::Error;

mod commands;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Dot,
    Pretty,
}

#[derive(Parser, Debug)]
#[command(name = "commenergy", version)]
#[command(about = "Commuting graphs of finite groups: spectra, energies and formula checks")]
pub struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value = "pretty", env = "COMMENERGY_FORMAT")]
    pub format: OutputFormat,

    /// Width bound for interval-valued energies (decimal or n/d)
    #[arg(long, global = true, env = "COMMENERGY_TOLERANCE")]
    pub tolerance: Option<String>,

    /// Largest group order that will be built
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER_CAP, env = "COMMENERGY_MAX_ORDER")]
    pub max_order: usize,

    /// Worker threads for verify and table rows (default: all cores)
    #[arg(long, global = true, env = "COMMENERGY_THREADS")]
    pub threads: Option<usize>,

    /// Write output to FILE instead of stdout
    #[arg(long, global = true, env = "COMMENERGY_OUT")]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a group and summarize it
    Group { descriptor: String },

    /// Energy, Laplacian energy and signless Laplacian energy of the commuting graph
    Energy {
        descriptor: String,
        /// Spectrum path: auto, clique or general
        #[arg(long, default_value = "auto")]
        path: String,
    },

    /// Exact spectra of A, L and Q
    Spectrum {
        descriptor: String,
        /// adjacency, laplacian, signless or all
        #[arg(long, default_value = "all")]
        kind: String,
    },

    /// The commuting graph itself
    Graph { descriptor: String },

    /// The printed formula registry
    Formulas {
        #[command(subcommand)]
        action: FormulasAction,
    },

    /// Check printed formulas against direct computation
    Verify(VerifyArgs),

    /// Regenerate a printed table next to computed values
    Table {
        #[arg(value_enum)]
        which: TableKind,
    },
}

#[derive(Subcommand, Debug)]
pub enum FormulasAction {
    /// List every entry
    List,
    /// Evaluate one entry, e.g. `formulas eval F6 m=5`
    Eval { id: String, params: Vec<String> },
}

#[derive(clap::Args, Debug)]
pub struct VerifyArgs {
    /// Formula ids (comma separated)
    #[arg(long, value_delimiter = ',')]
    pub formula: Vec<String>,

    /// Base descriptor extended by the parameter lists, e.g. `elementary:p=2`
    #[arg(long)]
    pub family: Option<String>,

    #[arg(long, value_delimiter = ',')]
    pub m: Vec<u64>,
    #[arg(long, value_delimiter = ',')]
    pub n: Vec<u64>,
    #[arg(long, value_delimiter = ',')]
    pub p: Vec<u64>,
    #[arg(long, value_delimiter = ',')]
    pub q: Vec<u64>,
    #[arg(long, value_delimiter = ',')]
    pub k: Vec<u64>,
    #[arg(long, value_delimiter = ',')]
    pub z: Vec<u64>,

    /// Run the whole witness suite
    #[arg(long)]
    pub all: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    Planar,
    Toroidal,
    Order16,
    #[value(name = "superintegral-census")]
    SuperintegralCensus,
}

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Usage(String),
    Io(String),
    Inconsistent(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Inconsistent(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Io(_) => 1,
            CliError::Core(e) => match e {
                Error::OrderCapExceeded { .. } | Error::DimensionCap { .. } | Error::FieldTooLarge { .. } => 3,
                Error::AbelianGroup => 4,
                Error::NoConvergence { .. } => 1,
                _ => 2,
            },
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Usage(m) | CliError::Io(m) => f.write_str(m),
            CliError::Inconsistent(m) => write!(f, "internal inconsistency: {m}"),
        }
    }
}

/// Rendered output plus an optional failure to report after writing it.
pub struct Output {
    pub text: String,
    pub failure: Option<CliError>,
}

impl From<String> for Output {
    fn from(text: String) -> Self {
        Output { text, failure: None }
    }
}

fn emit(cli: &Cli, text: &str) -> Result<(), CliError> {
    match &cli.out {
        Some(path) => fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> Result<(), CliError> {
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cli.threads {
        if n == 0 {
            return Err(CliError::Usage("--threads must be at least 1".into()));
        }
        pool = pool.num_threads(n);
    }
    let pool = pool.build().map_err(|e| CliError::Io(e.to_string()))?;
    let output = pool.install(|| commands::dispatch(cli))?;
    emit(cli, &output.text)?;
    match output.failure {
        Some(e) => Err(e),
        None => Ok(()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
