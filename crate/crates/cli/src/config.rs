use std::fmt;
use std::path::PathBuf;

use clap::{Args, ValueEnum};
use permsym::report::Grid;
use permsym::scans::ChiFamily;
use permsym::{Dims, Limits, RootOfUnity, SubsystemPerm};

pub const DEFAULT_SEED: u64 = 2024;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

// Flags shared by every command. Each command declares the subset it reads;
// the rest are hidden from its help and rejected if given.
#[derive(Debug, Clone, Args)]
#[group(skip)]
pub struct RunArgs {
    /// Subsystem dimensions, e.g. 2,2,3
    #[arg(long, value_name = "A,B,..")]
    pub dims: Option<Dims>,

    /// Image list of the slot permutation: 2,3,1 sends slot 1 to 2, 2 to 3, 3 to 1, i.e. the cycle (1,2,3).
    /// Defaults to that cyclic shift, which for two slots is the exchange
    #[arg(long, value_name = "I1,I2,..")]
    pub perm: Option<SubsystemPerm>,

    /// Total dimension N
    #[arg(long = "N", value_name = "N")]
    pub n: Option<u64>,

    /// Parameter grid start:stop:steps, both ends included
    #[arg(long, value_name = "START:STOP:STEPS")]
    pub grid: Option<Grid>,

    /// Seed for every random draw
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write to this file instead of standard output
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,

    /// Label kernel to use (see the `kernels` command)
    #[arg(long)]
    pub kernel: Option<String>,

    /// Largest d in the [2,d] scan
    #[arg(long, default_value_t = 29)]
    pub dmax: usize,

    /// State family: 1 = edge superposition, 2 = random relative phase
    #[arg(long, default_value = "1")]
    pub family: ChiFamily,

    /// Eigenvalue: 1, -1, i, -i or m/l for exp(2 pi i m/l)
    #[arg(long, allow_hyphen_values = true)]
    pub eigenvalue: Option<RootOfUnity>,

    /// Number of slots on the smaller side of each cut
    #[arg(long, default_value_t = 1)]
    pub t: usize,

    /// Antisymmetrizer instead of symmetrizer
    #[arg(long)]
    pub antisymmetric: bool,

    /// Largest N for which dense matrices are built
    #[arg(long, default_value_t = Limits::default().dense_max_n)]
    pub dense_max_n: usize,

    /// Largest number of (σ1, σ2) pairs the coarse-graining search may try
    #[arg(long, default_value_t = Limits::default().search_budget)]
    pub search_budget: u64,
}

/// Argument ids every command accepts.
pub const COMMON_FLAGS: &[&str] = &["format", "out"];

impl RunArgs {
    pub fn dims(&self) -> Result<&Dims, CliError> {
        self.dims
            .as_ref()
            .ok_or_else(|| CliError::Usage("--dims is required".into()))
    }

    /// The given permutation, or the cyclic shift on the slots of `d`.
    pub fn perm_for(&self, d: &Dims) -> Result<SubsystemPerm, CliError> {
        match &self.perm {
            None => Ok(SubsystemPerm::cyclic_shift(d.k())),
            Some(p) if p.k() == d.k() => Ok(p.clone()),
            Some(p) => Err(CliError::Usage(format!(
                "--perm acts on {} slots but --dims has {}",
                p.k(),
                d.k()
            ))),
        }
    }

    pub fn n_or(&self, default: u64) -> u64 {
        self.n.unwrap_or(default)
    }

    pub fn grid_or_default(&self) -> Grid {
        self.grid
            .unwrap_or_else(|| Grid::new(0.0, 1.0, 101).expect("valid default grid"))
    }

    pub fn eigenvalue(&self) -> Result<RootOfUnity, CliError> {
        self.eigenvalue
            .ok_or_else(|| CliError::Usage("--eigenvalue is required".into()))
    }

    pub fn limits(&self) -> Limits {
        Limits {
            dense_max_n: self.dense_max_n,
            search_budget: self.search_budget,
            ..Limits::default()
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Lib(permsym::Error),
    Io(std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Lib(permsym::Error::Parse(_)) => 2,
            CliError::Lib(permsym::Error::Domain(_)) => 3,
            CliError::Lib(permsym::Error::Budget { .. }) => 4,
            CliError::Io(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl From<permsym::Error> for CliError {
    fn from(e: permsym::Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}
