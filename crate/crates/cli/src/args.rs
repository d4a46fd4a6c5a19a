use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

/// Separability certificates from norm balls around the identity.
#[derive(Debug, Parser)]
#[command(name = "sepball", version)]
pub struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    pub json: bool,

    /// Numeric tolerance: bisection width for `scan` (default 1e-8),
    /// Hermiticity and PPT tolerance elsewhere (default 1e-9).
    #[arg(long, global = true)]
    pub tol: Option<f64>,

    /// Override the subsystem dimensions of a loaded state, e.g. 2,2,2.
    #[arg(long, global = true)]
    pub profile: Option<Dims>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a state file for one of the built-in families.
    Gen(GenArgs),
    /// Distances of a state from the identity in the supported norms.
    Norm(InputArgs),
    /// Run the separable-ball certifiers on a state.
    Certify(CertifyArgs),
    /// Locate the parameter where a certifier stops certifying a family.
    Scan(ScanArgs),
    /// Thresholds for the mixed Horodecki state, next to the published values.
    Table1,
    /// Partial transpose test.
    Ppt(InputArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Werner,
    Isotropic,
    Horodecki,
    HorodeckiMix,
    Pseudopure,
    Sppt,
    Circulant,
    MaximallyMixed,
}

#[derive(Debug, Clone, Args)]
pub struct FamilyArgs {
    #[arg(value_enum)]
    pub family: Family,
    /// Local dimension (werner, isotropic).
    #[arg(long)]
    pub d: Option<usize>,
    /// Werner parameter.
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<f64>,
    /// Horodecki parameter.
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<f64>,
    /// Mixing weight (horodecki-mix).
    #[arg(long, allow_hyphen_values = true)]
    pub p: Option<f64>,
    /// Noise weight (isotropic, pseudopure).
    #[arg(long, allow_hyphen_values = true)]
    pub epsilon: Option<f64>,
    /// Subsystem dimensions (pseudopure, maximally-mixed).
    #[arg(long)]
    pub dims: Option<Dims>,
    /// Comma-separated complex amplitudes, normalized on input (pseudopure).
    #[arg(long, allow_hyphen_values = true)]
    pub vector: Option<ComplexList>,
    /// X1 block of an SPPT state. Rows separated by ';', entries by ','.
    #[arg(long, allow_hyphen_values = true)]
    pub x1: Option<MatrixArg>,
    /// X2 block, same format as --x1.
    #[arg(long, allow_hyphen_values = true)]
    pub x2: Option<MatrixArg>,
    /// Off-diagonal block S, same format as --x1.
    #[arg(long, allow_hyphen_values = true)]
    pub s: Option<MatrixArg>,
    /// Circulant A entries: a11, a12 (complex), a22.
    #[arg(long, allow_hyphen_values = true)]
    pub a11: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub a12: Option<ComplexArg>,
    #[arg(long, allow_hyphen_values = true)]
    pub a22: Option<f64>,
    /// Circulant B entries: b11, b12 (complex), b22.
    #[arg(long, allow_hyphen_values = true)]
    pub b11: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub b12: Option<ComplexArg>,
    #[arg(long, allow_hyphen_values = true)]
    pub b22: Option<f64>,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Output path; stdout when absent.
    #[arg(long, short)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// State file.
    pub input: PathBuf,
}

#[derive(Debug, Args)]
pub struct CertifyArgs {
    /// State file.
    pub input: PathBuf,
    /// Also search over scalings of the nested ball.
    #[arg(long)]
    pub scaled: bool,
    /// Every applicable certifier, including scaled search on multipartite states.
    #[arg(long)]
    pub all: bool,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Parameter to vary.
    #[arg(long)]
    pub param: String,
    /// Lower end of the scan; family default when absent.
    #[arg(long, allow_hyphen_values = true)]
    pub lo: Option<f64>,
    /// Upper end of the scan.
    #[arg(long, allow_hyphen_values = true)]
    pub hi: Option<f64>,
    /// nested, nested-scaled, frobenius, spectral or hildebrand.
    #[arg(long, default_value = "nested")]
    pub certifier: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dims(pub Vec<usize>);

impl FromStr for Dims {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        s.split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|e| format!("bad dimension '{t}': {e}")))
            .collect::<Result<Vec<_>, _>>()
            .map(Dims)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexArg(pub Complex64);

impl FromStr for ComplexArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        Complex64::from_str(&t)
            .map(ComplexArg)
            .map_err(|_| format!("bad complex number '{s}'"))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComplexList(pub Vec<Complex64>);

impl FromStr for ComplexList {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        s.split(',')
            .map(|t| t.parse::<ComplexArg>().map(|c| c.0))
            .collect::<Result<Vec<_>, _>>()
            .map(ComplexList)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MatrixArg(pub Vec<Vec<Complex64>>);

impl FromStr for MatrixArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        s.split(';')
            .map(|row| row.parse::<ComplexList>().map(|l| l.0))
            .collect::<Result<Vec<_>, _>>()
            .map(MatrixArg)
    }
}
