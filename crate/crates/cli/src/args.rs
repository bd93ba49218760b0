use clap::{Args, Parser, Subcommand, ValueEnum};
use lerch::engines::EngineKind;
use lerch::{Complex64, CutSide};

#[derive(Debug, Parser)]
#[command(name = "lerch", version, about = "Evaluate the Lerch transcendent Φ(z, s, a)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate Φ at one point.
    Eval(EvalArgs),
    /// Recompute the a = 0.3, s = 3/4, N = 5 verification table.
    Table1(Table1Args),
    /// Error-vs-parameter sweeps.
    Sweep(SweepArgs),
    /// Dump Taylor coefficients b_n or pole-subtracted b_{n,N}.
    Coeffs(CoeffsArgs),
}

/// Parses `re,im` or a bare real.
pub fn parse_complex(text: &str) -> Result<Complex64, String> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let num = |t: &str| t.parse::<f64>().map_err(|_| format!("cannot parse `{t}` as a number"));
    let v = match parts.as_slice() {
        [re] => Complex64::new(num(re)?, 0.0),
        [re, im] => Complex64::new(num(re)?, num(im)?),
        _ => return Err(format!("expected `re,im`, got `{text}`")),
    };
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(format!("`{text}` is not finite"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EngineArg {
    Auto,
    Direct,
    NearOne,
    IntegerS,
    Main,
    Symmetric,
    Fl,
    Factorial,
    Oracle,
}

impl EngineArg {
    pub fn kind(self) -> Option<EngineKind> {
        match self {
            EngineArg::Auto => None,
            EngineArg::Direct => Some(EngineKind::Direct),
            EngineArg::NearOne => Some(EngineKind::NearOne),
            EngineArg::IntegerS => Some(EngineKind::IntegerS),
            EngineArg::Main => Some(EngineKind::MainTheorem),
            EngineArg::Symmetric => Some(EngineKind::SymmetricIgamma),
            EngineArg::Fl => Some(EngineKind::FlExpansion),
            EngineArg::Factorial => Some(EngineKind::Factorial),
            EngineArg::Oracle => Some(EngineKind::Oracle),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Above,
    Below,
}

impl From<SideArg> for CutSide {
    fn from(s: SideArg) -> Self {
        match s {
            SideArg::Above => CutSide::Above,
            SideArg::Below => CutSide::Below,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct PointArgs {
    /// z as `re,im`.
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub z: Complex64,
    /// s as `re,im`.
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub s: Complex64,
    /// a as `re,im`.
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub a: Complex64,
    /// Side of the cut used for real z > 1.
    #[arg(long, value_enum, default_value = "above")]
    pub cut_side: SideArg,
}

#[derive(Debug, Clone, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    pub point: PointArgs,
    #[arg(long, value_enum, default_value = "auto")]
    pub engine: EngineArg,
    /// Target absolute tolerance.
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
    /// Truncation order for the chosen engine.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Args)]
pub struct Table1Args {
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepMode {
    TermsVsError,
    MLandscape,
    ZScaling,
    FactorialTrace,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[arg(long, value_enum)]
    pub mode: SweepMode,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true, default_value = "-10,0")]
    pub z: Complex64,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true, default_value = "0.75,0")]
    pub s: Complex64,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true, default_value = "0.3,0")]
    pub a: Complex64,
    #[arg(long, value_enum, default_value = "above")]
    pub cut_side: SideArg,
    /// Subtraction order N (m-landscape, z-scaling).
    #[arg(long, default_value_t = 5)]
    pub n: usize,
    /// Smallest N (terms-vs-error).
    #[arg(long, default_value_t = 1)]
    pub n_min: usize,
    /// Largest N (terms-vs-error).
    #[arg(long, default_value_t = 20)]
    pub n_max: usize,
    /// Largest M (m-landscape).
    #[arg(long, default_value_t = 30)]
    pub m_max: usize,
    /// Ray points z·factor^k for k = 0..=k-max (z-scaling).
    #[arg(long, default_value_t = 3)]
    pub k_max: u32,
    #[arg(long, default_value_t = 2.0)]
    pub factor: f64,
    /// Term cap (factorial-trace).
    #[arg(long, default_value_t = 500)]
    pub max_terms: usize,
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: OutputFormat,
}

#[derive(Debug, Clone, Args)]
pub struct CoeffsArgs {
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub a: Complex64,
    /// Highest index n (inclusive).
    #[arg(long)]
    pub n_max: usize,
    /// Subtraction order N; emits both the stable and the direct-sum table.
    #[arg(long)]
    pub subtract: Option<usize>,
}
