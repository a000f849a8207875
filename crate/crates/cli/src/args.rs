use std::path::PathBuf;

use bihoradam_core::{HoradamParams, Preset, Rational};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "bihoradam",
    version,
    about = "Exact bicomplex Horadam numbers and identity sweeps"
)]
pub struct Cli {
    /// Also write standard output to this file (same bytes).
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute BH_n.
    Term(TermArgs),
    /// Generating function and its first series coefficients.
    Gf(GfArgs),
    /// Sweep identities, comparing closed forms against direct evaluation.
    Verify(VerifyArgs),
    /// Time evaluation strategies and check that they agree.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Pretty,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PresetArg {
    Fibonacci,
    Lucas,
    Pell,
}

impl From<PresetArg> for Preset {
    fn from(p: PresetArg) -> Self {
        match p {
            PresetArg::Fibonacci => Preset::Fibonacci,
            PresetArg::Lucas => Preset::Lucas,
            PresetArg::Pell => Preset::Pell,
        }
    }
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.parse::<Rational>().map_err(|e| e.to_string())
}

/// Sequence parameters: a preset, optionally overridden field by field.
#[derive(Debug, Clone, Args)]
pub struct ParamArgs {
    #[arg(long, value_enum)]
    pub preset: Option<PresetArg>,
    /// w_0, as an integer or num/den.
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    pub a: Option<Rational>,
    /// w_1
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    pub b: Option<Rational>,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    pub p: Option<Rational>,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    pub q: Option<Rational>,
}

impl ParamArgs {
    pub fn resolve(&self, default: Preset) -> HoradamParams {
        let base = self.preset.map(Preset::from).unwrap_or(default).params();
        HoradamParams::new(
            self.a.clone().unwrap_or_else(|| base.a().clone()),
            self.b.clone().unwrap_or_else(|| base.b().clone()),
            self.p.clone().unwrap_or_else(|| base.p().clone()),
            self.q.clone().unwrap_or_else(|| base.q().clone()),
        )
    }
}

#[derive(Debug, Args)]
pub struct TermArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    /// Index; negative values need q != 0.
    #[arg(short = 'n', long = "n", allow_hyphen_values = true)]
    pub n: i64,
    /// iterative, matrix, binet or gf.
    #[arg(long, default_value = "matrix")]
    pub strategy: String,
    #[arg(long, value_enum, default_value_t = OutputFormat::Pretty)]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct GfArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long)]
    pub order: usize,
    #[arg(long, value_enum, default_value_t = OutputFormat::Pretty)]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Identity id, or `all` for the whole catalog.
    #[arg(value_name = "IDENTITY", conflicts_with = "identity")]
    pub target: Option<String>,
    #[arg(long)]
    pub identity: Option<String>,
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long)]
    pub n_min: Option<i64>,
    #[arg(long)]
    pub n_max: Option<i64>,
    #[arg(long)]
    pub m_min: Option<i64>,
    #[arg(long)]
    pub m_max: Option<i64>,
    #[arg(long)]
    pub r_min: Option<i64>,
    #[arg(long)]
    pub r_max: Option<i64>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Pretty)]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(short = 'n', long = "n", allow_hyphen_values = true)]
    pub n: i64,
    /// Comma-separated strategies; defaults to all of them.
    #[arg(long, value_delimiter = ',')]
    pub strategies: Option<Vec<String>>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Pretty)]
    pub format: OutputFormat,
}
