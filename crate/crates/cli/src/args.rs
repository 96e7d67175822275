use std::path::PathBuf;

use bernstein_core::sweep::DEFAULT_MARGIN;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "bernstein",
    version,
    about = "Bernstein-type derivative bounds on convex bodies"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generalized Minkowski functional α(K, x) of a polygon read from a file
    Alpha(AlphaArgs),
    /// Ellipse, pluripotential and Kroó–Révész bounds on the triangle
    Compare(CompareArgs),
    /// Sup-ratios behind the constants √3 and √(3+√5)
    Constants(ConstantsArgs),
    /// Kernel set of a family of directional bounds at a point of the triangle
    Kernel(KernelArgs),
    /// Randomized check of the directional Bernstein bound
    Verify(VerifyArgs),
    /// Extremal function V_Δ(z); components given as `re im` pairs
    Extremal(ExtremalArgs),
    /// Best inscribed ellipse constant E(K, x, y)
    Ellipse(EllipseArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Svg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Source {
    /// Kroó–Révész chord bounds
    Kr,
    /// Exact bounds D_y⁺V_Δ(x)
    Baran,
}

#[derive(Debug, Args)]
pub struct AlphaArgs {
    /// Polygon file: one `x y` vertex per line, counterclockwise
    pub body: PathBuf,
    #[arg(allow_negative_numbers = true)]
    pub x1: f64,
    #[arg(allow_negative_numbers = true)]
    pub x2: f64,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    /// Lattice points per side of the triangle
    #[arg(long, default_value_t = 20)]
    pub grid: usize,
    /// Directions φ_k = kπ/dirs
    #[arg(long, default_value_t = 36)]
    pub dirs: usize,
    #[arg(long, default_value_t = DEFAULT_MARGIN)]
    pub margin: f64,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ConstantsArgs {
    #[arg(long, default_value_t = 200)]
    pub grid: usize,
    #[arg(long, default_value_t = DEFAULT_MARGIN)]
    pub margin: f64,
}

#[derive(Debug, Args)]
pub struct KernelArgs {
    #[arg(allow_negative_numbers = true)]
    pub x1: f64,
    #[arg(allow_negative_numbers = true)]
    pub x2: f64,
    #[arg(long, value_enum, default_value_t = Source::Kr)]
    pub source: Source,
    #[arg(long, default_value_t = 4096)]
    pub dirs: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 4)]
    pub degree: usize,
    #[arg(long, default_value_t = 1000)]
    pub trials: usize,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// JSON report; printed to stdout when absent
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ExtremalArgs {
    #[arg(required = true, allow_negative_numbers = true)]
    pub z: Vec<f64>,
}

#[derive(Debug, Args)]
pub struct EllipseArgs {
    pub body: PathBuf,
    #[arg(allow_negative_numbers = true)]
    pub x1: f64,
    #[arg(allow_negative_numbers = true)]
    pub x2: f64,
    /// Direction angle in radians
    #[arg(allow_negative_numbers = true)]
    pub phi: f64,
}
