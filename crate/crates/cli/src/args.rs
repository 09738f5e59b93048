use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "conedet",
    version,
    about = "Determinants of Dirichlet Laplacians on constant-curvature cones"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one determinant.
    Det(DetArgs),
    /// Evaluate a determinant over one or two parameter grids.
    Table(TableArgs),
    /// Compare the orbifold determinant with its small-radius expansion.
    Asympt(AsymptArgs),
    /// Run the identity suite.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    /// log det on the hyperbolic cone (needs --a, --eta)
    Hyperbolic,
    /// log det on the hyperbolic orbifold cone (needs --w, --eta)
    Orbifold,
    /// ζ'(0) on the spindle (needs --a, --K)
    Spindle,
    /// ζ'(0) on the spherical cone (needs --a, --K)
    Sphericalcone,
    /// ζ'(0) on the curved unit-disk cone (needs --a, --K)
    Diskcone,
    /// log det on the flat disk (needs --r)
    Flatdisk,
    /// log det on the hyperbolic cap without cone point (needs --eta)
    Poincarecap,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, Args)]
pub struct Params {
    /// Cone-angle parameter (angle 2πa)
    #[arg(long, allow_negative_numbers = true)]
    pub a: Option<f64>,
    /// Geodesic radius of the boundary
    #[arg(long, allow_negative_numbers = true)]
    pub eta: Option<f64>,
    /// Orbifold order (a = 1/w)
    #[arg(long, allow_negative_numbers = true)]
    pub w: Option<f64>,
    /// Curvature
    #[arg(long = "K", allow_negative_numbers = true)]
    pub k: Option<f64>,
    /// Disk radius
    #[arg(long, allow_negative_numbers = true)]
    pub r: Option<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct QuadArgs {
    /// Absolute tolerance of the adaptive quadrature
    #[arg(long)]
    pub quad_tol: Option<f64>,
    /// Subdivision budget of the adaptive quadrature
    #[arg(long)]
    pub max_subdivisions: Option<usize>,
}

#[derive(Debug, Args)]
pub struct DetArgs {
    #[arg(value_enum)]
    pub kind: Kind,
    #[command(flatten)]
    pub params: Params,
    #[arg(long, value_enum, default_value = "plain")]
    pub format: Format,
    #[command(flatten)]
    pub quad: QuadArgs,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(value_enum)]
    pub kind: Kind,
    /// NAME=start,stop,count[,log]; give once or twice
    #[arg(long = "grid", required = true, allow_hyphen_values = true)]
    pub grids: Vec<String>,
    #[command(flatten)]
    pub params: Params,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: TableFormat,
    #[command(flatten)]
    pub quad: QuadArgs,
}

#[derive(Debug, Args)]
pub struct AsymptArgs {
    /// Orbifold order
    #[arg(long, allow_negative_numbers = true)]
    pub w: i64,
    /// start,stop,count[,log] with 0 < start and stop <= 1
    #[arg(long, allow_hyphen_values = true)]
    pub grid: String,
    /// Add the reference expansion and its residual
    #[arg(long)]
    pub compare_fp: bool,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: TableFormat,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 1e-8, allow_negative_numbers = true)]
    pub tol: f64,
    #[arg(long, value_enum, default_value = "plain")]
    pub format: Format,
    #[command(flatten)]
    pub quad: QuadArgs,
}
