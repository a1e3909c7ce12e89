use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tricent::analysis::{CorrelationMethod, RemovalMode};
use tricent::centrality::MeasureKind;
use tricent::spectral::{DEFAULT_MAX_ITER, DEFAULT_TOL};
use tricent::Alpha;

#[derive(Debug, Parser)]
#[command(
    name = "tricent",
    version,
    about = "Alpha-triangle eigenvector centrality for undirected graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Score vertices with one or more centrality measures.
    Centrality(CentralityArgs),
    /// Alpha-triangle centrality over several alphas, one column per alpha.
    Sweep(SweepArgs),
    /// Rank triangles by importance and optionally by Fiedler cycle index.
    Triangles(TrianglesArgs),
    /// Count connected components before and after removing vertices.
    Connectivity(ConnectivityArgs),
    /// Per-vertex degree, triangle count and neighbor triangle count.
    Stats(StatsArgs),
    /// Pairwise correlation between centrality measures.
    Compare(CompareArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Whitespace-separated edge list; `#` starts a comment.
    #[arg(short, long)]
    pub input: PathBuf,
}

#[derive(Debug, Args)]
pub struct SolverArgs {
    /// Bracket-width tolerance for iterative solvers.
    #[arg(long, env = "TRICENT_TOL", default_value_t = DEFAULT_TOL, value_parser = parse_tol)]
    pub tol: f64,
    #[arg(long, default_value_t = DEFAULT_MAX_ITER)]
    pub max_iter: usize,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Output file; a directory when several reports are produced. Stdout when absent.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CentralityArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Edge weight alpha in (0, 1]; required for `atec`.
    #[arg(short, long, value_parser = parse_alpha)]
    pub alpha: Option<f64>,
    /// Comma-separated list of atec, dc, ec, tc, bc, sc.
    #[arg(short, long, value_delimiter = ',', default_value = "atec", value_parser = parse_measure)]
    pub measure: Vec<MeasureKind>,
    /// Accept disconnected input; atec scores get unit norm per component.
    #[arg(long)]
    pub per_component: bool,
    #[command(flatten)]
    pub solver: SolverArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Comma-separated alphas, at least two.
    #[arg(short, long = "alphas", visible_alias = "alpha", value_delimiter = ',', required = true, value_parser = parse_alpha)]
    pub alphas: Vec<f64>,
    /// Emit the top-N labels per alpha instead of the full score table.
    #[arg(long)]
    pub top: Option<usize>,
    /// Write a line plot of score against alpha.
    #[arg(long)]
    pub svg: Option<PathBuf>,
    #[arg(long)]
    pub per_component: bool,
    #[command(flatten)]
    pub solver: SolverArgs,
    /// Output CSV file; stdout when absent.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct TrianglesArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(short, long, value_parser = parse_alpha)]
    pub alpha: f64,
    /// Add the Fiedler cycle-index ranking as extra columns.
    #[arg(long)]
    pub cycle_index: bool,
    #[arg(long)]
    pub top: Option<usize>,
    #[command(flatten)]
    pub solver: SolverArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Triangle,
    Free,
}

impl From<Mode> for RemovalMode {
    fn from(mode: Mode) -> Self {
        match mode {
            Mode::Triangle => RemovalMode::Triangle,
            Mode::Free => RemovalMode::Free,
        }
    }
}

#[derive(Debug, Args)]
pub struct ConnectivityArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Vertex labels to remove; repeat the flag or separate with commas.
    #[arg(short, long, value_delimiter = ',', required = true)]
    pub remove: Vec<String>,
    #[arg(long, value_enum, default_value_t = Mode::Triangle)]
    pub mode: Mode,
    /// Print JSON instead of text.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct StatsArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Pearson,
    Spearman,
    Kendall,
}

impl From<Method> for CorrelationMethod {
    fn from(method: Method) -> Self {
        match method {
            Method::Pearson => CorrelationMethod::Pearson,
            Method::Spearman => CorrelationMethod::Spearman,
            Method::Kendall => CorrelationMethod::Kendall,
        }
    }
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(short, long, value_parser = parse_alpha)]
    pub alpha: Option<f64>,
    /// At least two measures, comma-separated.
    #[arg(short, long, value_delimiter = ',', required = true, value_parser = parse_measure)]
    pub measure: Vec<MeasureKind>,
    #[arg(long, value_enum, default_value_t = Method::Spearman)]
    pub method: Method,
    /// Write a scatter matrix of unit-normalized scores.
    #[arg(long)]
    pub svg: Option<PathBuf>,
    #[command(flatten)]
    pub solver: SolverArgs,
    /// Output CSV file; stdout when absent.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

fn parse_alpha(s: &str) -> Result<f64, String> {
    let value: f64 = s.trim().parse().map_err(|e| format!("{e}"))?;
    Alpha::new(value).map(Alpha::get).map_err(|e| e.to_string())
}

fn parse_tol(s: &str) -> Result<f64, String> {
    let value: f64 = s.trim().parse().map_err(|e| format!("{e}"))?;
    if value > 0.0 && value.is_finite() {
        Ok(value)
    } else {
        Err(format!("tolerance must be positive, got {value}"))
    }
}

fn parse_measure(s: &str) -> Result<MeasureKind, String> {
    s.parse().map_err(|e: tricent::Error| e.to_string())
}
