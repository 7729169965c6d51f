use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;
use std::str::FromStr;

#[derive(Parser, Debug)]
#[command(name = "subreg", version, about = "Subregularity, growth and proximal-rate analyses of convex functions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Estimate the regularity moduli of ∂f at (x̄, ȳ*) and cross-check their bounds.
    Analyze(AnalyzeArgs),
    /// Run the proximal point algorithm and classify its convergence rate.
    Prox(ProxArgs),
    /// Conjugate f, check the inverse law and compare calmness with dual growth.
    Duality(DualityArgs),
    /// Calmness of the parametric solution map S(x) = (∂φ)⁻¹(−(αx + β)).
    SolutionMap(SolutionMapArgs),
    /// Run the acceptance matrix and write summary.csv.
    Suite(SuiteArgs),
}

/// Comma-separated list of reals (`inf` and `-inf` accepted).
#[derive(Clone, Debug, PartialEq)]
pub struct Point(pub Vec<f64>);

impl FromStr for Point {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.split(',')
            .map(|t| t.trim().parse::<f64>().map_err(|e| format!("'{t}': {e}")))
            .collect::<Result<Vec<_>, _>>()
            .map(Point)
    }
}

#[derive(Args, Debug)]
pub struct FunctionArg {
    /// Function descriptor: a JSON file path or inline JSON.
    #[arg(long)]
    pub function: String,
}

#[derive(Args, Debug)]
pub struct PointArgs {
    /// Base point x̄ (defaults to the origin).
    #[arg(long, allow_hyphen_values = true)]
    pub xbar: Option<Point>,
    /// Dual point ȳ* (defaults to the origin).
    #[arg(long, allow_hyphen_values = true)]
    pub ystar: Option<Point>,
    /// Neighborhood radius a.
    #[arg(long, default_value_t = 1.0)]
    pub radius: f64,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct GridArgs {
    /// Tensor-grid points per axis.
    #[arg(long, default_value_t = 41)]
    pub grid: usize,
    /// Random samples added to the tensor grid.
    #[arg(long, default_value_t = 200)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Args, Debug)]
pub struct OutArg {
    /// Output directory (created if missing).
    #[arg(long, default_value = "subreg-out")]
    pub out: PathBuf,
}

#[derive(Args, Debug)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub function: FunctionArg,
    #[command(flatten)]
    pub point: PointArgs,
    #[command(flatten)]
    pub grid: GridArgs,
    #[command(flatten)]
    pub out: OutArg,
}

#[derive(Args, Debug)]
pub struct ProxArgs {
    #[command(flatten)]
    pub function: FunctionArg,
    /// Starting point.
    #[arg(long, allow_hyphen_values = true)]
    pub x0: Point,
    /// Limit point used for the error sequence; defaults to the distance to argmin f.
    #[arg(long, allow_hyphen_values = true)]
    pub xbar: Option<Point>,
    /// Step schedule: JSON file path or inline JSON, e.g.
    /// {"kind":"constant","lambda":2} or {"generalized":[{"kind":"linear","lambda":1}]}.
    #[arg(long, default_value = r#"{"kind":"constant","lambda":1}"#)]
    pub schedule: String,
    #[command(flatten)]
    pub out: OutArg,
}

#[derive(Args, Debug)]
pub struct DualityArgs {
    #[command(flatten)]
    pub function: FunctionArg,
    #[command(flatten)]
    pub point: PointArgs,
    /// Half-width of the box V intersected with ∂f(x); defaults to the radius.
    #[arg(long)]
    pub v_radius: Option<f64>,
    #[command(flatten)]
    pub grid: GridArgs,
    #[command(flatten)]
    pub out: OutArg,
}

#[derive(Args, Debug)]
pub struct SolutionMapArgs {
    /// The function φ, as a descriptor.
    #[command(flatten)]
    pub function: FunctionArg,
    /// Slope α of the base map f(x) = αx + β.
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    pub alpha: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub beta: f64,
    /// Parameter x̄ and solution ȳ (scalars) with the parameter-grid radius.
    #[command(flatten)]
    pub point: PointArgs,
    #[command(flatten)]
    pub grid: GridArgs,
    #[command(flatten)]
    pub out: OutArg,
}

#[derive(Args, Debug)]
pub struct SuiteArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Keep only rows whose `instance/check` contains this substring.
    #[arg(long)]
    pub filter: Option<String>,
    #[command(flatten)]
    pub out: OutArg,
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn points_parse() {
        assert_eq!("1, -2.5,inf".parse::<Point>().unwrap().0, vec![1.0, -2.5, f64::INFINITY]);
        assert!("1,x".parse::<Point>().is_err());
    }

    #[test]
    fn negative_points_are_values() {
        let cli = Cli::try_parse_from(["subreg", "analyze", "--function", "{}", "--xbar", "-1", "--ystar", "-1"]).unwrap();
        let Command::Analyze(a) = cli.command else { panic!() };
        assert_eq!(a.point.xbar, Some(Point(vec![-1.0])));
    }
}
