use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use measure_engine::RadiusLadder;

/// Ball measures of curves and surfaces in the Heisenberg group.
#[derive(Debug, Clone, Parser)]
#[command(name = "heis", version)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Radius ladder `r0,count,factor`: r_k = r0 * factor^k.
    #[arg(long, global = true)]
    pub radii: Option<RadiusLadder>,
    /// Quadrature tolerance. Absolute for curves; relative error target for
    /// surface samples, reached by doubling the sphere nodes.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Number of terms in the fitted expansion.
    #[arg(long, global = true)]
    pub order: Option<usize>,
    #[arg(long, global = true, default_value_t = 7)]
    pub seed: u64,
    #[arg(long, global = true, env = "HEIS_THREADS")]
    pub threads: Option<usize>,
    /// Defaults to csv for tables and json for `verify`.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Density ratios mu(B(x, r)) / r^m and their extrapolated limit.
    Density {
        spec: PathBuf,
        /// Curve parameter `s`, or `x1,x2[,x3]` on a surface.
        #[arg(long, allow_hyphen_values = true)]
        center: Option<String>,
    },
    /// Fits the small-radius expansion and compares with the closed forms.
    Expand {
        spec: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        center: Option<String>,
    },
    /// Runs the invariant suites.
    Verify {
        #[arg(value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Adds this to the numerator of the first eqnB2 monomial (mutation check).
        #[arg(long, allow_hyphen_values = true)]
        perturb_b2: Option<i64>,
    },
    /// Monomial ball integrals and the sphere/ball factor.
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Frame,
    Jets,
    Curves,
    Surfaces,
    Integrals,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Frame => "frame",
            Suite::Jets => "jets",
            Suite::Curves => "curves",
            Suite::Surfaces => "surfaces",
            Suite::Integrals => "integrals",
            Suite::All => "all",
        }
    }

    pub fn expand(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![Suite::Frame, Suite::Jets, Suite::Curves, Suite::Surfaces, Suite::Integrals],
            s => vec![s],
        }
    }
}
