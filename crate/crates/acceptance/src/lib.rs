//! Pinned tolerances and the verdict type for the acceptance run.

use std::time::Duration;

pub const OMEGA_H_REFERENCE: f64 = 3.49608;
pub const OMEGA_H_TOL: f64 = 5e-5;
pub const BALL_QUADRATURE_TOL: f64 = 1e-8;
pub const CRITERION_1_BUDGET: Duration = Duration::from_secs(1);

pub const MONOMIAL_REL_TOL: f64 = 1e-8;
pub const POLAR_FACTOR_TOL: f64 = 1e-6;
pub const POLAR_FACTOR_CASES: usize = 10;
pub const CRITERION_2_BUDGET: Duration = Duration::from_secs(30);

pub const HORIZONTAL_JETS: usize = 30;
pub const NONHORIZONTAL_JETS: usize = 30;
pub const CRITERION_4_BUDGET: Duration = Duration::from_secs(120);

pub const SIGMA_JETS: usize = 20;
pub const B4_SEEDS: usize = 20;
pub const B4_RATIO_TOL: f64 = 1e-10;

pub const RANDOM_GRAPHS: usize = 20;
pub const C0_REL_TOL: f64 = 1e-3;
pub const C1_REL_TOL: f64 = 0.02;
pub const CRITERION_6_BUDGET: Duration = Duration::from_secs(300);

pub const PARABOLOID_DENSITY_TOL: f64 = 1e-6;
pub const PARABOLOID_RESIDUAL_TOL: f64 = 1e-10;
pub const INV_SQRT3_REFERENCE: f64 = 0.57735;
pub const UNIFORM_COS_REFERENCE: f64 = 0.696602;
pub const DISTINCT_GAP: f64 = 0.1;

pub const COVARIANCE_TOL: f64 = 1e-10;
pub const COVARIANCE_CASES: usize = 100;

pub const DENSITY_LIMIT_TOL: f64 = 5e-3;

pub const CORNER_CASES: usize = 1000;
pub const METRIC_TOL: f64 = 1e-12;

/// Outcome of one criterion.
#[derive(Debug, Clone)]
pub struct Verdict {
    pub pass: bool,
    pub detail: String,
}

impl Verdict {
    pub fn new(pass: bool, detail: impl Into<String>) -> Self {
        Verdict { pass, detail: detail.into() }
    }

    /// Conjunction; details are joined with "; ".
    pub fn all(parts: impl IntoIterator<Item = Verdict>) -> Self {
        let parts: Vec<Verdict> = parts.into_iter().collect();
        let pass = parts.iter().all(|p| p.pass);
        let detail = parts.iter().map(|p| p.detail.as_str()).collect::<Vec<_>>().join("; ");
        Verdict { pass, detail }
    }

    pub fn within_budget(self, elapsed: Duration, budget: Duration) -> Self {
        let ok = elapsed <= budget;
        Verdict::all([self, Verdict::new(ok, format!("runtime {:.2} s (budget {} s)", elapsed.as_secs_f64(), budget.as_secs()))])
    }
}

/// `|a - b| / |b|`
pub fn rel_err(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}
