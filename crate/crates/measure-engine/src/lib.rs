//! Measures of Koranyi balls intersected with curves and surfaces through
//! the area formula, their density ratios, and least-squares fits of the
//! small-radius expansions.

mod curve;
mod error;
mod fit;
mod sample;
mod surface;

pub use curve::{curve_area_density, curve_ball_measure, curve_ball_measure_tol, CURVE_QUAD_TOL};
pub use error::MeasureError;
pub use fit::{
    density_ratio, fit_expansion, fit_on_ladder, DensityRatio, FitResult, LadderFit, RadiusLadder, MAX_CONDITION, MAX_NEXT_ORDER_RATIO,
};
pub use sample::MeasureSample;
pub use surface::{graph_area_density, rho0_solve, surface_ball_measure, x3_graph_ball_measure, HeightFn, PolarQuadrature, DEFAULT_RADIAL_NODES};

/// `beta1 = Gamma(3/4)^2 / (5 sqrt(2 pi))`: the `r^5` coefficient of the
/// ball measure on a normalized graph is `beta1 * graph_coeff_c1`.
pub fn beta1() -> f64 {
    koranyi_calculus::kappa() / 5.0
}
