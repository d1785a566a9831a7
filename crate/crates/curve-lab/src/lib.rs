//! Curves in the group: planar jets and their horizontal or vertical
//! completion, the `g_ij`/`omega_ij` calculus, the expansion coefficients
//! of the ball measure, and the speed identities used to rule out
//! 2-uniform nonhorizontal curves.

mod coeffs;
mod curve;
mod error;
mod oracle;
mod planar;
pub mod sigma;
pub mod spec;

pub use coeffs::{
    coeff_a1, coeff_b, coeff_b3_literal, completion_coefficients, eqn_b1, eqn_b2, eqn_b3_literal, eval_wpoly,
    horizontal_point_density, B3_NORMALIZATION,
};
pub use curve::{classify_degree, horizontal_lift, lifted_circle_jet, vertical_completion, CurveJet};
pub use error::CurveError;
pub use oracle::measure_series;
pub use planar::{curvature_squared, curve_from_speed_curvature, g_omega, planar_curvature, PlanarJet};

/// Horizontality tolerance in float mode.
pub const HORIZONTAL_TOL: f64 = 1e-10;
