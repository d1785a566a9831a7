//! The first Heisenberg group in global exponential coordinates.
//!
//! Points carry the group law `(x1+y1, x2+y2, x3+y3-2x1y2+2x2y1)`, the
//! Koranyi gauge `((x1^2+x2^2)^2 + x3^2)^{1/4}` and the frame
//! `X1 = d1 + 2x2 d3`, `X2 = d2 - 2x1 d3`, `X3 = d3`.

mod frame;
mod group;
mod metric;

pub use frame::{frame_decompose, j_apply, left_translate_vector, FrameCoords};
pub use group::{dilate, group_inv, group_mul, rotate, HPoint};
pub use metric::{corner_distance_quartic, koranyi_dist, koranyi_norm};

/// Default absolute tolerance for identity/origin comparisons.
pub const ORIGIN_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CoreError {
    #[error("dilation factor must be positive, got {0}")]
    NonPositiveDilation(f64),
}
