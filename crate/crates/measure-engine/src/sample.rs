use serde::Serialize;

/// Measure of `B_H(x, r)` intersected with a submanifold.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MeasureSample {
    pub r: f64,
    pub value: f64,
    /// Quadrature error estimate.
    pub error: f64,
}
