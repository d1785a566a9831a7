use curve_lab::CurveError;
use koranyi_calculus::KoranyiError;
use surface_lab::SurfaceError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum MeasureError {
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error(transparent)]
    Quadrature(#[from] KoranyiError),
    #[error("degree {degree} does not apply to a submanifold of dimension {dim}")]
    DegreeMismatch { degree: u8, dim: u8 },
    #[error("radius must be positive, got {0}")]
    NonPositiveRadius(f64),
    #[error("tolerance must be positive, got {0}")]
    NonPositiveTolerance(f64),
    #[error("ball of radius {0} does not close up within the search bracket")]
    Bracket(f64),
    #[error("ball of radius {0} meets the curve in more than one arc")]
    MultipleComponents(f64),
    #[error("radial norm is not increasing at radius {0}; radius exceeds the validated range")]
    NotMonotone(f64),
    #[error("design matrix is ill conditioned (condition number {0:e})")]
    IllConditioned(f64),
    #[error("need at least {needed} samples, got {got}")]
    TooFewSamples { needed: usize, got: usize },
}
