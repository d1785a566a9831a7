use jet_algebra::JetError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CurveError {
    #[error(transparent)]
    Jet(#[from] JetError),
    #[error("derivative order {0} exceeds the jet order {1}")]
    BeyondOrder(usize, usize),
    #[error("speed is degenerate (g11 = {0})")]
    DegenerateSpeed(f64),
    #[error("base point is not horizontal")]
    NonHorizontal,
    #[error("base point is horizontal")]
    Horizontal,
    #[error("curve is not parameterized by homogeneous arclength")]
    NotHomogeneous,
    #[error("speed must be positive at the base")]
    NonPositiveSpeed,
    #[error("velocity vanishes at the base")]
    ZeroVelocity,
    #[error("coefficient index must be 1, 2 or 3, got {0}")]
    BadIndex(usize),
    #[error("inputs must not both vanish")]
    BothZero,
    #[error("invalid curve spec: {0}")]
    Spec(String),
}
