use crate::error::KoranyiError;

/// Euler's Gamma function for positive arguments.
pub fn gamma_fn(x: f64) -> Result<f64, KoranyiError> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(KoranyiError::NonPositiveArgument(x));
    }
    Ok(statrs::function::gamma::gamma(x))
}

/// `K = Gamma(3/4)^2 / sqrt(2 pi)`, the unit in which the second-moment
/// integrals over the ball are expressed.
pub fn kappa() -> f64 {
    let g = statrs::function::gamma::gamma(0.75);
    g * g / (2.0 * std::f64::consts::PI).sqrt()
}
