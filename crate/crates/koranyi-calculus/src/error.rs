#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum KoranyiError {
    #[error("gamma function needs a positive argument, got {0}")]
    NonPositiveArgument(f64),
    #[error("integrand is not finite at ({0}, {1})")]
    NonFinite(f64, f64),
    #[error("quadrature did not converge: estimate {value}, error {error}")]
    NotConverged { value: f64, error: f64 },
    #[error("integrand is not homogeneous of degree {0}")]
    NotHomogeneous(u32),
    #[error("sphere node count must be a positive multiple of 4, got {0}")]
    BadNodeCount(usize),
}
