use std::f64::consts::PI;

use crate::error::KoranyiError;
use crate::gamma::gamma_fn;
use crate::quad::{gauss_legendre, gl_integrate, integrate};
use crate::sphere::{aniso_dilate, SphereQuadrature};

/// `omega_H = (1/3) sqrt(2/pi) Gamma(1/4)^2`, the area of the unit ball.
pub fn omega_h() -> f64 {
    let g = gamma_fn(0.25).expect("positive");
    (2.0 / PI).sqrt() * g * g / 3.0
}

/// `int_B eta1^{2a} eta2^{2b} d eta
///   = Gamma(a/2 + 1/4) Gamma(b + 1/2) / (2 Gamma(b + a/2 + 7/4))`.
pub fn monomial_ball_integral(a: u32, b: u32) -> f64 {
    let (a, b) = (a as f64, b as f64);
    let g = |x: f64| gamma_fn(x).expect("positive");
    g(a / 2.0 + 0.25) * g(b + 0.5) / (2.0 * g(b + a / 2.0 + 1.75))
}

/// `int_B eta1^p eta2^q d eta`; zero when either exponent is odd.
pub fn monomial_integral(p: u32, q: u32) -> f64 {
    if p % 2 == 1 || q % 2 == 1 {
        0.0
    } else {
        monomial_ball_integral(p / 2, q / 2)
    }
}

/// `int_B h d eta` by nested adaptive quadrature over
/// `|eta2| <= sqrt(1 - eta1^4)`.
pub fn ball_integral(h: impl Fn([f64; 2]) -> f64, tol: f64) -> Result<f64, KoranyiError> {
    let mut failure = None;
    let outer = integrate(
        |x| {
            let y = (1.0 - x.powi(4)).max(0.0).sqrt();
            match integrate(|t| h([x, t]), -y, y, 0.1 * tol, 0.0, 400) {
                Ok(r) => r.value,
                Err(e) => {
                    failure.get_or_insert(e);
                    f64::NAN
                }
            }
        },
        -1.0,
        1.0,
        tol,
        0.0,
        4000,
    );
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(outer?.value)
}

/// `int_{S_K} int_0^1 h(delta_t xi) t^2 dt dsigma(xi)`.
pub fn polar_ball_integral(h: impl Fn([f64; 2]) -> f64, sphere: &SphereQuadrature, radial_nodes: usize) -> Result<f64, KoranyiError> {
    let rule = gauss_legendre(radial_nodes);
    sphere.integrate(|xi| gl_integrate(|t| h(aniso_dilate(xi, t)) * t * t, 0.0, 1.0, &rule))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarCheck {
    /// `int_S h dsigma`
    pub lhs: f64,
    /// `(d + 3) int_B h d eta`
    pub rhs: f64,
    pub rel_error: f64,
}

/// For `h` homogeneous of degree `d` under `delta_t`, compares the sphere
/// integral with `(d + 3)` times the ball integral.
pub fn polar_identity_check(h: impl Fn([f64; 2]) -> f64, d: u32, tol: f64) -> Result<PolarCheck, KoranyiError> {
    for (eta, t) in [([0.31, -0.57], 1.7), ([-0.83, 0.22], 0.45), ([0.5, 0.9], 2.3)] {
        let lhs = h(aniso_dilate(eta, t));
        let rhs = t.powi(d as i32) * h(eta);
        if (lhs - rhs).abs() > 1e-10 * (1.0 + lhs.abs().max(rhs.abs())) {
            return Err(KoranyiError::NotHomogeneous(d));
        }
    }
    let lhs = SphereQuadrature::default().integrate(&h)?;
    let rhs = (d as f64 + 3.0) * ball_integral(&h, tol)?;
    let rel_error = (lhs - rhs).abs() / rhs.abs().max(f64::MIN_POSITIVE);
    Ok(PolarCheck { lhs, rhs, rel_error })
}
