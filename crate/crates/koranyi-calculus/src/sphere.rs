use std::f64::consts::PI;

use crate::error::KoranyiError;

pub const DEFAULT_SPHERE_NODES: usize = 1024;

/// `(eta1^4 + eta2^2)^{1/4}`.
pub fn nu_k(eta: [f64; 2]) -> f64 {
    (eta[0].powi(4) + eta[1] * eta[1]).sqrt().sqrt()
}

/// `(t eta1, t^2 eta2)`.
pub fn aniso_dilate(eta: [f64; 2], t: f64) -> [f64; 2] {
    [t * eta[0], t * t * eta[1]]
}

/// A node of the unit sphere `nu_K = 1` with its weight for `dsigma`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphereNode {
    pub xi: [f64; 2],
    pub weight: f64,
}

/// Quadrature for `dsigma`, the measure with `d eta = t^2 dt dsigma`.
///
/// The sphere is parameterized as `xi(p) = (cos p / N^{1/4}, sin p / N^{1/2})`
/// with `N = cos^4 p + sin^2 p`, where `dsigma = (cos^2 p + 2 sin^2 p) N^{-3/4} dp`.
/// Everything is smooth and periodic in `p`, so the equispaced rule
/// converges geometrically.
#[derive(Debug, Clone)]
pub struct SphereQuadrature {
    pub nodes: Vec<SphereNode>,
}

impl SphereQuadrature {
    pub fn new(m: usize) -> Result<Self, KoranyiError> {
        if m == 0 || m % 4 != 0 {
            return Err(KoranyiError::BadNodeCount(m));
        }
        let h = 2.0 * PI / m as f64;
        let nodes = (0..m)
            .map(|k| {
                let (s, c) = (h * k as f64).sin_cos();
                let n = c.powi(4) + s * s;
                SphereNode {
                    xi: [c / n.sqrt().sqrt(), s / n.sqrt()],
                    weight: h * (c * c + 2.0 * s * s) / n.powf(0.75),
                }
            })
            .collect();
        Ok(SphereQuadrature { nodes })
    }

    pub fn integrate(&self, mut h: impl FnMut([f64; 2]) -> f64) -> Result<f64, KoranyiError> {
        let mut acc = 0.0;
        for n in &self.nodes {
            let v = h(n.xi);
            if !v.is_finite() {
                return Err(KoranyiError::NonFinite(n.xi[0], n.xi[1]));
            }
            acc += n.weight * v;
        }
        Ok(acc)
    }
}

impl Default for SphereQuadrature {
    fn default() -> Self {
        SphereQuadrature::new(DEFAULT_SPHERE_NODES).expect("default node count is valid")
    }
}

/// `int_{S_K} h dsigma` with the default rule.
pub fn sphere_integral(h: impl FnMut([f64; 2]) -> f64) -> Result<f64, KoranyiError> {
    SphereQuadrature::default().integrate(h)
}
