//! The planar norm `nu_K(eta) = (eta1^4 + eta2^2)^{1/4}`, its dilations
//! `(t eta1, t^2 eta2)`, the polar decomposition `d eta = t^2 dt dsigma`,
//! and closed forms for monomial integrals over the unit ball.

mod ball;
mod error;
mod gamma;
pub mod quad;
mod sphere;

pub use ball::{
    ball_integral, monomial_ball_integral, monomial_integral, omega_h, polar_ball_integral, polar_identity_check,
    PolarCheck,
};
pub use error::KoranyiError;
pub use gamma::{gamma_fn, kappa};
pub use sphere::{aniso_dilate, nu_k, sphere_integral, SphereNode, SphereQuadrature, DEFAULT_SPHERE_NODES};
