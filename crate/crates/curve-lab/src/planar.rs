use jet_algebra::{Jet, Scalar};

use crate::error::CurveError;

/// The projection `gamma = (x1, x2)` of a curve, as jets about the base parameter.
#[derive(Debug, Clone, PartialEq)]
pub struct PlanarJet<T> {
    pub x1: Jet<T>,
    pub x2: Jet<T>,
}

impl<T: Scalar> PlanarJet<T> {
    pub fn new(x1: Jet<T>, x2: Jet<T>) -> Result<Self, CurveError> {
        if x1.order() != x2.order() {
            return Err(jet_algebra::JetError::OrderMismatch(x1.order(), x2.order()).into());
        }
        Ok(PlanarJet { x1, x2 })
    }

    pub fn order(&self) -> usize {
        self.x1.order()
    }

    /// `gamma^(i)(0)`.
    pub fn derivative(&self, i: usize) -> Result<(T, T), CurveError> {
        if i > self.order() {
            return Err(CurveError::BeyondOrder(i, self.order()));
        }
        Ok((self.x1.derivative_at_zero(i)?, self.x2.derivative_at_zero(i)?))
    }

    /// `|gamma'|^2` as a jet of order `N - 1`.
    pub fn speed_squared(&self) -> Jet<T> {
        let (a, b) = (self.x1.derive(), self.x2.derive());
        &(&a * &a) + &(&b * &b)
    }
}

/// `(g_ij, omega_ij)` at the base: inner product and symplectic form of
/// the `i`-th and `j`-th derivative vectors.
pub fn g_omega<T: Scalar>(c: &PlanarJet<T>, i: usize, j: usize) -> Result<(T, T), CurveError> {
    let (a1, a2) = c.derivative(i)?;
    let (b1, b2) = c.derivative(j)?;
    let g = a1.clone() * b1.clone() + a2.clone() * b2.clone();
    let w = a1 * b2 - a2 * b1;
    Ok((g, w))
}

/// `k = omega_12 / g_11^{3/2}`.
pub fn planar_curvature<T: Scalar>(c: &PlanarJet<T>) -> Result<f64, CurveError> {
    let (g11, _) = g_omega(c, 1, 1)?;
    let (_, w12) = g_omega(c, 1, 2)?;
    let g = g11.to_f64();
    if g <= 1e-14 {
        return Err(CurveError::DegenerateSpeed(g));
    }
    Ok(w12.to_f64() / g.powf(1.5))
}

/// `k^2 = omega_12^2 / g_11^3`, exact in rational mode.
pub fn curvature_squared<T: Scalar>(c: &PlanarJet<T>) -> Result<T, CurveError> {
    let (g11, _) = g_omega(c, 1, 1)?;
    let (_, w12) = g_omega(c, 1, 2)?;
    if g11.is_negligible(1e-14) {
        return Err(CurveError::DegenerateSpeed(g11.to_f64()));
    }
    Ok(w12.clone() * w12 / g11.powi(3))
}

/// Planar jet with prescribed speed and curvature, starting at the origin
/// in direction `e1`. The output has order `N + 1` for inputs of order `N`.
pub fn curve_from_speed_curvature<T: Scalar>(sigma: &Jet<T>, k: &Jet<T>) -> Result<PlanarJet<T>, CurveError> {
    if !sigma.coeffs()[0].is_positive() {
        return Err(CurveError::NonPositiveSpeed);
    }
    let n = sigma.order();
    let theta = sigma.try_mul(k)?.integrate(T::zero()).with_order(n);
    let (cos, sin) = theta.cos_sin()?;
    let x1 = (sigma * &cos).integrate(T::zero());
    let x2 = (sigma * &sin).integrate(T::zero());
    PlanarJet::new(x1, x2)
}
