use heis_core::HPoint;
use jet_algebra::{Jet, Scalar};

use crate::error::CurveError;
use crate::planar::PlanarJet;
use crate::HORIZONTAL_TOL;

/// A space curve `Sigma = (x1, x2, x3)` as jets about the base parameter.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveJet<T> {
    pub planar: PlanarJet<T>,
    pub x3: Jet<T>,
}

impl<T: Scalar> CurveJet<T> {
    pub fn new(planar: PlanarJet<T>, x3: Jet<T>) -> Result<Self, CurveError> {
        if x3.order() != planar.order() {
            return Err(jet_algebra::JetError::OrderMismatch(planar.order(), x3.order()).into());
        }
        Ok(CurveJet { planar, x3 })
    }

    pub fn order(&self) -> usize {
        self.x3.order()
    }

    pub fn base(&self) -> HPoint {
        HPoint::new(
            self.planar.x1.coeffs()[0].to_f64(),
            self.planar.x2.coeffs()[0].to_f64(),
            self.x3.coeffs()[0].to_f64(),
        )
    }

    /// `theta(Sigma')` as a jet of order `N - 1`.
    pub fn contact_jet(&self) -> Jet<T> {
        let n = self.order().saturating_sub(1);
        let (x1, x2) = (self.planar.x1.with_order(n), self.planar.x2.with_order(n));
        let (d1, d2) = (self.planar.x1.derive(), self.planar.x2.derive());
        let two = T::from_i64(2);
        &self.x3.derive() + &(&(&x1 * &d2) - &(&x2 * &d1)).scale(&two)
    }

    pub fn to_f64(&self) -> CurveJet<f64> {
        CurveJet {
            planar: PlanarJet { x1: self.planar.x1.to_f64(), x2: self.planar.x2.to_f64() },
            x3: self.x3.to_f64(),
        }
    }
}

fn lift_with<T: Scalar>(c: &PlanarJet<T>, x3_0: T, rate: T) -> CurveJet<T> {
    let n = c.order();
    let m = n.saturating_sub(1);
    let (x1, x2) = (c.x1.with_order(m), c.x2.with_order(m));
    let (d1, d2) = (c.x1.derive(), c.x2.derive());
    let two = T::from_i64(2);
    let rhs = (&(&x2 * &d1) - &(&x1 * &d2)).scale(&two).add_scalar(&rate);
    let x3 = if n == 0 { Jet::constant(x3_0, 0) } else { rhs.integrate(x3_0) };
    CurveJet { planar: c.clone(), x3 }
}

/// The horizontal lift: `x3' + 2 x1 x2' - 2 x2 x1' = 0`, `x3(0) = x3_0`.
pub fn horizontal_lift<T: Scalar>(c: &PlanarJet<T>, x3_0: T) -> CurveJet<T> {
    lift_with(c, x3_0, T::zero())
}

/// Homogeneous-arclength completion: `x3' + 2 x1 x2' - 2 x2 x1' = 1`.
pub fn vertical_completion<T: Scalar>(c: &PlanarJet<T>, x3_0: T) -> CurveJet<T> {
    lift_with(c, x3_0, T::one())
}

/// Degree of the base point: 1 if the velocity is horizontal, else 2.
pub fn classify_degree<T: Scalar>(c: &CurveJet<T>) -> Result<u8, CurveError> {
    if c.order() == 0 {
        return Err(CurveError::ZeroVelocity);
    }
    let v = [&c.planar.x1, &c.planar.x2, &c.x3].map(|j| j.coeffs()[1].clone());
    if v.iter().all(|x| x.is_negligible(1e-300)) {
        return Err(CurveError::ZeroVelocity);
    }
    let theta = c.contact_jet().coeffs()[0].clone();
    Ok(if theta.is_negligible(HORIZONTAL_TOL) { 1 } else { 2 })
}

/// Horizontal lift through the origin of the circle of radius `radius`
/// tangent to `e1`, parameterized by arclength.
pub fn lifted_circle_jet<T: Scalar>(radius: T, order: usize) -> Result<CurveJet<T>, CurveError> {
    let arg = Jet::monomial(T::one() / radius.clone(), 1, order);
    let (c, s) = arg.cos_sin()?;
    let x1 = s.scale(&radius);
    let x2 = (-c).add_scalar(&T::one()).scale(&radius);
    Ok(horizontal_lift(&PlanarJet::new(x1, x2)?, T::zero()))
}
