//! Numeric curves for quadrature, and the JSON curve spec.

use heis_core::{group_mul, left_translate_vector, rotate, HPoint};
use jet_algebra::{Jet, Rational, Scalar};
use num_traits::FromPrimitive;
use serde::Deserialize;

use crate::curve::{horizontal_lift, vertical_completion, CurveJet};
use crate::error::CurveError;
use crate::planar::PlanarJet;

/// A parameterized space curve with derivative access.
pub trait Curve: Send + Sync {
    fn point(&self, s: f64) -> HPoint;
    fn velocity(&self, s: f64) -> [f64; 3];
}

/// Polynomial curve; the jets are read as polynomials.
#[derive(Debug, Clone)]
pub struct PolyCurve {
    x: [Jet<f64>; 3],
    dx: [Jet<f64>; 3],
}

impl PolyCurve {
    pub fn new(x1: Jet<f64>, x2: Jet<f64>, x3: Jet<f64>) -> Self {
        let x = [x1, x2, x3];
        let dx = [x[0].derive(), x[1].derive(), x[2].derive()];
        PolyCurve { x, dx }
    }

    pub fn from_jet(c: &CurveJet<f64>) -> Self {
        PolyCurve::new(c.planar.x1.clone(), c.planar.x2.clone(), c.x3.clone())
    }
}

impl Curve for PolyCurve {
    fn point(&self, s: f64) -> HPoint {
        HPoint::new(self.x[0].eval(&s), self.x[1].eval(&s), self.x[2].eval(&s))
    }
    fn velocity(&self, s: f64) -> [f64; 3] {
        [self.dx[0].eval(&s), self.dx[1].eval(&s), self.dx[2].eval(&s)]
    }
}

/// Horizontal lift through the origin of the circle of radius `R` tangent
/// to `e1`, by arclength:
/// `(R sin(s/R), R(1 - cos(s/R)), 2R^2 sin(s/R) - 2Rs)`.
#[derive(Debug, Clone, Copy)]
pub struct LiftedCircle {
    pub radius: f64,
}

impl Curve for LiftedCircle {
    fn point(&self, s: f64) -> HPoint {
        let r = self.radius;
        let (sn, cs) = (s / r).sin_cos();
        HPoint::new(r * sn, r * (1.0 - cs), 2.0 * r * r * sn - 2.0 * r * s)
    }
    fn velocity(&self, s: f64) -> [f64; 3] {
        let r = self.radius;
        let (sn, cs) = (s / r).sin_cos();
        [cs, sn, 2.0 * r * cs - 2.0 * r]
    }
}

/// `a * R_theta(Sigma(s))`.
pub struct Transformed<C> {
    pub inner: C,
    pub translate: HPoint,
    pub theta: f64,
}

impl<C: Curve> Curve for Transformed<C> {
    fn point(&self, s: f64) -> HPoint {
        group_mul(self.translate, rotate(self.inner.point(s), self.theta))
    }
    fn velocity(&self, s: f64) -> [f64; 3] {
        let v = self.inner.velocity(s);
        let w = rotate(HPoint::from_array(v), self.theta).to_array();
        left_translate_vector(self.translate, w)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CurveMode {
    HorizontalLift,
    Homogeneous,
    Explicit,
}

/// A coefficient given either as a JSON number or as a string `"p/q"`.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(untagged)]
pub enum Coef {
    Num(f64),
    Text(String),
}

impl Coef {
    pub fn to_rational(&self) -> Result<Rational, CurveError> {
        match self {
            Coef::Num(x) => Rational::from_f64(*x).ok_or_else(|| CurveError::Spec(format!("non-finite coefficient {x}"))),
            Coef::Text(t) => t.trim().parse::<Rational>().map_err(|e| CurveError::Spec(format!("bad rational {t:?}: {e}"))),
        }
    }
}

/// `{ "x1": [...], "x2": [...], "x3_0": real, "mode": ..., "x3": [...] }`;
/// coefficient lists are power-series coefficients from `s^0` up.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveSpec {
    pub x1: Vec<Coef>,
    pub x2: Vec<Coef>,
    #[serde(default)]
    pub x3_0: Option<Coef>,
    pub mode: CurveMode,
    #[serde(default)]
    pub x3: Option<Vec<Coef>>,
}

fn to_jet(c: &[Coef], order: usize) -> Result<Jet<Rational>, CurveError> {
    let v = c.iter().map(Coef::to_rational).collect::<Result<Vec<_>, _>>()?;
    Ok(Jet::new(v, order))
}

impl CurveSpec {
    pub fn from_json(text: &str) -> Result<Self, CurveError> {
        let spec: CurveSpec = serde_json::from_str(text).map_err(|e| CurveError::Spec(e.to_string()))?;
        spec.validate()?;
        Ok(spec)
    }

    fn validate(&self) -> Result<(), CurveError> {
        if self.x1.is_empty() || self.x2.is_empty() {
            return Err(CurveError::Spec("x1 and x2 need at least one coefficient".into()));
        }
        match (self.mode, &self.x3) {
            (CurveMode::Explicit, None) => Err(CurveError::Spec("explicit mode needs x3".into())),
            (CurveMode::Explicit, Some(_)) => Ok(()),
            (_, Some(_)) => Err(CurveError::Spec("x3 is only allowed in explicit mode".into())),
            _ => Ok(()),
        }
    }

    /// Polynomial degree of the resulting space curve.
    pub fn degree(&self) -> usize {
        let d = self.x1.len().max(self.x2.len()) - 1;
        match &self.x3 {
            Some(x3) => d.max(x3.len().saturating_sub(1)),
            None => (2 * d).max(1),
        }
    }

    /// Exact jet of the curve at the given order.
    pub fn jet(&self, order: usize) -> Result<CurveJet<Rational>, CurveError> {
        let planar = PlanarJet::new(to_jet(&self.x1, order)?, to_jet(&self.x2, order)?)?;
        let x3_0 = match &self.x3_0 {
            Some(c) => c.to_rational()?,
            None => Rational::zero(),
        };
        Ok(match self.mode {
            CurveMode::HorizontalLift => horizontal_lift(&planar, x3_0),
            CurveMode::Homogeneous => vertical_completion(&planar, x3_0),
            CurveMode::Explicit => CurveJet::new(planar, to_jet(self.x3.as_ref().unwrap(), order)?)?,
        })
    }

    /// The curve as exact polynomials (lifts of polynomials are polynomials).
    pub fn poly_curve(&self) -> Result<PolyCurve, CurveError> {
        Ok(PolyCurve::from_jet(&self.jet(self.degree())?.to_f64()))
    }
}
