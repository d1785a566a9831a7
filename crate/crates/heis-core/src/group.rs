use std::ops::Mul;

use crate::CoreError;

/// A point of the group. `x1`, `x2` have homogeneity 1, `x3` has homogeneity 2.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct HPoint {
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
}

impl HPoint {
    pub const ORIGIN: HPoint = HPoint { x1: 0.0, x2: 0.0, x3: 0.0 };

    pub const fn new(x1: f64, x2: f64, x3: f64) -> Self {
        HPoint { x1, x2, x3 }
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x1, self.x2, self.x3]
    }

    pub fn from_array(a: [f64; 3]) -> Self {
        HPoint::new(a[0], a[1], a[2])
    }

    /// Coordinatewise closeness with absolute tolerance.
    pub fn approx_eq(&self, other: &HPoint, tol: f64) -> bool {
        (self.x1 - other.x1).abs() <= tol
            && (self.x2 - other.x2).abs() <= tol
            && (self.x3 - other.x3).abs() <= tol
    }

    pub fn is_origin(&self, tol: f64) -> bool {
        self.approx_eq(&HPoint::ORIGIN, tol)
    }
}

impl Mul for HPoint {
    type Output = HPoint;
    fn mul(self, rhs: HPoint) -> HPoint {
        group_mul(self, rhs)
    }
}

pub fn group_mul(p: HPoint, q: HPoint) -> HPoint {
    HPoint {
        x1: p.x1 + q.x1,
        x2: p.x2 + q.x2,
        x3: p.x3 + q.x3 - 2.0 * p.x1 * q.x2 + 2.0 * p.x2 * q.x1,
    }
}

pub fn group_inv(p: HPoint) -> HPoint {
    HPoint::new(-p.x1, -p.x2, -p.x3)
}

pub fn dilate(p: HPoint, r: f64) -> Result<HPoint, CoreError> {
    if !(r > 0.0) {
        return Err(CoreError::NonPositiveDilation(r));
    }
    Ok(HPoint::new(r * p.x1, r * p.x2, r * r * p.x3))
}

/// Rotation about the vertical axis; an isometry and a group automorphism.
pub fn rotate(p: HPoint, theta: f64) -> HPoint {
    let (s, c) = theta.sin_cos();
    HPoint::new(p.x1 * c - p.x2 * s, p.x1 * s + p.x2 * c, p.x3)
}
