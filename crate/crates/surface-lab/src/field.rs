use heis_core::{group_inv, group_mul, rotate, HPoint};

use crate::poly::Poly3;

/// A defining function with exact partial derivatives up to order two.
pub trait ScalarField: Send + Sync {
    fn value(&self, x: [f64; 3]) -> f64;
    fn gradient(&self, x: [f64; 3]) -> [f64; 3];
    fn hessian(&self, x: [f64; 3]) -> [[f64; 3]; 3];
}

impl ScalarField for Poly3 {
    fn value(&self, x: [f64; 3]) -> f64 {
        Poly3::value(self, x)
    }
    fn gradient(&self, x: [f64; 3]) -> [f64; 3] {
        Poly3::gradient(self, x)
    }
    fn hessian(&self, x: [f64; 3]) -> [[f64; 3]; 3] {
        Poly3::hessian(self, x)
    }
}

type Fn3<T> = Box<dyn Fn([f64; 3]) -> T + Send + Sync>;

/// A closed-form field with user-supplied partials.
pub struct ClosedField {
    pub value: Fn3<f64>,
    pub gradient: Fn3<[f64; 3]>,
    pub hessian: Fn3<[[f64; 3]; 3]>,
}

impl ScalarField for ClosedField {
    fn value(&self, x: [f64; 3]) -> f64 {
        (self.value)(x)
    }
    fn gradient(&self, x: [f64; 3]) -> [f64; 3] {
        (self.gradient)(x)
    }
    fn hessian(&self, x: [f64; 3]) -> [[f64; 3]; 3] {
        (self.hessian)(x)
    }
}

impl<F: ScalarField + ?Sized> ScalarField for &F {
    fn value(&self, x: [f64; 3]) -> f64 {
        (**self).value(x)
    }
    fn gradient(&self, x: [f64; 3]) -> [f64; 3] {
        (**self).gradient(x)
    }
    fn hessian(&self, x: [f64; 3]) -> [[f64; 3]; 3] {
        (**self).hessian(x)
    }
}

/// The rigid motion `y -> a * R_theta(y)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Isometry {
    pub translate: HPoint,
    pub theta: f64,
}

impl Isometry {
    pub fn new(translate: HPoint, theta: f64) -> Self {
        Isometry { translate, theta }
    }

    pub fn apply(&self, y: HPoint) -> HPoint {
        group_mul(self.translate, rotate(y, self.theta))
    }

    pub fn inverse(&self) -> Isometry {
        Isometry { translate: rotate(group_inv(self.translate), -self.theta), theta: -self.theta }
    }

    /// `(M, c)` with `apply(y) = M y + c`.
    pub fn affine(&self) -> ([[f64; 3]; 3], [f64; 3]) {
        let (s, c) = self.theta.sin_cos();
        let a = self.translate;
        let m = [
            [c, -s, 0.0],
            [s, c, 0.0],
            [2.0 * a.x2 * c - 2.0 * a.x1 * s, -2.0 * a.x1 * c - 2.0 * a.x2 * s, 1.0],
        ];
        (m, a.to_array())
    }

    /// The defining function `u o self^{-1}` of the image surface.
    pub fn push_forward(&self, u: &Poly3) -> Poly3 {
        let (m, c) = self.inverse().affine();
        u.compose_affine(m, c)
    }

    /// `u o self`.
    pub fn pull_back(&self, u: &Poly3) -> Poly3 {
        let (m, c) = self.affine();
        u.compose_affine(m, c)
    }
}
