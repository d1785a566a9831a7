use heis_core::HPoint;

use crate::error::SurfaceError;
use crate::field::ScalarField;
use crate::poly::Poly3;

/// Relative threshold on `|grad0 u|` below which a point is characteristic.
pub const CHARACTERISTIC_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HorizontalData {
    pub x1u: f64,
    pub x2u: f64,
    pub grad0_norm: f64,
    /// Components of the horizontal normal on `(X1, X2)`.
    pub n0: [f64; 2],
    /// Components of `e1 = J n0` on `(X1, X2)`.
    pub e1: [f64; 2],
    pub is_characteristic: bool,
}

pub fn horizontal_data<F: ScalarField + ?Sized>(u: &F, x: HPoint) -> Result<HorizontalData, SurfaceError> {
    let g = u.gradient(x.to_array());
    let full = (g[0] * g[0] + g[1] * g[1] + g[2] * g[2]).sqrt();
    if full == 0.0 {
        return Err(SurfaceError::Singular);
    }
    let p = g[0] + 2.0 * x.x2 * g[2];
    let q = g[1] - 2.0 * x.x1 * g[2];
    let n = p.hypot(q);
    let is_characteristic = n <= CHARACTERISTIC_TOL * (1.0 + full);
    let (n0, e1) = if n > 0.0 { ([p / n, q / n], [-q / n, p / n]) } else { ([0.0; 2], [0.0; 2]) };
    Ok(HorizontalData { x1u: p, x2u: q, grad0_norm: n, n0, e1, is_characteristic })
}

/// `H0`, `P0` and `e1(P0)` at a noncharacteristic point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Curvatures {
    pub h0: f64,
    pub p0: f64,
    pub e1_p0: f64,
}

impl Curvatures {
    /// `H0^2 + (3/2) P0^2 + 4 e1(P0)`
    pub fn pde_residual(&self) -> f64 {
        self.h0 * self.h0 + 1.5 * self.p0 * self.p0 + 4.0 * self.e1_p0
    }
}

pub fn curvatures<F: ScalarField + ?Sized>(u: &F, x: HPoint) -> Result<Curvatures, SurfaceError> {
    let hd = horizontal_data(u, x)?;
    if hd.is_characteristic {
        return Err(SurfaceError::Characteristic(hd.grad0_norm));
    }
    let xa = x.to_array();
    let g = u.gradient(xa);
    let h = u.hessian(xa);
    let (x1, x2) = (x.x1, x.x2);
    let (p, q, n) = (hd.x1u, hd.x2u, hd.grad0_norm);
    let u3 = g[2];

    let x1p = h[0][0] + 4.0 * x2 * h[0][2] + 4.0 * x2 * x2 * h[2][2];
    let x2p = h[0][1] + 2.0 * u3 + 2.0 * x2 * h[1][2] - 2.0 * x1 * (h[0][2] + 2.0 * x2 * h[2][2]);
    let x1q = h[0][1] - 2.0 * u3 - 2.0 * x1 * h[0][2] + 2.0 * x2 * (h[1][2] - 2.0 * x1 * h[2][2]);
    let x2q = h[1][1] - 4.0 * x1 * h[1][2] + 4.0 * x1 * x1 * h[2][2];
    let x1u3 = h[0][2] + 2.0 * x2 * h[2][2];
    let x2u3 = h[1][2] - 2.0 * x1 * h[2][2];

    let n3 = n * n * n;
    let h0 = (q * q * x1p - p * q * (x1q + x2p) + p * p * x2q) / n3;
    let p0 = 4.0 * u3 / n;
    let x1p0 = 4.0 * x1u3 / n - 4.0 * u3 * (p * x1p + q * x1q) / n3;
    let x2p0 = 4.0 * x2u3 / n - 4.0 * u3 * (p * x2p + q * x2q) / n3;
    let e1_p0 = (p * x2p0 - q * x1p0) / n;
    Ok(Curvatures { h0, p0, e1_p0 })
}

pub fn mean_curvature<F: ScalarField + ?Sized>(u: &F, x: HPoint) -> Result<f64, SurfaceError> {
    Ok(curvatures(u, x)?.h0)
}

pub fn imaginary_curvature<F: ScalarField + ?Sized>(u: &F, x: HPoint) -> Result<f64, SurfaceError> {
    Ok(curvatures(u, x)?.p0)
}

pub fn e1_of_p0<F: ScalarField + ?Sized>(u: &F, x: HPoint) -> Result<f64, SurfaceError> {
    Ok(curvatures(u, x)?.e1_p0)
}

pub fn pde_residual<F: ScalarField + ?Sized>(u: &F, x: HPoint) -> Result<f64, SurfaceError> {
    Ok(curvatures(u, x)?.pde_residual())
}

/// The zero set of a defining function.
#[derive(Debug, Clone, PartialEq)]
pub struct LevelSurface<F = Poly3> {
    pub u: F,
}

impl<F: ScalarField> LevelSurface<F> {
    pub fn new(u: F) -> Self {
        LevelSurface { u }
    }
    pub fn horizontal_data(&self, x: HPoint) -> Result<HorizontalData, SurfaceError> {
        horizontal_data(&self.u, x)
    }
    pub fn curvatures(&self, x: HPoint) -> Result<Curvatures, SurfaceError> {
        curvatures(&self.u, x)
    }
    pub fn pde_residual(&self, x: HPoint) -> Result<f64, SurfaceError> {
        pde_residual(&self.u, x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertical_plane() {
        let u = Poly3::new(&[([1, 0, 0], 1.0)]);
        let x = HPoint::new(0.0, 0.7, -2.0);
        let hd = horizontal_data(&u, x).unwrap();
        assert_eq!(hd.n0, [1.0, 0.0]);
        assert_eq!(hd.e1, [0.0, 1.0]);
        assert!(!hd.is_characteristic);
        let c = curvatures(&u, x).unwrap();
        assert_eq!((c.h0, c.p0, c.e1_p0), (0.0, 0.0, 0.0));
    }

    #[test]
    fn x3_plane_frame() {
        let u = Poly3::new(&[([0, 0, 1], 1.0)]);
        let hd = horizontal_data(&u, HPoint::new(1.0, 0.0, 0.0)).unwrap();
        assert_eq!((hd.x1u, hd.x2u, hd.grad0_norm), (0.0, -2.0, 2.0));
        assert!(horizontal_data(&u, HPoint::ORIGIN).unwrap().is_characteristic);
        assert_eq!(curvatures(&u, HPoint::ORIGIN), Err(SurfaceError::Characteristic(0.0)));
    }

    #[test]
    fn singular_point() {
        let u = Poly3::new(&[([2, 0, 0], 1.0)]);
        assert_eq!(horizontal_data(&u, HPoint::ORIGIN), Err(SurfaceError::Singular));
    }

    #[test]
    fn vertically_ruled_has_no_p0() {
        let u = Poly3::new(&[([2, 0, 0], 1.0), ([0, 1, 0], -3.0), ([1, 2, 0], 0.5)]);
        let p0 = imaginary_curvature(&u, HPoint::new(0.3, 0.2, 5.0)).unwrap();
        assert_eq!(p0, 0.0);
    }
}
