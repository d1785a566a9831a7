use heis_core::HPoint;

use crate::error::SurfaceError;
use crate::field::{Isometry, ScalarField};
use crate::level::horizontal_data;
use crate::poly::{substitute_graph, Bipoly, Poly3, Series2};

/// Series degree used by [`normalize_at_point`].
pub const NORMAL_SERIES_DEGREE: usize = 4;
/// Default stencil step of [`normalize_by_stencil`].
pub const DEFAULT_STENCIL_STEP: f64 = 1e-2;

const NORMALIZED_TOL: f64 = 1e-10;

/// The surface `{ base * R_theta(phi(eta), eta1, eta2) }` near `base`.
#[derive(Debug, Clone, PartialEq)]
pub struct GraphSurface {
    /// Polynomial, or the Taylor jet of `phi` at the origin when `local` is set.
    pub phi: Bipoly,
    pub base: HPoint,
    pub theta: f64,
    /// Defining function in normalized coordinates; when present `phi` is
    /// evaluated by solving `local(phi, eta1, eta2) = 0`.
    local: Option<Poly3>,
}

impl GraphSurface {
    pub fn new(phi: Bipoly) -> Self {
        GraphSurface { phi, base: HPoint::ORIGIN, theta: 0.0, local: None }
    }

    pub fn with_placement(phi: Bipoly, base: HPoint, theta: f64) -> Self {
        GraphSurface { phi, base, theta, local: None }
    }

    pub fn local_field(&self) -> Option<&Poly3> {
        self.local.as_ref()
    }

    pub fn isometry(&self) -> Isometry {
        Isometry::new(self.base, self.theta)
    }

    /// `(phi, d phi / d eta1, d phi / d eta2)` at `eta`.
    pub fn phi_at(&self, eta: [f64; 2]) -> Result<(f64, f64, f64), SurfaceError> {
        let Some(u) = &self.local else {
            return Ok(self.phi.eval_with_gradient(eta));
        };
        let mut t = self.phi.value(eta);
        for _ in 0..60 {
            let y = [t, eta[0], eta[1]];
            let v = u.value(y);
            let g = u.gradient(y);
            if !(g[0].is_finite() && g[0].abs() > 1e-300) {
                break;
            }
            let dt = v / g[0];
            t -= dt;
            if !t.is_finite() {
                break;
            }
            if dt.abs() <= 4.0 * f64::EPSILON * (1.0 + t.abs()) {
                let g = u.gradient([t, eta[0], eta[1]]);
                return Ok((t, -g[1] / g[0], -g[2] / g[0]));
            }
        }
        Err(SurfaceError::NewtonDiverged(eta[0], eta[1]))
    }

    /// The surface point over `eta`, in original coordinates.
    pub fn point(&self, eta: [f64; 2]) -> Result<HPoint, SurfaceError> {
        let (p, _, _) = self.phi_at(eta)?;
        Ok(self.isometry().apply(HPoint::new(p, eta[0], eta[1])))
    }

    pub fn check_normalized(&self) -> Result<(), SurfaceError> {
        let (a, b) = (self.phi.coeff(0, 0), self.phi.coeff(1, 0));
        if a.abs() > NORMALIZED_TOL || b.abs() > NORMALIZED_TOL {
            return Err(SurfaceError::Unnormalized(a, b));
        }
        Ok(())
    }

    /// `(phi_2, phi_11, phi_12)` at the origin.
    pub fn second_order_data(&self) -> (f64, f64, f64) {
        (self.phi.coeff(0, 1), 2.0 * self.phi.coeff(2, 0), self.phi.coeff(1, 1))
    }
}

/// `phi_11(0)^2 - 16 phi_12(0) - 8 phi_2(0)^2`.
pub fn graph_coeff_c1(g: &GraphSurface) -> Result<f64, SurfaceError> {
    g.check_normalized()?;
    let (p2, p11, p12) = g.second_order_data();
    Ok(p11 * p11 - 16.0 * p12 - 8.0 * p2 * p2)
}

fn placement<F: ScalarField + ?Sized>(u: &F, x: HPoint) -> Result<Isometry, SurfaceError> {
    let hd = horizontal_data(u, x)?;
    if hd.is_characteristic {
        return Err(SurfaceError::Characteristic(hd.grad0_norm));
    }
    let g = u.gradient(x.to_array());
    let off = u.value(x.to_array());
    if off.abs() > 1e-10 * (1.0 + g.iter().map(|v| v.abs()).sum::<f64>()) {
        return Err(SurfaceError::OffSurface(off));
    }
    Ok(Isometry::new(x, hd.x2u.atan2(hd.x1u)))
}

/// Local graph of `u = 0` at `x` after moving `x` to the origin and rotating
/// the horizontal normal to `X1`. The jet is exact up to
/// [`NORMAL_SERIES_DEGREE`]; point evaluations solve the implicit equation.
pub fn normalize_at_point(u: &Poly3, x: HPoint) -> Result<GraphSurface, SurfaceError> {
    let iso = placement(u, x)?;
    let local = iso.pull_back(u);
    let d = NORMAL_SERIES_DEGREE;
    let slope = local.gradient([0.0; 3])[0];
    let mut phi = Series2::zero(d);
    for _ in 0..d + 2 {
        let r = substitute_graph(&local, &phi);
        phi.axpy(-1.0 / slope, &r);
    }
    let r = substitute_graph(&local, &phi);
    if r.max_abs() > 1e-9 * (1.0 + slope.abs()) {
        return Err(SurfaceError::NewtonDiverged(0.0, 0.0));
    }
    let jet = phi.to_bipoly();
    Ok(GraphSurface { phi: jet, base: x, theta: iso.theta, local: Some(local) })
}

/// As [`normalize_at_point`] for a field known only through its value and
/// gradient: `phi` is solved by Newton on a stencil of step `h` and its
/// second-order jet read off by Richardson-extrapolated differences.
pub fn normalize_by_stencil<F: ScalarField + ?Sized>(u: &F, x: HPoint, h: f64) -> Result<GraphSurface, SurfaceError> {
    let iso = placement(u, x)?;
    let (m, c) = iso.affine();
    let to_world = |y: [f64; 3]| -> [f64; 3] {
        let mut w = c;
        for i in 0..3 {
            for j in 0..3 {
                w[i] += m[i][j] * y[j];
            }
        }
        w
    };
    let solve = |e1: f64, e2: f64| -> Result<f64, SurfaceError> {
        let mut t = 0.0;
        for _ in 0..60 {
            let w = to_world([t, e1, e2]);
            let g = u.gradient(w);
            let slope = g[0] * m[0][0] + g[1] * m[1][0] + g[2] * m[2][0];
            let dt = u.value(w) / slope;
            t -= dt;
            if !t.is_finite() {
                break;
            }
            if dt.abs() <= 4.0 * f64::EPSILON * (1.0 + t.abs()) {
                return Ok(t);
            }
        }
        Err(SurfaceError::NewtonDiverged(e1, e2))
    };
    let f = |i: i32, j: i32| solve(i as f64 * h, j as f64 * h);
    let f0 = f(0, 0)?;
    let rich = |d1: f64, d2: f64| (4.0 * d1 - d2) / 3.0;
    let first = |a: f64, b: f64, a2: f64, b2: f64| rich((a - b) / (2.0 * h), (a2 - b2) / (4.0 * h));
    let second = |a: f64, b: f64, a2: f64, b2: f64| rich((a - 2.0 * f0 + b) / (h * h), (a2 - 2.0 * f0 + b2) / (4.0 * h * h));
    let p1 = first(f(1, 0)?, f(-1, 0)?, f(2, 0)?, f(-2, 0)?);
    let p2 = first(f(0, 1)?, f(0, -1)?, f(0, 2)?, f(0, -2)?);
    let p11 = second(f(1, 0)?, f(-1, 0)?, f(2, 0)?, f(-2, 0)?);
    let p22 = second(f(0, 1)?, f(0, -1)?, f(0, 2)?, f(0, -2)?);
    let mixed = |k: i32| -> Result<f64, SurfaceError> {
        let s = (k * k) as f64;
        Ok((f(k, k)? - f(k, -k)? - f(-k, k)? + f(-k, -k)?) / (4.0 * s * h * h))
    };
    let p12 = rich(mixed(1)?, mixed(2)?);
    // phi(0) and phi_1(0) vanish by construction; the stencil only sees noise
    if f0.abs() > 1e-12 || p1.abs() > 1e-6 {
        return Err(SurfaceError::Unnormalized(f0, p1));
    }
    let phi = Bipoly::new(&[([0, 1], p2), ([2, 0], 0.5 * p11), ([1, 1], p12), ([0, 2], 0.5 * p22)]);
    Ok(GraphSurface::with_placement(phi, x, iso.theta))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertical_plane_is_flat() {
        let u = Poly3::new(&[([1, 0, 0], 1.0), ([0, 0, 0], -0.5)]);
        let g = normalize_at_point(&u, HPoint::new(0.5, 1.0, 2.0)).unwrap();
        assert!(g.phi.terms().all(|(_, c)| c.abs() < 1e-15));
        assert_eq!(graph_coeff_c1(&g).unwrap(), 0.0);
        assert_eq!(graph_coeff_c1(&GraphSurface::new(Bipoly::default())).unwrap(), 0.0);
    }

    #[test]
    fn rejects_unnormalized() {
        let g = GraphSurface::new(Bipoly::new(&[([1, 0], 0.5)]));
        assert_eq!(graph_coeff_c1(&g), Err(SurfaceError::Unnormalized(0.0, 0.5)));
    }

    #[test]
    fn implicit_evaluation_solves_the_equation() {
        let u = Poly3::new(&[([2, 0, 0], 1.0), ([0, 2, 0], 1.0), ([0, 0, 1], -1.0), ([0, 0, 0], -1.0)]);
        let x = HPoint::new(1.0, 0.0, 0.0);
        let g = normalize_at_point(&u, x).unwrap();
        for eta in [[0.1, 0.05], [-0.2, 0.1], [0.0, -0.3]] {
            let p = g.point(eta).unwrap();
            assert!(u.value(p.to_array()).abs() < 1e-14);
        }
    }

    #[test]
    fn off_surface_point() {
        let u = Poly3::new(&[([1, 0, 0], 1.0)]);
        assert!(matches!(normalize_at_point(&u, HPoint::new(0.5, 0.0, 0.0)), Err(SurfaceError::OffSurface(_))));
    }
}
