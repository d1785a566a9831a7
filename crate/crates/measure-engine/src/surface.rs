use std::f64::consts::PI;

use heis_core::{koranyi_dist, HPoint};
use koranyi_calculus::quad::gauss_legendre;
use koranyi_calculus::{aniso_dilate, SphereQuadrature};
use rayon::prelude::*;
use surface_lab::GraphSurface;

use crate::error::MeasureError;
use crate::sample::MeasureSample;

const MONOTONE_CHECKS: usize = 8;

/// `sqrt((phi_1 - 2 phi phi_2)^2 + (1 - 2 eta1 phi_2)^2)`, the degree-3
/// density of the graph parameterization.
pub fn graph_area_density(g: &GraphSurface, eta: [f64; 2]) -> Result<f64, MeasureError> {
    let (p, p1, p2) = g.phi_at(eta)?;
    Ok((p1 - 2.0 * p * p2).hypot(1.0 - 2.0 * eta[0] * p2))
}

/// `F(rho) = phi^4 + 2 rho^2 xi1^2 phi^2 + rho^4` along `delta_rho xi`.
fn radial_norm4(g: &GraphSurface, xi: [f64; 2], rho: f64) -> Result<f64, MeasureError> {
    let (p, _, _) = g.phi_at(aniso_dilate(xi, rho))?;
    let p2 = p * p;
    Ok(p2 * p2 + 2.0 * rho * rho * xi[0] * xi[0] * p2 + rho.powi(4))
}

/// The unique `rho0 <= r` with `F(rho0, xi) = r^4`.
pub fn rho0_solve(g: &GraphSurface, xi: [f64; 2], r: f64) -> Result<f64, MeasureError> {
    if !(r > 0.0) {
        return Err(MeasureError::NonPositiveRadius(r));
    }
    let r4 = r.powi(4);
    let mut prev = 0.0;
    for k in 1..=MONOTONE_CHECKS {
        let v = radial_norm4(g, xi, r * k as f64 / MONOTONE_CHECKS as f64)?;
        if !(v > prev) {
            return Err(MeasureError::NotMonotone(r));
        }
        prev = v;
    }
    let (mut lo, mut hi) = (0.0, r);
    loop {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if radial_norm4(g, xi, mid)? < r4 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Sphere nodes and the two radial rules whose difference estimates the
/// radial error.
#[derive(Debug, Clone)]
pub struct PolarQuadrature {
    pub sphere: SphereQuadrature,
    fine: (Vec<f64>, Vec<f64>),
    coarse: (Vec<f64>, Vec<f64>),
}

pub const DEFAULT_RADIAL_NODES: usize = 24;

impl PolarQuadrature {
    pub fn new(sphere: SphereQuadrature, radial_nodes: usize) -> Self {
        let coarse = (2 * radial_nodes / 3).max(2);
        PolarQuadrature { sphere, fine: gauss_legendre(radial_nodes), coarse: gauss_legendre(coarse) }
    }
}

impl Default for PolarQuadrature {
    fn default() -> Self {
        PolarQuadrature::new(SphereQuadrature::default(), DEFAULT_RADIAL_NODES)
    }
}

fn gl_pair(f: impl Fn(f64) -> Result<f64, MeasureError>, b: f64, rules: [&(Vec<f64>, Vec<f64>); 2]) -> Result<(f64, f64), MeasureError> {
    let mut out = [0.0; 2];
    for (o, (x, w)) in out.iter_mut().zip(rules) {
        for (xi, wi) in x.iter().zip(w) {
            *o += wi * f(0.5 * b * (xi + 1.0))?;
        }
        *o *= 0.5 * b;
    }
    Ok((out[0], (out[0] - out[1]).abs()))
}

/// Sums per-node `(value, radial error)` pairs in node order and adds the
/// half-rule difference as the angular error estimate.
fn reduce(weights: &[f64], parts: &[(f64, f64)]) -> (f64, f64) {
    let mut full = 0.0;
    let mut half = 0.0;
    let mut radial = 0.0;
    for (k, (w, (v, e))) in weights.iter().zip(parts).enumerate() {
        full += w * v;
        radial += w * e;
        if k % 2 == 0 {
            half += 2.0 * w * v;
        }
    }
    (full, radial + (full - half).abs())
}

/// Measure of `B_H(o, r)` intersected with the normalized graph, in
/// Koranyi polar coordinates `eta = delta_rho xi`.
pub fn surface_ball_measure(g: &GraphSurface, r: f64, q: &PolarQuadrature) -> Result<MeasureSample, MeasureError> {
    g.check_normalized()?;
    let parts: Vec<(f64, f64)> = q
        .sphere
        .nodes
        .par_iter()
        .map(|n| {
            let rho0 = rho0_solve(g, n.xi, r)?;
            gl_pair(|rho| Ok(graph_area_density(g, aniso_dilate(n.xi, rho))? * rho * rho), rho0, [&q.fine, &q.coarse])
        })
        .collect::<Result<_, _>>()?;
    let weights: Vec<f64> = q.sphere.nodes.iter().map(|n| n.weight).collect();
    let (value, error) = reduce(&weights, &parts);
    Ok(MeasureSample { r, value, error })
}

/// Height function `z -> (f(z), grad f(z))` of an `x3`-graph.
pub type HeightFn<'a> = &'a (dyn Fn([f64; 2]) -> (f64, [f64; 2]) + Sync);

/// Measure of `B_H(center, r)` intersected with the graph `x3 = f(z)`, by
/// polar quadrature in the `z`-plane around the center. The density
/// `sqrt((f_1 - 2 x2)^2 + (f_2 + 2 x1)^2)` vanishes at characteristic
/// points, so this path also serves them.
pub fn x3_graph_ball_measure(f: HeightFn, cz: [f64; 2], r: f64, angular_nodes: usize, q: &PolarQuadrature) -> Result<MeasureSample, MeasureError> {
    if !(r > 0.0) {
        return Err(MeasureError::NonPositiveRadius(r));
    }
    let center = HPoint::new(cz[0], cz[1], f(cz).0);
    let point = |rho: f64, d: [f64; 2]| {
        let z = [cz[0] + rho * d[0], cz[1] + rho * d[1]];
        (z, f(z))
    };
    let h = 2.0 * PI / angular_nodes as f64;
    let parts: Vec<(f64, f64)> = (0..angular_nodes)
        .into_par_iter()
        .map(|k| {
            let (s, c) = (h * k as f64).sin_cos();
            let d = [c, s];
            let norm = |rho: f64| {
                let (z, (v, _)) = point(rho, d);
                koranyi_dist(center, HPoint::new(z[0], z[1], v))
            };
            // the horizontal part alone already has norm rho, so rho_max <= r
            let mut prev = 0.0;
            for j in 1..=MONOTONE_CHECKS {
                let v = norm(r * j as f64 / MONOTONE_CHECKS as f64);
                if !(v > prev) {
                    return Err(MeasureError::NotMonotone(r));
                }
                prev = v;
            }
            let (mut lo, mut hi) = (0.0, r);
            loop {
                let mid = 0.5 * (lo + hi);
                if mid <= lo || mid >= hi {
                    break;
                }
                if norm(mid) < r {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            let dens = |rho: f64| {
                let (z, (_, g)) = point(rho, d);
                Ok((g[0] - 2.0 * z[1]).hypot(g[1] + 2.0 * z[0]) * rho)
            };
            gl_pair(dens, 0.5 * (lo + hi), [&q.fine, &q.coarse])
        })
        .collect::<Result<_, _>>()?;
    let weights = vec![h; angular_nodes];
    let (value, error) = reduce(&weights, &parts);
    Ok(MeasureSample { r, value, error })
}
