use curve_lab::spec::Curve;
use heis_core::{frame_decompose, koranyi_dist};
use koranyi_calculus::quad::integrate;

use crate::error::MeasureError;
use crate::sample::MeasureSample;

/// Absolute tolerance of the arclength quadrature.
pub const CURVE_QUAD_TOL: f64 = 1e-11;

const VALIDATION_POINTS: usize = 256;

/// Density of the degree-`degree` measure along the curve: the horizontal
/// speed for degree 1, `|theta(velocity)|` for degree 2.
pub fn curve_area_density(c: &dyn Curve, s: f64, degree: u8) -> Result<f64, MeasureError> {
    let f = frame_decompose(c.point(s), c.velocity(s));
    match degree {
        1 => Ok(f.horizontal_length()),
        2 => Ok(f.c3.abs()),
        _ => Err(MeasureError::DegreeMismatch { degree, dim: 1 }),
    }
}

/// Parameter offset `h > 0` with `d(center, c(s0 + dir h)) = r`.
fn boundary(c: &dyn Curve, s0: f64, dir: f64, r: f64, cap: f64) -> Result<f64, MeasureError> {
    let center = c.point(s0);
    let norm = |h: f64| koranyi_dist(center, c.point(s0 + dir * h));
    let mut lo = 0.0;
    let mut hi = cap * 1e-6;
    while norm(hi) < r {
        lo = hi;
        hi *= 2.0;
        if hi > cap {
            if norm(cap) < r {
                return Err(MeasureError::Bracket(r));
            }
            hi = cap;
            break;
        }
    }
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
    let h = 0.5 * (lo + hi);
    for k in 1..VALIDATION_POINTS {
        let t = h * k as f64 / VALIDATION_POINTS as f64;
        if norm(t) > r {
            return Err(MeasureError::MultipleComponents(r));
        }
        let t = h + (cap - h) * k as f64 / VALIDATION_POINTS as f64;
        if t > h && norm(t) < r {
            return Err(MeasureError::MultipleComponents(r));
        }
    }
    Ok(h)
}

/// Search bracket for the parameter: four times the homogeneous scale.
fn bracket_cap(c: &dyn Curve, s0: f64, r: f64) -> f64 {
    let f = frame_decompose(c.point(s0), c.velocity(s0));
    let mut cap = r;
    if f.horizontal_length() > 0.0 {
        cap = cap.max(r / f.horizontal_length());
    }
    if f.c3 != 0.0 {
        cap = cap.max(r * r / f.c3.abs());
    }
    4.0 * cap
}

/// Measure of `B_H(c(s0), r)` intersected with the curve, for the measure
/// of the given degree.
pub fn curve_ball_measure(c: &dyn Curve, s0: f64, r: f64, degree: u8) -> Result<MeasureSample, MeasureError> {
    curve_ball_measure_tol(c, s0, r, degree, CURVE_QUAD_TOL)
}

/// [`curve_ball_measure`] with an explicit absolute quadrature tolerance.
pub fn curve_ball_measure_tol(c: &dyn Curve, s0: f64, r: f64, degree: u8, tol: f64) -> Result<MeasureSample, MeasureError> {
    if !(tol > 0.0) {
        return Err(MeasureError::NonPositiveTolerance(tol));
    }
    if !(r > 0.0) {
        return Err(MeasureError::NonPositiveRadius(r));
    }
    curve_area_density(c, s0, degree)?;
    let cap = bracket_cap(c, s0, r);
    let hp = boundary(c, s0, 1.0, r, cap)?;
    let hm = boundary(c, s0, -1.0, r, cap)?;
    let mut value = 0.0;
    let mut error = 0.0;
    for (a, b) in [(s0 - hm, s0), (s0, s0 + hp)] {
        let q = integrate(|s| curve_area_density(c, s, degree).unwrap_or(f64::NAN), a, b, 0.5 * tol, 0.0, 2000)?;
        value += q.value;
        error += q.error;
    }
    Ok(MeasureSample { r, value, error })
}

#[cfg(test)]
mod tests {
    use super::*;
    use curve_lab::spec::{LiftedCircle, PolyCurve};
    use jet_algebra::Jet;

    fn line(v: [f64; 3]) -> PolyCurve {
        PolyCurve::new(Jet::from_coeffs(vec![0.0, v[0]]), Jet::from_coeffs(vec![0.0, v[1]]), Jet::from_coeffs(vec![0.0, v[2]]))
    }

    #[test]
    fn horizontal_and_vertical_lines() {
        let h = line([1.0, 0.0, 0.0]);
        for r in [0.1, 1.0, 3.0] {
            let m = curve_ball_measure(&h, 0.0, r, 1).unwrap();
            assert!((m.value - 2.0 * r).abs() < 1e-12);
        }
        let v = line([0.0, 0.0, 1.0]);
        for r in [0.1, 1.0, 3.0] {
            let m = curve_ball_measure(&v, 0.0, r, 2).unwrap();
            assert!((m.value - 2.0 * r * r).abs() < 1e-12 * (1.0 + r * r));
        }
        assert!(matches!(curve_ball_measure(&h, 0.0, 1.0, 3), Err(MeasureError::DegreeMismatch { .. })));
    }

    #[test]
    fn lifted_circle_matches_expansion() {
        let c = LiftedCircle { radius: 1.0 };
        let r: f64 = 0.05;
        let m = curve_ball_measure(&c, 0.0, r, 1).unwrap();
        assert!((m.value - (2.0 * r + r.powi(3) / 36.0)).abs() < 1e-9);
    }

    #[test]
    fn whole_circle_in_ball_is_rejected() {
        let c = LiftedCircle { radius: 0.1 };
        assert!(curve_ball_measure(&c, 0.0, 5.0, 1).is_err());
    }
}
