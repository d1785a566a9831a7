use jet_algebra::weighted::{Monomial, Symbol, Symbol::*, WPoly};
use jet_algebra::Scalar;

use crate::curve::CurveJet;
use crate::error::CurveError;
use crate::planar::{curvature_squared, g_omega, PlanarJet};
use crate::HORIZONTAL_TOL;

/// Ratio between the `r^14` measure coefficient and the printed
/// `b3` polynomial, fixed by the exact series oracle.
pub const B3_NORMALIZATION: i64 = 2;

fn m(num: i64, den: i64, f: &[(Symbol, u32)]) -> Monomial {
    Monomial::new(num, den, f)
}

pub fn eqn_b1() -> WPoly {
    WPoly::new(vec![m(-1, 1, &[(G(1, 1), 2)]), m(2, 3, &[(Omega(1, 2), 1)])])
}

pub fn eqn_b2() -> WPoly {
    WPoly::new(vec![
        m(7, 4, &[(G(1, 1), 4)]),
        m(-7, 3, &[(G(1, 1), 2), (Omega(1, 2), 1)]),
        m(1, 6, &[(Omega(1, 2), 2)]),
        m(-3, 2, &[(G(1, 2), 2)]),
        m(-2, 3, &[(G(1, 1), 1), (G(1, 3), 1)]),
        m(1, 15, &[(Omega(2, 3), 1)]),
        m(1, 10, &[(Omega(1, 4), 1)]),
    ])
}

/// The `b3` polynomial exactly as printed (bracketed products expanded).
pub fn eqn_b3_literal() -> WPoly {
    WPoly::new(vec![
        m(-33, 16, &[(G(1, 1), 6)]),
        m(33, 8, &[(G(1, 1), 4), (Omega(1, 2), 1)]),
        m(-11, 8, &[(G(1, 1), 2), (Omega(1, 2), 2)]),
        m(-11, 36, &[(Omega(1, 2), 3)]),
        m(63, 8, &[(G(1, 1), 2), (G(1, 2), 2)]),
        m(-1, 32, &[(G(2, 2), 2)]),
        m(-9, 4, &[(G(1, 2), 2), (Omega(1, 2), 1)]),
        m(3, 2, &[(G(1, 1), 3), (G(1, 3), 1)]),
        m(-2, 5, &[(G(1, 1), 2), (Omega(2, 3), 1)]),
        m(-5, 4, &[(G(1, 1), 1), (Omega(1, 2), 1), (G(1, 3), 1)]),
        m(-5, 4, &[(G(1, 1), 1), (G(1, 2), 1), (Omega(1, 3), 1)]),
        m(-7, 90, &[(G(1, 2), 1), (G(2, 3), 1)]),
        m(-31, 180, &[(G(2, 2), 1), (G(1, 3), 1)]),
        m(1, 12, &[(Omega(1, 3), 2)]),
        m(-1, 12, &[(G(1, 3), 2)]),
        m(11, 120, &[(Omega(1, 2), 1), (Omega(1, 4), 1)]),
        m(-1, 8, &[(G(1, 2), 1), (G(1, 4), 1)]),
        m(-9, 40, &[(G(1, 1), 2), (Omega(1, 4), 1)]),
        m(-1, 60, &[(G(1, 1), 1), (G(1, 5), 1)]),
        m(1, 504, &[(Omega(3, 4), 1)]),
        m(1, 280, &[(Omega(2, 5), 1)]),
        m(1, 504, &[(Omega(1, 6), 1)]),
    ])
}

/// Evaluates a `g`/`omega` polynomial at the base of a planar jet.
pub fn eval_wpoly<T: Scalar>(p: &WPoly, c: &PlanarJet<T>) -> Result<T, CurveError> {
    if p.max_index() > c.order() {
        return Err(CurveError::BeyondOrder(p.max_index(), c.order()));
    }
    let mut err = None;
    let v = p.eval(|s| {
        let (i, j) = s.indices();
        match g_omega(c, i as usize, j as usize) {
            Ok((g, w)) => match s {
                G(..) => g,
                Omega(..) => w,
            },
            Err(e) => {
                err = Some(e);
                T::zero()
            }
        }
    });
    err.map_or(Ok(v), Err)
}

/// `a1 = k(0)^2 / 36` at a horizontal base point.
pub fn coeff_a1<T: Scalar>(c: &CurveJet<T>) -> Result<T, CurveError> {
    let theta = c.contact_jet().coeffs()[0].clone();
    if !theta.is_negligible(HORIZONTAL_TOL) {
        return Err(CurveError::NonHorizontal);
    }
    Ok(curvature_squared(&c.planar)? / T::from_i64(36))
}

fn check_homogeneous<T: Scalar>(c: &CurveJet<T>) -> Result<(), CurveError> {
    let theta = c.contact_jet();
    if !(theta.coeffs()[0].clone() - T::one()).is_negligible(HORIZONTAL_TOL) {
        return Err(if theta.coeffs()[0].is_negligible(HORIZONTAL_TOL) {
            CurveError::Horizontal
        } else {
            CurveError::NotHomogeneous
        });
    }
    if theta.coeffs()[1..].iter().any(|x| !x.is_negligible(HORIZONTAL_TOL)) {
        return Err(CurveError::NotHomogeneous);
    }
    Ok(())
}

/// The coefficient of `r^{4m+2}` in the measure of a nonhorizontal curve
/// parameterized by homogeneous arclength. For `m = 3` this is
/// `B3_NORMALIZATION` times the printed polynomial.
pub fn coeff_b<T: Scalar>(c: &CurveJet<T>, m: usize) -> Result<T, CurveError> {
    check_homogeneous(c)?;
    match m {
        1 => eval_wpoly(&eqn_b1(), &c.planar),
        2 => eval_wpoly(&eqn_b2(), &c.planar),
        3 => Ok(eval_wpoly(&eqn_b3_literal(), &c.planar)? * T::from_i64(B3_NORMALIZATION)),
        _ => Err(CurveError::BadIndex(m)),
    }
}

pub fn coeff_b3_literal<T: Scalar>(c: &CurveJet<T>) -> Result<T, CurveError> {
    check_homogeneous(c)?;
    eval_wpoly(&eqn_b3_literal(), &c.planar)
}

/// `c3..=c7` of the homogeneous-arclength completion through the origin,
/// for `x1 = sum a_m s^m / m!`, `x2 = sum b_m s^m / m!` (`a[0] = a1`, ...).
pub fn completion_coefficients<T: Scalar>(a: &[T; 6], b: &[T; 6]) -> [T; 5] {
    let w = |i: usize, j: usize| a[i - 1].clone() * b[j - 1].clone() - a[j - 1].clone() * b[i - 1].clone();
    let q = |n: i64, d: i64| T::from_ratio(n, d);
    [
        q(1, 3) * w(2, 1),
        q(1, 6) * w(3, 1),
        q(1, 20) * w(4, 1) + q(1, 30) * w(3, 2),
        q(1, 90) * w(5, 1) + q(1, 72) * w(4, 2),
        q(1, 504) * w(6, 1) + q(1, 280) * w(5, 2) + q(1, 504) * w(4, 3),
    ]
}

/// Limit of `mu(B(o,r)) / r^2` at an isolated horizontal point of a
/// nonhorizontal curve, in terms of `x1'(0)` and `x3''(0)`.
pub fn horizontal_point_density(x1_dot: f64, x3_ddot: f64) -> Result<f64, CurveError> {
    if x1_dot == 0.0 && x3_ddot == 0.0 {
        return Err(CurveError::BothZero);
    }
    let q = 0.25 * x3_ddot * x3_ddot;
    Ok(2.0 * (q / (x1_dot.powi(4) + q)).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::{lifted_circle_jet, vertical_completion};
    use jet_algebra::{rat, Jet, Rational};

    #[test]
    fn weights_of_b_polynomials() {
        assert!(eqn_b1().is_homogeneous(4));
        assert!(eqn_b2().is_homogeneous(8));
        assert!(eqn_b3_literal().is_homogeneous(12));
    }

    #[test]
    fn a1_examples() {
        let z = Jet::<Rational>::zero(6);
        let line = crate::curve::horizontal_lift(&PlanarJet::new(Jet::variable(6), z).unwrap(), rat(0, 1));
        assert_eq!(coeff_a1(&line).unwrap(), rat(0, 1));
        assert_eq!(coeff_a1(&lifted_circle_jet(rat(1, 1), 6).unwrap()).unwrap(), rat(1, 36));
        assert_eq!(coeff_a1(&lifted_circle_jet(rat(2, 1), 6).unwrap()).unwrap(), rat(1, 144));
    }

    #[test]
    fn b_on_vertical_line() {
        let z = Jet::<Rational>::zero(7);
        let c = vertical_completion(&PlanarJet::new(z.clone(), z).unwrap(), rat(0, 1));
        for m in 1..=3 {
            assert_eq!(coeff_b(&c, m).unwrap(), rat(0, 1));
        }
        assert_eq!(coeff_b(&c, 4), Err(CurveError::BadIndex(4)));
    }

    #[test]
    fn b_on_tilted_line() {
        let c = vertical_completion(&PlanarJet::new(Jet::<Rational>::variable(7), Jet::zero(7)).unwrap(), rat(0, 1));
        assert_eq!(coeff_b(&c, 1).unwrap(), rat(-1, 1));
        assert_eq!(coeff_b(&c, 2).unwrap(), rat(7, 4));
        assert_eq!(coeff_b(&c, 3).unwrap(), rat(-33, 8));
        assert_eq!(coeff_b3_literal(&c).unwrap(), rat(-33, 16));
    }

    #[test]
    fn b_rejects_other_parameterizations() {
        let c = crate::curve::horizontal_lift(&PlanarJet::new(Jet::<Rational>::variable(7), Jet::zero(7)).unwrap(), rat(0, 1));
        assert_eq!(coeff_b(&c, 1), Err(CurveError::Horizontal));
        let p = PlanarJet::new(Jet::<Rational>::variable(7), Jet::zero(7)).unwrap();
        let c = CurveJet::new(p, Jet::monomial(rat(2, 1), 1, 7)).unwrap();
        assert_eq!(coeff_b(&c, 1), Err(CurveError::NotHomogeneous));
    }

    #[test]
    fn horizontal_density_values() {
        assert_eq!(horizontal_point_density(1.0, 0.0).unwrap(), 0.0);
        assert_eq!(horizontal_point_density(0.0, 3.0).unwrap(), 2.0);
        assert!((horizontal_point_density(1.0, 2.0).unwrap() - 2f64.sqrt()).abs() < 1e-15);
        assert_eq!(horizontal_point_density(0.0, 0.0), Err(CurveError::BothZero));
    }
}
