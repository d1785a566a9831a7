use jet_algebra::{solve_norm_equation, Branch, Jet, Scalar};

use crate::curve::{classify_degree, CurveJet};
use crate::error::CurveError;

/// Measure of `B_H(Sigma(0), r) ∩ Sigma` as a series in `r`, obtained by
/// solving `|Sigma(0)^{-1} Sigma(s)|^4 = r^4` for the endpoints and
/// integrating the area density between them.
///
/// Horizontal base points give a series of order `N - 3`, nonhorizontal
/// ones a series of order `2N - 1`.
pub fn measure_series<T: Scalar>(c: &CurveJet<T>) -> Result<Jet<T>, CurveError> {
    let degree = classify_degree(c)?;
    let (x1, x2, x3) = (&c.planar.x1, &c.planar.x2, &c.x3);
    let p = [x1, x2, x3].map(|j| j.coeffs()[0].clone());
    let two = T::from_i64(2);
    let d1 = x1.add_scalar(&-p[0].clone());
    let d2 = x2.add_scalar(&-p[1].clone());
    let d3 = &(&x3.add_scalar(&-p[2].clone()) + &x2.scale(&(two.clone() * p[0].clone())))
        - &x1.scale(&(two * p[1].clone()));
    let h = &(&d1 * &d1) + &(&d2 * &d2);
    let f = &(&h * &h) + &(&d3 * &d3);

    let (k, density) = if degree == 1 {
        (4, c.planar.speed_squared().sqrt()?)
    } else {
        let theta = c.contact_jet();
        (2, if theta.coeffs()[0].is_positive() { theta } else { -theta })
    };
    let area = density.integrate(T::zero());
    let plus = solve_norm_equation(&f, k, Branch::Plus)?;
    let minus = solve_norm_equation(&f, k, Branch::Minus)?;
    let area = area.with_order(plus.order());
    Ok(&area.compose(&plus)? - &area.compose(&minus)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::{lifted_circle_jet, vertical_completion};
    use crate::planar::PlanarJet;
    use jet_algebra::{rat, Rational};

    #[test]
    fn tilted_line_series() {
        let c = vertical_completion(&PlanarJet::new(Jet::<Rational>::variable(8), Jet::zero(8)).unwrap(), rat(0, 1));
        let m = measure_series(&c).unwrap();
        let mut want = vec![rat(0, 1); 16];
        want[2] = rat(2, 1);
        want[6] = rat(-1, 1);
        want[10] = rat(7, 4);
        want[14] = rat(-33, 8);
        assert_eq!(m, Jet::new(want, 15));
    }

    #[test]
    fn lifted_circle_series() {
        let m = measure_series(&lifted_circle_jet(rat(1, 1), 8).unwrap()).unwrap();
        assert_eq!(m.coeffs()[1], rat(2, 1));
        assert_eq!(m.coeffs()[2], rat(0, 1));
        assert_eq!(m.coeffs()[3], rat(1, 36));
    }
}
