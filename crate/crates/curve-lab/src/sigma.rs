//! Closed forms of `g_ij`, `omega_ij` along planar curves whose curvature
//! is `3/2` times their speed, and the ODEs for the speed obtained from
//! `b2 = 0` and `b3 = 0`.

use jet_algebra::weighted::Symbol::{self, G, Omega};
use jet_algebra::{Jet, Scalar};

use crate::coeffs::{eqn_b1, eval_wpoly};
use crate::error::CurveError;
use crate::planar::{curve_from_speed_curvature, g_omega, PlanarJet};

/// Which version of identities (17), (18), (20) to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Form {
    /// Coefficients as printed.
    Literal,
    /// Coefficients rederived from the recursion (differ in 17, 18, 20).
    Corrected,
}

pub const IDENTITY_COUNT: usize = 20;

/// Left-hand symbol of identity `n` (1-based).
pub fn identity_symbol(n: usize) -> Symbol {
    const T: [Symbol; IDENTITY_COUNT] = [
        G(1, 1),
        Omega(1, 2),
        G(1, 2),
        G(2, 2),
        G(2, 3),
        Omega(1, 3),
        G(1, 3),
        G(3, 3),
        G(3, 4),
        G(1, 4),
        G(2, 4),
        Omega(2, 3),
        Omega(1, 4),
        G(4, 4),
        G(1, 5),
        Omega(2, 4),
        Omega(3, 4),
        Omega(2, 5),
        Omega(1, 5),
        Omega(1, 6),
    ];
    T[n - 1]
}

/// Right-hand side of identity `n` in terms of `d = [s, s', s'', s''', s'''']`.
pub fn identity_rhs<T: Scalar>(n: usize, form: Form, d: &[T; 5]) -> T {
    let q = |a: i64, b: i64| T::from_ratio(a, b);
    let s = |k: u32| d[0].powi(k);
    let (s1, s2, s3, s4) = (d[1].clone(), d[2].clone(), d[3].clone(), d[4].clone());
    let fixed = form == Form::Corrected;
    match n {
        1 => s(2),
        2 => q(3, 2) * s(4),
        3 => s(1) * s1,
        4 => s1.powi(2) + q(9, 4) * s(6),
        5 => s1.clone() * s2 + q(27, 4) * s(5) * s1,
        6 => q(6, 1) * s(3) * s1,
        7 => s(1) * s2 - q(9, 4) * s(6),
        8 => (s2 - q(9, 4) * s(5)).powi(2) + q(36, 1) * s(4) * s1.powi(2),
        9 => {
            (s2.clone() - q(9, 4) * s(5)) * (s3 - q(45, 4) * s(4) * s1.clone())
                + q(36, 1) * s(4) * s1.clone() * s2
                + q(72, 1) * s(3) * s1.powi(3)
        }
        10 => s(1) * s3 - q(81, 4) * s(5) * s1,
        11 => s1.clone() * s3 + q(45, 4) * s(5) * s2 - q(9, 4) * s(4) * s1.powi(2) - q(81, 16) * s(10),
        12 => q(-3, 2) * s(3) * s2 + q(6, 1) * s(2) * s1.powi(2) + q(27, 8) * s(8),
        13 => q(15, 2) * s(3) * s2 + q(12, 1) * s(2) * s1.powi(2) - q(27, 8) * s(8),
        14 => {
            (s3 - q(81, 4) * s(4) * s1.clone()).powi(2)
                + (q(15, 2) * s(2) * s2 + q(12, 1) * s(1) * s1.powi(2) - q(27, 8) * s(7)).powi(2)
        }
        15 => s(1) * s4 - q(63, 2) * s(5) * s2 - q(99, 1) * s(4) * s1.powi(2) + q(81, 16) * s(10),
        16 => {
            q(-3, 2) * s(3) * s3 + q(15, 2) * s(2) * s1.clone() * s2 + q(12, 1) * s(1) * s1.powi(3)
                + q(27, 1) * s(7) * s1
        }
        17 => {
            q(-6, 1) * s(2) * s1.clone() * s3 + q(15, 2) * s(2) * s2.powi(2) + q(12, 1) * s(1) * s1.powi(2) * s2.clone()
                + if fixed { q(-81, 4) } else { q(-81, 2) } * s(7) * s2
                + q(189, 2) * s(6) * s1.powi(2)
                + q(243, 32) * s(12)
        }
        18 => {
            (if fixed { q(-3, 2) } else { q(3, 2) }) * s(3) * s4
                + q(9, 1) * s(2) * s1.clone() * s3
                + q(39, 1) * s(1) * s1.powi(2) * s2.clone()
                + if fixed { q(189, 4) } else { q(135, 2) } * s(7) * s2
                + q(12, 1) * s1.powi(4)
                + q(189, 2) * s(6) * s1.powi(2)
                - q(243, 32) * s(12)
        }
        19 => q(9, 1) * s(3) * s3 + q(39, 1) * s(2) * s1.clone() * s2 + q(12, 1) * s(1) * s1.powi(3) - q(54, 1) * s(7) * s1,
        20 => {
            q(21, 2) * s(3) * s4 + q(57, 1) * s(2) * s1.clone() * s3 + q(75, 1) * s(1) * s1.powi(2) * s2.clone()
                + q(39, 1) * s(2) * s2.powi(2)
                + if fixed { q(-405, 4) } else { q(-243, 2) } * s(7) * s2
                - q(945, 2) * s(6) * s1.powi(2)
                + q(243, 32) * s(12)
        }
        _ => panic!("identity index {n} out of range 1..=20"),
    }
}

/// `[sigma, sigma', ..., sigma'''']` at 0.
pub fn sigma_derivatives<T: Scalar>(sigma: &Jet<T>) -> Result<[T; 5], CurveError> {
    if sigma.order() < 4 {
        return Err(CurveError::BeyondOrder(4, sigma.order()));
    }
    let mut out: [T; 5] = std::array::from_fn(|_| T::zero());
    for (k, slot) in out.iter_mut().enumerate() {
        *slot = sigma.derivative_at_zero(k)?;
    }
    Ok(out)
}

/// Planar curve with speed `sigma` and curvature `3/2 sigma`.
pub fn eq1_curve<T: Scalar>(sigma: &Jet<T>) -> Result<PlanarJet<T>, CurveError> {
    curve_from_speed_curvature(sigma, &sigma.scale(&T::from_ratio(3, 2)))
}

#[derive(Debug, Clone, PartialEq)]
pub struct IdentityResidual<T> {
    pub index: usize,
    pub symbol: Symbol,
    pub lhs: T,
    pub rhs: T,
    pub residual: T,
}

/// Residuals `lhs - rhs` of the twenty identities on the curve with
/// speed `sigma` and curvature `3/2 sigma`. Needs `sigma` of order `>= 5`.
pub fn sigma_identity_residuals<T: Scalar>(sigma: &Jet<T>, form: Form) -> Result<Vec<IdentityResidual<T>>, CurveError> {
    if !sigma.coeffs()[0].is_positive() {
        return Err(CurveError::NonPositiveSpeed);
    }
    if sigma.order() < 5 {
        return Err(CurveError::BeyondOrder(6, sigma.order() + 1));
    }
    let d = sigma_derivatives(sigma)?;
    let c = eq1_curve(sigma)?;
    (1..=IDENTITY_COUNT)
        .map(|n| {
            let symbol = identity_symbol(n);
            let (i, j) = symbol.indices();
            let (g, w) = g_omega(&c, i as usize, j as usize)?;
            let lhs = if matches!(symbol, G(..)) { g } else { w };
            let rhs = identity_rhs(n, form, &d);
            Ok(IdentityResidual { index: n, symbol, residual: lhs.clone() - rhs.clone(), lhs, rhs })
        })
        .collect()
}

/// `-1/6 s s'' + s'^2 + 1/8 s^6`.
pub fn pde_b2<T: Scalar>(d: &[T; 5]) -> T {
    T::from_ratio(-1, 6) * d[0].clone() * d[2].clone() + d[1].powi(2) + T::from_ratio(1, 8) * d[0].powi(6)
}

/// The fourth-order ODE obtained from `b3 = 0`.
pub fn pde_b3<T: Scalar>(d: &[T; 5]) -> T {
    let q = |a: i64, b: i64| T::from_ratio(a, b);
    let s = |k: u32| d[0].powi(k);
    let (s1, s2, s3, s4) = (d[1].clone(), d[2].clone(), d[3].clone(), d[4].clone());
    q(-4, 39) * s(3) * s4 + q(28, 39) * s(2) * s1.clone() * s3 + q(10, 13) * s(2) * s2.powi(2)
        + q(16, 3) * s(1) * s1.powi(2) * s2.clone()
        + q(10, 13) * s(7) * s2
        + s1.powi(4)
        + q(7, 2) * s(6) * s1.powi(2)
        - q(9, 208) * s(12)
}

/// `81 s^6 + 32 s'^2`.
pub fn pde_b4<T: Scalar>(d: &[T; 5]) -> T {
    T::from_i64(81) * d[0].powi(6) + T::from_i64(32) * d[1].powi(2)
}

#[derive(Debug, Clone, PartialEq)]
pub struct OdeResiduals<T> {
    /// `b1` on the EQ1 curve; vanishes identically.
    pub eq1: T,
    pub b2: T,
    pub b3: T,
    pub b4: T,
}

pub fn ode_residuals<T: Scalar>(sigma: &Jet<T>) -> Result<OdeResiduals<T>, CurveError> {
    let d = sigma_derivatives(sigma)?;
    let eq1 = if sigma.coeffs()[0].is_positive() {
        eval_wpoly(&eqn_b1(), &eq1_curve(sigma)?)?
    } else {
        T::zero()
    };
    Ok(OdeResiduals { eq1, b2: pde_b2(&d), b3: pde_b3(&d), b4: pde_b4(&d) })
}

/// Jet solution of the `b2 = 0` ODE, `s'' = 6 s'^2 / s + 3/4 s^5`, with
/// `s(0) = s0 > 0`, `s'(0) = s1`, by Picard iteration.
pub fn b2_constrained_sigma<T: Scalar>(s0: T, s1: T, order: usize) -> Result<Jet<T>, CurveError> {
    if !s0.is_positive() {
        return Err(CurveError::NonPositiveSpeed);
    }
    let seed = Jet::new(vec![s0.clone(), s1.clone()], order);
    if order < 2 {
        return Ok(seed);
    }
    let mut sig = seed;
    for _ in 0..order {
        let m = order - 2;
        let s = sig.with_order(m);
        let ds = sig.derive().with_order(m);
        let rhs = &(&ds * &ds).scale(&T::from_i64(6)).try_mul(&s.recip()?)? + &s.powi(5).scale(&T::from_ratio(3, 4));
        sig = rhs.integrate(s1.clone()).integrate(s0.clone());
    }
    Ok(sig)
}

/// Value of the `b3` ODE on solutions of the `b2` ODE with initial data
/// `(s, s')`: `-(3/208) (s^6 + 4 s'^2)^2`.
pub fn b3_on_b2_solutions<T: Scalar>(s: &T, s1: &T) -> T {
    let base = s.powi(6) + T::from_i64(4) * s1.powi(2);
    T::from_ratio(-3, 208) * base.powi(2)
}
