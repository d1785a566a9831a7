use std::ops::{Add, Mul, Neg, Sub};

use crate::error::JetError;
use crate::scalar::Scalar;

/// Truncated power series `c0 + c1 s + ... + cN s^N`.
#[derive(Debug, Clone, PartialEq)]
pub struct Jet<T> {
    c: Vec<T>,
}

impl<T: Scalar> Jet<T> {
    /// Builds a jet of the given order, padding with zeros or truncating.
    pub fn new(mut coeffs: Vec<T>, order: usize) -> Self {
        coeffs.resize(order + 1, T::zero());
        Jet { c: coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty(), "a jet needs at least one coefficient");
        Jet { c: coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Jet::new(Vec::new(), order)
    }

    pub fn constant(v: T, order: usize) -> Self {
        Jet::new(vec![v], order)
    }

    /// The identity series `s`.
    pub fn variable(order: usize) -> Self {
        Jet::monomial(T::one(), 1, order)
    }

    pub fn monomial(v: T, k: usize, order: usize) -> Self {
        let mut c = vec![T::zero(); order + 1];
        if k <= order {
            c[k] = v;
        }
        Jet { c }
    }

    pub fn order(&self) -> usize {
        self.c.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.c
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.c
    }

    /// Coefficient of `s^k`; zero-padded beyond the order is *not* allowed.
    pub fn coeff(&self, k: usize) -> Result<&T, JetError> {
        self.c.get(k).ok_or(JetError::BeyondOrder(k, self.order()))
    }

    /// `k`-th derivative at 0, i.e. `k! c_k`.
    pub fn derivative_at_zero(&self, k: usize) -> Result<T, JetError> {
        let mut f = T::one();
        for i in 2..=k {
            f = f * T::from_i64(i as i64);
        }
        Ok(self.coeff(k)?.clone() * f)
    }

    pub fn with_order(&self, order: usize) -> Self {
        Jet::new(self.c.clone(), order)
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Jet<U> {
        Jet { c: self.c.iter().map(f).collect() }
    }

    pub fn to_f64(&self) -> Jet<f64> {
        self.map(|x| x.to_f64())
    }

    pub fn valuation(&self) -> Option<usize> {
        self.c.iter().position(|x| !x.is_zero())
    }

    fn check(&self, other: &Self) -> Result<(), JetError> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(JetError::OrderMismatch(self.order(), other.order()))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, JetError> {
        self.check(other)?;
        Ok(Jet { c: self.c.iter().zip(&other.c).map(|(a, b)| a.clone() + b.clone()).collect() })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, JetError> {
        self.check(other)?;
        Ok(Jet { c: self.c.iter().zip(&other.c).map(|(a, b)| a.clone() - b.clone()).collect() })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, JetError> {
        self.check(other)?;
        let n = self.order();
        let mut c = vec![T::zero(); n + 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.c.iter().take(n + 1 - i).enumerate() {
                c[i + j] = c[i + j].clone() + a.clone() * b.clone();
            }
        }
        Ok(Jet { c })
    }

    pub fn scale(&self, k: &T) -> Self {
        self.map(|x| x.clone() * k.clone())
    }

    pub fn add_scalar(&self, k: &T) -> Self {
        let mut out = self.clone();
        out.c[0] = out.c[0].clone() + k.clone();
        out
    }

    pub fn powi(&self, e: u32) -> Self {
        let mut acc = Jet::constant(T::one(), self.order());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `f(g(s))`; requires `g(0) = 0` and equal orders.
    pub fn compose(&self, g: &Self) -> Result<Self, JetError> {
        self.check(g)?;
        if !g.c[0].is_zero() {
            return Err(JetError::ComposeNonzeroConstant);
        }
        let n = self.order();
        let mut acc = Jet::constant(self.c[n].clone(), n);
        for k in (0..n).rev() {
            acc = (&acc * g).add_scalar(&self.c[k]);
        }
        Ok(acc)
    }

    pub fn recip(&self) -> Result<Self, JetError> {
        if self.c[0].is_zero() {
            return Err(JetError::NotInvertible);
        }
        let n = self.order();
        let inv0 = T::one() / self.c[0].clone();
        let mut h = vec![T::zero(); n + 1];
        h[0] = inv0.clone();
        for k in 1..=n {
            let mut acc = T::zero();
            for j in 1..=k {
                acc = acc + self.c[j].clone() * h[k - j].clone();
            }
            h[k] = -(acc * inv0.clone());
        }
        Ok(Jet { c: h })
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, JetError> {
        self.try_mul(&other.recip()?)
    }

    /// `f^(num/den)` for a series with positive constant term.
    pub fn pow_ratio(&self, num: i64, den: u32) -> Result<Self, JetError> {
        let f0 = self.c[0].clone();
        if !f0.is_positive() {
            return Err(JetError::NonPositiveSqrt);
        }
        let root = f0.nth_root(den).ok_or(JetError::InexactRoot)?;
        let mut h0 = root.powi(num.unsigned_abs() as u32);
        if num < 0 {
            h0 = T::one() / h0;
        }
        let alpha = T::from_ratio(num, den as i64);
        let n = self.order();
        let mut h = vec![T::zero(); n + 1];
        h[0] = h0;
        for m in 1..=n {
            let mut acc = T::zero();
            for k in 1..=m {
                let w = alpha.clone() * T::from_i64(k as i64) - T::from_i64((m - k) as i64);
                acc = acc + w * self.c[k].clone() * h[m - k].clone();
            }
            h[m] = acc / (T::from_i64(m as i64) * f0.clone());
        }
        Ok(Jet { c: h })
    }

    pub fn sqrt(&self) -> Result<Self, JetError> {
        self.pow_ratio(1, 2)
    }

    /// Derivative; the result has order one less (order 0 stays order 0).
    pub fn derive(&self) -> Self {
        let n = self.order();
        if n == 0 {
            return Jet::zero(0);
        }
        Jet { c: (1..=n).map(|k| self.c[k].clone() * T::from_i64(k as i64)).collect() }
    }

    /// Antiderivative with constant term `c0`; the result has order one more.
    pub fn integrate(&self, c0: T) -> Self {
        let mut c = Vec::with_capacity(self.c.len() + 1);
        c.push(c0);
        for (k, a) in self.c.iter().enumerate() {
            c.push(a.clone() / T::from_i64(k as i64 + 1));
        }
        Jet { c }
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for a in self.c.iter().rev() {
            acc = acc * x.clone() + a.clone();
        }
        acc
    }

    /// Divide by `s^k`; the result has order `N - k`.
    pub fn shift_down(&self, k: usize) -> Result<Self, JetError> {
        if k > self.order() || self.c[..k].iter().any(|x| !x.is_zero()) {
            return Err(JetError::NotDivisible(k));
        }
        Ok(Jet { c: self.c[k..].to_vec() })
    }

    /// Multiply by `s^k`; the result has order `N + k`.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut c = vec![T::zero(); k];
        c.extend(self.c.iter().cloned());
        Jet { c }
    }

    /// `f(-s)`.
    pub fn reflect(&self) -> Self {
        Jet {
            c: self
                .c
                .iter()
                .enumerate()
                .map(|(k, a)| if k % 2 == 1 { -a.clone() } else { a.clone() })
                .collect(),
        }
    }

    /// `f(s^k)`, as a jet of order `k N`.
    pub fn substitute_power(&self, k: usize) -> Self {
        let n = self.order();
        let mut c = vec![T::zero(); k * n + 1];
        for (i, a) in self.c.iter().enumerate() {
            c[k * i] = a.clone();
        }
        Jet { c }
    }

    /// `(cos f, sin f)` for a series with `f(0) = 0`.
    pub fn cos_sin(&self) -> Result<(Self, Self), JetError> {
        if !self.c[0].is_zero() {
            return Err(JetError::ComposeNonzeroConstant);
        }
        let n = self.order();
        let mut cos = Jet::constant(T::one(), n);
        let mut sin = Jet::zero(n);
        let mut term = Jet::constant(T::one(), n);
        for k in 1..=n {
            term = (&term * self).scale(&(T::one() / T::from_i64(k as i64)));
            match k % 4 {
                0 => cos = &cos + &term,
                1 => sin = &sin + &term,
                2 => cos = &cos - &term,
                _ => sin = &sin - &term,
            }
        }
        Ok((cos, sin))
    }

    /// Compositional inverse: `g` with `f(g(r)) = r` to the truncation order.
    /// Uses the Lagrange form `g_n = [s^{n-1}] (s/f)^n / n`.
    pub fn reversion(&self) -> Result<Self, JetError> {
        let n = self.order();
        if n == 0 || !self.c[0].is_zero() || self.c[1].is_zero() {
            return Err(JetError::ReversionDegenerate);
        }
        let q = self.shift_down(1)?.recip()?;
        let mut g = vec![T::zero(); n + 1];
        let mut p = Jet::constant(T::one(), n - 1);
        for k in 1..=n {
            p = &p * &q;
            g[k] = p.c[k - 1].clone() / T::from_i64(k as i64);
        }
        Ok(Jet { c: g })
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl<T: Scalar> $tr<&Jet<T>> for &Jet<T> {
            type Output = Jet<T>;
            fn $m(self, rhs: &Jet<T>) -> Jet<T> {
                self.$f(rhs).expect("jet orders must agree")
            }
        }
        impl<T: Scalar> $tr<Jet<T>> for Jet<T> {
            type Output = Jet<T>;
            fn $m(self, rhs: Jet<T>) -> Jet<T> {
                (&self).$f(&rhs).expect("jet orders must agree")
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl<T: Scalar> Neg for &Jet<T> {
    type Output = Jet<T>;
    fn neg(self) -> Jet<T> {
        self.map(|x| -x.clone())
    }
}

impl<T: Scalar> Neg for Jet<T> {
    type Output = Jet<T>;
    fn neg(self) -> Jet<T> {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, Rational};

    fn q(v: &[(i64, i64)], order: usize) -> Jet<Rational> {
        Jet::new(v.iter().map(|&(n, d)| rat(n, d)).collect(), order)
    }

    #[test]
    fn product_of_conjugates() {
        let a = q(&[(1, 1), (1, 1)], 4);
        let b = q(&[(1, 1), (-1, 1)], 4);
        assert_eq!(&a * &b, q(&[(1, 1), (0, 1), (-1, 1)], 4));
    }

    #[test]
    fn binomial_sqrt() {
        let f = q(&[(1, 1), (1, 1)], 4);
        assert_eq!(
            f.sqrt().unwrap(),
            q(&[(1, 1), (1, 2), (-1, 8), (1, 16), (-5, 128)], 4)
        );
    }

    #[test]
    fn compose_square() {
        let f = q(&[(0, 1), (0, 1), (1, 1)], 6);
        let g = q(&[(0, 1), (1, 1), (0, 1), (1, 1)], 6);
        assert_eq!(f.compose(&g).unwrap(), q(&[(0, 1), (0, 1), (1, 1), (0, 1), (2, 1), (0, 1), (1, 1)], 6));
    }

    #[test]
    fn reversion_catalan() {
        let f = q(&[(0, 1), (1, 1), (1, 1)], 5);
        let g = f.reversion().unwrap();
        assert_eq!(g, q(&[(0, 1), (1, 1), (-1, 1), (2, 1), (-5, 1), (14, 1)], 5));
        assert_eq!(f.compose(&g).unwrap(), Jet::variable(5));
    }

    #[test]
    fn errors() {
        let a = q(&[(1, 1)], 3);
        let b = q(&[(1, 1)], 4);
        assert_eq!(a.try_add(&b), Err(JetError::OrderMismatch(3, 4)));
        assert_eq!(q(&[(0, 1), (1, 1)], 3).sqrt(), Err(JetError::NonPositiveSqrt));
        assert_eq!(q(&[(-1, 1)], 3).sqrt(), Err(JetError::NonPositiveSqrt));
        assert_eq!(a.compose(&q(&[(1, 1), (1, 1)], 3)), Err(JetError::ComposeNonzeroConstant));
        assert_eq!(q(&[(0, 1), (0, 1), (1, 1)], 3).reversion(), Err(JetError::ReversionDegenerate));
        assert_eq!(q(&[(2, 1), (1, 1)], 3).sqrt(), Err(JetError::InexactRoot));
    }

    #[test]
    fn derive_integrate_eval() {
        let f = q(&[(1, 1), (2, 1), (3, 1)], 2);
        assert_eq!(f.derive(), q(&[(2, 1), (6, 1)], 1));
        assert_eq!(f.derive().integrate(rat(1, 1)), f);
        assert_eq!(f.eval(&rat(1, 2)), rat(11, 4));
        assert_eq!(f.derivative_at_zero(2).unwrap(), rat(6, 1));
    }

    #[test]
    fn trig_of_identity() {
        let (c, s) = Jet::<Rational>::variable(6).cos_sin().unwrap();
        assert_eq!(c, q(&[(1, 1), (0, 1), (-1, 2), (0, 1), (1, 24), (0, 1), (-1, 720)], 6));
        assert_eq!(s, q(&[(0, 1), (1, 1), (0, 1), (-1, 6), (0, 1), (1, 120)], 6));
        assert_eq!(&(&c * &c) + &(&s * &s), Jet::constant(rat(1, 1), 6));
    }
}
