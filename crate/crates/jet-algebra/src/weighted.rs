//! Formal polynomials in the symbols `g_ij`, `omega_ij`, graded by weight:
//! index `i` contributes `2i - 1`.

use std::fmt;

use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    G(u8, u8),
    Omega(u8, u8),
}

impl Symbol {
    pub fn indices(&self) -> (u8, u8) {
        match *self {
            Symbol::G(i, j) | Symbol::Omega(i, j) => (i, j),
        }
    }

    pub fn weight(&self) -> u32 {
        let (i, j) = self.indices();
        (2 * i as u32 - 1) + (2 * j as u32 - 1)
    }

    /// Highest derivative order the symbol refers to.
    pub fn max_index(&self) -> usize {
        let (i, j) = self.indices();
        i.max(j) as usize
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::G(i, j) => write!(f, "g{i}{j}"),
            Symbol::Omega(i, j) => write!(f, "w{i}{j}"),
        }
    }
}

/// A symbol raised to a power.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WeightedTerm {
    pub symbol: Symbol,
    pub power: u32,
}

impl WeightedTerm {
    pub fn weight(&self) -> u32 {
        self.symbol.weight() * self.power
    }
}

/// Weighted degree of a product of terms.
pub fn weighted_degree(product: &[WeightedTerm]) -> u32 {
    product.iter().map(WeightedTerm::weight).sum()
}

/// `num/den` times a product of weighted terms.
#[derive(Debug, Clone, PartialEq)]
pub struct Monomial {
    pub num: i64,
    pub den: i64,
    pub factors: Vec<WeightedTerm>,
}

impl Monomial {
    pub fn new(num: i64, den: i64, factors: &[(Symbol, u32)]) -> Self {
        Monomial {
            num,
            den,
            factors: factors.iter().map(|&(symbol, power)| WeightedTerm { symbol, power }).collect(),
        }
    }

    pub fn degree(&self) -> u32 {
        weighted_degree(&self.factors)
    }
}

/// A sum of monomials.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct WPoly {
    pub terms: Vec<Monomial>,
}

impl WPoly {
    pub fn new(terms: Vec<Monomial>) -> Self {
        WPoly { terms }
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.terms.iter().map(Monomial::degree).collect()
    }

    pub fn is_homogeneous(&self, degree: u32) -> bool {
        self.terms.iter().all(|m| m.degree() == degree)
    }

    pub fn max_index(&self) -> usize {
        self.terms
            .iter()
            .flat_map(|m| m.factors.iter().map(|t| t.symbol.max_index()))
            .max()
            .unwrap_or(0)
    }

    /// Evaluate with `value(symbol)` supplying each symbol.
    pub fn eval<T: Scalar>(&self, mut value: impl FnMut(Symbol) -> T) -> T {
        let mut acc = T::zero();
        for m in &self.terms {
            let mut t = T::from_ratio(m.num, m.den);
            for f in &m.factors {
                t = t * value(f.symbol).powi(f.power);
            }
            acc = acc + t;
        }
        acc
    }
}
