//! Sparse real polynomials in three and two variables.

use std::collections::BTreeMap;

/// Polynomial in `(x1, x2, x3)`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Poly3 {
    terms: BTreeMap<[u32; 3], f64>,
}

impl Poly3 {
    pub fn new(terms: &[([u32; 3], f64)]) -> Self {
        let mut p = Poly3::default();
        for &(e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn constant(c: f64) -> Self {
        Poly3::new(&[([0, 0, 0], c)])
    }

    /// `c0 + l . x`
    pub fn linear(c0: f64, l: [f64; 3]) -> Self {
        Poly3::new(&[([0, 0, 0], c0), ([1, 0, 0], l[0]), ([0, 1, 0], l[1]), ([0, 0, 1], l[2])])
    }

    pub fn add_term(&mut self, e: [u32; 3], c: f64) {
        if c == 0.0 {
            return;
        }
        let v = self.terms.entry(e).or_insert(0.0);
        *v += c;
        if *v == 0.0 {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = ([u32; 3], f64)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, *c))
    }

    pub fn coeff(&self, e: [u32; 3]) -> f64 {
        self.terms.get(&e).copied().unwrap_or(0.0)
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e[0] + e[1] + e[2]).max().unwrap_or(0)
    }

    pub fn scale(&self, s: f64) -> Self {
        let mut p = Poly3::default();
        for (e, c) in self.terms() {
            p.add_term(e, s * c);
        }
        p
    }

    pub fn add(&self, other: &Poly3) -> Self {
        let mut p = self.clone();
        for (e, c) in other.terms() {
            p.add_term(e, c);
        }
        p
    }

    pub fn mul(&self, other: &Poly3) -> Self {
        let mut p = Poly3::default();
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                p.add_term([a[0] + b[0], a[1] + b[1], a[2] + b[2]], ca * cb);
            }
        }
        p
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Poly3::constant(1.0);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn value(&self, x: [f64; 3]) -> f64 {
        self.terms().map(|(e, c)| c * mono(x, e)).sum()
    }

    pub fn gradient(&self, x: [f64; 3]) -> [f64; 3] {
        let mut g = [0.0; 3];
        for (e, c) in self.terms() {
            for (i, gi) in g.iter_mut().enumerate() {
                if e[i] > 0 {
                    let mut d = e;
                    d[i] -= 1;
                    *gi += c * e[i] as f64 * mono(x, d);
                }
            }
        }
        g
    }

    pub fn hessian(&self, x: [f64; 3]) -> [[f64; 3]; 3] {
        let mut h = [[0.0; 3]; 3];
        for (e, c) in self.terms() {
            for i in 0..3 {
                for j in i..3 {
                    let mut d = e;
                    let f1 = d[i] as f64;
                    if d[i] == 0 {
                        continue;
                    }
                    d[i] -= 1;
                    let f2 = d[j] as f64;
                    if d[j] == 0 {
                        continue;
                    }
                    d[j] -= 1;
                    h[i][j] += c * f1 * f2 * mono(x, d);
                }
            }
        }
        for i in 0..3 {
            for j in 0..i {
                h[i][j] = h[j][i];
            }
        }
        h
    }

    /// `y -> self(M y + c)`.
    pub fn compose_affine(&self, m: [[f64; 3]; 3], c: [f64; 3]) -> Self {
        let lin: Vec<Poly3> = (0..3).map(|i| Poly3::linear(c[i], m[i])).collect();
        let mut out = Poly3::default();
        for (e, k) in self.terms() {
            let t = lin[0].pow(e[0]).mul(&lin[1].pow(e[1])).mul(&lin[2].pow(e[2]));
            out = out.add(&t.scale(k));
        }
        out
    }
}

fn mono(x: [f64; 3], e: [u32; 3]) -> f64 {
    x[0].powi(e[0] as i32) * x[1].powi(e[1] as i32) * x[2].powi(e[2] as i32)
}

/// Polynomial in `(eta1, eta2)`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Bipoly {
    terms: BTreeMap<[u32; 2], f64>,
}

impl Bipoly {
    pub fn new(terms: &[([u32; 2], f64)]) -> Self {
        let mut p = Bipoly::default();
        for &(e, c) in terms {
            if c != 0.0 {
                *p.terms.entry(e).or_insert(0.0) += c;
            }
        }
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = ([u32; 2], f64)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, *c))
    }

    pub fn coeff(&self, i: u32, j: u32) -> f64 {
        self.terms.get(&[i, j]).copied().unwrap_or(0.0)
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e[0] + e[1]).max().unwrap_or(0)
    }

    /// `(phi, d phi / d eta1, d phi / d eta2)`.
    pub fn eval_with_gradient(&self, eta: [f64; 2]) -> (f64, f64, f64) {
        let (mut v, mut d1, mut d2) = (0.0, 0.0, 0.0);
        for (e, c) in self.terms() {
            let (i, j) = (e[0] as i32, e[1] as i32);
            let a = eta[0].powi(i);
            let b = eta[1].powi(j);
            v += c * a * b;
            if i > 0 {
                d1 += c * i as f64 * eta[0].powi(i - 1) * b;
            }
            if j > 0 {
                d2 += c * j as f64 * a * eta[1].powi(j - 1);
            }
        }
        (v, d1, d2)
    }

    pub fn value(&self, eta: [f64; 2]) -> f64 {
        self.eval_with_gradient(eta).0
    }
}

/// Dense bivariate series truncated at total degree `deg`.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Series2 {
    deg: usize,
    c: Vec<Vec<f64>>,
}

impl Series2 {
    pub fn zero(deg: usize) -> Self {
        Series2 { deg, c: vec![vec![0.0; deg + 1]; deg + 1] }
    }

    pub fn monomial(deg: usize, i: usize, j: usize, v: f64) -> Self {
        let mut s = Series2::zero(deg);
        if i + j <= deg {
            s.c[i][j] = v;
        }
        s
    }

    #[cfg(test)]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        if i + j <= self.deg {
            self.c[i][j]
        } else {
            0.0
        }
    }

    pub fn axpy(&mut self, a: f64, other: &Series2) {
        for i in 0..=self.deg {
            for j in 0..=self.deg - i {
                self.c[i][j] += a * other.c[i][j];
            }
        }
    }

    pub fn mul(&self, other: &Series2) -> Series2 {
        let d = self.deg;
        let mut out = Series2::zero(d);
        for i in 0..=d {
            for j in 0..=d - i {
                let a = self.c[i][j];
                if a == 0.0 {
                    continue;
                }
                for k in 0..=d - i - j {
                    for l in 0..=d - i - j - k {
                        out.c[i + k][j + l] += a * other.c[k][l];
                    }
                }
            }
        }
        out
    }

    pub fn max_abs(&self) -> f64 {
        self.c.iter().flatten().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn to_bipoly(&self) -> Bipoly {
        let mut t = vec![];
        for i in 0..=self.deg {
            for j in 0..=self.deg - i {
                t.push(([i as u32, j as u32], self.c[i][j]));
            }
        }
        Bipoly::new(&t)
    }
}

/// `u(phi(eta), eta1, eta2)` as a truncated series.
pub(crate) fn substitute_graph(u: &Poly3, phi: &Series2) -> Series2 {
    let d = phi.deg;
    let maxe = u.terms().map(|(e, _)| e[0]).max().unwrap_or(0) as usize;
    let mut powers = vec![Series2::monomial(d, 0, 0, 1.0)];
    for k in 1..=maxe {
        powers.push(powers[k - 1].mul(phi));
    }
    let mut out = Series2::zero(d);
    for (e, c) in u.terms() {
        let (j, k) = (e[1] as usize, e[2] as usize);
        if j + k > d {
            continue;
        }
        let p = &powers[e[0] as usize];
        for a in 0..=d - j - k {
            for b in 0..=d - j - k - a {
                out.c[a + j][b + k] += c * p.c[a][b];
            }
        }
    }
    out
}
