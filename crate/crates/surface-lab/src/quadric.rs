use crate::error::SurfaceError;
use crate::poly::Poly3;

/// A symmetric matrix `S`, defining `u = <z, S z> - x3`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadricSpec {
    pub s: [[f64; 2]; 2],
}

impl QuadricSpec {
    pub fn new(s: [[f64; 2]; 2]) -> Result<Self, SurfaceError> {
        if s[0][1] != s[1][0] {
            return Err(SurfaceError::Spec("quadric matrix must be symmetric".into()));
        }
        Ok(QuadricSpec { s })
    }

    pub fn diagonal(l1: f64, l2: f64) -> Self {
        QuadricSpec { s: [[l1, 0.0], [0.0, l2]] }
    }

    /// `S = tan(alpha) I`.
    pub fn paraboloid(alpha: f64) -> Self {
        let t = alpha.tan();
        QuadricSpec::diagonal(t, t)
    }

    /// `Q^T diag(l1, l2) Q` with `Q` the rotation by `phi`.
    pub fn rotated_diagonal(l1: f64, l2: f64, phi: f64) -> Self {
        let (s, c) = phi.sin_cos();
        let a = c * c * l1 + s * s * l2;
        let b = c * s * (l2 - l1);
        let d = s * s * l1 + c * c * l2;
        QuadricSpec { s: [[a, b], [b, d]] }
    }

    pub fn eigenvalues(&self) -> (f64, f64) {
        let [[a, b], [_, d]] = self.s;
        let m = 0.5 * (a + d);
        let r = (0.25 * (a - d) * (a - d) + b * b).sqrt();
        (m - r, m + r)
    }

    pub fn defining_function(&self) -> Poly3 {
        let [[a, b], [_, d]] = self.s;
        Poly3::new(&[([2, 0, 0], a), ([1, 1, 0], 2.0 * b), ([0, 2, 0], d), ([0, 0, 1], -1.0)])
    }

    /// Height of the surface over `z`.
    pub fn height(&self, z: [f64; 2]) -> f64 {
        let [[a, b], [_, d]] = self.s;
        a * z[0] * z[0] + 2.0 * b * z[0] * z[1] + d * z[1] * z[1]
    }
}

fn apply(m: [[f64; 2]; 2], v: [f64; 2]) -> [f64; 2] {
    [m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]]
}

/// `J = [[0, 1], [-1, 0]]`, so that `(S - J) z = grad0 u / 2`.
fn j(v: [f64; 2]) -> [f64; 2] {
    [v[1], -v[0]]
}

fn dot(a: [f64; 2], b: [f64; 2]) -> f64 {
    a[0] * b[0] + a[1] * b[1]
}

/// `(<S J n, J n>^2 - 2 - 8 <S n, J n>) / |(S - J) z|^2` with
/// `n = (S - J) z / |(S - J) z|`.
pub fn quadric_m(q: &QuadricSpec, z: [f64; 2]) -> Result<f64, SurfaceError> {
    let sz = apply(q.s, z);
    let jz = j(z);
    let w = [sz[0] - jz[0], sz[1] - jz[1]];
    let len = w[0].hypot(w[1]);
    if len <= 1e-14 * (1.0 + z[0].hypot(z[1])) {
        return Err(SurfaceError::QuadricCharacteristic);
    }
    let n = [w[0] / len, w[1] / len];
    let jn = j(n);
    let a = dot(apply(q.s, jn), jn);
    let b = dot(apply(q.s, n), jn);
    Ok((a * a - 2.0 - 8.0 * b) / (len * len))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FlatTest {
    /// Coefficients of `A^4, B^4, A^2 B^2, A B (A^2 + B^2)` with
    /// `A = l2 x2 + x1`, `B = l1 x1 - x2`.
    pub coefficients: [f64; 4],
    /// Coefficient of `A^4` after `B = l1 A`, present when `l1 l2 = -1`.
    pub collapsed: Option<f64>,
    pub vanishes_identically: bool,
}

/// Tolerance for the degenerate case `l1 l2 = -1` and for zero coefficients.
pub const FLAT_TOL: f64 = 1e-12;

pub fn quadric_flat_test(l1: f64, l2: f64) -> FlatTest {
    let coefficients = [l1 * l1 - 2.0, l2 * l2 - 2.0, 2.0 * l1 * l2 - 4.0, 8.0 * (l2 - l1)];
    let scale = 1.0 + l1.abs().max(l2.abs()).powi(2);
    if (l1 * l2 + 1.0).abs() <= FLAT_TOL * scale {
        let c = -10.0 * (1.0 + l1 * l1).powi(2);
        return FlatTest { coefficients, collapsed: Some(c), vanishes_identically: c.abs() <= FLAT_TOL * scale * scale };
    }
    let vanishes_identically = coefficients.iter().all(|c| c.abs() <= FLAT_TOL * scale);
    FlatTest { coefficients, collapsed: None, vanishes_identically }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flat_cases() {
        let r2 = 2f64.sqrt();
        let t = quadric_flat_test(r2, r2);
        assert!(t.vanishes_identically);
        assert!(!quadric_flat_test(1.0, 2.0).vanishes_identically);
        assert!(!quadric_flat_test(1.0, 1.0).vanishes_identically);
        let t = quadric_flat_test(2.0, -0.5);
        assert_eq!(t.collapsed, Some(-250.0));
        assert!(!t.vanishes_identically);
    }

    #[test]
    fn m_vanishes_on_flat_paraboloid() {
        let q = QuadricSpec::diagonal(2f64.sqrt(), 2f64.sqrt());
        for z in [[1.0, 0.0], [0.3, -2.0], [-5.0, 0.01]] {
            assert!(quadric_m(&q, z).unwrap().abs() < 1e-14);
        }
        assert_eq!(quadric_m(&q, [0.0, 0.0]), Err(SurfaceError::QuadricCharacteristic));
    }

    #[test]
    fn symmetric_only() {
        assert!(QuadricSpec::new([[1.0, 2.0], [2.5, 0.0]]).is_err());
        let q = QuadricSpec::rotated_diagonal(1.0, 3.0, 0.4);
        let (a, b) = q.eigenvalues();
        assert!((a - 1.0).abs() < 1e-14 && (b - 3.0).abs() < 1e-14);
    }
}
