use crate::group::{group_inv, group_mul, HPoint};

pub fn koranyi_norm(p: HPoint) -> f64 {
    let h = p.x1 * p.x1 + p.x2 * p.x2;
    (h * h + p.x3 * p.x3).sqrt().sqrt()
}

/// `d(p, q) = ||p^{-1} q||`.
pub fn koranyi_dist(p: HPoint, q: HPoint) -> f64 {
    koranyi_norm(group_mul(group_inv(p), q))
}

/// Fourth power of the distance between `(-d1, 0, 0)` and
/// `(d2 cos t, d2 sin t, 0)`, in closed form.
pub fn corner_distance_quartic(d1: f64, d2: f64, theta: f64) -> f64 {
    let c = theta.cos();
    d1.powi(4)
        + 4.0 * d1.powi(3) * d2 * c
        + 6.0 * d1 * d1 * d2 * d2
        + 4.0 * d1 * d2.powi(3) * c
        + d2.powi(4)
}
