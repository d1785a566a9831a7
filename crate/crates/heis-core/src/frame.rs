use crate::group::HPoint;

/// Coefficients of a tangent vector in the frame `X1, X2, X3` at a base point.
/// `c3` is the value of the contact form on the vector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrameCoords {
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
}

impl FrameCoords {
    pub fn horizontal_length(&self) -> f64 {
        self.c1.hypot(self.c2)
    }

    pub fn is_horizontal(&self, tol: f64) -> bool {
        self.c3.abs() <= tol
    }
}

/// Express the ambient vector `v` (in the coordinate basis) at `base` in the
/// left-invariant frame.
pub fn frame_decompose(base: HPoint, v: [f64; 3]) -> FrameCoords {
    FrameCoords {
        c1: v[0],
        c2: v[1],
        c3: v[2] + 2.0 * base.x1 * v[1] - 2.0 * base.x2 * v[0],
    }
}

/// Differential of left translation by `a`, applied to the coordinate vector `v`.
pub fn left_translate_vector(a: HPoint, v: [f64; 3]) -> [f64; 3] {
    [v[0], v[1], v[2] - 2.0 * a.x1 * v[1] + 2.0 * a.x2 * v[0]]
}

/// The complex structure on the horizontal plane: `J X1 = X2`, `J X2 = -X1`.
pub fn j_apply(c1: f64, c2: f64) -> (f64, f64) {
    (-c2, c1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decompositions() {
        let f = frame_decompose(HPoint::ORIGIN, [0.0, 0.0, 1.0]);
        assert_eq!((f.c1, f.c2, f.c3), (0.0, 0.0, 1.0));
        let f = frame_decompose(HPoint::new(1.0, 0.0, 0.0), [0.0, 1.0, 0.0]);
        assert_eq!((f.c1, f.c2, f.c3), (0.0, 1.0, 2.0));
        let x2 = 0.75;
        let f = frame_decompose(HPoint::new(0.0, x2, 0.0), [1.0, 0.0, 0.0]);
        assert_eq!((f.c1, f.c2, f.c3), (1.0, 0.0, -2.0 * x2));
    }

    #[test]
    fn complex_structure() {
        assert_eq!(j_apply(1.0, 0.0), (-0.0, 1.0));
        assert_eq!(j_apply(0.0, 1.0), (-1.0, 0.0));
        let (a, b) = j_apply(0.3, -0.7);
        assert_eq!(j_apply(a, b), (-0.3, 0.7));
    }

    #[test]
    fn horizontal_length() {
        let f = frame_decompose(HPoint::new(2.0, 1.0, 0.0), [3.0, 4.0, -2.0 * 2.0 * 4.0 + 2.0 * 3.0]);
        assert!(f.is_horizontal(1e-14));
        assert_eq!(f.horizontal_length(), 5.0);
    }
}
