//! Surfaces in the Heisenberg group: horizontal normal, horizontal mean
//! curvature `H0`, imaginary curvature `P0`, `e1(P0)`, local graph
//! normalization and quadrics `x3 = <z, S z>`.

mod error;
mod field;
mod graph;
mod level;
mod poly;
mod quadric;
mod spec;

pub use error::SurfaceError;
pub use field::{ClosedField, Isometry, ScalarField};
pub use graph::{graph_coeff_c1, normalize_at_point, normalize_by_stencil, GraphSurface, DEFAULT_STENCIL_STEP, NORMAL_SERIES_DEGREE};
pub use level::{
    curvatures, e1_of_p0, horizontal_data, imaginary_curvature, mean_curvature, pde_residual, Curvatures, HorizontalData, LevelSurface,
    CHARACTERISTIC_TOL,
};
pub use poly::{Bipoly, Poly3};
pub use quadric::{quadric_flat_test, quadric_m, FlatTest, QuadricSpec, FLAT_TOL};
pub use spec::SurfaceSpec;

