#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SurfaceError {
    #[error("characteristic point (|grad0 u| = {0:e})")]
    Characteristic(f64),
    #[error("singular point of the defining function")]
    Singular,
    #[error("Newton solve diverged at eta = ({0}, {1})")]
    NewtonDiverged(f64, f64),
    #[error("graph is not normalized (phi(0) = {0:e}, phi_1(0) = {1:e})")]
    Unnormalized(f64, f64),
    #[error("point lies on the characteristic locus of the quadric")]
    QuadricCharacteristic,
    #[error("point is not on the surface (u = {0:e})")]
    OffSurface(f64),
    #[error("invalid surface spec: {0}")]
    Spec(String),
}
