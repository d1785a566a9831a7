use measure_engine::MeasureError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("measure failed: {0}")]
    Measure(#[from] MeasureError),
    #[error("cannot write output: {0}")]
    Output(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Measure(_) => 3,
            CliError::Output(_) => 1,
        }
    }
}

impl From<curve_lab::CurveError> for CliError {
    fn from(e: curve_lab::CurveError) -> Self {
        CliError::Measure(e.into())
    }
}

impl From<surface_lab::SurfaceError> for CliError {
    fn from(e: surface_lab::SurfaceError) -> Self {
        CliError::Measure(e.into())
    }
}
