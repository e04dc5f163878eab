use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("assertion failed: {0}")]
    Assertion(String),
    #[error("numeric failure: {0}")]
    Numeric(planar_ortho::Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 0 success, 1 configuration or i/o, 2 violated check, 3 numeric failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) | CliError::Io(_) => 1,
            CliError::Assertion(_) => 2,
            CliError::Numeric(_) => 3,
        }
    }
}

impl From<planar_ortho::Error> for CliError {
    fn from(e: planar_ortho::Error) -> Self {
        use planar_ortho::Error as E;
        match e {
            E::GeometryInvalid(_)
            | E::InvalidLake { .. }
            | E::InvalidMeasure(_)
            | E::InvalidPrecision(_)
            | E::CapacityExceeded { .. }
            | E::DegreeOutOfRange { .. } => CliError::Config(e.to_string()),
            E::IdentityViolated { .. } | E::BoundViolated { .. } | E::CrossCheckFailed { .. } => {
                CliError::Assertion(e.to_string())
            }
            other => CliError::Numeric(other),
        }
    }
}
