use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// Argument outside the function's domain.
    #[error("domain error: {0}")]
    Domain(String),
    #[error("pole of the Gamma function at {0}")]
    Pole(f64),
    /// The requested evaluation is numerically meaningless at double precision,
    /// e.g. a Kummer parameter sitting next to a non-positive integer.
    #[error("ill-conditioned evaluation: {0}")]
    IllConditioned(String),
    /// Physically valid input that this library deliberately does not handle.
    #[error("unsupported regime: {0}")]
    Unsupported(String),
    #[error("turning point inside the integration box near x = {0}")]
    TurningPoint(f64),
    #[error("asymptotic matching failed: {0}")]
    Matching(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
