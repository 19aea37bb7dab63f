use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("division by zero: negative power of y evaluated at y = 0")]
    DivisionByZero,
    #[error("index error: {0}")]
    Index(String),
    #[error("representation error: {0}")]
    Representation(String),
    #[error("divergent integral: {0}")]
    Divergence(String),
    #[error("floating-point overflow: {0}")]
    Overflow(String),
    #[error("quadrature did not converge after {subdivisions} subdivisions (estimate {value:e}, error {abs_error:e})")]
    Quadrature {
        value: f64,
        abs_error: f64,
        subdivisions: usize,
    },
    #[error("stability violation: {0}")]
    Stability(String),
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("invalid override: {0}")]
    Override(String),
    #[error("registry has no checks")]
    EmptyRegistry,
}
