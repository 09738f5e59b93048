use thiserror::Error;

/// Errors raised by the special-function, quadrature and determinant routines.
///
/// Values are carried as `f64` regardless of the scalar type used for the
/// computation so that the error type stays non-generic.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter `{name}` = {value}: must satisfy {constraint}")]
    Domain {
        name: &'static str,
        value: f64,
        constraint: &'static str,
    },

    #[error("pole of {function} at s = {s}")]
    Pole { function: &'static str, s: f64 },

    #[error(
        "quadrature did not converge: estimated error {abs_err:e} exceeds tolerance {abs_tol:e} \
         after {subdivisions} subdivisions"
    )]
    QuadratureNonConvergence {
        abs_err: f64,
        abs_tol: f64,
        subdivisions: usize,
    },

    #[error("{quantity} evaluated to a non-finite value")]
    NonFinite { quantity: &'static str },
}

impl Error {
    pub(crate) fn domain(
        name: &'static str,
        value: impl Into<f64>,
        constraint: &'static str,
    ) -> Self {
        Error::Domain {
            name,
            value: value.into(),
            constraint,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
