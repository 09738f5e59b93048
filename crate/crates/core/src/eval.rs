use crate::error::{Error, Result};
use crate::scalar::Real;

/// A computed value with an absolute-error estimate and the tag of the
/// closed form (or representation) it came from.
#[derive(Debug, Clone, PartialEq)]
pub struct EvalResult<F> {
    pub value: F,
    pub abs_err: F,
    pub formula_tag: &'static str,
}

impl<F: Real> EvalResult<F> {
    pub(crate) fn new(value: F, abs_err: F, formula_tag: &'static str) -> Result<Self> {
        debug_assert!(!formula_tag.is_empty());
        if !value.is_finite() {
            return Err(Error::NonFinite {
                quantity: formula_tag,
            });
        }
        Ok(EvalResult {
            value,
            abs_err: abs_err.abs(),
            formula_tag,
        })
    }

    /// Rounding-level error estimate for a sum of the given terms.
    pub(crate) fn rounding_err(terms: &[F]) -> F {
        let scale = terms.iter().fold(F::zero(), |acc, t| acc + t.abs());
        scale * F::epsilon() * F::lit(16.0)
    }
}
