//! Log-gamma on the positive axis and the right half-plane, and digamma.
//!
//! Everything is Stirling's series evaluated at `|z| >= STIRLING_MIN`, reached
//! from smaller arguments with the recurrence `Γ(z+1) = z Γ(z)`.

use num_complex::Complex;

use crate::constants::{BERNOULLI_EVEN, LN_2PI};
use crate::error::{Error, Result};
use crate::scalar::Real;

const STIRLING_MIN: f64 = 15.0;

fn check_positive<F: Real>(name: &'static str, x: F) -> Result<()> {
    if x > F::zero() && x.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(name, x.as_f64(), "0 < x < inf"))
    }
}

/// Stirling series for log Γ(x), x >= STIRLING_MIN.
fn stirling_real<F: Real>(x: F) -> F {
    let half = F::lit(0.5);
    let inv = x.recip();
    let inv2 = inv * inv;
    let mut series = F::zero();
    let mut pow = inv;
    for (k, &b) in BERNOULLI_EVEN.iter().enumerate() {
        let n = 2 * (k + 1);
        let term = F::lit(b / (n * (n - 1)) as f64) * pow;
        series = series + term;
        if term.abs() <= F::epsilon() * series.abs() * F::lit(1e-2) {
            break;
        }
        pow = pow * inv2;
    }
    (x - half) * x.ln() - x + half * F::lit(LN_2PI) + series
}

/// log Γ(x) for x > 0.
pub fn log_gamma<F: Real>(x: F) -> Result<F> {
    check_positive("x", x)?;
    let min = F::lit(STIRLING_MIN);
    if x >= min {
        return Ok(stirling_real(x));
    }
    // log Γ(x) = log Γ(x + n) - log(x (x+1) ... (x+n-1))
    let mut shifted = x;
    let mut product = F::one();
    while shifted < min {
        product = product * shifted;
        shifted = shifted + F::one();
    }
    Ok(stirling_real(shifted) - product.ln())
}

/// Principal branch of log Γ(z) for Re z > 0, continuous from the real axis.
pub fn log_gamma_complex<F: Real>(z: Complex<F>) -> Result<Complex<F>> {
    check_positive("Re z", z.re)?;
    if !z.im.is_finite() {
        return Err(Error::domain("Im z", z.im.as_f64(), "finite"));
    }
    Ok(ln_gamma_shifted(z))
}

fn ln_gamma_shifted<F: Real>(z: Complex<F>) -> Complex<F> {
    let min = F::lit(STIRLING_MIN);
    let mut shifted = z;
    let mut correction = Complex::new(F::zero(), F::zero());
    // every factor has positive real part, so the principal logs add up to
    // the continuous branch
    while shifted.norm() < min {
        correction = correction + shifted.ln();
        shifted = shifted + F::one();
    }

    let half = F::lit(0.5);
    let inv = shifted.inv();
    let inv2 = inv * inv;
    let mut series = Complex::new(F::zero(), F::zero());
    let mut pow = inv;
    for (k, &b) in BERNOULLI_EVEN.iter().enumerate() {
        let n = 2 * (k + 1);
        let term = pow * F::lit(b / (n * (n - 1)) as f64);
        series = series + term;
        if term.norm() <= F::epsilon() * series.norm() * F::lit(1e-2) {
            break;
        }
        pow = pow * inv2;
    }
    let stirling = (shifted - half) * shifted.ln() - shifted + half * F::lit(LN_2PI) + series;
    stirling - correction
}

/// Im log Γ(p + iq) for p > 0. Exactly odd in `q`.
pub fn im_log_gamma<F: Real>(p: F, q: F) -> Result<F> {
    check_positive("p", p)?;
    if !q.is_finite() {
        return Err(Error::domain("q", q.as_f64(), "finite"));
    }
    Ok(im_log_gamma_unchecked(p, q))
}

/// [`im_log_gamma`] for callers that have already validated `p > 0`.
pub(crate) fn im_log_gamma_unchecked<F: Real>(p: F, q: F) -> F {
    if q == F::zero() {
        return F::zero();
    }
    let value = ln_gamma_shifted(Complex::new(p, q.abs())).im;
    if q < F::zero() {
        -value
    } else {
        value
    }
}

/// ψ(x) = Γ'(x)/Γ(x) for x > 0.
pub fn digamma<F: Real>(x: F) -> Result<F> {
    check_positive("x", x)?;
    let min = F::lit(STIRLING_MIN);
    let mut shifted = x;
    let mut correction = F::zero();
    while shifted < min {
        correction = correction + shifted.recip();
        shifted = shifted + F::one();
    }
    // ψ(y) ~ log y - 1/(2y) - Σ B_{2k} / (2k y^{2k})
    let inv2 = (shifted * shifted).recip();
    let mut pow = inv2;
    let mut series = F::zero();
    for (k, &b) in BERNOULLI_EVEN.iter().enumerate() {
        let term = F::lit(b / (2 * (k + 1)) as f64) * pow;
        series = series + term;
        if term.abs() <= F::epsilon() * F::lit(1e-2) {
            break;
        }
        pow = pow * inv2;
    }
    Ok(shifted.ln() - F::lit(0.5) / shifted - series - correction)
}
