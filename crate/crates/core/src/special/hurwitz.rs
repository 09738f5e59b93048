//! Hurwitz zeta ζ_H(s, x) = Σ_{m>=0} (m + x)^{-s} and its s-derivative via
//! Euler–Maclaurin summation.
//!
//! The derivative differentiates every Euler–Maclaurin term analytically in
//! `s`, so both values come out of the same pass at full precision.

use crate::constants::{BERNOULLI_OVER_FACTORIAL, ZETA_PRIME_MINUS_ONE};
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Terms are summed explicitly until `N + x` reaches this edge. The tail
/// terms grow like edge^{1-s}, so the edge shrinks as s becomes negative to
/// keep cancellation below ~1e-13; the Bernoulli corrections still converge
/// because |s + 2j| stays well below 2π·edge for the terms that matter.
fn direct_sum_edge<F: Real>(s: F) -> F {
    if s > F::lit(-1.5) {
        F::lit(12.0)
    } else if s > F::lit(-3.0) {
        F::lit(8.0)
    } else {
        F::lit(5.0)
    }
}

fn check_args<F: Real>(s: F, x: F) -> Result<()> {
    if !(x > F::zero() && x.is_finite()) {
        return Err(Error::domain("x", x.as_f64(), "0 < x < inf"));
    }
    if !s.is_finite() {
        return Err(Error::domain("s", s.as_f64(), "finite"));
    }
    if s == F::one() {
        return Err(Error::Pole {
            function: "hurwitz_zeta",
            s: 1.0,
        });
    }
    Ok(())
}

/// Returns `(ζ_H(s, x), ∂_s ζ_H(s, x))`.
fn euler_maclaurin<F: Real>(s: F, x: F) -> (F, F) {
    let one = F::one();
    let half = F::lit(0.5);
    let edge = direct_sum_edge(s);

    let mut value = F::zero();
    let mut deriv = F::zero();
    let mut base = x;
    while base < edge {
        let ln = base.ln();
        let t = (-s * ln).exp();
        value = value + t;
        deriv = deriv - ln * t;
        base = base + one;
    }

    // tail: integral + half endpoint + Bernoulli corrections at `base`
    let ln = base.ln();
    let pow_s = (-s * ln).exp(); // base^{-s}
    let sm1 = s - one;
    let integral = base * pow_s / sm1;
    value = value + integral + half * pow_s;
    deriv = deriv - ln * integral - integral / sm1 - half * ln * pow_s;

    // (s)_{2j-1} and its s-derivative, built factor by factor
    let mut rising = s;
    let mut d_rising = one;
    let mut pow = pow_s / base; // base^{-s-2j+1} at j = 1
    let inv_base2 = (base * base).recip();
    let tiny = F::epsilon() * F::lit(1e-2);
    for (j, &c) in BERNOULLI_OVER_FACTORIAL.iter().enumerate() {
        if j > 0 {
            for k in [2 * j - 1, 2 * j] {
                let factor = s + F::from_count(k);
                d_rising = d_rising * factor + rising;
                rising = rising * factor;
            }
            pow = pow * inv_base2;
        }
        let c = F::lit(c);
        let term = c * rising * pow;
        let d_term = c * (d_rising - rising * ln) * pow;
        value = value + term;
        deriv = deriv + d_term;
        if term.abs() <= tiny * value.abs().max(one) && d_term.abs() <= tiny * deriv.abs().max(one)
        {
            break;
        }
    }
    (value, deriv)
}

/// Analytic continuation of ζ_H(s, x) for x > 0, s ≠ 1.
pub fn hurwitz_zeta<F: Real>(s: F, x: F) -> Result<F> {
    check_args(s, x)?;
    Ok(euler_maclaurin(s, x).0)
}

/// ∂ζ_H(s, x)/∂s for x > 0, s ≠ 1.
pub fn hurwitz_zeta_sderiv<F: Real>(s: F, x: F) -> Result<F> {
    check_args(s, x)?;
    Ok(euler_maclaurin(s, x).1)
}

/// ζ'_R(-1) = 1/12 - log A.
pub fn riemann_zeta_prime_minus1<F: Real>() -> F {
    F::lit(ZETA_PRIME_MINUS_ONE)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::LN_2PI;
    use crate::special::gamma::log_gamma;
    use proptest::prelude::*;

    /// Direct sum with an integral tail, valid for s > 1.
    fn brute_force(s: f64, x: f64) -> f64 {
        let n = 200_000;
        let direct: f64 = (0..n).rev().map(|m| (m as f64 + x).powf(-s)).sum();
        let b = n as f64 + x;
        direct + b.powf(1.0 - s) / (s - 1.0) + 0.5 * b.powf(-s) + s / 12.0 * b.powf(-s - 1.0)
    }

    #[test]
    fn special_value_at_zero() {
        for x in [0.01f64, 0.5, 1.0, 2.75, 40.0, 100.0] {
            assert!(
                (hurwitz_zeta(0.0, x).unwrap() - (0.5 - x)).abs() < 1e-12,
                "x={x}"
            );
        }
    }

    #[test]
    fn bernoulli_polynomial_values() {
        for x in [0.1f64, 0.5, 1.0, 3.3, 9.0] {
            // ζ(-1, x) = -B_2(x)/2, ζ(-2, x) = -B_3(x)/3
            let b2 = x * x - x + 1.0 / 6.0;
            let b3 = x * x * x - 1.5 * x * x + 0.5 * x;
            assert!((hurwitz_zeta(-1.0, x).unwrap() + b2 / 2.0).abs() < 1e-12);
            assert!((hurwitz_zeta(-2.0, x).unwrap() + b3 / 3.0).abs() < 1e-12);
        }
    }

    #[test]
    fn riemann_reduction() {
        assert!((hurwitz_zeta(-1.0f64, 1.0).unwrap() + 1.0 / 12.0).abs() < 1e-14);
        let z2 = std::f64::consts::PI.powi(2) / 6.0;
        assert!((hurwitz_zeta(2.0, 1.0).unwrap() - z2).abs() < 1e-14);
        assert!((hurwitz_zeta(0.0f64, 1.0).unwrap() + 0.5).abs() < 1e-14);
    }

    #[test]
    fn agrees_with_direct_summation() {
        for (s, x) in [(1.5f64, 0.4), (2.0, 1.0), (3.25, 7.0), (5.0, 0.2)] {
            let got = hurwitz_zeta(s, x).unwrap();
            let want = brute_force(s, x);
            assert!(
                (got - want).abs() < 1e-11 * want.abs().max(1.0),
                "({s},{x})"
            );
        }
    }

    #[test]
    fn reference_values() {
        // (s, x, ζ_H, ∂_s ζ_H), mpmath
        let cases: &[(f64, f64, f64, f64)] = &[
            (
                2.5,
                0.3,
                21.069_239_202_247_723_026_955_358,
                23.944_238_179_029_409_627_396_556,
            ),
            (
                -3.5,
                1.7,
                -0.292_286_174_428_995_076_228_479,
                -0.100_873_664_253_768_592_255_286,
            ),
            (
                0.5,
                4.0,
                -3.744_811_559_185_760_101_799_492,
                -2.798_232_966_877_314_154_428_193,
            ),
            (
                -0.5,
                0.25,
                0.090_322_258_761_246_243_874_196,
                0.238_130_655_740_065_990_351_694,
            ),
            (
                4.5,
                90.0,
                4.212_265_674_918_557_785_731_33e-8,
                -2.013_460_683_766_679_804_071_54e-7,
            ),
        ];
        for &(s, x, z, dz) in cases {
            assert!(
                (hurwitz_zeta(s, x).unwrap() - z).abs() < 1e-12,
                "zeta({s},{x})"
            );
            assert!(
                (hurwitz_zeta_sderiv(s, x).unwrap() - dz).abs() < 1e-12,
                "zeta'({s},{x})"
            );
        }
    }

    #[test]
    fn derivative_at_minus_one() {
        let cases: &[(f64, f64)] = &[
            (0.1, 0.025_322_081_343_384_627_460_476_596_131_95),
            (0.5, 0.053_829_439_326_894_410_047_908_491_727_30),
            (1.0, -0.165_421_143_700_450_929_213_919_660_242_78),
            (2.3, 0.075_697_592_760_063_618_255_037_087_557_91),
            (7.5, 35.302_027_673_293_260_370_034_787_487_787_87),
        ];
        for &(x, want) in cases {
            let got = hurwitz_zeta_sderiv(-1.0, x).unwrap();
            assert!((got - want).abs() < 1e-11, "x={x}: {got} vs {want}");
        }
        let zp: f64 = riemann_zeta_prime_minus1();
        assert!((hurwitz_zeta_sderiv(-1.0, 1.0).unwrap() - zp).abs() < 1e-11);
    }

    #[test]
    fn derivative_at_zero_is_log_gamma() {
        assert!((hurwitz_zeta_sderiv(0.0, 1.0).unwrap() + 0.5 * LN_2PI).abs() < 1e-13);
        for x in [0.1f64, 0.3, 0.5, 1.0, 1.5, 2.0, 3.0, 17.5] {
            let want = log_gamma(x).unwrap() - 0.5 * LN_2PI;
            assert!(
                (hurwitz_zeta_sderiv(0.0, x).unwrap() - want).abs() < 1e-11,
                "x={x}"
            );
        }
    }

    #[test]
    fn derivative_matches_finite_difference() {
        let h = 1e-5;
        for (s, x) in [(2.2f64, 0.7), (-1.3, 2.0), (0.4, 0.05)] {
            let fd =
                (hurwitz_zeta(s + h, x).unwrap() - hurwitz_zeta(s - h, x).unwrap()) / (2.0 * h);
            assert!((hurwitz_zeta_sderiv(s, x).unwrap() - fd).abs() < 1e-7 * fd.abs().max(1.0));
        }
    }

    #[test]
    fn pole_and_domain() {
        assert!(matches!(hurwitz_zeta(1.0, 2.0), Err(Error::Pole { .. })));
        assert!(matches!(
            hurwitz_zeta_sderiv(1.0, 2.0),
            Err(Error::Pole { .. })
        ));
        assert!(matches!(
            hurwitz_zeta(0.5, 0.0),
            Err(Error::Domain { name: "x", .. })
        ));
        assert!(hurwitz_zeta(0.5, -1.0).is_err());
        assert!(hurwitz_zeta(f64::NAN, 1.0).is_err());
    }

    proptest! {
        #[test]
        fn shift_recurrence(s in -5.0f64..5.0, x in 0.05f64..20.0) {
            prop_assume!((s - 1.0).abs() > 1e-3);
            let lhs = hurwitz_zeta(s, x).unwrap();
            let rhs = x.powf(-s) + hurwitz_zeta(s, x + 1.0).unwrap();
            prop_assert!((lhs - rhs).abs() < 1e-11 * lhs.abs().max(1.0));
        }

        #[test]
        fn zero_consistency(x in 0.01f64..100.0) {
            prop_assert!((hurwitz_zeta(0.0, x).unwrap() - (0.5 - x)).abs() < 1e-11);
            let lg = log_gamma(x).unwrap() - 0.5 * LN_2PI;
            prop_assert!((hurwitz_zeta_sderiv(0.0, x).unwrap() - lg).abs() < 1e-10);
        }
    }
}
