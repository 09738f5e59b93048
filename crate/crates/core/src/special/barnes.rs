//! ζ'_B(0; a, b, x), the s-derivative at s = 0 of the Barnes double zeta
//! function Σ_{m,n>=0} (am + bn + x)^{-s}.
//!
//! General arguments go through the integral representation
//!
//! ```text
//! ζ'_B(0;a,b,x) = (-½ζ_H(0,x/a) + (a/b)ζ_H(-1,x/a) - b/(12a)) log a + ½ log Γ(x/a)
//!               - ¼ log 2π - (a/b)ζ_H(-1,x/a) - (a/b)ζ'_H(-1,x/a)
//!               + ∫_0^∞ -2 Im log Γ((x + iby)/a) / (e^{2πy} - 1) dy
//! ```
//!
//! and lattices (1/w, 1, 1) additionally have a closed form in log Γ(j/w).

use crate::constants::LN_2PI;
use crate::error::{Error, Result};
use crate::eval::EvalResult;
use crate::quadrature::{integrate, Integral, QuadratureConfig};
use crate::scalar::Real;
use crate::special::gamma::{digamma, im_log_gamma_unchecked, log_gamma};
use crate::special::hurwitz::{hurwitz_zeta, hurwitz_zeta_sderiv, riemann_zeta_prime_minus1};

/// Inputs below this are rejected as degenerate.
const MIN_ARG: f64 = 1e-300;

/// Largest orbifold order accepted by the closed forms.
pub const MAX_ORBIFOLD_ORDER: u32 = 200;

pub const TAG_BARNES_INTEGRAL: &str = "barnes-integral";
pub const TAG_BARNES_ORBIFOLD: &str = "barnes-orbifold";

/// Lattice generators `a`, `b` and shift `x` of ζ_B(s; a, b, x).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BarnesArgs<F> {
    pub a: F,
    pub b: F,
    pub x: F,
}

impl<F: Real> BarnesArgs<F> {
    pub fn new(a: F, b: F, x: F) -> Result<Self> {
        let args = BarnesArgs { a, b, x };
        args.validate()?;
        Ok(args)
    }

    pub fn validate(&self) -> Result<()> {
        let min = F::lit(MIN_ARG);
        for (name, v) in [("a", self.a), ("b", self.b), ("x", self.x)] {
            if !(v > min && v.is_finite()) {
                return Err(Error::domain(name, v.as_f64(), "1e-300 < value < inf"));
            }
        }
        Ok(())
    }
}

/// Integrand of the ζ'_B representation; at y = 0 it takes its limit
/// -(b/(πa)) ψ(x/a).
pub fn barnes_integrand<F: Real>(args: &BarnesArgs<F>, y: F) -> Result<F> {
    args.validate()?;
    let p = args.x / args.a;
    if y == F::zero() {
        return Ok(-(args.b / (F::PI() * args.a)) * digamma(p)?);
    }
    let q = args.b * y / args.a;
    let two = F::lit(2.0);
    Ok(-two * im_log_gamma_unchecked(p, q) / (two * F::PI() * y).exp_m1())
}

/// Truncation point of the y-integral: the smallest Y (on a 1/4 grid, at
/// least 1) where a crude bound of the integrand drops below `abs_tol / 10`,
/// capped at `y_max_cap`.
fn truncation<F: Real>(args: &BarnesArgs<F>, quad: &QuadratureConfig<F>) -> F {
    let p = args.x / args.a;
    let half = F::lit(0.5);
    let two = F::lit(2.0);
    let target = quad.abs_tol / F::lit(10.0);
    // |Im log Γ(p+iq)| <= q (log(1+|z|) + 1) + |p - ½| π/2 + 1 (crude)
    let bound = |y: F| {
        let q = args.b * y / args.a;
        let modulus = p.hypot(q);
        two * (q * ((F::one() + modulus).ln() + F::one())
            + (p - half).abs() * F::FRAC_PI_2()
            + F::one())
            * (-two * F::PI() * y).exp()
            / (F::one() - (-two * F::PI() * y).exp())
    };
    let step = F::lit(0.25);
    let mut y = F::one();
    while y < quad.y_max_cap && bound(y) >= target {
        y = y + step;
    }
    y.min(quad.y_max_cap)
}

fn barnes_integral<F: Real>(
    args: &BarnesArgs<F>,
    quad: &QuadratureConfig<F>,
) -> Result<Integral<F>> {
    let p = args.x / args.a;
    let ratio = args.b / args.a;
    let two = F::lit(2.0);
    let endpoint = -(ratio / F::PI()) * digamma(p)?;
    let f = |y: F| {
        if y == F::zero() {
            endpoint
        } else {
            -two * im_log_gamma_unchecked(p, ratio * y) / (two * F::PI() * y).exp_m1()
        }
    };

    let y_max = truncation(args, quad);
    let mut breakpoints = vec![F::zero()];
    // log Γ((x + iby)/a) is singular at y = ix/b
    for c in [args.x / args.b, F::one()] {
        if c < y_max && c > *breakpoints.last().expect("nonempty") {
            breakpoints.push(c);
        }
    }
    breakpoints.push(y_max);
    integrate(f, &breakpoints, quad.abs_tol, quad.max_subdivisions)
}

/// ζ'_B(0; a, b, x) through the integral representation.
pub fn barnes_zeta_prime0<F: Real>(
    args: BarnesArgs<F>,
    quad: &QuadratureConfig<F>,
) -> Result<EvalResult<F>> {
    args.validate()?;
    quad.validate()?;
    let BarnesArgs { a, b, x } = args;
    let half = F::lit(0.5);
    let p = x / a;
    let ratio = a / b;

    let z0 = hurwitz_zeta(F::zero(), p)?;
    let zm1 = hurwitz_zeta(-F::one(), p)?;
    let dzm1 = hurwitz_zeta_sderiv(-F::one(), p)?;

    let terms = [
        (-half * z0 + ratio * zm1 - b / (F::lit(12.0) * a)) * a.ln(),
        half * log_gamma(p)?,
        -F::lit(0.25) * F::lit(LN_2PI),
        -ratio * zm1,
        -ratio * dzm1,
    ];
    let integral = barnes_integral(&args, quad)?;
    let value = terms.iter().fold(F::zero(), |acc, &t| acc + t) + integral.value;
    let abs_err = integral.abs_err + EvalResult::rounding_err(&terms);
    EvalResult::new(value, abs_err, TAG_BARNES_INTEGRAL)
}

pub(crate) fn check_orbifold_order(w: u32) -> Result<()> {
    if w == 0 || w > MAX_ORBIFOLD_ORDER {
        return Err(Error::domain("w", f64::from(w), "1 <= w <= 200"));
    }
    Ok(())
}

/// Σ_{j=1}^{w-1} j log Γ(j/w).
pub(crate) fn weighted_log_gamma_sum<F: Real>(w: u32) -> Result<F> {
    let wf = F::from_count(w as usize);
    let mut sum = F::zero();
    for j in 1..w {
        let jf = F::from_count(j as usize);
        sum = sum + jf * log_gamma(jf / wf)?;
    }
    Ok(sum)
}

/// ζ'_B(0; 1/w, 1, 1) in closed form:
/// (1/w)ζ'_R(-1) - log(w)/(12w) - (1/w)Σ_{j<w} j log Γ(j/w) + (w-1)/4 · log 2π.
pub fn barnes_zeta_prime0_orbifold<F: Real>(w: u32) -> Result<F> {
    check_orbifold_order(w)?;
    let wf = F::from_count(w as usize);
    let sum: F = weighted_log_gamma_sum(w)?;
    Ok(
        riemann_zeta_prime_minus1::<F>() / wf - wf.ln() / (F::lit(12.0) * wf) - sum / wf
            + (wf - F::one()) / F::lit(4.0) * F::lit(LN_2PI),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::ZETA_PRIME_MINUS_ONE;

    fn zb(a: f64, b: f64, x: f64) -> EvalResult<f64> {
        barnes_zeta_prime0(
            BarnesArgs::new(a, b, x).unwrap(),
            &QuadratureConfig::default(),
        )
        .unwrap()
    }

    /// ζ_B(0; a, b, x) = x²/(2ab) - x(a+b)/(2ab) + (a² + 3ab + b²)/(12ab).
    fn barnes_zeta0(a: f64, b: f64, x: f64) -> f64 {
        x * x / (2.0 * a * b) - x * (a + b) / (2.0 * a * b)
            + (a * a + 3.0 * a * b + b * b) / (12.0 * a * b)
    }

    #[test]
    fn unit_lattice_is_riemann() {
        let r = zb(1.0, 1.0, 1.0);
        assert!(
            (r.value - ZETA_PRIME_MINUS_ONE).abs() < 1e-11,
            "{}",
            r.value
        );
        assert!(r.abs_err < 1e-10);
        assert_eq!(r.formula_tag, TAG_BARNES_INTEGRAL);
    }

    #[test]
    fn reference_values() {
        // independent route: rational-lattice reduction to Hurwitz zeta (mpmath)
        let cases: &[(f64, f64, f64, f64)] = &[
            (0.5, 1.0, 1.0, 0.061_695_090_766_429_808_188_296_861_849_063),
            (1.0, 1.0, 0.3, 0.219_617_513_379_487_994_323_503_054_116_363),
            (
                1.0,
                1.0,
                7.5,
                -7.698_239_399_808_131_016_922_458_836_414_069,
            ),
            (
                0.02,
                1.0,
                1.0,
                11.979_216_584_485_303_051_618_050_449_109_42,
            ),
            (
                50.0,
                1.0,
                1.0,
                -5.305_405_061_164_722_284_045_796_782_142_03,
            ),
            (
                1.0,
                50.0,
                1.0,
                -5.305_405_061_164_722_284_045_796_782_142_03,
            ),
            (
                0.25,
                1.0,
                2.5,
                6.239_737_244_561_408_185_465_074_587_793_812,
            ),
            (
                1.0,
                0.2,
                0.04,
                2.055_901_809_933_856_028_144_648_049_777_006,
            ),
            (
                2.0,
                1.0,
                1.0,
                -0.255_997_366_990_211_791_961_267_860_485_934,
            ),
            (3.0, 1.5, 0.7, 0.020_798_824_999_411_400_757_985_475_746_705),
        ];
        for &(a, b, x, want) in cases {
            let r = zb(a, b, x);
            assert!(
                (r.value - want).abs() < 1e-9,
                "({a},{b},{x}): {} vs {want}",
                r.value
            );
            assert!(r.abs_err < 1e-9, "({a},{b},{x}) err {}", r.abs_err);
        }
    }

    #[test]
    fn orbifold_closed_form_values() {
        let cases: &[(u32, f64)] = &[
            (1, ZETA_PRIME_MINUS_ONE),
            (2, 0.061_695_090_766_429_808_188_296_861_849_063),
            (3, 0.302_707_411_545_025_760_657_299_813_613_959),
            (6, 1.041_059_125_052_301_338_461_966_796_077_514),
            (12, 2.529_590_970_892_303_888_133_388_517_158_102),
        ];
        for &(w, want) in cases {
            let got: f64 = barnes_zeta_prime0_orbifold(w).unwrap();
            assert!((got - want).abs() < 1e-12, "w={w}");
        }
        assert!(barnes_zeta_prime0_orbifold::<f64>(0).is_err());
        assert!(barnes_zeta_prime0_orbifold::<f64>(201).is_err());
    }

    #[test]
    fn integral_matches_orbifold_closed_form() {
        for w in 1..=12u32 {
            let a = 1.0 / f64::from(w);
            let closed: f64 = barnes_zeta_prime0_orbifold(w).unwrap();
            assert!((zb(a, 1.0, 1.0).value - closed).abs() < 1e-9, "w={w}");
        }
    }

    #[test]
    fn lattice_symmetry() {
        for (a, b, x) in [(0.3f64, 1.7, 0.9), (2.5, 0.4, 3.0), (1.0, 7.0, 0.05)] {
            let d = zb(a, b, x).value - zb(b, a, x).value;
            assert!(d.abs() < 1e-9, "({a},{b},{x}): {d}");
        }
    }

    #[test]
    fn homogeneity() {
        // ζ'_B(0; ca, cb, cx) = ζ'_B(0; a, b, x) - ζ_B(0; a, b, x) log c
        for (a, b, x, c) in [(0.7f64, 1.3, 0.5, 3.0), (1.0, 2.0, 1.1, 0.2)] {
            let lhs = zb(c * a, c * b, c * x).value;
            let rhs = zb(a, b, x).value - barnes_zeta0(a, b, x) * f64::ln(c);
            assert!((lhs - rhs).abs() < 1e-9, "{lhs} vs {rhs}");
        }
    }

    #[test]
    fn shift_reduces_to_hurwitz() {
        // ζ_B(s;a,b,x) - ζ_B(s;a,b,x+a) = b^{-s} ζ_H(s, x/b)
        for (a, b, x) in [(0.6f64, 1.4, 0.8), (2.0, 0.5, 0.3)] {
            let lhs = zb(a, b, x).value - zb(a, b, x + a).value;
            let p = x / b;
            let rhs = -(0.5 - p) * b.ln() + log_gamma(p).unwrap() - 0.5 * LN_2PI;
            assert!((lhs - rhs).abs() < 1e-9, "{lhs} vs {rhs}");
        }
    }

    #[test]
    fn integrand_endpoint_limit() {
        for (a, b, x) in [(1.0f64, 1.0, 1.0), (0.3, 2.0, 0.7), (5.0, 0.5, 2.0)] {
            let args = BarnesArgs::new(a, b, x).unwrap();
            let limit = barnes_integrand(&args, 0.0).unwrap();
            let near = barnes_integrand(&args, 1e-6).unwrap();
            assert!(((limit - near) / limit).abs() < 1e-5, "({a},{b},{x})");
            let expected = -(b / (std::f64::consts::PI * a)) * digamma(x / a).unwrap();
            assert_eq!(limit, expected);
        }
    }

    #[test]
    fn rejects_degenerate_args() {
        assert!(BarnesArgs::new(0.0, 1.0, 1.0).is_err());
        assert!(BarnesArgs::new(1.0, 1e-301, 1.0).is_err());
        assert!(BarnesArgs::new(1.0, 1.0, f64::NAN).is_err());
        assert!(BarnesArgs::new(1.0, 1.0, f64::INFINITY).is_err());
        let bad = BarnesArgs {
            a: -1.0,
            b: 1.0,
            x: 1.0,
        };
        assert!(barnes_zeta_prime0(bad, &QuadratureConfig::default()).is_err());
    }

    #[test]
    fn subdivision_limit_surfaces() {
        let quad = QuadratureConfig::new(1e-15, 50.0, 2).unwrap();
        let args = BarnesArgs::new(0.1, 1.0, 1.0).unwrap();
        assert!(matches!(
            barnes_zeta_prime0(args, &quad),
            Err(Error::QuadratureNonConvergence { .. })
        ));
    }

    #[test]
    fn f32_instantiation() {
        let args = BarnesArgs::new(1.0f32, 1.0, 1.0).unwrap();
        let r = barnes_zeta_prime0(args, &QuadratureConfig::default()).unwrap();
        assert!((r.value - ZETA_PRIME_MINUS_ONE as f32).abs() < 1e-4);
    }
}
