//! Closed-form log-determinants and ζ'(0) values of Friederichs Dirichlet
//! Laplacians on constant-curvature cones, spindles and disks.
//!
//! Convention: det Δ = exp(-ζ'(0, Δ)). Functions named `logdet_*` return
//! log det = -ζ'(0); functions named `zeta_prime0_*` return ζ'(0) itself.

mod verify;

pub use verify::{verify_identities, IdentityReport, Tolerance, VerifyConfig};

use crate::constants::{EULER_GAMMA, LN_2PI};
use crate::error::{Error, Result};
use crate::eval::EvalResult;
use crate::quadrature::QuadratureConfig;
use crate::scalar::Real;
use crate::special::barnes::{
    barnes_zeta_prime0, check_orbifold_order, weighted_log_gamma_sum, BarnesArgs,
};
use crate::special::hurwitz::riemann_zeta_prime_minus1;

pub const TAG_HYPERBOLIC_CONE: &str = "hyperbolic-cone";
pub const TAG_ORBIFOLD_CONE: &str = "orbifold-cone";
pub const TAG_SPINDLE: &str = "spindle";
pub const TAG_SPHERICAL_CONE: &str = "spherical-cone";
pub const TAG_UNIT_DISK_CONE: &str = "unit-disk-cone";
pub const TAG_FLAT_DISK: &str = "flat-disk";
pub const TAG_POINCARE_CAP: &str = "poincare-cap";

/// Hyperbolic cone of angle 2πa with boundary at geodesic radius `eta`,
/// metric dr² + a² sinh²r dθ².
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConeGeometry<F> {
    pub a: F,
    pub eta: F,
}

impl<F: Real> ConeGeometry<F> {
    pub fn new(a: F, eta: F) -> Result<Self> {
        positive("a", a)?;
        positive("eta", eta)?;
        Ok(ConeGeometry { a, eta })
    }
}

/// Unit disk |z| <= 1 with the metric 4a²|z|^{2a-2}|dz|² / (1 + K|z|^{2a})²:
/// constant curvature `curvature` = K > -1 and a conical point of angle 2πa
/// at the origin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvedDiskGeometry<F> {
    pub a: F,
    pub curvature: F,
}

impl<F: Real> CurvedDiskGeometry<F> {
    pub fn new(a: F, curvature: F) -> Result<Self> {
        positive("a", a)?;
        if !(curvature > -F::one() && curvature.is_finite()) {
            return Err(Error::domain("K", curvature.as_f64(), "-1 < K < inf"));
        }
        Ok(CurvedDiskGeometry { a, curvature })
    }
}

pub(crate) fn positive<F: Real>(name: &'static str, v: F) -> Result<F> {
    if v > F::zero() && v.is_finite() {
        Ok(v)
    } else {
        Err(Error::domain(name, v.as_f64(), "0 < value < inf"))
    }
}

/// log tanh(η/2) = log1p(-e^{-η}) - log1p(e^{-η}), accurate for large η.
pub(crate) fn log_tanh_half<F: Real>(eta: F) -> F {
    let e = (-eta).exp();
    (-e).ln_1p() - e.ln_1p()
}

/// (1 - tanh²(η/2))^{-1} = (1 + cosh η)/2.
pub(crate) fn inv_sech_sq_half<F: Real>(eta: F) -> F {
    (F::one() + eta.cosh()) / F::lit(2.0)
}

fn sixth<F: Real>() -> F {
    F::one() / F::lit(6.0)
}

fn barnes_a11<F: Real>(a: F, quad: &QuadratureConfig<F>) -> Result<EvalResult<F>> {
    barnes_zeta_prime0(BarnesArgs::new(a, F::one(), F::one())?, quad)
}

/// K = -tanh²(η/2): curvature of the unit-disk model whose rescaling is the
/// curvature -1 cone of geodesic radius η.
pub fn curvature_from_radius<F: Real>(eta: F) -> Result<F> {
    positive("eta", eta)?;
    let t = (eta / F::lit(2.0)).tanh();
    Ok(-t * t)
}

/// Geodesic radius for a curvature K ∈ (-1, 0): η = 2 artanh √|K|.
pub fn radius_from_curvature<F: Real>(curvature: F) -> Result<F> {
    if !(curvature > -F::one() && curvature < F::zero()) {
        return Err(Error::domain("K", curvature.as_f64(), "-1 < K < 0"));
    }
    Ok(F::lit(2.0) * curvature.abs().sqrt().atanh())
}

/// log det of the Friederichs Dirichlet Laplacian on the hyperbolic cone:
///
/// ```text
/// -(1/6)(a + 1/a) log tanh(η/2) + (3 - 8 cosh η) a / 12 - 2ζ'_B(0;a,1,1)
///     - (1/6)(a + 3 + 1/a) log a - ½ log 2π
/// ```
pub fn logdet_hyperbolic_cone<F: Real>(
    g: ConeGeometry<F>,
    quad: &QuadratureConfig<F>,
) -> Result<EvalResult<F>> {
    let ConeGeometry { a, eta } = ConeGeometry::new(g.a, g.eta)?;
    let zb = barnes_a11(a, quad)?;
    let two = F::lit(2.0);
    let terms = [
        -sixth::<F>() * (a + a.recip()) * log_tanh_half(eta),
        (F::lit(3.0) - F::lit(8.0) * eta.cosh()) / F::lit(12.0) * a,
        -two * zb.value,
        -sixth::<F>() * (a + F::lit(3.0) + a.recip()) * a.ln(),
        -F::lit(0.5) * F::lit(LN_2PI),
    ];
    let value = terms.iter().fold(F::zero(), |acc, &t| acc + t);
    EvalResult::new(
        value,
        two * zb.abs_err + EvalResult::rounding_err(&terms),
        TAG_HYPERBOLIC_CONE,
    )
}

/// Orbifold specialization a = 1/w of [`logdet_hyperbolic_cone`], written
/// with log Γ(j/w) instead of the Barnes derivative (no quadrature).
pub fn logdet_orbifold_cone<F: Real>(w: u32, eta: F) -> Result<EvalResult<F>> {
    check_orbifold_order(w)?;
    positive("eta", eta)?;
    let wf = F::from_count(w as usize);
    let two = F::lit(2.0);
    let sum: F = weighted_log_gamma_sum(w)?;
    let terms = [
        -sixth::<F>() * (wf + wf.recip()) * log_tanh_half(eta),
        (F::lit(3.0) - F::lit(8.0) * eta.cosh()) / (F::lit(12.0) * wf),
        -two / wf * riemann_zeta_prime_minus1(),
        two / wf * sum,
        -wf / two * F::lit(LN_2PI),
        sixth::<F>() * (wf + F::lit(3.0) + two / wf) * wf.ln(),
    ];
    let value = terms.iter().fold(F::zero(), |acc, &t| acc + t);
    EvalResult::new(value, EvalResult::rounding_err(&terms), TAG_ORBIFOLD_CONE)
}

/// Small-radius expansion of [`logdet_orbifold_cone`] without its o(1) term.
pub fn small_eta_asymptotics<F: Real>(w: u32, eta: F) -> Result<F> {
    check_orbifold_order(w)?;
    positive("eta", eta)?;
    let wf = F::from_count(w as usize);
    let two = F::lit(2.0);
    let third = F::one() / F::lit(3.0);
    let ln2 = F::LN_2();
    let sum: F = weighted_log_gamma_sum(w)?;
    let bracket = two * riemann_zeta_prime_minus1::<F>() - two * sum + F::lit(5.0) / F::lit(12.0)
        - sixth::<F>() * ln2;
    Ok(
        -(wf / F::lit(6.0) + F::one() / (F::lit(6.0) * wf)) * eta.ln()
            - wf * (third * ln2 + F::lit(0.5) * F::PI().ln())
            - bracket / wf
            + F::lit(0.5) * wf.ln()
            + sixth::<F>() * wf * wf.ln()
            + third * wf.ln() / wf,
    )
}

/// The earlier published small-radius expansion, reproduced verbatim for
/// comparison. It is known to be wrong: only the log η, ½ log w and
/// (1/6) w log w terms agree with [`small_eta_asymptotics`].
pub fn fp_asymptotics_reference<F: Real>(w: u32, eta: F) -> Result<F> {
    check_orbifold_order(w)?;
    positive("eta", eta)?;
    let wf = F::from_count(w as usize);
    let two = F::lit(2.0);
    let ln2 = F::LN_2();
    let zp = riemann_zeta_prime_minus1::<F>();
    Ok(
        -(wf / F::lit(6.0) + F::one() / (F::lit(6.0) * wf)) * eta.ln()
            - wf * (-two * zp + sixth::<F>() - sixth::<F>() * ln2)
            - (F::lit(5.0) / F::lit(12.0) - sixth::<F>() * ln2 + F::lit(EULER_GAMMA) / F::lit(6.0))
                / wf
            + F::lit(0.5) * wf.ln()
            + sixth::<F>() * wf * wf.ln()
            + sixth::<F>() * wf.ln() / wf
            + F::lit(0.25),
    )
}

/// ζ'(0) of the Laplacian (zero mode excluded) on the spindle of curvature
/// K > 0 with two antipodal conical points of angle 2πa:
/// 4ζ'_B(0;a,1,1) - a/2 + (1/3)(a + 1/a) log(a/√K) + log K.
pub fn zeta_prime0_spindle<F: Real>(
    a: F,
    curvature: F,
    quad: &QuadratureConfig<F>,
) -> Result<EvalResult<F>> {
    positive("a", a)?;
    positive("K", curvature)?;
    let zb = barnes_a11(a, quad)?;
    let four = F::lit(4.0);
    let terms = [
        four * zb.value,
        -a / F::lit(2.0),
        (a + a.recip()) / F::lit(3.0) * (a.ln() - F::lit(0.5) * curvature.ln()),
        curvature.ln(),
    ];
    let value = terms.iter().fold(F::zero(), |acc, &t| acc + t);
    EvalResult::new(
        value,
        four * zb.abs_err + EvalResult::rounding_err(&terms),
        TAG_SPINDLE,
    )
}

/// ζ(0) on the unit-curvature spindle: (1/6)(a + 1/a) - 1.
pub fn zeta0_spindle<F: Real>(a: F) -> Result<F> {
    positive("a", a)?;
    Ok(sixth::<F>() * (a + a.recip()) - F::one())
}

/// ζ'(0) on the spherical cone |z| <= K^{-1/2a} (half a spindle) with
/// Dirichlet condition on the equator:
/// 2ζ'_B(0;a,1,1) - a/4 + (1/6)(a+3+1/a) log a - (1/12)(a+1/a) log K + ½ log 2π.
pub fn zeta_prime0_spherical_cone<F: Real>(
    a: F,
    curvature: F,
    quad: &QuadratureConfig<F>,
) -> Result<EvalResult<F>> {
    positive("a", a)?;
    positive("K", curvature)?;
    let zb = barnes_a11(a, quad)?;
    let two = F::lit(2.0);
    let terms = [
        two * zb.value,
        -a / F::lit(4.0),
        sixth::<F>() * (a + F::lit(3.0) + a.recip()) * a.ln(),
        -(a + a.recip()) / F::lit(12.0) * curvature.ln(),
        F::lit(0.5) * F::lit(LN_2PI),
    ];
    let value = terms.iter().fold(F::zero(), |acc, &t| acc + t);
    EvalResult::new(
        value,
        two * zb.abs_err + EvalResult::rounding_err(&terms),
        TAG_SPHERICAL_CONE,
    )
}

/// ζ'(0) on the unit disk with curvature K > -1 and a conical point:
/// 2ζ'_B(0;a,1,1) - (11/12)a + (1/6)(a+3+1/a) log a + (4/3) a/(K+1) + ½ log 2π.
pub fn zeta_prime0_unit_disk_cone<F: Real>(
    g: CurvedDiskGeometry<F>,
    quad: &QuadratureConfig<F>,
) -> Result<EvalResult<F>> {
    let CurvedDiskGeometry { a, curvature } = CurvedDiskGeometry::new(g.a, g.curvature)?;
    let zb = barnes_a11(a, quad)?;
    let two = F::lit(2.0);
    let terms = [
        two * zb.value,
        -F::lit(11.0) / F::lit(12.0) * a,
        sixth::<F>() * (a + F::lit(3.0) + a.recip()) * a.ln(),
        F::lit(4.0) / F::lit(3.0) * a / (curvature + F::one()),
        F::lit(0.5) * F::lit(LN_2PI),
    ];
    let value = terms.iter().fold(F::zero(), |acc, &t| acc + t);
    EvalResult::new(
        value,
        two * zb.abs_err + EvalResult::rounding_err(&terms),
        TAG_UNIT_DISK_CONE,
    )
}

/// ζ(0) on the curved unit-disk cone: (1/12)(a + 1/a), independent of K.
pub fn zeta0_unit_disk_cone<F: Real>(a: F) -> Result<F> {
    positive("a", a)?;
    Ok((a + a.recip()) / F::lit(12.0))
}

/// log det of the Dirichlet Laplacian on the flat disk of radius r:
/// -(1/3) log r + (1/3) log 2 - 2ζ'_R(-1) - 5/12 - ½ log 2π.
pub fn logdet_flat_disk<F: Real>(r: F) -> Result<F> {
    positive("r", r)?;
    let third = F::one() / F::lit(3.0);
    Ok(-third * r.ln() + third * F::LN_2()
        - F::lit(2.0) * riemann_zeta_prime_minus1::<F>()
        - F::lit(5.0) / F::lit(12.0)
        - F::lit(0.5) * F::lit(LN_2PI))
}

/// log det on the hyperbolic disk of geodesic radius η without conical point
/// (a = 1): -(1/3) log tanh(η/2) - 2ζ'_R(-1) + 11/12 - (4/3)(1 - tanh²(η/2))^{-1} - ½ log 2π.
pub fn logdet_poincare_cap<F: Real>(eta: F) -> Result<F> {
    positive("eta", eta)?;
    let third = F::one() / F::lit(3.0);
    Ok(
        -third * log_tanh_half(eta) - F::lit(2.0) * riemann_zeta_prime_minus1::<F>()
            + F::lit(11.0) / F::lit(12.0)
            - F::lit(4.0) * third * inv_sech_sq_half(eta)
            - F::lit(0.5) * F::lit(LN_2PI),
    )
}

/// log det(C^{-1} Δ) = log det Δ - ζ(0, Δ) log C.
pub fn rescale_logdet<F: Real>(logdet: F, zeta0: F, scale: F) -> Result<F> {
    positive("C", scale)?;
    Ok(logdet - zeta0 * scale.ln())
}

/// log of det(Δ_{a,K}) / det(Δ_flat) on the annulus K^{-1/2a} <= |z| <= 1,
/// K > 1: (2/3)a - (4/3)a/(K+1) - (1/12)(a - 1/a) log K.
pub fn annulus_ratio_closed_form<F: Real>(a: F, curvature: F) -> Result<F> {
    positive("a", a)?;
    if !(curvature > F::one() && curvature.is_finite()) {
        return Err(Error::domain("K", curvature.as_f64(), "1 < K < inf"));
    }
    let two = F::lit(2.0);
    Ok(two / F::lit(3.0) * a
        - F::lit(4.0) / F::lit(3.0) * a / (curvature + F::one())
        - (a - a.recip()) / F::lit(12.0) * curvature.ln())
}
