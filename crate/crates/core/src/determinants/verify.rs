//! Cross-formula identity checks.
//!
//! Every check compares two independently assembled expressions for the same
//! quantity. Failures (including evaluation errors) are reported, never
//! raised.

use crate::determinants::*;
use crate::error::{Error, Result};
use crate::pa_oracle::{annulus_gradient_integral, pa_annulus_numeric, pa_disk_numeric};
use crate::quadrature::QuadratureConfig;
use crate::scalar::Real;
use crate::special::barnes::{barnes_zeta_prime0, barnes_zeta_prime0_orbifold, BarnesArgs};

/// Tolerance attached to one identity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Tolerance<F> {
    /// Use the tolerance passed to [`verify_identities`].
    Global,
    /// Identity-specific bound that overrides the global one.
    Fixed(F),
}

/// Outcome of one identity check; `passed` iff `abs_diff <= tolerance`.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityReport<F> {
    pub identity_name: String,
    pub lhs: F,
    pub rhs: F,
    pub abs_diff: F,
    pub tolerance: F,
    pub passed: bool,
}

impl<F: Real> IdentityReport<F> {
    pub fn new(identity_name: impl Into<String>, lhs: F, rhs: F, tolerance: F) -> Self {
        let diff = (lhs - rhs).abs();
        let abs_diff = if diff.is_nan() { F::infinity() } else { diff };
        IdentityReport {
            identity_name: identity_name.into(),
            lhs,
            rhs,
            abs_diff,
            tolerance,
            passed: abs_diff <= tolerance,
        }
    }

    fn failed_evaluation(identity_name: String, tolerance: F) -> Self {
        IdentityReport {
            identity_name,
            lhs: F::nan(),
            rhs: F::nan(),
            abs_diff: F::infinity(),
            tolerance,
            passed: false,
        }
    }
}

/// Parameter grids of the identity suite.
#[derive(Debug, Clone, PartialEq)]
pub struct VerifyConfig<F> {
    /// Cone-angle parameters for the reconstruction and gluing identities.
    pub a_grid: Vec<F>,
    /// Cone-angle parameters for the continuity check across K = 0. The
    /// jump over [-1e-8, 1e-8] is (8/3)·a·1e-8, so the 1e-7 bound only
    /// holds for a < 3.75.
    pub continuity_a: Vec<F>,
    /// Geodesic radii for the reconstruction and a = 1 identities.
    pub eta_grid: Vec<F>,
    /// Positive curvatures for the spindle identities.
    pub spindle_curvatures: Vec<F>,
    /// Orbifold orders w for the Barnes bridge and the orbifold equality.
    pub orbifold_orders: Vec<u32>,
    /// Radii for the orbifold equality.
    pub orbifold_etas: Vec<F>,
    /// Orders for the small-radius asymptotics checks.
    pub asymptotic_orders: Vec<u32>,
    /// (a, K > 1) pairs, as separate axes, for the annulus anomaly.
    pub annulus_a: Vec<F>,
    pub annulus_curvatures: Vec<F>,
    /// Radii for the hyperbolic-cap anomaly.
    pub disk_etas: Vec<F>,
    pub quad: QuadratureConfig<F>,
}

fn lits<F: Real>(xs: &[f64]) -> Vec<F> {
    xs.iter().map(|&x| F::lit(x)).collect()
}

impl<F: Real> Default for VerifyConfig<F> {
    fn default() -> Self {
        VerifyConfig {
            a_grid: lits(&[0.2, 0.5, 1.0, 2.0, 5.0]),
            continuity_a: lits(&[0.2, 0.5, 1.0, 2.0]),
            eta_grid: lits(&[0.1, 0.5, 1.0, 2.0, 5.0]),
            spindle_curvatures: lits(&[0.5, 1.0, 2.0]),
            orbifold_orders: (1..=12).collect(),
            orbifold_etas: lits(&[0.1, 0.5, 1.0, 2.0, 3.0, 5.0]),
            asymptotic_orders: (1..=5).collect(),
            annulus_a: lits(&[0.5, 1.0, 2.0]),
            annulus_curvatures: lits(&[2.0, 5.0, 10.0]),
            disk_etas: lits(&[0.5, 1.0, 3.0]),
            quad: QuadratureConfig::default(),
        }
    }
}

/// Bound on |residual(1e-3)| of the small-radius expansion.
const ASYMPTOTIC_RESIDUAL_BOUND: f64 = 1e-4;
/// residual(1e-3)/residual(2e-3) must lie in 0.25 ± 0.05 (O(η²) decay).
const ASYMPTOTIC_RATIO_CENTER: f64 = 0.25;
const ASYMPTOTIC_RATIO_HALF_WIDTH: f64 = 0.05;
/// Allowed jump of the unit-disk ζ'(0) across K = 0 (K = ±1e-8).
const K_CONTINUITY_BOUND: f64 = 1e-7;

struct Suite<F: Real> {
    tol: F,
    reports: Vec<IdentityReport<F>>,
}

impl<F: Real> Suite<F> {
    fn check(
        &mut self,
        name: String,
        tolerance: Tolerance<F>,
        eval: impl FnOnce() -> Result<(F, F)>,
    ) {
        let tol = match tolerance {
            Tolerance::Global => self.tol,
            Tolerance::Fixed(t) => t,
        };
        let report = match eval() {
            Ok((lhs, rhs)) => IdentityReport::new(name, lhs, rhs, tol),
            Err(_) => IdentityReport::failed_evaluation(name, tol),
        };
        self.reports.push(report);
    }
}

/// Runs every identity on the grids of `cfg` and returns one report per
/// check, sorted by name.
pub fn verify_identities<F: Real>(tol: F, cfg: &VerifyConfig<F>) -> Result<Vec<IdentityReport<F>>> {
    if tol.is_nan() || tol <= F::zero() {
        return Err(Error::domain("tol", tol.as_f64(), "tol > 0"));
    }
    cfg.quad.validate()?;
    let quad = &cfg.quad;
    let mut s = Suite {
        tol,
        reports: Vec::new(),
    };
    let two = F::lit(2.0);

    for &w in &cfg.orbifold_orders {
        s.check(
            format!("barnes_bridge[w={w:02}]"),
            Tolerance::Global,
            || {
                let a = F::one() / F::from_count(w as usize);
                let integral = barnes_zeta_prime0(BarnesArgs::new(a, F::one(), F::one())?, quad)?;
                Ok((integral.value, barnes_zeta_prime0_orbifold(w)?))
            },
        );
        for &eta in &cfg.orbifold_etas {
            s.check(
                format!("orbifold_equality[w={w:02},eta={eta}]"),
                Tolerance::Global,
                || {
                    let a = F::one() / F::from_count(w as usize);
                    let hyper = logdet_hyperbolic_cone(ConeGeometry::new(a, eta)?, quad)?;
                    Ok((hyper.value, logdet_orbifold_cone(w, eta)?.value))
                },
            );
        }
    }

    for &a in &cfg.a_grid {
        for &eta in &cfg.eta_grid {
            s.check(
                format!("unit_disk_reconstruction[a={a},eta={eta}]"),
                Tolerance::Global,
                || {
                    let k = curvature_from_radius(eta)?;
                    let disk = zeta_prime0_unit_disk_cone(CurvedDiskGeometry::new(a, k)?, quad)?;
                    let rhs = rescale_logdet(-disk.value, zeta0_unit_disk_cone(a)?, k.abs())?;
                    Ok((
                        logdet_hyperbolic_cone(ConeGeometry::new(a, eta)?, quad)?.value,
                        rhs,
                    ))
                },
            );
        }
        for &k in &cfg.spindle_curvatures {
            s.check(
                format!("bfk_spindle[a={a},K={k}]"),
                Tolerance::Global,
                || {
                    let spindle = zeta_prime0_spindle(a, k, quad)?.value;
                    let cone = zeta_prime0_spherical_cone(a, k, quad)?.value;
                    let rhs = (F::lit(4.0) * F::PI() * a / k).ln() - two * cone - F::LN_2();
                    Ok((-spindle, rhs))
                },
            );
            s.check(
                format!("spindle_rescaling[a={a},K={k}]"),
                Tolerance::Global,
                || {
                    let lhs = zeta_prime0_spindle(a, k, quad)?.value;
                    let rhs =
                        zeta_prime0_spindle(a, F::one(), quad)?.value - zeta0_spindle(a)? * k.ln();
                    Ok((lhs, rhs))
                },
            );
        }
        s.check(
            format!("zeta0_symmetry[a={a}]"),
            Tolerance::Fixed(F::zero()),
            || Ok((zeta0_unit_disk_cone(a)?, zeta0_unit_disk_cone(a.recip())?)),
        );
        s.check(
            format!("zeta0_spindle_symmetry[a={a}]"),
            Tolerance::Fixed(F::zero()),
            || Ok((zeta0_spindle(a)?, zeta0_spindle(a.recip())?)),
        );
    }

    for &a in &cfg.continuity_a {
        s.check(
            format!("k_continuity[a={a}]"),
            Tolerance::Fixed(F::lit(K_CONTINUITY_BOUND)),
            || {
                let eps = F::lit(1e-8);
                let plus = zeta_prime0_unit_disk_cone(CurvedDiskGeometry::new(a, eps)?, quad)?;
                let minus = zeta_prime0_unit_disk_cone(CurvedDiskGeometry::new(a, -eps)?, quad)?;
                Ok((plus.value, minus.value))
            },
        );
    }

    for &eta in &cfg.eta_grid {
        s.check(
            format!("a1_equivalence[eta={eta}]"),
            Tolerance::Global,
            || {
                let hyper = logdet_hyperbolic_cone(ConeGeometry::new(F::one(), eta)?, quad)?;
                Ok((hyper.value, logdet_poincare_cap(eta)?))
            },
        );
        let c = eta.cosh();
        let lhs = (F::lit(3.0) - F::lit(8.0) * c) / F::lit(12.0);
        let rhs = F::lit(11.0) / F::lit(12.0) - two / F::lit(3.0) * (F::one() + c);
        let ulp = ulp_of(lhs.abs().max(rhs.abs()));
        s.check(
            format!("cosh_rewrite_ulp[eta={eta}]"),
            Tolerance::Fixed(ulp),
            || Ok((lhs, rhs)),
        );
        s.check(
            format!("curvature_radius_inverse[eta={eta}]"),
            Tolerance::Global,
            || Ok((radius_from_curvature(curvature_from_radius(eta)?)?, eta)),
        );
    }

    s.check("flat_limit".to_string(), Tolerance::Global, || {
        let disk = zeta_prime0_unit_disk_cone(CurvedDiskGeometry::new(F::one(), F::zero())?, quad)?;
        Ok((disk.value, -logdet_flat_disk(two)?))
    });

    for &w in &cfg.asymptotic_orders {
        let residual = |eta: F| -> Result<F> {
            Ok(logdet_orbifold_cone(w, eta)?.value - small_eta_asymptotics(w, eta)?)
        };
        let (eta1, eta2) = (F::lit(1e-3), F::lit(2e-3));
        s.check(
            format!("asymptotic_residual[w={w:02}]"),
            Tolerance::Fixed(F::lit(ASYMPTOTIC_RESIDUAL_BOUND)),
            || Ok((residual(eta1)?, F::zero())),
        );
        s.check(
            format!("asymptotic_ratio[w={w:02}]"),
            Tolerance::Fixed(F::lit(ASYMPTOTIC_RATIO_HALF_WIDTH)),
            || {
                Ok((
                    residual(eta1)? / residual(eta2)?,
                    F::lit(ASYMPTOTIC_RATIO_CENTER),
                ))
            },
        );
        s.check(
            format!("fp_offset_eta_independent[w={w:02}]"),
            Tolerance::Global,
            || {
                let gap = |eta: F| -> Result<F> {
                    Ok(fp_asymptotics_reference(w, eta)? - small_eta_asymptotics(w, eta)?)
                };
                Ok((gap(eta1)?, gap(F::lit(0.5))?))
            },
        );
    }

    for &a in &cfg.annulus_a {
        for &k in &cfg.annulus_curvatures {
            s.check(
                format!("pa_annulus[a={a},K={k}]"),
                Tolerance::Global,
                || {
                    Ok((
                        pa_annulus_numeric(a, k, quad)?.total,
                        annulus_ratio_closed_form(a, k)?,
                    ))
                },
            );
            s.check(
                format!("pa_gradient_integral[a={a},K={k}]"),
                Tolerance::Global,
                || {
                    let (numeric, _) = annulus_gradient_integral(a, k, quad)?;
                    let closed = (a - F::one()).powi(2) / (two * a) * k.ln()
                        + two * (F::one() + k).ln()
                        + two * a / (k + F::one())
                        - a
                        - two * F::LN_2();
                    Ok((numeric, closed))
                },
            );
            s.check(
                format!("annulus_gluing[a={a},K={k}]"),
                Tolerance::Global,
                || {
                    let cone = zeta_prime0_spherical_cone(a, k, quad)?.value;
                    let inner = k.powf(-F::lit(0.5) / a);
                    let glued = logdet_flat_disk(F::one())? - logdet_flat_disk(inner)? - cone
                        + annulus_ratio_closed_form(a, k)?;
                    let disk = zeta_prime0_unit_disk_cone(CurvedDiskGeometry::new(a, k)?, quad)?;
                    Ok((glued, -disk.value))
                },
            );
        }
    }

    for &eta in &cfg.disk_etas {
        s.check(format!("pa_disk[eta={eta}]"), Tolerance::Global, || {
            let rhs = logdet_poincare_cap(eta)? - logdet_flat_disk((eta / two).tanh())?;
            Ok((pa_disk_numeric(eta, quad)?.total, rhs))
        });
    }

    let mut reports = s.reports;
    reports.sort_by(|x, y| x.identity_name.cmp(&y.identity_name));
    Ok(reports)
}

/// Spacing between `x` and the next representable value above it.
fn ulp_of<F: Real>(x: F) -> F {
    if x == F::zero() {
        return F::min_positive_value();
    }
    let (mantissa, exponent, _) = x.integer_decode();
    let _ = mantissa;
    F::lit(2.0).powi(i32::from(exponent))
}
