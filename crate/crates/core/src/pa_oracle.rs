//! Brute-force evaluation of the Polyakov–Alvarez conformal anomaly for the
//! radially symmetric pieces used in the gluing arguments: the annulus
//! K^{-1/2a} <= |z| <= 1 of a spherical cone and the hyperbolic cap
//! |z| <= tanh(η/2) of the Poincaré disk, both against the flat metric |dz|².
//!
//! For a metric e^{2ψ}|dz|² on a flat domain Ω,
//!
//! ```text
//! log det Δ_ψ / det Δ_flat = -(1/6π)(½∫_Ω |∇ψ|² + ∮_∂Ω k ψ) - (1/4π)∮_∂Ω ∂_n ψ
//! ```
//!
//! The area integral is computed by 1-D radial quadrature (the angular factor
//! 2π is exact). Boundary integrands are constant on each circle, so the
//! circle integrals are 2πR times the integrand.

use crate::determinants::{inv_sech_sq_half, positive};
use crate::error::{Error, Result};
use crate::quadrature::{integrate, QuadratureConfig};
use crate::scalar::Real;

/// Conformal potential ψ(r) = log(2a) + (a-1) log r - log(1 + K r^{2a}) of
/// the cone metric m_{a,K} = e^{2ψ}|dz|².
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConformalFactor<F> {
    pub a: F,
    pub curvature: F,
}

impl<F: Real> ConformalFactor<F> {
    pub fn new(a: F, curvature: F) -> Result<Self> {
        positive("a", a)?;
        if !curvature.is_finite() {
            return Err(Error::domain("K", curvature.as_f64(), "finite"));
        }
        Ok(ConformalFactor { a, curvature })
    }

    fn denominator(&self, r: F) -> Result<F> {
        positive("r", r)?;
        let d = F::one() + self.curvature * r.powf(F::lit(2.0) * self.a);
        if d > F::zero() {
            Ok(d)
        } else {
            Err(Error::domain("1 + K r^{2a}", d.as_f64(), "> 0"))
        }
    }

    pub fn psi(&self, r: F) -> Result<F> {
        let d = self.denominator(r)?;
        Ok((F::lit(2.0) * self.a).ln() + (self.a - F::one()) * r.ln() - d.ln())
    }

    /// ∂ψ/∂r.
    pub fn dpsi_dr(&self, r: F) -> Result<F> {
        let d = self.denominator(r)?;
        let two_a = F::lit(2.0) * self.a;
        Ok((self.a - F::one()) / r - two_a * self.curvature * r.powf(two_a - F::one()) / d)
    }
}

/// The three pieces of the anomaly and their sum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PAIntegralBreakdown<F> {
    /// -(1/12π) ∫ |∇ψ|²
    pub area_term: F,
    /// -(1/6π) ∮ k ψ
    pub boundary_curvature_terms: F,
    /// -(1/4π) ∮ ∂_n ψ
    pub boundary_normal_terms: F,
    pub total: F,
    /// Quadrature error estimate of `area_term`.
    pub abs_err: F,
}

impl<F: Real> PAIntegralBreakdown<F> {
    fn assemble(
        area_term: F,
        boundary_curvature_terms: F,
        boundary_normal_terms: F,
        abs_err: F,
    ) -> Self {
        PAIntegralBreakdown {
            area_term,
            boundary_curvature_terms,
            boundary_normal_terms,
            total: area_term + boundary_curvature_terms + boundary_normal_terms,
            abs_err,
        }
    }
}

/// |∇ψ|² = (∂_r ψ)² for the cone potential.
pub fn grad_psi_sq<F: Real>(a: F, curvature: F, r: F) -> Result<F> {
    let d = ConformalFactor::new(a, curvature)?.dpsi_dr(r)?;
    Ok(d * d)
}

/// ∫_{K^{-1/2a}}^1 |∂_r ψ|² r dr by adaptive quadrature on a log-spaced seed mesh.
pub fn annulus_gradient_integral<F: Real>(
    a: F,
    curvature: F,
    quad: &QuadratureConfig<F>,
) -> Result<(F, F)> {
    check_annulus(a, curvature)?;
    quad.validate()?;
    let phi = ConformalFactor::new(a, curvature)?;
    let inner = curvature.powf(-F::lit(0.5) / a);
    // geometric seed nodes between the inner radius and 1
    let seeds = 8usize;
    let log_inner = inner.ln();
    let mut mesh: Vec<F> = (0..=seeds)
        .map(|i| (log_inner * (F::one() - F::from_count(i) / F::from_count(seeds))).exp())
        .collect();
    mesh[0] = inner;
    mesh[seeds] = F::one();
    mesh.dedup_by(|x, y| *x <= *y);
    let integrand = |r: F| {
        let d = phi.dpsi_dr(r).unwrap_or(F::nan());
        d * d * r
    };
    let res = integrate(integrand, &mesh, quad.abs_tol, quad.max_subdivisions)?;
    Ok((res.value, res.abs_err))
}

fn check_annulus<F: Real>(a: F, curvature: F) -> Result<()> {
    positive("a", a)?;
    if !(curvature > F::one() && curvature.is_finite()) {
        return Err(Error::domain("K", curvature.as_f64(), "1 < K < inf"));
    }
    Ok(())
}

/// Anomaly of the annulus K^{-1/2a} <= |z| <= 1 (K > 1) with the cone metric
/// relative to the flat metric.
pub fn pa_annulus_numeric<F: Real>(
    a: F,
    curvature: F,
    quad: &QuadratureConfig<F>,
) -> Result<PAIntegralBreakdown<F>> {
    check_annulus(a, curvature)?;
    let phi = ConformalFactor::new(a, curvature)?;
    let (grad, err) = annulus_gradient_integral(a, curvature, quad)?;
    let six = F::lit(6.0);
    let two = F::lit(2.0);
    // -(1/12π) · 2π ∫ |ψ'|² r dr
    let area_term = -grad / six;

    let inner = curvature.powf(-F::lit(0.5) / a);
    // outer circle: R = 1, k = 1; inner circle: k = -1/R, outward normal -∂_r
    let outer_kpsi = two * F::PI() * phi.psi(F::one())?;
    let inner_kpsi = -two * F::PI() * phi.psi(inner)?;
    let curvature_terms = -(outer_kpsi + inner_kpsi) / (six * F::PI());

    let outer_dn = two * F::PI() * phi.dpsi_dr(F::one())?;
    let inner_dn = -two * F::PI() * inner * phi.dpsi_dr(inner)?;
    let normal_terms = -(outer_dn + inner_dn) / (F::lit(4.0) * F::PI());

    Ok(PAIntegralBreakdown::assemble(
        area_term,
        curvature_terms,
        normal_terms,
        err / six,
    ))
}

/// Anomaly of the hyperbolic cap |z| <= tanh(η/2), ψ = log 2 - log(1 - |z|²),
/// relative to the flat disk of the same radius.
pub fn pa_disk_numeric<F: Real>(
    eta: F,
    quad: &QuadratureConfig<F>,
) -> Result<PAIntegralBreakdown<F>> {
    positive("eta", eta)?;
    quad.validate()?;
    let two = F::lit(2.0);
    let radius = (eta / two).tanh();
    // 1 - R² = sech²(η/2)
    let one_minus_r2 = inv_sech_sq_half(eta).recip();

    let integrand = |r: F| {
        let r2 = r * r;
        let m = (F::one() - r) * (F::one() + r);
        F::lit(4.0) * r2 * r / (m * m)
    };
    let res = integrate(
        integrand,
        &[F::zero(), radius],
        quad.abs_tol,
        quad.max_subdivisions,
    )?;
    let six = F::lit(6.0);
    // -(1/12π) · 2π ∫ 4r³/(1-r²)² dr
    let area_term = -res.value / six;

    let psi_boundary = F::LN_2() - one_minus_r2.ln();
    // k = 1/R: ∮ k ψ = 2π ψ(R)
    let curvature_terms = -(two * F::PI() * psi_boundary) / (six * F::PI());
    // ∂_n ψ = 2R/(1-R²): ∮ = 2πR · 2R/(1-R²)
    let dn = two * F::PI() * radius * two * radius / one_minus_r2;
    let normal_terms = -dn / (F::lit(4.0) * F::PI());

    Ok(PAIntegralBreakdown::assemble(
        area_term,
        curvature_terms,
        normal_terms,
        res.abs_err / six,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::determinants::{annulus_ratio_closed_form, logdet_flat_disk, logdet_poincare_cap};

    fn quad() -> QuadratureConfig<f64> {
        QuadratureConfig::default()
    }

    #[test]
    fn grad_flat_cases() {
        assert_eq!(grad_psi_sq(1.0f64, 0.0, 0.7).unwrap(), 0.0);
        let g = grad_psi_sq(2.5f64, 0.0, 0.4).unwrap();
        assert!((g - 1.5f64.powi(2) / 0.16).abs() < 1e-12);
    }

    #[test]
    fn grad_matches_finite_difference() {
        let (k, r, h) = (2.0f64, 0.5f64, 1e-5);
        let phi = ConformalFactor::new(1.0, k).unwrap();
        let fd = (phi.psi(r + h).unwrap() - phi.psi(r - h).unwrap()) / (2.0 * h);
        let closed = (2.0 * k * r / (1.0 + k * r * r)).powi(2);
        assert!((fd * fd - closed).abs() < 1e-8);
        assert!((grad_psi_sq(1.0, k, r).unwrap() - closed).abs() < 1e-14);
    }

    #[test]
    fn grad_domain() {
        assert!(grad_psi_sq(1.0f64, -2.0, 0.9).is_err());
        assert!(grad_psi_sq(1.0f64, 1.0, 0.0).is_err());
        assert!(grad_psi_sq(0.0f64, 1.0, 0.5).is_err());
    }

    /// ∫_{K^{-1/2a}}^1 |ψ'|² r dr in closed form.
    fn gradient_integral_closed(a: f64, k: f64) -> f64 {
        (a - 1.0).powi(2) / (2.0 * a) * k.ln() + 2.0 * (1.0 + k).ln() + 2.0 * a / (k + 1.0)
            - a
            - 2.0 * 2f64.ln()
    }

    #[test]
    fn annulus_pieces() {
        for a in [0.5f64, 1.0, 2.0] {
            for k in [2.0f64, 5.0, 10.0] {
                let b = pa_annulus_numeric(a, k, &quad()).unwrap();
                let area = -(a - 1.0).powi(2) / (12.0 * a) * k.ln()
                    - (1.0 + k).ln() / 3.0
                    - a / (3.0 * (k + 1.0))
                    + a / 6.0
                    + 2f64.ln() / 3.0;
                assert!((b.area_term - area).abs() < 1e-10, "area a={a} K={k}");
                let curv = -((2.0 * a).ln() - (1.0 + k).ln()) / 3.0
                    + ((2.0 * a).ln() - (a - 1.0) / (2.0 * a) * k.ln() - 2f64.ln()) / 3.0;
                assert!((b.boundary_curvature_terms - curv).abs() < 1e-13);
                let normal = -0.5 + 0.5 + a / 2.0 - a / (k + 1.0);
                assert!((b.boundary_normal_terms - normal).abs() < 1e-13);
                let sum = b.area_term + b.boundary_curvature_terms + b.boundary_normal_terms;
                assert_eq!(b.total, sum);
                let closed = annulus_ratio_closed_form(a, k).unwrap();
                assert!((b.total - closed).abs() < 1e-7, "a={a} K={k}");
                let (grad, _) = annulus_gradient_integral(a, k, &quad()).unwrap();
                assert!((grad - gradient_integral_closed(a, k)).abs() < 1e-8);
            }
        }
    }

    #[test]
    fn annulus_rejects_small_curvature() {
        assert!(pa_annulus_numeric(1.0f64, 1.0, &quad()).is_err());
        assert!(pa_annulus_numeric(1.0f64, 0.3, &quad()).is_err());
    }

    #[test]
    fn disk_pieces() {
        for eta in [0.5f64, 1.0, 3.0] {
            let b = pa_disk_numeric(eta, &quad()).unwrap();
            let t = (eta / 2.0).tanh();
            let m = 1.0 - t * t;
            let area_integral = 4.0 * std::f64::consts::PI * (m.ln() + 1.0 / m - 1.0);
            assert!((b.area_term - (-area_integral / (12.0 * std::f64::consts::PI))).abs() < 1e-10);
            let kpsi = 2.0 * std::f64::consts::PI * (2f64.ln() - m.ln());
            assert!(
                (b.boundary_curvature_terms + kpsi / (6.0 * std::f64::consts::PI)).abs() < 1e-12
            );
            let want = logdet_poincare_cap(eta).unwrap() - logdet_flat_disk(t).unwrap();
            assert!((b.total - want).abs() < 1e-7, "eta={eta}");
        }
        assert!(pa_disk_numeric(0.0f64, &quad()).is_err());
    }
}
