//! Zeta-regularized determinants of Friederichs Dirichlet Laplacians on
//! two-dimensional constant-curvature cones.
//!
//! The crate evaluates closed forms for hyperbolic, flat and spherical cones
//! and spindles, the Barnes double zeta derivative they are built from, and a
//! set of cross-checks that tie the formulas together.
//!
//! Numerical code is generic over [`Real`] (`f32` or `f64`); the `*64` type
//! aliases below fix the scalar to `f64`, which is what the stated tolerances
//! refer to.

#![allow(clippy::excessive_precision)]

pub mod constants;
pub mod determinants;
pub mod error;
pub mod eval;
pub mod pa_oracle;
pub mod quadrature;
pub mod scalar;
pub mod special;

pub use determinants::{ConeGeometry, CurvedDiskGeometry, IdentityReport, Tolerance, VerifyConfig};
pub use error::{Error, Result};
pub use eval::EvalResult;
pub use pa_oracle::{ConformalFactor, PAIntegralBreakdown};
pub use quadrature::{Integral, QuadratureConfig};
pub use scalar::Real;
pub use special::BarnesArgs;

pub type EvalResult64 = EvalResult<f64>;
pub type Integral64 = Integral<f64>;
pub type QuadratureConfig64 = QuadratureConfig<f64>;
pub type BarnesArgs64 = BarnesArgs<f64>;
pub type ConeGeometry64 = ConeGeometry<f64>;
pub type CurvedDiskGeometry64 = CurvedDiskGeometry<f64>;
pub type IdentityReport64 = IdentityReport<f64>;
pub type VerifyConfig64 = VerifyConfig<f64>;
pub type ConformalFactor64 = ConformalFactor<f64>;
pub type PAIntegralBreakdown64 = PAIntegralBreakdown<f64>;
