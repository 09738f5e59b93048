//! Gamma, zeta and Barnes double zeta special functions.

pub mod barnes;
pub mod gamma;
pub mod hurwitz;

pub use barnes::{barnes_integrand, barnes_zeta_prime0, barnes_zeta_prime0_orbifold, BarnesArgs};
pub use gamma::{digamma, im_log_gamma, log_gamma, log_gamma_complex};
pub use hurwitz::{hurwitz_zeta, hurwitz_zeta_sderiv, riemann_zeta_prime_minus1};
