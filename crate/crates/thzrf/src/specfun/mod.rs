//! Special-function evaluators behind the link statistics and error-rate
//! closed forms.
//!
//! Everything here is pure f64 numerics with no global state: gamma family
//! ([`gamma`], [`gamma_upper`], ...), hypergeometric series ([`hyp1f1`],
//! [`hyp2f1_11_32`]), adaptive quadrature ([`quad`]), and Mellin-Barnes
//! contour evaluation of the Meijer-G ([`meijer_g`]) and multivariate Fox-H
//! ([`fox_h_bivariate`], [`fox_h_trivariate`]) functions.

mod cgamma;
mod contour;
mod foxh;
mod gamma;
mod hyp;
mod meijer;
pub mod quad;

pub use cgamma::lgamma_complex;
pub use contour::{ContourConfig, Refinement};
pub use foxh::{fox_h_bivariate, fox_h_trivariate, CouplingGamma, FoxHSpec, FoxHVariable};
pub use gamma::{
    erf, erfc, exp_int_e1, gamma, gamma_reg_pair, gamma_upper, gamma_upper_ext, gamma_upper_reg,
    ln_gamma, ln_gamma_sign, q_func,
};
pub use hyp::{hyp1f1, hyp2f1_11_32, hyp2f1_1c32, kummer_decay_1_32};
pub use meijer::{meijer_g, meijer_g_scaled, MeijerGSpec};

use thiserror::Error;

/// Errors raised by the special-function evaluators.
#[derive(Debug, Clone, Error)]
pub enum SpecFunError {
    /// Argument outside the supported domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// An iteration (series, continued fraction, refinement loop) hit its
    /// cap before meeting the tolerance; carries the partial value and the
    /// last error bound achieved.
    #[error("no convergence after {iterations} iterations (partial value {value:e}, bound {bound:e})")]
    NoConvergence {
        value: f64,
        bound: f64,
        iterations: usize,
    },

    /// Contour validation failed (pole families not separable, offsets out
    /// of range, malformed configuration).
    #[error("contour error: {0}")]
    Contour(String),

    /// The result failed an internal accuracy check (e.g. the imaginary
    /// residue of a mathematically real contour integral was too large).
    #[error("accuracy error: {0}")]
    Accuracy(String),

    /// A multivariate evaluation would exceed its node budget.
    #[error("node budget exceeded: needed {needed} nodes per axis, budget {budget}")]
    NodeBudget { needed: usize, budget: usize },
}
