//! Complex special-function primitives shared by every engine.
//!
//! All functions are pure. Tunable thresholds live in [`KernelConfig`]; the
//! plain entry points use [`KernelConfig::default`], the `*_with` variants take
//! an explicit configuration.

mod bernoulli;
pub mod branch;
mod digamma;
mod gamma;
mod hyp2f1;
mod incgamma;
mod zeta;

pub use branch::{cpow, ln_1p, log_neg_z, nearest_integer, BranchedLog, CutSide, LogSide};
pub use digamma::digamma;
pub use gamma::{cospi, gamma, log_gamma, rgamma, sinpi};
pub use hyp2f1::{gauss_2f1_unit_b, gauss_2f1_unit_b_with};
pub use incgamma::{
    lower_gamma_star, upper_incomplete_gamma, upper_incomplete_gamma_scaled,
    upper_incomplete_gamma_with,
};
pub use zeta::{hurwitz_zeta, hurwitz_zeta_with};

/// Thresholds and iteration limits of the kernel algorithms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelConfig {
    /// Incomplete gamma uses the power series while `|w| < |s| + margin`.
    pub igamma_series_margin: f64,
    /// Beyond `|w| ≥ radius + 2|s|` the asymptotic series in `1/w` is used.
    pub igamma_asymptotic_radius: f64,
    /// Continued fraction only for `|arg w| ≤ π - sector`; closer to the
    /// negative axis the power series takes over.
    pub igamma_cut_sector: f64,
    pub igamma_rel_tol: f64,
    pub igamma_max_iter: usize,
    /// Euler–Maclaurin starts once `Re a` reaches `max(zeta_min_shift, |s|)`.
    pub zeta_min_shift: f64,
    pub zeta_bernoulli_terms: usize,
    pub hyp2f1_rel_tol: f64,
    pub hyp2f1_max_iter: usize,
}

impl Default for KernelConfig {
    fn default() -> Self {
        Self {
            igamma_series_margin: 4.0,
            igamma_asymptotic_radius: 45.0,
            igamma_cut_sector: 0.5,
            igamma_rel_tol: 1e-16,
            igamma_max_iter: 10_000,
            zeta_min_shift: 10.0,
            zeta_bernoulli_terms: 12,
            hyp2f1_rel_tol: 1e-14,
            hyp2f1_max_iter: 10_000,
        }
    }
}
