//! ₂F₁(α, 1; γ; x) inside the unit disk.

use num_complex::Complex64;

use super::KernelConfig;
use crate::{LerchError, Result};

pub fn gauss_2f1_unit_b(alpha: Complex64, gamma_param: Complex64, x: Complex64) -> Result<Complex64> {
    gauss_2f1_unit_b_with(alpha, gamma_param, x, &KernelConfig::default())
}

/// Term ratio `(α + k) x / (γ + k)`; stops once a term is below the relative
/// tolerance.
pub fn gauss_2f1_unit_b_with(
    alpha: Complex64,
    gamma_param: Complex64,
    x: Complex64,
    cfg: &KernelConfig,
) -> Result<Complex64> {
    if x.norm() >= 1.0 {
        return Err(LerchError::domain("gauss_2f1_unit_b", "|x| >= 1"));
    }
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    for k in 0..cfg.hyp2f1_max_iter {
        let denom = gamma_param + k as f64;
        if denom.norm() == 0.0 {
            return Err(LerchError::domain(
                "gauss_2f1_unit_b",
                "gamma parameter is a non-positive integer",
            ));
        }
        term *= (alpha + k as f64) / denom * x;
        sum += term;
        if term.norm() <= cfg.hyp2f1_rel_tol * sum.norm() {
            return Ok(sum);
        }
    }
    Err(LerchError::Accuracy {
        op: "gauss_2f1_unit_b",
        achieved: term.norm() / sum.norm(),
    })
}
