//! Upper incomplete gamma Γ(s, w) on the principal branch of `w^s`.
//!
//! Four regions, chosen from `|w|`, `|s|` and `arg w`:
//!
//! * `|w| < |s| + margin`: `Γ(s) − w^s γ*(s, w)` with the entire lower part
//!   `γ*(s, w) = w^{-s} γ(s, w)` from its power series;
//! * `|w| ≥ radius + 2|s|`: the asymptotic series in `1/w`;
//! * `|arg w| ≤ π − sector`: modified Lentz continued fraction;
//! * otherwise (moderate `|w|` hugging the negative axis) the power series.
//!
//! Internally everything is expressed through the scaled function
//! `G(s, w) = e^w w^{-s} Γ(s, w)`, which stays O(1/|w|) where `Γ(s, w)`
//! itself under- or overflows.

use num_complex::Complex64;
use std::f64::consts::PI;

use super::gamma::gamma;
use super::KernelConfig;
use crate::{LerchError, Result};

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

fn non_positive_integer(s: Complex64) -> Option<i64> {
    if s.im == 0.0 && s.re <= 0.0 && s.re == s.re.round() {
        Some(s.re as i64)
    } else {
        None
    }
}

/// `γ*(s, w) = w^{-s} γ(s, w) = Σ_k (−w)^k / (k! (s + k))`, entire in `w`.
pub fn lower_gamma_star(s: Complex64, w: Complex64) -> Result<Complex64> {
    lower_star_with(s, w, &KernelConfig::default())
}

fn lower_star_with(s: Complex64, w: Complex64, cfg: &KernelConfig) -> Result<Complex64> {
    if let Some(k) = non_positive_integer(s) {
        return Err(LerchError::Pole {
            function: "lower_gamma_star",
            at: k,
        });
    }
    if w.re >= 0.0 {
        // e^{-w} Σ w^k / (s)_{k+1}: all terms share a phase for real w > 0.
        let mut term = s.inv();
        let mut sum = term;
        for k in 1..cfg.igamma_max_iter {
            term *= w / (s + k as f64);
            sum += term;
            if term.norm() <= cfg.igamma_rel_tol * sum.norm() {
                return Ok((-w).exp() * sum);
            }
        }
        Err(LerchError::Accuracy {
            op: "lower_gamma_star",
            achieved: term.norm() / sum.norm(),
        })
    } else {
        let mut power = Complex64::new(1.0, 0.0);
        let mut sum = s.inv();
        for k in 1..cfg.igamma_max_iter {
            power *= -w / k as f64;
            let term = power / (s + k as f64);
            sum += term;
            if term.norm() <= cfg.igamma_rel_tol * sum.norm() && k as f64 > w.norm() {
                return Ok(sum);
            }
        }
        Err(LerchError::Accuracy {
            op: "lower_gamma_star",
            achieved: f64::NAN,
        })
    }
}

pub fn upper_incomplete_gamma(s: Complex64, w: Complex64) -> Result<Complex64> {
    upper_incomplete_gamma_with(s, w, &KernelConfig::default())
}

pub fn upper_incomplete_gamma_with(
    s: Complex64,
    w: Complex64,
    cfg: &KernelConfig,
) -> Result<Complex64> {
    if w.re == 0.0 && w.im == 0.0 {
        if s.re > 0.0 {
            return gamma(s);
        }
        return Err(LerchError::domain(
            "upper_incomplete_gamma",
            "w = 0 with Re s <= 0",
        ));
    }
    let g = scaled_with(s, w, cfg)?;
    Ok(g * (s * w.ln() - w).exp())
}

/// `G(s, w) = e^w w^{-s} Γ(s, w)`.
pub fn upper_incomplete_gamma_scaled(s: Complex64, w: Complex64) -> Result<Complex64> {
    scaled_with(s, w, &KernelConfig::default())
}

fn scaled_with(s: Complex64, w: Complex64, cfg: &KernelConfig) -> Result<Complex64> {
    if w.re == 0.0 && w.im == 0.0 {
        return Err(LerchError::domain("upper_incomplete_gamma", "w = 0"));
    }
    let r = w.norm();
    let sn = s.norm();
    if r < sn + cfg.igamma_series_margin {
        return series_scaled(s, w, cfg);
    }
    if r >= cfg.igamma_asymptotic_radius + 2.0 * sn {
        return Ok(asymptotic_scaled(s, w, cfg));
    }
    if w.arg().abs() <= PI - cfg.igamma_cut_sector {
        return continued_fraction_scaled(s, w, cfg);
    }
    series_scaled(s, w, cfg)
}

fn series_scaled(s: Complex64, w: Complex64, cfg: &KernelConfig) -> Result<Complex64> {
    if let Some(k) = non_positive_integer(s) {
        return Ok(integer_order_scaled(k, w, cfg));
    }
    let ln_w = w.ln();
    let head = gamma(s)? * (w - s * ln_w).exp();
    let lower = lower_star_with(s, w, cfg)? * w.exp();
    Ok(head - lower)
}

/// Γ(−k, w) for small `|w|`: the exponential-integral series for `k = 0`
/// followed by the downward recurrence `Γ(s, w) = (Γ(s+1, w) − w^s e^{−w})/s`.
fn integer_order_scaled(k: i64, w: Complex64, cfg: &KernelConfig) -> Complex64 {
    let ln_w = w.ln();
    let mut sum = Complex64::new(0.0, 0.0);
    let mut power = Complex64::new(1.0, 0.0);
    for j in 1..cfg.igamma_max_iter {
        power *= -w / j as f64;
        let term = power / j as f64;
        sum += term;
        if term.norm() <= cfg.igamma_rel_tol * sum.norm().max(1.0) && j as f64 > w.norm() {
            break;
        }
    }
    // Work with e^w Γ(·, w) and rescale by w^{-s} at the end.
    let mut eg = w.exp() * (-EULER_GAMMA - ln_w - sum);
    let mut order = 0i64;
    while order > k {
        let s = order as f64 - 1.0;
        let w_pow = ((s) * ln_w).exp();
        eg = (eg - w_pow) / s;
        order -= 1;
    }
    eg * (-(k as f64) * ln_w).exp()
}

fn asymptotic_scaled(s: Complex64, w: Complex64, cfg: &KernelConfig) -> Complex64 {
    let inv = w.inv();
    let mut term = inv;
    let mut sum = term;
    let mut last = term.norm();
    for k in 1..cfg.igamma_max_iter {
        let next = term * (s - k as f64) * inv;
        let mag = next.norm();
        if mag > last {
            break;
        }
        term = next;
        sum += term;
        last = mag;
        if mag <= cfg.igamma_rel_tol * sum.norm() {
            break;
        }
    }
    sum
}

fn continued_fraction_scaled(s: Complex64, w: Complex64, cfg: &KernelConfig) -> Result<Complex64> {
    let tiny = Complex64::new(1e-300, 0.0);
    let mut b = w + 1.0 - s;
    let mut c = Complex64::new(1e300, 0.0);
    let mut d = b.inv();
    let mut h = d;
    for i in 1..cfg.igamma_max_iter {
        let an = -(i as f64) * (i as f64 - s);
        b += 2.0;
        d = an * d + b;
        if d.norm() < 1e-300 {
            d = tiny;
        }
        c = b + an / c;
        if c.norm() < 1e-300 {
            c = tiny;
        }
        d = d.inv();
        let del = d * c;
        h *= del;
        if (del - 1.0).norm() <= cfg.igamma_rel_tol.max(4.0 * f64::EPSILON) {
            return Ok(h);
        }
    }
    Err(LerchError::Accuracy {
        op: "upper_incomplete_gamma",
        achieved: f64::NAN,
    })
}
