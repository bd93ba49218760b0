//! Two-series large-`z` expansion: a convergent series in `1/z` plus a
//! divergent series in `1/ln(−z)`,
//!
//! ```text
//! Φ ≈ Σ_{n=1}^{n_z} A_n / (Γ(s) zⁿ) + L^s (−z)^{−a} / Γ(s) · Σ_{n<n_log} B_n / L^{n+1}
//! ```
//!
//! with `A_n = −L^s γ*(s, (a−n)L)`. Kept as a comparison engine.

use num_complex::Complex64;

use super::large_z::t_minus;
use super::{require_large_z, EngineKind, EngineReport, Frame, LerchPoint};
use crate::coeffs::fl_coeff_b;
use crate::kernel::{cpow, nearest_integer, rgamma};
use crate::sum::CompensatedSum;
use crate::{LerchError, Result};

fn check(p: &LerchPoint) -> Result<()> {
    require_large_z(p, "eval_fl_expansion")?;
    if let Some(k) = nearest_integer(p.s, 0.0) {
        if k <= 0 {
            return Err(LerchError::Pole {
                function: "eval_fl_expansion",
                at: k,
            });
        }
    }
    Ok(())
}

fn log_terms(f: &Frame, count: usize) -> Result<Vec<Complex64>> {
    let p = &f.p;
    let pre = cpow(f.l, p.s) * (-p.a * f.l).exp() * rgamma(p.s);
    let inv_l = f.l.inv();
    let mut lp = inv_l;
    let mut out = Vec::with_capacity(count);
    for n in 0..count {
        out.push(pre * fl_coeff_b(p.s, p.a, n)? * lp);
        lp *= inv_l;
    }
    Ok(out)
}

pub fn eval_fl_expansion(p: &LerchPoint, n_z_terms: usize, n_log_terms: usize) -> Result<EngineReport> {
    check(p)?;
    let f = Frame::new(p)?;
    let rg = rgamma(f.p.s);
    let mut acc = CompensatedSum::new();
    for n in 1..=n_z_terms {
        acc.add(t_minus(&f, n, rg)?);
    }
    let terms = log_terms(&f, n_log_terms + 1)?;
    acc.extend(terms[..n_log_terms].iter().copied());
    let mut rep = EngineReport::new(EngineKind::FlExpansion, acc.value(), terms[n_log_terms].norm());
    rep.n_terms = n_z_terms;
    rep.m_terms = n_log_terms;
    Ok(f.finish(rep))
}

/// Magnitudes of the first `count` terms of the logarithmic series.
pub fn fl_log_term_magnitudes(p: &LerchPoint, count: usize) -> Result<Vec<f64>> {
    check(p)?;
    let f = Frame::new(p)?;
    Ok(log_terms(&f, count)?.iter().map(|t| t.norm()).collect())
}
