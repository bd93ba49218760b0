//! Convergent factorial-type expansion of the branch-point part,
//!
//! ```text
//! B = e^{πia} (2πi)^{s−1} (−z)^{−a} / (E − 1) · Σ_{n≥0} qⁿ p_n(x, s)
//! ```
//!
//! with `E = e^{2πia}`, `q = E/(E − 1)` and `x = 1/2 − ln(−z)/(2πi)`.
//! The terms oscillate and the series converges only conditionally, so
//! summation stops after a window of small terms; that rule is heuristic.
//!
//! `p_n` has three evaluations:
//!
//! * [`p_n_direct`]: the finite binomial sum, exact but cancelling badly
//!   once `n` grows;
//! * [`p_n_stable`]: a rearrangement through ₂F₁ with terms of the right
//!   size, for `|x| > n`;
//! * [`p_n_integral`]: `(e^{−2πis} − 1) ∫_0^∞ τ^{−s} e^{−xτ} (1 − e^{−τ})ⁿ dτ`,
//!   for `Re s < n + 1` and `Re x > 0`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::engines::{EngineKind, EngineReport, LerchPoint, WarningTag};
use crate::engines::{residue_tail, Frame};
use crate::kernel::{cpow, gauss_2f1_unit_b, rgamma};
use crate::quad::{tanh_sinh, QuadConfig, QuadResult};
use crate::sum::CompensatedSum;
use crate::{LerchError, Result};

const I: Complex64 = Complex64::new(0.0, 1.0);
const QUIET_WINDOW: usize = 5;
/// Largest `n` evaluated with the binomial sum when `|x|` is small.
const DIRECT_MAX_N: usize = 12;

fn prefactor(s: Complex64, r: Complex64) -> Complex64 {
    -2.0 * PI * I * (-I * PI * s).exp() * r
}

pub fn p_n_direct(x: Complex64, s: Complex64, n: usize) -> Result<Complex64> {
    let mut acc = CompensatedSum::new();
    let mut binom = 1.0;
    for m in 0..=n {
        let xm = x + m as f64;
        if xm.im == 0.0 && xm.re <= 0.0 {
            return Err(LerchError::domain("p_n_direct", "x + m on the negative axis"));
        }
        let sgn = if m % 2 == 0 { 1.0 } else { -1.0 };
        acc.add(sgn * binom * cpow(xm, s - 1.0));
        binom = binom * (n - m) as f64 / (m + 1) as f64;
    }
    Ok(prefactor(s, rgamma(s)) * acc.value())
}

pub fn p_n_stable(x: Complex64, s: Complex64, n: usize) -> Result<Complex64> {
    if x.norm() <= n as f64 {
        return Err(LerchError::domain("p_n_stable", "requires |x| > n"));
    }
    let mut acc = CompensatedSum::new();
    let alpha = n as f64 - s + 1.0;
    let gam = Complex64::new(n as f64 + 1.0, 0.0);
    // m^n / (m! (n−m)!) with 0^0 = 1.
    let mut inv_fact = vec![1.0; n + 1];
    for k in 1..=n {
        inv_fact[k] = inv_fact[k - 1] / k as f64;
    }
    for m in 0..=n {
        let mn = if m == 0 {
            if n == 0 {
                1.0
            } else {
                0.0
            }
        } else {
            (m as f64).powi(n as i32)
        };
        if mn == 0.0 {
            continue;
        }
        let sgn = if m % 2 == 0 { 1.0 } else { -1.0 };
        let f = gauss_2f1_unit_b(alpha, gam, -(m as f64) / x)?;
        acc.add(sgn * mn * inv_fact[m] * inv_fact[n - m] * f);
    }
    Ok(prefactor(s, rgamma(s - n as f64)) * cpow(x, s - n as f64 - 1.0) * acc.value())
}

/// `∫_0^∞ τ^{−s} e^{−xτ} (1 − e^{−τ})ⁿ dτ` by tanh-sinh on a truncated range.
pub fn factorial_integral(x: Complex64, s: Complex64, n: usize) -> Result<QuadResult> {
    if x.re <= 0.0 {
        return Err(LerchError::domain("factorial_integral", "requires Re x > 0"));
    }
    if s.re >= n as f64 + 1.0 {
        return Err(LerchError::domain("factorial_integral", "requires Re s < n + 1"));
    }
    let growth = (-s.re).max(0.0);
    let mut t = 80.0 / x.re;
    while x.re * t - growth * t.ln() < 80.0 {
        t *= 1.5;
    }
    let cfg = QuadConfig {
        rel_tol: 1e-15,
        max_level: 11,
        ..QuadConfig::default()
    };
    let nf = n as f64;
    let f = |tau: f64| {
        let one_minus = -(-tau).exp_m1();
        let w = if n == 0 { 1.0 } else { (nf * one_minus.ln()).exp() };
        (-s * tau.ln() - x * tau).exp() * w
    };
    let mut total = tanh_sinh(f, 0.0, 1.0, &cfg);
    for (lo, hi) in [(1.0, 8.0f64.min(t)), (8.0f64.min(t), t)] {
        if hi > lo {
            let r = tanh_sinh(f, lo, hi, &cfg);
            total.value += r.value;
            total.err += r.err;
            total.evals += r.evals;
            total.converged &= r.converged;
        }
    }
    Ok(total)
}

pub fn p_n_integral(x: Complex64, s: Complex64, n: usize) -> Result<Complex64> {
    let r = factorial_integral(x, s, n)?;
    Ok(((-2.0 * PI * I * s).exp() - 1.0) * r.value)
}

/// `p_n` by the method suited to `(x, n)`: ₂F₁ form for `|x| > n + 2`,
/// binomial sum for small `n`, quadrature otherwise.
pub fn p_n(x: Complex64, s: Complex64, n: usize) -> Result<Complex64> {
    if x.norm() > n as f64 + 2.0 {
        return p_n_stable(x, s, n);
    }
    if n <= DIRECT_MAX_N || x.re <= 0.0 || s.re >= n as f64 + 1.0 {
        return p_n_direct(x, s, n);
    }
    p_n_integral(x, s, n)
}

/// Snapshot of the factorial-series summation of `B`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FactorialSeriesState {
    pub x: Complex64,
    pub s: Complex64,
    pub a: Complex64,
    pub partial: Complex64,
    pub n_terms: usize,
    pub last_term_mag: f64,
}

/// One summed term: index, `|term|` and the partial sum after it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TraceRow {
    pub n: usize,
    pub term_mag: f64,
    pub partial: Complex64,
}

struct Run {
    state: FactorialSeriesState,
    trace: Vec<TraceRow>,
    window_max: f64,
    converged: bool,
    q_mag: f64,
    conjugated: bool,
}

fn check(p: &LerchPoint) -> Result<()> {
    if p.z.norm() <= 1.0 {
        return Err(LerchError::domain("eval_factorial_b", "requires |z| > 1"));
    }
    if p.a.re <= 0.0 {
        return Err(LerchError::domain("eval_factorial_b", "requires Re a > 0"));
    }
    let frac = (p.a.re - p.a.re.round()).abs();
    if p.a.im.abs() < 1e-6 && frac < 1e-6 {
        return Err(LerchError::domain(
            "eval_factorial_b",
            "e^{2πia} is too close to 1 (ill-conditioned)",
        ));
    }
    Ok(())
}

fn run(p: &LerchPoint, tol: f64, max_terms: usize, keep_trace: bool) -> Result<Run> {
    check(p)?;
    let f = Frame::new(p)?;
    let q = &f.p;
    let x = 0.5 - f.l / (2.0 * PI * I);
    let e = (2.0 * PI * I * q.a).exp();
    let ratio = e / (e - 1.0);
    let pre = (I * PI * q.a).exp() * cpow(2.0 * PI * I, q.s - 1.0) * (-q.a * f.l).exp() / (e - 1.0);
    let mut acc = CompensatedSum::new();
    let mut trace = Vec::new();
    let mut qn = Complex64::new(1.0, 0.0);
    let mut quiet = 0;
    let mut window = [f64::INFINITY; QUIET_WINDOW];
    let mut n = 0;
    let mut last = 0.0;
    let mut converged = !tol.is_finite() || max_terms == 0;
    if tol.is_finite() {
        while n < max_terms {
            let term = pre * qn * p_n(x, q.s, n)?;
            acc.add(term);
            last = term.norm();
            window[n % QUIET_WINDOW] = last;
            if keep_trace {
                let partial = acc.value();
                trace.push(TraceRow {
                    n,
                    term_mag: last,
                    partial: if f.conjugated { partial.conj() } else { partial },
                });
            }
            n += 1;
            qn *= ratio;
            if last < tol {
                quiet += 1;
                if quiet >= QUIET_WINDOW {
                    converged = true;
                    break;
                }
            } else {
                quiet = 0;
            }
        }
    }
    let partial = acc.value();
    let window_max = if n == 0 {
        0.0
    } else {
        window.iter().copied().filter(|v| v.is_finite()).fold(0.0, f64::max)
    };
    let xs = if f.conjugated { x.conj() } else { x };
    Ok(Run {
        state: FactorialSeriesState {
            x: xs,
            s: p.s,
            a: p.a,
            partial: if f.conjugated { partial.conj() } else { partial },
            n_terms: n,
            last_term_mag: last,
        },
        trace,
        window_max,
        converged,
        q_mag: ratio.norm(),
        conjugated: f.conjugated,
    })
}

/// `B` alone, summed until [`QUIET_WINDOW`] consecutive terms are below `tol`.
pub fn factorial_b(p: &LerchPoint, tol: f64, max_terms: usize) -> Result<FactorialSeriesState> {
    Ok(run(p, tol, max_terms, false)?.state)
}

/// Per-term magnitudes and partial sums of `B`.
pub fn factorial_trace(p: &LerchPoint, tol: f64, max_terms: usize) -> Result<Vec<TraceRow>> {
    Ok(run(p, tol, max_terms, true)?.trace)
}

/// Φ as the factorial series for `B` plus the residue series truncated at `tol`.
pub fn eval_factorial_b(p: &LerchPoint, tol: f64, max_terms: usize) -> Result<EngineReport> {
    let r = run(p, tol, max_terms, false)?;
    let f = Frame::new(p)?;
    let res_tol = if tol.is_finite() { tol } else { 1e-16 };
    let (res, count, res_est) = residue_tail(&f.p, 1, res_tol, 100_000);
    let res = if r.conjugated { res.conj() } else { res };
    let value = r.state.partial + res;
    let mut rep = EngineReport::new(EngineKind::Factorial, value, r.window_max + res_est);
    rep.n_terms = r.state.n_terms;
    rep.m_terms = count - 1;
    rep.warn(
        WarningTag::Heuristic,
        format!(
            "factorial series stopped by a {QUIET_WINDOW}-term quiet window; the estimate is not a bound"
        ),
    );
    if !r.converged {
        rep.warn(
            WarningTag::IterationCap,
            format!("max_terms = {max_terms} reached, last |term| = {:e}", r.state.last_term_mag),
        );
    }
    if r.q_mag >= 1.0 {
        rep.warn(
            WarningTag::Heuristic,
            format!("|E/(E−1)| = {:.3} ≥ 1: terms are not damped geometrically", r.q_mag),
        );
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;
    use crate::kernel::gamma;

    #[test]
    fn n_zero_single_term() {
        let x = c64(2.5, 0.3);
        let s = c64(0.75, 0.1);
        let expect = prefactor(s, rgamma(s)) * cpow(x, s - 1.0);
        assert!((p_n_direct(x, s, 0).unwrap() - expect).norm() < 1e-15);
        assert!((p_n_stable(x, s, 0).unwrap() - expect).norm() < 1e-14);
    }

    #[test]
    fn direct_matches_integral_and_reference() {
        let (x, s) = (c64(2.5, 0.0), c64(0.4, 0.0));
        let d = p_n_direct(x, s, 3).unwrap();
        let q = p_n_integral(x, s, 3).unwrap();
        let expect = c64(-0.052_497_913_510_481_35, -0.017_057_606_110_686_99);
        assert!((d - q).norm() < 1e-9);
        assert!((d - expect).norm() < 1e-14);
    }

    #[test]
    fn vanishes_at_s_zero() {
        let v = p_n_direct(c64(2.5, 0.5), c64(0.0, 0.0), 4).unwrap();
        assert!(v.norm() < 1e-14);
    }

    #[test]
    fn stable_matches_direct() {
        let (x, s) = (c64(12.0, 3.0), c64(0.75, 0.0));
        for n in 1..=6 {
            let d = p_n_direct(x, s, n).unwrap();
            let st = p_n_stable(x, s, n).unwrap();
            assert!((d - st).norm() <= 1e-10 * d.norm(), "n = {n}");
        }
        assert!(p_n_stable(c64(2.0, 0.0), s, 3).is_err());
    }

    #[test]
    fn beta_identity() {
        let (x, n) = (3.7, 4);
        let r = factorial_integral(c64(x, 0.0), c64(0.0, 0.0), n).unwrap();
        let mut expect = 24.0;
        for k in 0..=n {
            expect /= x + k as f64;
        }
        assert!((r.value.re - expect).abs() < 1e-10);
    }

    #[test]
    fn asymptotic_ratio_tends_to_one() {
        let s = c64(0.75, 0.0);
        let n = 3;
        let ratio = |r: f64| {
            let x = c64(r, 0.0);
            let law = ((-2.0 * PI * I * s).exp() - 1.0) * gamma(n as f64 - s + 1.0).unwrap();
            (p_n_stable(x, s, n).unwrap() * cpow(x, n as f64 + 1.0 - s) / law - 1.0).norm()
        };
        let (d50, d200) = (ratio(50.0), ratio(200.0));
        assert!(d200 < d50 && d200 < 0.05, "{d50} {d200}");
    }

    #[test]
    fn phi_at_minus_five() {
        let p = LerchPoint::new(c64(-5.0, 0.0), c64(0.75, 0.0), c64(0.3, 0.0)).unwrap();
        let r = eval_factorial_b(&p, 1e-12, 500).unwrap();
        assert!((r.value.re - 1.342_178_172_753_647_2).abs() < 1e-7, "{}", r.value);
        assert!(!r.hit_cap());
    }

    #[test]
    fn infinite_tolerance_leaves_only_residues() {
        let p = LerchPoint::new(c64(-5.0, 0.0), c64(0.75, 0.0), c64(0.3, 0.0)).unwrap();
        let st = factorial_b(&p, f64::INFINITY, 500).unwrap();
        assert_eq!(st.n_terms, 0);
        assert_eq!(st.partial, c64(0.0, 0.0));
    }

    #[test]
    fn conditioning_error_near_integer_a() {
        let p = LerchPoint::new(c64(-5.0, 0.0), c64(0.75, 0.0), c64(1.0 + 1e-8, 0.0)).unwrap();
        assert!(eval_factorial_b(&p, 1e-10, 100).is_err());
    }
}
