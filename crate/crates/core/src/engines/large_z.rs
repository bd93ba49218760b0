//! Large-`z` engines built on the split `Φ = B + I`, with `I` the residue
//! series `−e^{−πis} Σ_{n≥1} z^{−n} (n − a)^{−s}`.

use num_complex::Complex64;
use std::f64::consts::PI;

use super::cache::cached_shifted_coeffs;
use super::{require_large_z, EngineKind, EngineReport, Frame, LerchPoint, WarningTag};
use crate::coeffs::{taylor_coeffs_g, MAX_COEFFS};
use crate::kernel::{
    cpow, log_gamma, lower_gamma_star, nearest_integer, rgamma, upper_incomplete_gamma_scaled,
};
use crate::sum::CompensatedSum;
use crate::{LerchError, Result};

const I: Complex64 = Complex64::new(0.0, 1.0);

fn sign(n: usize) -> f64 {
    if n % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// `zⁿ Γ(s, (a+n)L) / ((a+n)^s Γ(s))` through the scaled incomplete gamma.
pub(crate) fn t_plus(f: &Frame, n: usize, rg: Complex64) -> Result<Complex64> {
    let p = &f.p;
    let an = p.a + n as f64;
    let w = an * f.l;
    let g = upper_incomplete_gamma_scaled(p.s, w)?;
    Ok(sign(n) * (-p.a * f.l).exp() * cpow(w, p.s) * cpow(an, -p.s) * g * rg)
}

/// `−z^{−n} L^s γ*(s, (a−n)L) / Γ(s)`, entire in `a`. For large `|(a−n)L|`
/// the lower function is split into `w^{−s} Γ(s) − e^{−w} G(s, w)` to avoid
/// the cancellation of its power series.
pub(crate) fn t_minus(f: &Frame, n: usize, rg: Complex64) -> Result<Complex64> {
    let p = &f.p;
    let amn = p.a - n as f64;
    let w = amn * f.l;
    let zn = p.z.powi(-(n as i32));
    let ls = cpow(f.l, p.s);
    if w.norm() <= 8.0 + p.s.norm() || amn.norm() < 0.1 {
        return Ok(-zn * ls * lower_gamma_star(p.s, w)? * rg);
    }
    let g = upper_incomplete_gamma_scaled(p.s, w)?;
    Ok(-zn * ls * cpow(w, -p.s) + sign(n) * (-p.a * f.l).exp() * ls * g * rg)
}

/// Residue term `−e^{−πis} z^{−n} (n − a)^{−s}`.
pub(crate) fn residue_term(p: &LerchPoint, n: usize) -> Complex64 {
    let nma = n as f64 - p.a;
    -(-I * PI * p.s - p.s * nma.ln()).exp() * p.z.powi(-(n as i32))
}

/// `Σ_{n ≥ from}` residue terms until the geometric tail estimate is below
/// `tol`. Returns the sum, the index after the last term, and the estimate.
pub(crate) fn residue_tail(p: &LerchPoint, from: usize, tol: f64, cap: usize) -> (Complex64, usize, f64) {
    let mut acc = CompensatedSum::new();
    let rz = p.z.norm().recip();
    let mut n = from.max(1);
    let mut est = f64::INFINITY;
    while n < from.max(1) + cap {
        let t = residue_term(p, n);
        acc.add(t);
        n += 1;
        let nma = (n as f64 - p.a).norm();
        let q = rz * ((nma + 1.0) / nma).powf(-p.s.re);
        let next = residue_term(p, n).norm();
        if q < 1.0 {
            est = next / (1.0 - q);
            if est < tol {
                break;
            }
        }
    }
    (acc.value(), n, est)
}

/// `M = round(|(N + 1 − a) ln(−z)| + Re s − 1)`, at least 1.
pub fn choose_optimal_m(p: &LerchPoint, n: usize) -> Result<usize> {
    let f = Frame::new(p)?;
    let x = ((n as f64 + 1.0 - f.p.a) * f.l).norm() + p.s.re - 1.0;
    Ok(x.round().max(1.0) as usize)
}

/// Order estimate of the truncated `m`-series remainder,
/// `|(−z)^{−a}| |Γ(M−s+1)| |M−s+1|^{1/2} / |(N+1−a) ln(−z)|^{Re(M−s+1)}`.
pub fn remainder_estimate(p: &LerchPoint, n: usize, m: usize) -> Result<f64> {
    let f = Frame::new(p)?;
    let q = m as f64 - f.p.s + 1.0;
    let lg = log_gamma(q)?;
    let base = ((n as f64 + 1.0 - f.p.a) * f.l).norm();
    let ln_r = (-f.p.a * f.l).re + lg.re + 0.5 * q.norm().ln() - q.re * base.ln();
    Ok(ln_r.exp())
}

fn check_main(p: &LerchPoint, n: usize) -> Result<()> {
    require_large_z(p, "eval_main_theorem")?;
    if (n as f64) <= p.a.re {
        return Err(LerchError::domain("eval_main_theorem", "requires N > Re a"));
    }
    if nearest_integer(p.s, 1e-12).is_some() {
        return Err(LerchError::domain(
            "eval_main_theorem",
            "integer s is handled by eval_integer_s_large_z",
        ));
    }
    Ok(())
}

struct MainParts {
    /// `Σ_{n=0}^{N} T⁺_n + Σ_{n=1}^{N} T⁻_n`
    poles: Complex64,
    /// Individual `m`-series terms.
    m_terms: Vec<Complex64>,
    dropped: usize,
}

fn main_parts(f: &Frame, n: usize, m: usize) -> Result<MainParts> {
    let p = &f.p;
    let rg = rgamma(p.s);
    let mut poles = CompensatedSum::new();
    for k in 0..=n {
        poles.add(t_plus(f, k, rg)?);
    }
    for k in 1..=n {
        poles.add(t_minus(f, k, rg)?);
    }
    let mut m_terms = Vec::with_capacity(m);
    let mut dropped = 0;
    if m > 0 {
        let table = cached_shifted_coeffs(p.a, n, m)?;
        let pre = 2.0 * PI * I * (-p.a * f.l).exp();
        for (k, b) in table.values().iter().enumerate() {
            let t = pre * b * cpow(f.l, p.s - 1.0 - k as f64) * rgamma(p.s - k as f64);
            if t.re.is_finite() && t.im.is_finite() {
                m_terms.push(t);
            } else {
                dropped += 1;
                m_terms.push(Complex64::new(0.0, 0.0));
            }
        }
    }
    Ok(MainParts {
        poles: poles.value(),
        m_terms,
        dropped,
    })
}

/// The pole-subtracted large-`z` approximation with `N` subtracted poles and
/// `M = choose_optimal_m` terms of the `b_{m,N}` series.
///
/// The residue terms beyond `N` are omitted, so the error is `O(z^{−N−1})`.
/// `abs_err_estimate` is the first omitted residue term plus
/// [`remainder_estimate`].
pub fn eval_main_theorem(p: &LerchPoint, n: usize) -> Result<EngineReport> {
    check_main(p, n)?;
    let m = choose_optimal_m(p, n)?;
    main_with_m(p, n, m)
}

pub(crate) fn main_with_m(p: &LerchPoint, n: usize, m: usize) -> Result<EngineReport> {
    check_main(p, n)?;
    let f = Frame::new(p)?;
    let m_used = m.min(MAX_COEFFS);
    let parts = main_parts(&f, n, m_used)?;
    let value = parts.poles + parts.m_terms.iter().sum::<Complex64>();
    let est = residue_term(&f.p, n + 1).norm() + remainder_estimate(p, n, m_used)?;
    let mut rep = EngineReport::new(EngineKind::MainTheorem, value, est);
    rep.n_terms = n;
    rep.m_terms = m_used;
    if m_used < m {
        rep.warn(
            WarningTag::IterationCap,
            format!("M = {m} capped at {MAX_COEFFS} coefficients"),
        );
    }
    if parts.dropped > 0 {
        rep.warn(
            WarningTag::Underflow,
            format!("{} m-series terms were not finite and were dropped", parts.dropped),
        );
    }
    Ok(f.finish(rep))
}

/// Approximations of Φ that keep the first `M` terms of the `m`-series,
/// for `M = 0, …, m_max`, with the residue series beyond `N` restored. Their
/// distance to the true Φ is the `m`-series truncation error alone.
pub fn m_series_partial_sums(p: &LerchPoint, n: usize, m_max: usize) -> Result<Vec<Complex64>> {
    check_main(p, n)?;
    let f = Frame::new(p)?;
    let parts = main_parts(&f, n, m_max.min(MAX_COEFFS))?;
    let (tail, _, _) = residue_tail(&f.p, n + 1, 1e-17, 100_000);
    let mut acc = parts.poles + tail;
    let mut out = Vec::with_capacity(parts.m_terms.len() + 1);
    let fix = |v: Complex64| if f.conjugated { v.conj() } else { v };
    out.push(fix(acc));
    for t in parts.m_terms {
        acc += t;
        out.push(fix(acc));
    }
    Ok(out)
}

/// `|2πi (−z)^{−a} b_m (ln(−z))^{s−1−m} / Γ(s−m)|` for the unsubtracted
/// coefficients, `m < count`: the terms of the divergent log-series of `B`.
pub fn unsubtracted_term_magnitudes(p: &LerchPoint, count: usize) -> Result<Vec<f64>> {
    require_large_z(p, "unsubtracted_term_magnitudes")?;
    let f = Frame::new(p)?;
    let table = taylor_coeffs_g(f.p.a, count)?;
    let pre = 2.0 * PI * (-f.p.a * f.l).exp().norm();
    Ok(table
        .values()
        .iter()
        .enumerate()
        .map(|(k, b)| {
            let sk = f.p.s - k as f64;
            pre * b.norm() * cpow(f.l, sk - 1.0).norm() * rgamma(sk).norm()
        })
        .collect())
}

/// Smallest `N_tail` whose geometric bound on the omitted residue terms is
/// at most `bound`.
pub fn integer_s_tail_len(p: &LerchPoint, s_int: i64, bound: f64) -> usize {
    let rz = p.z.norm().recip();
    let e = -(s_int as f64);
    let mut n = 1usize;
    while n < 100_000 {
        let next = (n as f64 + 1.0 - p.a).norm();
        let q = rz * ((next + 1.0) / next).powf(e);
        let mag = rz.powi(n as i32 + 1) * next.powf(e);
        if q < 1.0 && mag / (1.0 - q) <= bound {
            return n;
        }
        n += 1;
    }
    n
}

/// Integer `s = S`: the log-series of `B` terminates,
///
/// ```text
/// Φ = 2πi (−z)^{−a} Σ_{n<S} b_n L^{S−1−n} / (S−1−n)!  −  (−1)^S Σ_{n=1}^{N_tail} z^{−n} (n−a)^{−S}
/// ```
///
/// and for `S ≤ 0` only the residue series remains.
pub fn eval_integer_s_large_z(p: &LerchPoint, s_int: i64, n_tail: usize) -> Result<EngineReport> {
    require_large_z(p, "eval_integer_s_large_z")?;
    if (p.s - s_int as f64).norm() > 1e-12 {
        return Err(LerchError::domain(
            "eval_integer_s_large_z",
            format!("s = {} is not the integer {s_int}", p.s),
        ));
    }
    let f = Frame::new(p)?;
    let q = &f.p;
    let mut acc = CompensatedSum::new();
    if s_int >= 1 {
        let count = s_int as usize;
        let table = taylor_coeffs_g(q.a, count.max(1))?;
        let pre = 2.0 * PI * I * (-q.a * f.l).exp();
        let mut fact = 1.0;
        let mut terms = vec![Complex64::new(0.0, 0.0); count];
        // n = S−1 down to 0 so the factorial (S−1−n)! builds up.
        for nn in (0..count).rev() {
            let k = count - 1 - nn;
            if k > 0 {
                fact *= k as f64;
            }
            terms[nn] = pre * table.values()[nn] * f.l.powi(k as i32) / fact;
        }
        acc.extend(terms);
    }
    let sgn = if s_int.rem_euclid(2) == 0 { -1.0 } else { 1.0 };
    let mut last = 0.0;
    for n in 1..=n_tail {
        let t = sgn * q.z.powi(-(n as i32)) * (n as f64 - q.a).powi(-s_int as i32);
        acc.add(t);
        last = t.norm();
    }
    let rz = q.z.norm().recip();
    let est = if n_tail == 0 {
        f64::INFINITY
    } else {
        let next = (n_tail as f64 + 1.0 - q.a).norm();
        let ratio = rz * ((next + 1.0) / next).powf(-(s_int as f64));
        let mag = rz.powi(n_tail as i32 + 1) * next.powf(-(s_int as f64));
        if ratio < 1.0 {
            mag / (1.0 - ratio)
        } else {
            last
        }
    };
    let mut rep = EngineReport::new(EngineKind::IntegerS, acc.value(), est);
    rep.n_terms = n_tail;
    rep.m_terms = s_int.max(0) as usize;
    Ok(f.finish(rep))
}
