//! Convergent expansion of `B` as the symmetric sum
//! `Σ_{n=−N}^{N} zⁿ Γ(s, (a+n)L) / ((a+n)^s Γ(s))`, plus the residue series.
//!
//! The symmetric pair at `±n` decays like `n^{−2}` with sign `(−1)ⁿ`, so the
//! raw partial sums converge slowly. Repeated averaging of consecutive partial
//! sums (Euler's transform of an alternating series) is applied on top.

use num_complex::Complex64;

use super::large_z::{residue_tail, residue_term, t_minus, t_plus};
use super::{require_large_z, EngineKind, EngineReport, Frame, LerchPoint, WarningTag};
use crate::kernel::{nearest_integer, rgamma};
use crate::sum::CompensatedSum;
use crate::{LerchError, Result};

const AVERAGING_DEPTH: usize = 12;

fn averaged(partials: &[Complex64]) -> Complex64 {
    let k = AVERAGING_DEPTH.min(partials.len() - 1);
    let mut row: Vec<Complex64> = partials[partials.len() - 1 - k..].to_vec();
    while row.len() > 1 {
        row = row.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect();
    }
    row[0]
}

struct Symmetric {
    value: Complex64,
    est: f64,
    n: usize,
    capped: bool,
}

fn run(f: &Frame, n_max: usize, tol: f64) -> Result<Symmetric> {
    let p = &f.p;
    let rg = rgamma(p.s);
    let n0 = (p.a.re.ceil().max(0.0) as usize) + 1;
    let n_max = n_max.max(n0 + 2);
    // Residue terms 1..=n_max and everything beyond, so that the residue
    // tail past any N is a suffix sum.
    let (beyond, _, _) = residue_tail(p, n_max + 1, 1e-18, 100_000);
    let res: Vec<Complex64> = (0..=n_max).map(|n| if n == 0 { Complex64::new(0.0, 0.0) } else { residue_term(p, n) }).collect();
    let mut suffix = vec![Complex64::new(0.0, 0.0); n_max + 2];
    suffix[n_max + 1] = beyond;
    for n in (1..=n_max).rev() {
        suffix[n] = suffix[n + 1] + res[n];
    }

    let mut poles = CompensatedSum::new();
    poles.add(t_plus(f, 0, rg)?);
    for n in 1..n0 {
        poles.add(t_plus(f, n, rg)?);
        poles.add(t_minus(f, n, rg)?);
    }
    let mut partials = Vec::new();
    let mut prev: Option<Complex64> = None;
    let mut quiet = 0;
    let mut est = f64::INFINITY;
    for n in n0..=n_max {
        poles.add(t_plus(f, n, rg)?);
        poles.add(t_minus(f, n, rg)?);
        partials.push(poles.value() + suffix[n + 1]);
        if partials.len() <= AVERAGING_DEPTH {
            continue;
        }
        let acc = averaged(&partials);
        if let Some(prev) = prev {
            est = (acc - prev).norm();
            if est < tol {
                quiet += 1;
                if quiet >= 3 {
                    return Ok(Symmetric {
                        value: acc,
                        est,
                        n,
                        capped: false,
                    });
                }
            } else {
                quiet = 0;
            }
        }
        prev = Some(acc);
    }
    Ok(Symmetric {
        value: averaged(&partials),
        est,
        n: n_max,
        capped: true,
    })
}

fn check(p: &LerchPoint) -> Result<()> {
    require_large_z(p, "eval_symmetric_igamma")?;
    if let Some(k) = nearest_integer(p.s, 0.0) {
        if k <= 0 {
            return Err(LerchError::Pole {
                function: "eval_symmetric_igamma",
                at: k,
            });
        }
    }
    Ok(())
}

/// Φ from the symmetric incomplete-gamma sums, `N` growing up to `n_max`
/// until the averaged value changes by less than `tol` three times in a row.
pub fn eval_symmetric_igamma(p: &LerchPoint, n_max: usize, tol: f64) -> Result<EngineReport> {
    check(p)?;
    let f = Frame::new(p)?;
    let r = run(&f, n_max, tol)?;
    let mut rep = EngineReport::new(EngineKind::SymmetricIgamma, r.value, r.est);
    rep.n_terms = r.n;
    if r.capped {
        rep.warn(
            WarningTag::IterationCap,
            format!("N_max = {} reached with increment {:e}", r.n, r.est),
        );
    }
    Ok(f.finish(rep))
}

/// The branch-point part `B = Φ − I` from the symmetric sums, with its
/// increment estimate.
pub fn symmetric_b_part(p: &LerchPoint, n_max: usize, tol: f64) -> Result<(Complex64, f64)> {
    check(p)?;
    let f = Frame::new(p)?;
    let r = run(&f, n_max, tol)?;
    let (res, _, _) = residue_tail(&f.p, 1, 1e-18, 100_000);
    let b = r.value - res;
    Ok((if f.conjugated { b.conj() } else { b }, r.est))
}
