use num_complex::Complex64;
use std::f64::consts::E;

use super::{
    eval_fl_expansion, eval_integer_s_large_z, eval_main_theorem,
    eval_near_one, eval_series_direct, eval_symmetric_igamma, fl_log_term_magnitudes,
    integer_s_tail_len, EngineKind, EngineReport, LerchPoint, WarningTag,
};
use crate::factorial::eval_factorial_b;
use crate::kernel::{cpow, nearest_integer};
use crate::oracle::reference_value;
use crate::sum::CompensatedSum;
use crate::{LerchError, Result};

/// Largest `N` tried by the dispatcher for the pole-subtracted engine.
pub const AUTO_MAX_N: usize = 40;
const SYMMETRIC_N_MAX: usize = 400;
const NEAR_ONE_TERMS: usize = 200;
const FACTORIAL_MAX_TERMS: usize = 500;

fn oracle_report(p: &LerchPoint) -> Result<EngineReport> {
    let r = reference_value(p)?;
    Ok(EngineReport::new(EngineKind::Oracle, r.value, r.err_bar))
}

fn near_one_applies(p: &LerchPoint) -> bool {
    let positive_int = matches!(nearest_integer(p.s, 0.0), Some(k) if k >= 1);
    !positive_int && p.z.ln().norm() < 2.0 * std::f64::consts::PI && p.z != Complex64::new(1.0, 0.0)
}

/// `N` schedule for the pole-subtracted engine: start at `⌈Re a⌉ + 2`,
/// double, never beyond `max(start, min(40, ⌊|z|⌋ − 1))`.
fn n_schedule(p: &LerchPoint) -> Vec<usize> {
    let start = p.a.re.ceil().max(0.0) as usize + 2;
    let usable = (p.z.norm().floor() as usize).saturating_sub(1);
    let cap = start.max(usable.min(AUTO_MAX_N));
    let mut out = vec![start];
    let mut n = start;
    while n < cap {
        n = (2 * n).min(cap);
        out.push(n);
    }
    out
}

fn best_main(p: &LerchPoint, tol: f64) -> Result<EngineReport> {
    let mut best: Option<EngineReport> = None;
    for n in n_schedule(p) {
        let r = eval_main_theorem(p, n)?;
        let done = r.abs_err_estimate <= tol;
        if best.as_ref().map_or(true, |b| r.abs_err_estimate < b.abs_err_estimate) {
            best = Some(r);
        }
        if done {
            break;
        }
    }
    Ok(best.expect("schedule is never empty"))
}

fn large_z(p: &LerchPoint, tol: f64) -> Result<EngineReport> {
    if nearest_integer(p.a, 0.0).is_some() {
        let mut r = oracle_report(p)?;
        r.warn(WarningTag::Fallback, "integer a: large-z engines do not apply");
        return Ok(r);
    }
    if let Some(k) = nearest_integer(p.s, 1e-12) {
        let q = LerchPoint {
            s: Complex64::new(k as f64, 0.0),
            ..*p
        };
        let tail = integer_s_tail_len(&q, k, tol.min(1e-12));
        return eval_integer_s_large_z(&q, k, tail);
    }
    let main = best_main(p, tol)?;
    if main.abs_err_estimate <= tol {
        return Ok(main);
    }
    let mut sym = eval_symmetric_igamma(p, SYMMETRIC_N_MAX, tol)?;
    let mut pick = if sym.abs_err_estimate < main.abs_err_estimate {
        sym.warn(
            WarningTag::Fallback,
            format!(
                "main theorem reached only {:e} (N = {})",
                main.abs_err_estimate, main.n_terms
            ),
        );
        sym
    } else {
        main
    };
    if pick.abs_err_estimate > tol && !pick.hit_cap() {
        pick.warn(
            WarningTag::IterationCap,
            format!("no engine reached tol {tol:e}; best estimate {:e}", pick.abs_err_estimate),
        );
    }
    Ok(pick)
}

/// Routes by `|z|`: the defining series for `|z| ≤ 0.9`, the expansion about
/// `z = 1` (or the oracle) up to `|z| < e`, and the large-`z` engines
/// beyond. `Re a ≤ 0` is shifted into the right half plane first for the
/// large-`z` engines.
pub fn eval_auto(p: &LerchPoint, target_tol: f64) -> Result<EngineReport> {
    let r = p.z.norm();
    if r <= 0.9 {
        return eval_series_direct(p, target_tol);
    }
    if r < E {
        if near_one_applies(p) {
            match eval_near_one(p, NEAR_ONE_TERMS) {
                Ok(rep) => return Ok(rep),
                Err(e) if !e.is_domain() => return Err(e),
                Err(_) => {}
            }
        }
        if r < 1.0 {
            return eval_series_direct(p, target_tol);
        }
        return oracle_report(p);
    }
    if p.a.re <= 0.0 {
        return shifted(p, target_tol);
    }
    large_z(p, target_tol)
}

/// `Φ(z,s,a) = Σ_{k<K} z^k (a+k)^{−s} + z^K Φ(z,s,a+K)` with `Re(a+K) > 0`.
fn shifted(p: &LerchPoint, tol: f64) -> Result<EngineReport> {
    let mut head = CompensatedSum::new();
    let mut zk = Complex64::new(1.0, 0.0);
    let mut b = p.a;
    while b.re <= 0.0 {
        if b.norm() == 0.0 {
            return Err(LerchError::Pole {
                function: "eval_auto",
                at: p.a.re.round() as i64,
            });
        }
        head.add(zk * cpow(b, -p.s));
        zk *= p.z;
        b += 1.0;
    }
    let mut inner = large_z(&p.with_a(b), tol / zk.norm())?;
    inner.value = head.value() + zk * inner.value;
    inner.abs_err_estimate *= zk.norm();
    Ok(inner)
}

/// Runs one named engine with default truncations, or [`eval_auto`] for
/// `None`. `n` overrides the engine's main truncation parameter.
pub fn eval_engine(
    p: &LerchPoint,
    engine: Option<EngineKind>,
    tol: f64,
    n: Option<usize>,
) -> Result<EngineReport> {
    let Some(kind) = engine else {
        return eval_auto(p, tol);
    };
    match kind {
        EngineKind::Direct => eval_series_direct(p, tol),
        EngineKind::NearOne => eval_near_one(p, n.unwrap_or(NEAR_ONE_TERMS)),
        EngineKind::IntegerS => {
            let k = nearest_integer(p.s, 1e-12)
                .ok_or_else(|| LerchError::domain("eval_integer_s_large_z", "s is not an integer"))?;
            let q = LerchPoint {
                s: Complex64::new(k as f64, 0.0),
                ..*p
            };
            let tail = n.unwrap_or_else(|| integer_s_tail_len(&q, k, tol.min(1e-12)));
            eval_integer_s_large_z(&q, k, tail)
        }
        EngineKind::MainTheorem => match n {
            Some(n) => eval_main_theorem(p, n),
            None => best_main(p, tol),
        },
        EngineKind::SymmetricIgamma => eval_symmetric_igamma(p, n.unwrap_or(SYMMETRIC_N_MAX), tol),
        EngineKind::FlExpansion => {
            let nz = n.unwrap_or(5);
            let mags = fl_log_term_magnitudes(p, 60)?;
            let nlog = mags
                .iter()
                .enumerate()
                .min_by(|x, y| x.1.total_cmp(y.1))
                .map(|(i, _)| i)
                .unwrap_or(0);
            eval_fl_expansion(p, nz, nlog)
        }
        EngineKind::Factorial => eval_factorial_b(p, tol, n.unwrap_or(FACTORIAL_MAX_TERMS)),
        EngineKind::Oracle => oracle_report(p),
    }
}
