use num_complex::Complex64;
use std::f64::consts::PI;

use super::{EngineKind, EngineReport, LerchPoint, WarningTag};
use crate::kernel::{cpow, gamma, hurwitz_zeta, nearest_integer, CutSide};
use crate::sum::CompensatedSum;
use crate::{LerchError, Result};

const DIRECT_TERM_CAP: usize = 1_000_000;

/// Partial sums of `Σ zⁿ (a + n)^{−s}` for `|z| < 1`.
///
/// Stops once `|z|ⁿ |a + n|^{−Re s} / (1 − |z|)` drops below `tol`, and only
/// after the terms have started to decrease; that quantity is the reported
/// estimate.
pub fn eval_series_direct(p: &LerchPoint, tol: f64) -> Result<EngineReport> {
    let r = p.z.norm();
    if r >= 1.0 {
        return Err(LerchError::domain("eval_series_direct", "requires |z| < 1"));
    }
    if p.s.re > 0.0 || p.s.im != 0.0 {
        if let Some(k) = nearest_integer(p.a, 0.0) {
            if k <= 0 {
                return Err(LerchError::Pole {
                    function: "eval_series_direct",
                    at: k,
                });
            }
        }
    }
    let mut acc = CompensatedSum::new();
    let mut zn = Complex64::new(1.0, 0.0);
    let mut bound = f64::INFINITY;
    let mut n = 0usize;
    let mut report = loop {
        let an = p.a + n as f64;
        let term = if an.re == 0.0 && an.im == 0.0 {
            if p.s.re == 0.0 && p.s.im == 0.0 {
                zn
            } else {
                Complex64::new(0.0, 0.0)
            }
        } else {
            zn * cpow(an, -p.s)
        };
        acc.add(term);
        n += 1;
        if r == 0.0 {
            break EngineReport::new(EngineKind::Direct, acc.value(), 0.0);
        }
        zn *= p.z;
        let next = p.a + n as f64;
        let mag = r.powi(n as i32) * next.norm().powf(-p.s.re);
        let decreasing = (n as f64) * (1.0 - r) > -p.s.re.min(0.0) + 1.0;
        bound = mag / (1.0 - r);
        if decreasing && bound < tol {
            break EngineReport::new(EngineKind::Direct, acc.value(), bound);
        }
        if n >= DIRECT_TERM_CAP {
            let mut rep = EngineReport::new(EngineKind::Direct, acc.value(), bound);
            rep.warn(
                WarningTag::IterationCap,
                format!("direct series stopped at {n} terms with tail bound {bound:e}"),
            );
            break rep;
        }
    };
    report.n_terms = n;
    if !report.abs_err_estimate.is_finite() {
        report.abs_err_estimate = bound;
    }
    Ok(report)
}

/// Expansion about the branch point `z = 1`:
///
/// ```text
/// Φ = Γ(1−s) z^{−a} (−ln z)^{s−1} + z^{−a} Σ_{n≥0} ζ(s−n, a) (ln z)ⁿ / n!
/// ```
///
/// On the cut `z > 1` the power `(−ln z)^{s−1}` takes `arg = −π` for
/// [`CutSide::Above`] and `+π` for `Below`.
pub fn eval_near_one(p: &LerchPoint, n_max: usize) -> Result<EngineReport> {
    if let Some(k) = nearest_integer(p.s, 0.0) {
        if k >= 1 {
            return Err(LerchError::domain(
                "eval_near_one",
                "s is a positive integer",
            ));
        }
    }
    if p.z.re == 0.0 && p.z.im == 0.0 {
        return Err(LerchError::domain("eval_near_one", "z = 0"));
    }
    let ln_z = p.z.ln();
    if ln_z.norm() >= 2.0 * PI {
        return Err(LerchError::domain("eval_near_one", "|ln z| >= 2π"));
    }
    let z_pow_a = (-p.a * ln_z).exp();
    let singular = if ln_z.norm() == 0.0 {
        if p.s.re > 1.0 {
            Complex64::new(0.0, 0.0)
        } else {
            return Err(LerchError::domain(
                "eval_near_one",
                "z = 1 is the branch point for Re s <= 1",
            ));
        }
    } else {
        let mut m = -ln_z;
        if p.on_cut() {
            let arg = match p.cut_side {
                CutSide::Above => -PI,
                CutSide::Below => PI,
            };
            m = Complex64::from_polar(ln_z.re.abs(), arg);
        }
        gamma(1.0 - p.s)? * (m.ln() * (p.s - 1.0)).exp()
    };
    let mut acc = CompensatedSum::new();
    let mut power = Complex64::new(1.0, 0.0);
    let mut last = f64::INFINITY;
    let mut used = 0;
    let mut quiet = 0;
    for n in 0..=n_max {
        let term = hurwitz_zeta(p.s - n as f64, p.a)? * power;
        acc.add(term);
        used = n + 1;
        last = term.norm();
        if last <= 1e-16 * acc.value().norm() {
            quiet += 1;
            if quiet >= 2 {
                break;
            }
        } else {
            quiet = 0;
        }
        power *= ln_z / (n + 1) as f64;
    }
    let value = z_pow_a * (singular + acc.value());
    let mut rep = EngineReport::new(EngineKind::NearOne, value, last * z_pow_a.norm());
    rep.n_terms = used;
    if quiet < 2 && used > n_max {
        rep.warn(
            WarningTag::IterationCap,
            format!("near-one series used all {n_max} terms"),
        );
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;

    fn pt(z: Complex64, s: f64, a: f64) -> LerchPoint {
        LerchPoint::new(z, c64(s, 0.0), c64(a, 0.0)).unwrap()
    }

    #[test]
    fn direct_trivial_cases() {
        let r = eval_series_direct(&pt(c64(0.0, 0.0), 0.75, 0.3), 1e-15).unwrap();
        assert!((r.value - c64(0.3f64.powf(-0.75), 0.0)).norm() < 1e-15);
        let z = c64(0.4, 0.2);
        let r = eval_series_direct(&pt(z, 0.0, 0.3), 1e-16).unwrap();
        assert!((r.value - (1.0 - z).inv()).norm() < 1e-14);
        assert!(eval_series_direct(&pt(c64(1.0, 0.0), 2.0, 1.0), 1e-10).is_err());
    }

    #[test]
    fn direct_dilogarithm() {
        let r = eval_series_direct(&pt(c64(0.5, 0.0), 2.0, 1.0), 1e-16).unwrap();
        let l2 = 2f64.ln();
        let expect = 2.0 * (PI * PI / 12.0 - l2 * l2 / 2.0);
        assert!((r.value.re - expect).abs() < 1e-14);
        assert!((r.value.re - 1.164_481_052_930_025).abs() < 1e-14);
    }

    #[test]
    fn near_one_matches_direct() {
        let p = pt(c64(0.9, 0.0), 2.5, 1.2);
        let near = eval_near_one(&p, 80).unwrap();
        let direct = eval_series_direct(&p, 1e-16).unwrap();
        assert!((near.value - direct.value).norm() < 1e-10);
        assert!((near.value.re - 0.853_066_921_932_182_9).abs() < 1e-10);
    }

    #[test]
    fn near_one_close_to_branch_point() {
        let p = pt(c64(1.0 - 1e-6, 0.0), 0.75, 0.3);
        let near = eval_near_one(&p, 60).unwrap();
        assert!((near.value.re - 113.296_279_352_070_81).abs() < 1e-9 * 113.3);
    }

    #[test]
    fn near_one_refusals() {
        assert!(eval_near_one(&pt(c64(0.9, 0.0), 2.0, 0.3), 10).is_err());
        assert!(eval_near_one(&pt(c64(1.0, 0.0), 0.75, 0.3), 10).is_err());
        let r = eval_near_one(&pt(c64(1.0, 0.0), 2.5, 0.3), 40).unwrap();
        let z = hurwitz_zeta(c64(2.5, 0.0), c64(0.3, 0.0)).unwrap();
        assert!((r.value - z).norm() < 1e-12);
    }

    #[test]
    fn near_one_cut_sides_are_conjugate() {
        let above = eval_near_one(&pt(c64(1.5, 0.0), 0.75, 0.3), 80).unwrap();
        let p = LerchPoint::with_side(c64(1.5, 0.0), c64(0.75, 0.0), c64(0.3, 0.0), CutSide::Below).unwrap();
        let below = eval_near_one(&p, 80).unwrap();
        assert!((above.value - below.value.conj()).norm() < 1e-12);
        assert!(above.value.im.abs() > 0.1);
    }
}
