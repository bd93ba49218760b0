//! Gamma, reciprocal gamma and log-gamma for complex arguments.
//!
//! Stirling's series after shifting to `Re s ≥ 12`; reflection for
//! `Re s < 1/2`.

use num_complex::Complex64;
use std::f64::consts::PI;

use super::bernoulli::BERNOULLI_EVEN;
use super::branch::ln_1p;
use crate::{LerchError, Result};

const STIRLING_SHIFT: f64 = 12.0;
const STIRLING_TERMS: usize = 10;
const HALF_LN_TWO_PI: f64 = 0.918_938_533_204_672_8;

fn pole_at(s: Complex64) -> Option<i64> {
    if s.im == 0.0 && s.re <= 0.0 && s.re == s.re.round() {
        Some(s.re as i64)
    } else {
        None
    }
}

/// `sin(πs)` with the real part reduced exactly before scaling by π.
pub fn sinpi(s: Complex64) -> Complex64 {
    let n = s.re.round();
    let f = s.re - n;
    let sign = if (n as i64).rem_euclid(2) == 0 { 1.0 } else { -1.0 };
    let (sf, cf) = (PI * f).sin_cos();
    let y = PI * s.im;
    Complex64::new(sign * sf * y.cosh(), sign * cf * y.sinh())
}

/// `cos(πs)`, companion of [`sinpi`].
pub fn cospi(s: Complex64) -> Complex64 {
    let n = s.re.round();
    let f = s.re - n;
    let sign = if (n as i64).rem_euclid(2) == 0 { 1.0 } else { -1.0 };
    let (sf, cf) = (PI * f).sin_cos();
    let y = PI * s.im;
    Complex64::new(sign * cf * y.cosh(), -sign * sf * y.sinh())
}

fn stirling(s: Complex64) -> Complex64 {
    let inv = s.inv();
    let inv2 = inv * inv;
    let mut series = Complex64::new(0.0, 0.0);
    let mut p = inv;
    for (k, b) in BERNOULLI_EVEN.iter().take(STIRLING_TERMS).enumerate() {
        let m = 2.0 * (k + 1) as f64;
        series += p * (b / (m * (m - 1.0)));
        p *= inv2;
    }
    (s - 0.5) * s.ln() - s + HALF_LN_TWO_PI + series
}

/// Γ(s) for `Re s ≥ 1/2` as `exp(stirling) / Π (s + j)`; the product keeps
/// the shift out of the exponent.
fn gamma_right(s: Complex64) -> Complex64 {
    let mut prod = Complex64::new(1.0, 0.0);
    let mut x = s;
    while x.re < STIRLING_SHIFT {
        prod *= x;
        x += 1.0;
    }
    stirling(x).exp() / prod
}

fn log_gamma_right(s: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    let mut x = s;
    while x.re < STIRLING_SHIFT {
        acc += x.ln();
        x += 1.0;
    }
    stirling(x) - acc
}

/// `ln sin(πs)` on the branch continuous in the upper half plane.
fn log_sinpi_upper(s: Complex64) -> Complex64 {
    let i = Complex64::i();
    let e = (i * 2.0 * PI * s).exp();
    -i * PI * s + ln_1p(-e) + Complex64::new(-std::f64::consts::LN_2, PI / 2.0)
}

/// Principal log-gamma: the analytic continuation of the real `ln Γ` from
/// the positive axis, with its cut along the negative real axis (approached
/// from above for real negative arguments).
pub fn log_gamma(s: Complex64) -> Result<Complex64> {
    if let Some(n) = pole_at(s) {
        return Err(LerchError::Pole {
            function: "log_gamma",
            at: n,
        });
    }
    if s.re >= 0.5 {
        return Ok(log_gamma_right(s));
    }
    if s.im < 0.0 {
        return Ok(log_gamma(s.conj())?.conj());
    }
    let ln_pi = PI.ln();
    Ok(ln_pi - log_sinpi_upper(s) - log_gamma_right(1.0 - s))
}

pub fn gamma(s: Complex64) -> Result<Complex64> {
    if let Some(n) = pole_at(s) {
        return Err(LerchError::Pole {
            function: "gamma",
            at: n,
        });
    }
    if s.re >= 0.5 {
        Ok(gamma_right(s))
    } else {
        Ok(PI / (sinpi(s) * gamma_right(1.0 - s)))
    }
}

/// `1/Γ(s)`, entire; exactly zero at the poles of Γ.
pub fn rgamma(s: Complex64) -> Complex64 {
    if pole_at(s).is_some() {
        return Complex64::new(0.0, 0.0);
    }
    if s.re >= 0.5 {
        gamma_right(s).inv()
    } else {
        sinpi(s) * gamma_right(1.0 - s) / PI
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;

    fn rel(a: Complex64, b: Complex64) -> f64 {
        (a - b).norm() / b.norm()
    }

    #[test]
    fn classical_values() {
        assert!(rel(gamma(c64(1.0, 0.0)).unwrap(), c64(1.0, 0.0)) < 1e-14);
        assert!(rel(gamma(c64(0.5, 0.0)).unwrap(), c64(PI.sqrt(), 0.0)) < 1e-14);
        assert!(rel(gamma(c64(0.75, 0.0)).unwrap(), c64(1.225_416_702_465_177_6, 0.0)) < 1e-14);
        assert!(rel(gamma(c64(6.0, 0.0)).unwrap(), c64(120.0, 0.0)) < 1e-14);
    }

    #[test]
    fn complex_reference_values() {
        let cases = [
            (c64(2.5, 1.5), c64(0.309_936_225_840_741_35, 0.734_084_273_621_481_3)),
            (c64(-3.3, 0.7), c64(0.001_151_042_476_115_410_8, 0.083_538_045_489_296_27)),
            (c64(30.2, -4.0), c64(7.074_269_366_903_742e30, -1.127_446_441_313_302_9e31)),
        ];
        for (s, expect) in cases {
            assert!(rel(gamma(s).unwrap(), expect) < 1e-13, "Γ({s})");
        }
    }

    #[test]
    fn log_gamma_branch() {
        let lg = log_gamma(c64(-2.5, 0.1)).unwrap();
        assert!((lg - c64(-0.103_149_244_042_819_2, -9.314_444_268_359_838)).norm() < 1e-12);
        let lg = log_gamma(c64(10.0, -20.0)).unwrap();
        assert!((lg - c64(-1.702_980_443_956_511, -52.660_660_425_584_72)).norm() < 1e-12);
        let lg = log_gamma(c64(-0.5, 0.0)).unwrap();
        assert!((lg.re - (2.0 * PI.sqrt()).ln()).abs() < 1e-14);
        assert!((lg.im + PI).abs() < 1e-14);
    }

    #[test]
    fn poles() {
        assert_eq!(
            gamma(c64(-3.0, 0.0)),
            Err(LerchError::Pole {
                function: "gamma",
                at: -3
            })
        );
        assert!(log_gamma(c64(0.0, 0.0)).is_err());
        assert_eq!(rgamma(c64(-7.0, 0.0)), c64(0.0, 0.0));
    }

    #[test]
    fn rgamma_of_large_negative_argument() {
        // 1/Γ(0.75 - 21) = sin(π(−20.25)) Γ(21.25) / π
        let r = rgamma(c64(-20.25, 0.0));
        let expect = sinpi(c64(-20.25, 0.0)) * gamma(c64(21.25, 0.0)).unwrap() / PI;
        assert!(rel(r, expect) < 1e-13);
    }
}
