//! Logarithm and power conventions.
//!
//! `ln(-z)` carries the cut of the large-`z` machinery. Off the real half-line
//! `z > 0` it is the principal logarithm, so `Im ln(-z) ∈ (-π, π)`. For real
//! `z > 0` the value sits on the cut and a [`CutSide`] picks the limit:
//! `Above` is `z + i0` with `Im ln(-z) = -π`, `Below` is `z - i0` with `+π`.
//! Under conjugation `(z, side) ↦ (z̄, side.flip())` the logarithm conjugates.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::{LerchError, Result};

/// Side of the cut `z ∈ [1, ∞)` used for real `z > 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CutSide {
    /// Limit from `Im z > 0`.
    #[default]
    Above,
    /// Limit from `Im z < 0`.
    Below,
}

impl CutSide {
    pub fn flip(self) -> Self {
        match self {
            CutSide::Above => CutSide::Below,
            CutSide::Below => CutSide::Above,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LogSide {
    AboveCut,
    BelowCut,
    OffCut,
}

/// `ln(-z)` together with the side of the cut it was taken on.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BranchedLog {
    pub value: Complex64,
    pub side: LogSide,
}

pub fn log_neg_z(z: Complex64, side: CutSide) -> Result<BranchedLog> {
    if z.re == 0.0 && z.im == 0.0 {
        return Err(LerchError::domain("log_neg_z", "z = 0"));
    }
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(LerchError::domain("log_neg_z", "non-finite z"));
    }
    if z.im == 0.0 && z.re > 0.0 {
        let re = z.re.ln();
        return Ok(match side {
            CutSide::Above => BranchedLog {
                value: Complex64::new(re, -PI),
                side: LogSide::AboveCut,
            },
            CutSide::Below => BranchedLog {
                value: Complex64::new(re, PI),
                side: LogSide::BelowCut,
            },
        });
    }
    let w = -z;
    Ok(BranchedLog {
        value: Complex64::new(w.norm().ln(), w.im.atan2(w.re)),
        side: LogSide::OffCut,
    })
}

/// `ln(1 + v)` accurate for small `|v|` (principal branch).
pub fn ln_1p(v: Complex64) -> Complex64 {
    let re = 0.5 * (2.0 * v.re + v.norm_sqr()).ln_1p();
    let im = v.im.atan2(1.0 + v.re);
    Complex64::new(re, im)
}

/// Principal power `base^exponent = exp(exponent · ln base)`; `0^e` is `0`
/// for `Re e > 0` and `1` for `e = 0`.
pub fn cpow(base: Complex64, exponent: Complex64) -> Complex64 {
    if base.re == 0.0 && base.im == 0.0 {
        if exponent.re == 0.0 && exponent.im == 0.0 {
            return Complex64::new(1.0, 0.0);
        }
        if exponent.re > 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        return Complex64::new(f64::INFINITY, 0.0);
    }
    (exponent * base.ln()).exp()
}

/// The integer `n` if `|x - n| ≤ tol`.
pub fn nearest_integer(x: Complex64, tol: f64) -> Option<i64> {
    let n = x.re.round();
    if (x.re - n).abs() <= tol && x.im.abs() <= tol {
        Some(n as i64)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn negative_real_axis_has_zero_imaginary_part() {
        let l = log_neg_z(Complex64::new(-5.0, 0.0), CutSide::Above).unwrap();
        assert_eq!(l.side, LogSide::OffCut);
        assert!((l.value.re - 5f64.ln()).abs() < 1e-16);
        assert_eq!(l.value.im, 0.0);
    }

    #[test]
    fn imaginary_axis() {
        let l = log_neg_z(Complex64::new(0.0, 10.0), CutSide::Above).unwrap();
        assert!((l.value.re - 10f64.ln()).abs() < 1e-15);
        assert!((l.value.im + PI / 2.0).abs() < 1e-15);
    }

    #[test]
    fn near_cut_upper_half_plane() {
        // ln|z| and atan2 evaluated independently: ln(10.000005) and atan(0.001) - π.
        let l = log_neg_z(Complex64::new(10.0, 0.01), CutSide::Above).unwrap();
        let modulus = (100.0f64 + 1e-4).sqrt();
        assert!((l.value.re - modulus.ln()).abs() < 1e-15);
        assert!((l.value.im - (0.001f64.atan() - PI)).abs() < 1e-15);
        assert!((l.value.re - 2.3025855).abs() < 1e-7);
        assert!((l.value.im + 3.1405927).abs() < 1e-7);
    }

    #[test]
    fn cut_sides_are_limits() {
        let above = log_neg_z(Complex64::new(10.0, 0.0), CutSide::Above).unwrap();
        let below = log_neg_z(Complex64::new(10.0, 0.0), CutSide::Below).unwrap();
        let up = log_neg_z(Complex64::new(10.0, 1e-12), CutSide::Below).unwrap();
        let down = log_neg_z(Complex64::new(10.0, -1e-12), CutSide::Above).unwrap();
        assert_eq!(above.side, LogSide::AboveCut);
        assert_eq!(below.side, LogSide::BelowCut);
        assert!((above.value - up.value).norm() < 1e-12);
        assert!((below.value - down.value).norm() < 1e-12);
    }

    #[test]
    fn zero_is_a_domain_error() {
        assert!(log_neg_z(Complex64::new(0.0, 0.0), CutSide::Above).is_err());
    }

    #[test]
    fn continuity_in_angle_except_across_positive_axis() {
        let r = 7.0;
        let mut prev: Option<(f64, f64)> = None;
        let steps = 4000;
        for k in 0..=steps {
            let theta = -PI + 0.01 + (2.0 * PI - 0.02) * k as f64 / steps as f64;
            if theta.abs() < 0.05 {
                prev = None;
                continue;
            }
            let z = Complex64::from_polar(r, theta);
            let im = log_neg_z(z, CutSide::Above).unwrap().value.im;
            if let Some((pt, pim)) = prev {
                assert!((im - pim).abs() < 0.01, "jump between {pt} and {theta}");
            }
            prev = Some((theta, im));
        }
    }

    #[test]
    fn ln_1p_small_argument() {
        let v = Complex64::new(1e-12, -3e-13);
        let l = ln_1p(v);
        let expect = v - v * v / 2.0;
        assert!((l - expect).norm() < 1e-27);
    }
}
