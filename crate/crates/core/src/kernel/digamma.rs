use num_complex::Complex64;
use std::f64::consts::PI;

use super::bernoulli::BERNOULLI_EVEN;
use super::gamma::{cospi, sinpi};
use crate::{LerchError, Result};

const SHIFT: f64 = 10.0;

/// Digamma ψ(a) = Γ'(a)/Γ(a).
///
/// Upward recurrence ψ(a) = ψ(a+1) − 1/a until `Re a ≥ 10`, then the
/// asymptotic series `ln a − 1/(2a) − Σ B_{2k}/(2k a^{2k})`. Arguments with
/// negative real part go through the reflection `ψ(a) = ψ(1−a) − π cot(πa)`.
pub fn digamma(a: Complex64) -> Result<Complex64> {
    if a.im == 0.0 && a.re <= 0.0 && a.re == a.re.round() {
        return Err(LerchError::Pole {
            function: "digamma",
            at: a.re as i64,
        });
    }
    if a.re < 0.0 {
        let cot = cospi(a) / sinpi(a);
        return Ok(digamma(1.0 - a)? - PI * cot);
    }
    let mut x = a;
    let mut acc = Complex64::new(0.0, 0.0);
    while x.re < SHIFT {
        acc += x.inv();
        x += 1.0;
    }
    let inv = x.inv();
    let inv2 = inv * inv;
    let mut p = inv2;
    let mut series = Complex64::new(0.0, 0.0);
    for (k, b) in BERNOULLI_EVEN.iter().take(8).enumerate() {
        series += p * (b / (2.0 * (k + 1) as f64));
        p *= inv2;
    }
    Ok(x.ln() - 0.5 * inv - series - acc)
}
