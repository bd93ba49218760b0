//! Expansion coefficients of `g(t) = i / (2 sin π(t − a))`.
//!
//! * `b_n`: Maclaurin coefficients of `g`, from the quadratic recurrence
//!   seeded with `b_0 = 1/(2i sin πa)` and `b_1 = 2πi b_0² cos πa`.
//! * `b_{n,N}`: coefficients of `g_N`, which is `g` with the `2N + 1` poles
//!   `t = a + m`, `|m| ≤ N`, removed. Two independent evaluations: digamma /
//!   Hurwitz-zeta closed forms, and the partial-fraction tail
//!   `−(i/2π) Σ_{|m|>N} (−1)^m (a + m)^{−n−1}`.
//! * `B_n`: coefficients of the logarithmic series in the two-series
//!   comparison expansion.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::kernel::{cospi, digamma, hurwitz_zeta, nearest_integer, sinpi};
use crate::sum::CompensatedSum;
use crate::{LerchError, Result};

/// Largest table a caller may request.
pub const MAX_COEFFS: usize = 200;
/// Magnitude at which a table is flagged as close to overflow.
pub const GROWTH_LIMIT: f64 = 1e280;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoeffMethod {
    Recurrence,
    StableZeta,
    DirectSum,
}

impl CoeffMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            CoeffMethod::Recurrence => "recurrence",
            CoeffMethod::StableZeta => "stable-zeta",
            CoeffMethod::DirectSum => "direct-sum",
        }
    }
}

/// Immutable table of `b_n` (`subtraction() == None`) or `b_{n,N}`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientTable {
    a: Complex64,
    n_sub: i64,
    values: Vec<Complex64>,
    method: CoeffMethod,
    growth_flag: Option<usize>,
}

impl CoefficientTable {
    fn new(a: Complex64, n_sub: i64, values: Vec<Complex64>, method: CoeffMethod) -> Self {
        let growth_flag = values.iter().position(|v| !(v.norm() <= GROWTH_LIMIT));
        Self {
            a,
            n_sub,
            values,
            method,
            growth_flag,
        }
    }

    pub fn a(&self) -> Complex64 {
        self.a
    }

    /// `N` for a pole-subtracted table, `None` for plain `b_n`.
    pub fn subtraction(&self) -> Option<usize> {
        (self.n_sub >= 0).then_some(self.n_sub as usize)
    }

    /// Raw subtraction order with `−1` for the unsubtracted table.
    pub fn n_sub(&self) -> i64 {
        self.n_sub
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, n: usize) -> Option<Complex64> {
        self.values.get(n).copied()
    }

    pub fn method(&self) -> CoeffMethod {
        self.method
    }

    /// First index whose magnitude exceeded [`GROWTH_LIMIT`] (or was not finite).
    pub fn growth_flag(&self) -> Option<usize> {
        self.growth_flag
    }
}

fn check_count(count: usize) -> Result<()> {
    if count == 0 {
        return Err(LerchError::domain("coefficients", "count must be at least 1"));
    }
    if count > MAX_COEFFS {
        return Err(LerchError::CoefficientCap {
            requested: count,
            cap: MAX_COEFFS,
        });
    }
    Ok(())
}

/// `b_0 … b_{count−1}` by the recurrence.
pub fn taylor_coeffs_g(a: Complex64, count: usize) -> Result<CoefficientTable> {
    check_count(count)?;
    if nearest_integer(a, 0.0).is_some() {
        return Err(LerchError::domain("taylor_coeffs_g", "a is an integer"));
    }
    let i = Complex64::i();
    let b0 = (2.0 * i * sinpi(a)).inv();
    let b1 = 2.0 * PI * i * b0 * b0 * cospi(a);
    let mut b = Vec::with_capacity(count);
    b.push(b0);
    if count > 1 {
        b.push(b1);
    }
    let pi2 = PI * PI;
    while b.len() < count {
        let n = b.len() - 2;
        let mut acc = Complex64::new(0.0, 0.0);
        for m in 0..=n {
            let w = 2.0 * ((m + 1) * (n - m + 1)) as f64;
            acc += w * b[m + 1] * b[n - m + 1] + pi2 * b[m] * b[n - m];
        }
        for m in 0..n {
            acc -= ((m + 2) * (m + 1)) as f64 * b[m + 2] * b[n - m];
        }
        b.push(acc / (((n + 2) * (n + 1)) as f64 * b0));
    }
    Ok(CoefficientTable::new(a, -1, b, CoeffMethod::Recurrence))
}

fn check_shift(a: Complex64, n_sub: usize) -> Result<()> {
    if let Some(k) = nearest_integer(a, 0.0) {
        if k.unsigned_abs() as usize <= n_sub {
            return Err(LerchError::domain(
                "shifted_coeffs",
                format!("a = {k} coincides with a removed pole"),
            ));
        }
    }
    Ok(())
}

/// `b_{n,N}`, `n < count`, by the requested method (`StableZeta` or `DirectSum`).
pub fn shifted_coeffs(
    a: Complex64,
    n_sub: usize,
    count: usize,
    method: CoeffMethod,
) -> Result<CoefficientTable> {
    check_count(count)?;
    check_shift(a, n_sub)?;
    let values = match method {
        CoeffMethod::StableZeta => shifted_stable(a, n_sub, count)?,
        CoeffMethod::DirectSum => (0..count).map(|n| shifted_tail(a, n_sub, n)).collect(),
        CoeffMethod::Recurrence => {
            return Err(LerchError::domain(
                "shifted_coeffs",
                "the recurrence only produces unsubtracted coefficients",
            ))
        }
    };
    Ok(CoefficientTable::new(a, n_sub as i64, values, method))
}

fn shifted_stable(a: Complex64, n_sub: usize, count: usize) -> Result<Vec<Complex64>> {
    let nn = n_sub as f64;
    let sign = if n_sub % 2 == 0 { 1.0 } else { -1.0 };
    let i = Complex64::i();
    let p1 = (nn + 1.0 + a) / 2.0;
    let p2 = (nn + 2.0 + a) / 2.0;
    let m1 = (nn + 1.0 - a) / 2.0;
    let m2 = (nn + 2.0 - a) / 2.0;
    let mut out = Vec::with_capacity(count);
    let psi = digamma(p1)? - digamma(p2)? - digamma(m1)? + digamma(m2)?;
    out.push(sign / (4.0 * PI * i) * psi);
    let mut scale = 4.0 * PI;
    for n in 1..count {
        scale *= 2.0;
        let s = Complex64::new((n + 1) as f64, 0.0);
        let alt = if n % 2 == 0 { 1.0 } else { -1.0 };
        let z = hurwitz_zeta(s, p2)? - hurwitz_zeta(s, p1)?
            + alt * (hurwitz_zeta(s, m1)? - hurwitz_zeta(s, m2)?);
        out.push(sign / (scale * i) * z);
    }
    Ok(out)
}

/// `Σ_{k≥0} (−1)^k u_k` by the Cohen–Rodriguez Villegas–Zagier weights.
fn alternating_sum(terms: usize, mut u: impl FnMut(usize) -> Complex64) -> Complex64 {
    let n = terms as f64;
    let mut d = (3.0 + 8f64.sqrt()).powf(n);
    d = 0.5 * (d + d.recip());
    let mut b = -1.0;
    let mut c = -d;
    let mut acc = CompensatedSum::new();
    for k in 0..terms {
        c = b - c;
        acc.add(c * u(k));
        let kf = k as f64;
        b *= (kf + n) * (kf - n) / ((kf + 0.5) * (kf + 1.0));
    }
    acc.value() / d
}

const TAIL_TERMS: usize = 40;

/// `−(i/2π) Σ_{|m|>N} (−1)^m (a + m)^{−n−1}` with `±m` paired.
fn shifted_tail(a: Complex64, n_sub: usize, n: usize) -> Complex64 {
    let e = -(n as i32) - 1;
    let first = n_sub + 1;
    let sign = if first % 2 == 0 { 1.0 } else { -1.0 };
    let sum = alternating_sum(TAIL_TERMS, |k| {
        let m = (first + k) as f64;
        (a + m).powi(e) + (a - m).powi(e)
    });
    -Complex64::i() / (2.0 * PI) * sign * sum
}

/// `(i/2π) Σ_{m=−N}^{N} (−1)^m (a + m)^{−n−1}`, the amount by which removing
/// the poles shifts `b_n`.
pub fn subtraction_correction(a: Complex64, n_sub: usize, n: usize) -> Complex64 {
    let e = -(n as i32) - 1;
    let nn = n_sub as i64;
    let sum: CompensatedSum = (-nn..=nn)
        .map(|m| {
            let sign = if m.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
            sign * (a + m as f64).powi(e)
        })
        .collect();
    Complex64::i() / (2.0 * PI) * sum.value()
}

/// Coefficient `B_n(s, a)` of the logarithmic series of the two-series
/// expansion; `B_0` does not depend on `s`.
pub fn fl_coeff_b(s: Complex64, a: Complex64, n: usize) -> Result<Complex64> {
    if n == 0 {
        return Ok(0.5 * (digamma((a + 1.0) / 2.0)? - digamma(a / 2.0)?));
    }
    let mut falling = Complex64::new(1.0, 0.0);
    for k in 1..=n {
        falling *= s - k as f64;
    }
    let sz = Complex64::new((n + 1) as f64, 0.0);
    let diff = hurwitz_zeta(sz, a / 2.0)? - hurwitz_zeta(sz, (a + 1.0) / 2.0)?;
    Ok(falling * diff / 2f64.powi(n as i32 + 1))
}
