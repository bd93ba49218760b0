//! Reference values independent of the asymptotic engines.
//!
//! * `Quadrature`: `(1/Γ(s)) ∫_0^∞ x^{s−1} e^{−ax} / (1 − z e^{−x}) dx` by
//!   tanh-sinh, for `Re s > 0`. The integrand has poles at `ln z + 2πik`;
//!   when one of them sits near the positive axis (`|z| > 1`, small `arg z`)
//!   the path bends into the half plane away from it. On the cut the bend
//!   direction selects the side, which yields the one-sided limit exactly.
//! * `HpSeries`: the defining series with double-double accumulation.
//! * `HpContinuation`: for `Re s ≤ 0` the integral diverges at the origin;
//!   the piece near 0 is integrated termwise from the Taylor series of
//!   `e^{−ax}/(1 − z e^{−x})`, which continues it analytically in `s`.
//! * `ClosedForm`: `s = −k` gives the rational function
//!   `Φ(z, −k, a) = P_k(z) / (1 − z)^{k+1}`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::engines::{CutSide, LerchPoint};
use crate::kernel::{cpow, nearest_integer, rgamma};
use crate::quad::{tanh_sinh, QuadConfig};
use crate::sum::CompensatedSum;
use crate::{LerchError, Result};

/// Largest `err_bar` of an accepted reference.
pub const MAX_ERR_BAR: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReferenceMethod {
    Quadrature,
    HpSeries,
    HpContinuation,
    ClosedForm,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ReferenceValue {
    pub value: Complex64,
    pub err_bar: f64,
    pub method: ReferenceMethod,
}

/// Integration path `x(u) = u − iσ (u/c) e^{1 − u/c}` (`σ = 0`: the real axis).
#[derive(Debug, Clone, Copy)]
struct Path {
    sigma: f64,
    c: f64,
}

impl Path {
    fn for_point(z: Complex64, side: Option<CutSide>) -> Self {
        let c = z.norm().ln().max(1.0);
        let arg = z.arg();
        if z.norm() <= 1.0 || arg.abs() >= 1.0 {
            return Self { sigma: 0.0, c };
        }
        // Keep the pole near ln|z| + i arg z on its own side of the path.
        let sigma = if z.im > 0.0 {
            1.0
        } else if z.im < 0.0 {
            -1.0
        } else {
            match side.unwrap_or_default() {
                CutSide::Above => 1.0,
                CutSide::Below => -1.0,
            }
        };
        Self { sigma, c }
    }

    fn x(&self, u: f64) -> Complex64 {
        let r = u / self.c;
        Complex64::new(u, -self.sigma * r * (1.0 - r).exp())
    }

    fn dx(&self, u: f64) -> Complex64 {
        let r = u / self.c;
        Complex64::new(1.0, -self.sigma * (1.0 - r) * (1.0 - r).exp() / self.c)
    }
}

fn kernel_f(z: Complex64, a: Complex64, x: Complex64) -> Complex64 {
    (-a * x).exp() / (1.0 - z * (-x).exp())
}

/// Upper end of the integration range and the bound on what lies beyond it.
fn truncation(s: Complex64, a: Complex64, z: Complex64) -> (f64, f64) {
    let target = 40.0 + (1e-16f64).ln().abs();
    let mut x = (target / a.re.min(1.0)).max(50.0);
    let growth = (s.re - 1.0).max(0.0);
    while a.re * x - growth * x.ln() < target {
        x *= 1.5;
    }
    let denom = (1.0 - z.norm() * (-x).exp()).max(0.5);
    let bound = (-a.re * x).exp() * x.powf(s.re - 1.0) / (a.re * denom);
    (x, bound)
}

struct Integral {
    value: Complex64,
    err: f64,
    converged: bool,
}

fn integrate_path(
    z: Complex64,
    s: Complex64,
    a: Complex64,
    path: Path,
    pieces: &[f64],
) -> Integral {
    let cfg = QuadConfig {
        rel_tol: 1e-15,
        max_level: 10,
        ..QuadConfig::default()
    };
    let mut value = Complex64::new(0.0, 0.0);
    let mut err = 0.0;
    let mut converged = true;
    for w in pieces.windows(2) {
        let r = tanh_sinh(
            |u| {
                let x = path.x(u);
                cpow(x, s - 1.0) * kernel_f(z, a, x) * path.dx(u)
            },
            w[0],
            w[1],
            &cfg,
        );
        value += r.value;
        err += r.err;
        converged &= r.converged;
    }
    Integral {
        value,
        err,
        converged,
    }
}

fn breakpoints(start: f64, path: Path, end: f64) -> Vec<f64> {
    let mut pts = vec![start];
    for b in [1.0, 2.0 * path.c, 8.0 * path.c] {
        if b > *pts.last().unwrap() + 1e-12 && b < end {
            pts.push(b);
        }
    }
    pts.push(end);
    pts
}

fn quad_with_side(z: Complex64, s: Complex64, a: Complex64, side: Option<CutSide>) -> Result<ReferenceValue> {
    let path = Path::for_point(z, side);
    let (x_max, tail) = truncation(s, a, z);
    let pts = breakpoints(0.0, path, x_max);
    let r = integrate_path(z, s, a, path, &pts);
    let rg = rgamma(s);
    let value = r.value * rg;
    let err_bar = (r.err + tail) * rg.norm() + 4.0 * f64::EPSILON * value.norm();
    if !r.converged && err_bar > MAX_ERR_BAR * value.norm().max(1.0) {
        return Err(LerchError::Accuracy {
            op: "quad_integral",
            achieved: err_bar,
        });
    }
    Ok(ReferenceValue {
        value,
        err_bar,
        method: ReferenceMethod::Quadrature,
    })
}

/// The integral representation by quadrature.
pub fn quad_integral(z: Complex64, s: Complex64, a: Complex64) -> Result<ReferenceValue> {
    if s.re <= 0.0 {
        return Err(LerchError::domain("quad_integral", "requires Re s > 0"));
    }
    if a.re <= 0.0 {
        return Err(LerchError::domain("quad_integral", "requires Re a > 0"));
    }
    if z.im == 0.0 && z.re >= 1.0 {
        return Err(LerchError::domain("quad_integral", "z lies on [1, ∞)"));
    }
    quad_with_side(z, s, a, None)
}

/// Defining series with compensated accumulation, `|z| < 1`.
pub fn hp_series(z: Complex64, s: Complex64, a: Complex64) -> Result<ReferenceValue> {
    let r = z.norm();
    if r >= 1.0 {
        return Err(LerchError::domain("hp_series", "requires |z| < 1"));
    }
    let mut acc = CompensatedSum::new();
    let mut zn = Complex64::new(1.0, 0.0);
    let mut n = 0usize;
    loop {
        let an = a + n as f64;
        if an.norm() == 0.0 {
            if s.norm() != 0.0 {
                return Err(LerchError::Pole {
                    function: "hp_series",
                    at: -(n as i64),
                });
            }
            acc.add(zn);
        } else {
            acc.add(zn * cpow(an, -s));
        }
        n += 1;
        zn *= z;
        if r == 0.0 {
            return Ok(ReferenceValue {
                value: acc.value(),
                err_bar: 0.0,
                method: ReferenceMethod::HpSeries,
            });
        }
        let next = r.powi(n as i32) * (a + n as f64).norm().powf(-s.re);
        let ratio = r * (((a + n as f64).norm() + 1.0) / (a + n as f64).norm()).powf(-s.re);
        if ratio < 1.0 && next / (1.0 - ratio) < 1e-18 * acc.value().norm().max(1e-300) {
            let err_bar = next / (1.0 - ratio) + 4.0 * f64::EPSILON * acc.value().norm();
            return Ok(ReferenceValue {
                value: acc.value(),
                err_bar,
                method: ReferenceMethod::HpSeries,
            });
        }
        if n > 10_000_000 {
            return Err(LerchError::Accuracy {
                op: "hp_series",
                achieved: next,
            });
        }
    }
}

/// `Φ(z, −k, a) = P_k(z)/(1 − z)^{k+1}` with
/// `P_0 = 1`, `P_k = z(1 − z) P'_{k−1} + k z P_{k−1} + a (1 − z) P_{k−1}`.
pub fn closed_form_negative_integer(z: Complex64, k: u32, a: Complex64) -> Result<Complex64> {
    if z == Complex64::new(1.0, 0.0) {
        return Err(LerchError::domain("closed_form_negative_integer", "z = 1"));
    }
    let mut p = vec![Complex64::new(1.0, 0.0)];
    for j in 1..=k as usize {
        let mut q = vec![Complex64::new(0.0, 0.0); p.len() + 1];
        for (i, &c) in p.iter().enumerate() {
            let fi = i as f64;
            // z(1−z)·(i c z^{i−1}) = i c z^i − i c z^{i+1}
            q[i] += fi * c;
            q[i + 1] -= fi * c;
            q[i + 1] += j as f64 * c;
            q[i] += a * c;
            q[i + 1] -= a * c;
        }
        p = q;
    }
    let mut val = Complex64::new(0.0, 0.0);
    for c in p.iter().rev() {
        val = val * z + c;
    }
    Ok(val / (1.0 - z).powi(k as i32 + 1))
}

/// Taylor coefficients of `e^{−ax} / (1 − z e^{−x})` at `x = 0`, i.e.
/// `(−1)^k Φ(z, −k, a) / k!`, by power-series division.
pub fn kernel_taylor(z: Complex64, a: Complex64, count: usize) -> Vec<Complex64> {
    let mut h = Vec::with_capacity(count);
    let mut e = Vec::with_capacity(count);
    let mut fact = 1.0;
    let mut ak = Complex64::new(1.0, 0.0);
    for k in 0..count {
        if k > 0 {
            fact *= k as f64;
            ak *= -a;
        }
        let sgn = if k % 2 == 0 { 1.0 } else { -1.0 };
        h.push(if k == 0 { 1.0 - z } else { -z * sgn / fact });
        e.push(ak / fact);
    }
    let mut r: Vec<Complex64> = Vec::with_capacity(count);
    for k in 0..count {
        let mut acc = if k == 0 {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        };
        for j in 1..=k {
            acc -= h[j] * r[k - j];
        }
        r.push(acc / h[0]);
    }
    (0..count)
        .map(|k| (0..=k).map(|j| e[j] * r[k - j]).sum())
        .collect()
}

fn continuation(z: Complex64, s: Complex64, a: Complex64, side: Option<CutSide>) -> Result<ReferenceValue> {
    if (z - 1.0).norm() < 1e-12 {
        return Err(LerchError::domain("reference_value", "z = 1"));
    }
    let path = Path::for_point(z, side);
    let ln_z = z.ln();
    let rho = (-1..=1)
        .map(|k| (ln_z + Complex64::new(0.0, 2.0 * PI * k as f64)).norm())
        .fold(f64::INFINITY, f64::min);
    let mut u0 = (rho / 3.0).min(0.5);
    while path.x(u0).norm() > rho / 3.0 {
        u0 *= 0.5;
    }
    let x0 = path.x(u0);
    let coeffs = kernel_taylor(z, a, 80);
    let mut head = CompensatedSum::new();
    let mut xp = cpow(x0, s);
    let mut last = f64::INFINITY;
    for (k, c) in coeffs.iter().enumerate() {
        let t = c * xp / (s + k as f64);
        head.add(t);
        last = t.norm();
        if k > 5 && last < 1e-18 * head.value().norm() {
            break;
        }
        xp *= x0;
    }
    let (x_max, tail) = truncation(s, a, z);
    let pts = breakpoints(u0, path, x_max);
    let r = integrate_path(z, s, a, path, &pts);
    let rg = rgamma(s);
    let value = (head.value() + r.value) * rg;
    let err_bar = (r.err + tail + last) * rg.norm() + 8.0 * f64::EPSILON * value.norm();
    if !r.converged && err_bar > MAX_ERR_BAR * value.norm().max(1.0) {
        return Err(LerchError::Accuracy {
            op: "reference_value",
            achieved: err_bar,
        });
    }
    Ok(ReferenceValue {
        value,
        err_bar,
        method: ReferenceMethod::HpContinuation,
    })
}

/// Best available reference for `p`; `Re a ≤ 0` is first moved into the
/// right half plane with `Φ(z,s,a) = a^{−s} + z Φ(z,s,a+1)`.
pub fn reference_value(p: &LerchPoint) -> Result<ReferenceValue> {
    let (z, s, a) = (p.z, p.s, p.a);
    if let Some(k) = nearest_integer(s, 0.0) {
        if k <= 0 {
            let value = closed_form_negative_integer(z, (-k) as u32, a)?;
            return Ok(ReferenceValue {
                value,
                err_bar: 16.0 * f64::EPSILON * value.norm().max(1.0),
                method: ReferenceMethod::ClosedForm,
            });
        }
    }
    if z.norm() <= 0.9 {
        return hp_series(z, s, a);
    }
    if a.re <= 0.0 {
        let mut shift = CompensatedSum::new();
        let mut zk = Complex64::new(1.0, 0.0);
        let mut b = a;
        while b.re <= 0.0 {
            if b.norm() == 0.0 {
                return Err(LerchError::Pole {
                    function: "reference_value",
                    at: a.re.round() as i64,
                });
            }
            shift.add(zk * cpow(b, -s));
            zk *= z;
            b += 1.0;
        }
        let inner = reference_value(&p.with_a(b))?;
        return Ok(ReferenceValue {
            value: shift.value() + zk * inner.value,
            err_bar: zk.norm() * inner.err_bar,
            method: inner.method,
        });
    }
    if (z - 1.0).norm() == 0.0 {
        return Err(LerchError::Unsupported("z = 1 is the branch point".into()));
    }
    if s.re > 0.0 {
        quad_with_side(z, s, a, Some(p.cut_side))
    } else {
        continuation(z, s, a, Some(p.cut_side))
    }
}
