//! Hurwitz zeta ζ(s, a) = Σ_{k≥0} (a + k)^{-s}.
//!
//! For `Re s ≥ 0`: direct sum until `Re(a + K) ≥ max(10, |s|)`, then the
//! Euler–Maclaurin tail with Bernoulli corrections. For `Re s < 0` the shift
//! sum and the tail cancel catastrophically, so Hermite's integral
//!
//! ```text
//! ζ(s,a) = a^{-s}/2 + a^{1-s}/(s-1) + 2 ∫_0^∞ (a²+t²)^{-s/2} sin(s·atan(t/a)) / (e^{2πt} - 1) dt
//! ```
//!
//! is used instead, with `a` first moved to `Re a ≥ 1`.

use num_complex::Complex64;
use std::f64::consts::PI;

use super::bernoulli::{bernoulli_over_factorial, BERNOULLI_EVEN};
use super::branch::{cpow, ln_1p};
use super::KernelConfig;
use crate::quad::{tanh_sinh, QuadConfig};
use crate::sum::CompensatedSum;
use crate::{LerchError, Result};

pub fn hurwitz_zeta(s: Complex64, a: Complex64) -> Result<Complex64> {
    hurwitz_zeta_with(s, a, &KernelConfig::default())
}

pub fn hurwitz_zeta_with(s: Complex64, a: Complex64, cfg: &KernelConfig) -> Result<Complex64> {
    if s.re == 1.0 && s.im == 0.0 {
        return Err(LerchError::Pole {
            function: "hurwitz_zeta",
            at: 1,
        });
    }
    if a.im == 0.0 && a.re <= 0.0 && a.re == a.re.round() {
        return Err(LerchError::domain(
            "hurwitz_zeta",
            format!("a = {} is a non-positive integer", a.re),
        ));
    }
    if s.re >= 0.0 {
        Ok(euler_maclaurin(s, a, cfg))
    } else {
        hermite(s, a)
    }
}

fn euler_maclaurin(s: Complex64, a: Complex64, cfg: &KernelConfig) -> Complex64 {
    let target = cfg.zeta_min_shift.max(s.norm());
    let mut head = CompensatedSum::new();
    let mut x = a;
    while x.re < target {
        head.add(cpow(x, -s));
        x += 1.0;
    }
    let x_pow = cpow(x, -s);
    let mut tail = x * x_pow / (s - 1.0) + 0.5 * x_pow;
    // (s)_{2j-1} x^{-s-2j+1}
    let inv = x.inv();
    let inv2 = inv * inv;
    let mut rising = s;
    let mut p = x_pow * inv;
    let terms = cfg.zeta_bernoulli_terms.min(BERNOULLI_EVEN.len());
    for j in 1..=terms {
        let term = p * rising * bernoulli_over_factorial(j);
        tail += term;
        if term.norm() <= 1e-18 * tail.norm() {
            break;
        }
        let m = 2.0 * j as f64;
        rising *= (s + (m - 1.0)) * (s + m);
        p *= inv2;
    }
    head.value() + tail
}

fn hermite(s: Complex64, a: Complex64) -> Result<Complex64> {
    let mut head = CompensatedSum::new();
    let mut x = a;
    while x.re < 1.0 {
        head.add(cpow(x, -s));
        x += 1.0;
    }
    let x_pow = cpow(x, -s);
    let closed = 0.5 * x_pow + x * x_pow / (s - 1.0);
    let i = Complex64::i();
    let integrand = |t: f64| -> Complex64 {
        let u = t / x;
        let lp = ln_1p(i * u);
        let lm = ln_1p(-i * u);
        let mean = 0.5 * (lp + lm);
        let angle = (lp - lm) / (2.0 * i);
        x_pow * (-s * mean).exp() * (s * angle).sin() / (2.0 * PI * t).exp_m1()
    };
    let upper = 8.0 + s.norm() + x.norm();
    let cfg = QuadConfig {
        rel_tol: 1e-15,
        max_level: 10,
        ..QuadConfig::default()
    };
    let r = tanh_sinh(integrand, 0.0, upper, &cfg);
    if !r.converged && r.err > 1e-12 * r.value.norm().max(closed.norm()) {
        return Err(LerchError::Accuracy {
            op: "hurwitz_zeta",
            achieved: r.err,
        });
    }
    Ok(head.value() + closed + 2.0 * r.value)
}
