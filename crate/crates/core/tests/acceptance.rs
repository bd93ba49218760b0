//! Acceptance criteria 1–8. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails.

use lerch::coeffs::{shifted_coeffs, taylor_coeffs_g, CoeffMethod};
use lerch::engines::{
    choose_optimal_m, eval_integer_s_large_z, eval_main_theorem, eval_near_one,
    eval_series_direct, eval_symmetric_igamma, fl_log_term_magnitudes, integer_s_tail_len,
    m_series_partial_sums, unsubtracted_term_magnitudes,
};
use lerch::factorial::{eval_factorial_b, factorial_integral, p_n_direct, p_n_stable};
use lerch::kernel::{
    cpow, digamma, gamma, hurwitz_zeta, sinpi, upper_incomplete_gamma,
};
use lerch::oracle::{hp_series, quad_integral, reference_value};
use lerch::{c64, Complex64, LerchPoint};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::f64::consts::PI;

type Check = std::result::Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn point(z: Complex64, s: f64, a: f64) -> LerchPoint {
    LerchPoint::new(z, c64(s, 0.0), c64(a, 0.0)).unwrap()
}

fn within(got: Complex64, want: Complex64, tol: f64) -> bool {
    (got.re - want.re).abs() <= tol && (got.im - want.im).abs() <= tol
}

struct Row {
    z: Complex64,
    phi: Complex64,
    approx: Complex64,
    m: usize,
    scaled: f64,
}

/// Printed table for a = 0.3, s = 3/4, N = 5.
fn table_rows() -> [Row; 4] {
    [
        Row { z: c64(-5.0, 0.0), phi: c64(1.3421782, 0.0), approx: c64(1.3421692, 0.0), m: 9, scaled: 0.140 },
        Row { z: c64(-10.0, 0.0), phi: c64(1.0889334, 0.0), approx: c64(1.0889332, 0.0), m: 13, scaled: 0.158 },
        Row { z: c64(0.0, 10.0), phi: c64(0.98125249, 0.54864116), approx: c64(0.98125270, 0.54864133), m: 16, scaled: 0.269 },
        Row { z: c64(10.0, 0.01), phi: c64(0.52526675, 1.04285831), approx: c64(0.52526654, 1.04285810), m: 22, scaled: 0.297 },
    ]
}

fn criterion_1() -> Check {
    let mut notes = Vec::new();
    for row in table_rows() {
        let p = point(row.z, 0.75, 0.3);
        let r = reference_value(&p).map_err(|e| e.to_string())?;
        ensure(within(r.value, row.phi, 5e-8), format!("z = {}: reference {} vs {}", row.z, r.value, row.phi))?;
        let approx = eval_main_theorem(&p, 5).map_err(|e| e.to_string())?;
        ensure(
            within(approx.value, row.approx, 5e-8),
            format!("z = {}: approximation {} vs {}", row.z, approx.value, row.approx),
        )?;
        let m = choose_optimal_m(&p, 5).map_err(|e| e.to_string())?;
        ensure(m == row.m, format!("z = {}: M = {m}, expected {}", row.z, row.m))?;
        let scaled = (row.z.powi(6) * (r.value - approx.value)).norm();
        ensure(
            (scaled - row.scaled).abs() <= 0.01,
            format!("z = {}: scaled remainder {scaled:.4} vs {}", row.z, row.scaled),
        )?;
        notes.push(format!("{scaled:.3}"));
    }
    Ok(format!("verification table reproduced; M = 9/13/16/22, scaled remainders {}", notes.join("/")))
}

fn criterion_2() -> Check {
    let mut out = Vec::new();
    for k in 0..=3 {
        let z = c64(-5.0 * 2f64.powi(k), 0.0);
        let p = point(z, 0.75, 0.3);
        let r = reference_value(&p).map_err(|e| e.to_string())?;
        let approx = eval_main_theorem(&p, 5).map_err(|e| e.to_string())?;
        let scaled = (z.powi(6) * (r.value - approx.value)).norm();
        ensure(scaled < 1.0, format!("z = {}: scaled remainder {scaled}", z.re))?;
        out.push(format!("{scaled:.3}"));
    }
    Ok(format!("scaled remainders along z = -5·2^k: {}", out.join(", ")))
}

fn criterion_3() -> Check {
    let mut worst: f64 = 0.0;
    for z in [c64(-5.0, 0.0), c64(-10.0, 0.0), c64(0.0, 10.0)] {
        for s_int in -2..=3i64 {
            let p = point(z, s_int as f64, 0.3);
            let tail = integer_s_tail_len(&p, s_int, 1e-14);
            let r = eval_integer_s_large_z(&p, s_int, tail).map_err(|e| e.to_string())?;
            let reference = reference_value(&p).map_err(|e| e.to_string())?;
            let err = (r.value - reference.value).norm();
            worst = worst.max(err);
            ensure(err <= 1e-9, format!("S = {s_int}, z = {z}: error {err:e}"))?;
            if s_int == 0 {
                let exact = (1.0 - z).inv();
                ensure(
                    (r.value - exact).norm() <= 1e-13,
                    format!("S = 0, z = {z}: {} vs 1/(1-z) = {exact}", r.value),
                )?;
            }
        }
    }
    Ok(format!("18 integer-s points, worst deviation from reference {worst:.1e}"))
}

fn random_complex(rng: &mut StdRng, re: (f64, f64), im: (f64, f64)) -> Complex64 {
    c64(rng.gen_range(re.0..re.1), rng.gen_range(im.0..im.1))
}

fn contiguous_defect(
    p: &LerchPoint,
    eval: &dyn Fn(&LerchPoint) -> lerch::Result<Complex64>,
) -> std::result::Result<f64, String> {
    let lhs = eval(p).map_err(|e| e.to_string())?;
    let rhs = cpow(p.a, -p.s) + p.z * eval(&p.with_a(p.a + 1.0)).map_err(|e| e.to_string())?;
    Ok((lhs - rhs).norm() / lhs.norm().max(1.0))
}

fn criterion_4() -> Check {
    let mut rng = StdRng::seed_from_u64(4);
    let mut worst_q: f64 = 0.0;
    for _ in 0..25 {
        let r = rng.gen_range(0.0..0.9);
        let z = Complex64::from_polar(r, rng.gen_range(-PI..PI));
        let s = random_complex(&mut rng, (0.5, 3.0), (-1.0, 1.0));
        let a = c64(rng.gen_range(0.5..3.0), 0.0);
        let h = hp_series(z, s, a).map_err(|e| e.to_string())?;
        let q = quad_integral(z, s, a).map_err(|e| e.to_string())?;
        let err = (h.value - q.value).norm();
        worst_q = worst_q.max(err);
        ensure(err <= 1e-10, format!("z = {z}, s = {s}, a = {a}: series vs quadrature {err:e}"))?;
    }

    type Engine = (&'static str, Box<dyn Fn(&mut StdRng) -> LerchPoint>, Box<dyn Fn(&LerchPoint) -> lerch::Result<Complex64>>);
    let engines: Vec<Engine> = vec![
        (
            "direct",
            Box::new(|rng| {
                let z = Complex64::from_polar(rng.gen_range(0.0..0.8), rng.gen_range(-PI..PI));
                LerchPoint::new(z, random_complex(rng, (0.3, 3.0), (-1.0, 1.0)), random_complex(rng, (0.2, 2.0), (-0.5, 0.5))).unwrap()
            }),
            Box::new(|p| Ok(eval_series_direct(p, 1e-15)?.value)),
        ),
        (
            "near_one",
            Box::new(|rng| {
                let z = Complex64::from_polar(rng.gen_range(0.92..2.0), rng.gen_range(-2.5..2.5));
                LerchPoint::new(z, random_complex(rng, (-1.5, 1.5), (0.1, 1.0)), random_complex(rng, (0.2, 2.0), (-0.5, 0.5))).unwrap()
            }),
            Box::new(|p| Ok(eval_near_one(p, 200)?.value)),
        ),
        (
            "integer_s",
            Box::new(|rng| {
                let z = Complex64::from_polar(rng.gen_range(3.0..30.0), rng.gen_range(-3.1..3.1));
                let s = rng.gen_range(-2..=3) as f64;
                LerchPoint::new(z, c64(s, 0.0), random_complex(rng, (0.1, 0.9), (-0.3, 0.3))).unwrap()
            }),
            Box::new(|p| {
                let k = p.s.re as i64;
                Ok(eval_integer_s_large_z(p, k, integer_s_tail_len(p, k, 1e-14))?.value)
            }),
        ),
        (
            "main_theorem",
            Box::new(|rng| {
                let z = Complex64::from_polar(rng.gen_range(20.0..60.0), rng.gen_range(-3.1..3.1));
                LerchPoint::new(z, random_complex(rng, (0.3, 2.5), (-0.5, 0.5)), random_complex(rng, (0.1, 0.9), (-0.3, 0.3))).unwrap()
            }),
            Box::new(|p| {
                let n = 2 * (p.a.re.ceil() as usize) + 8;
                Ok(eval_main_theorem(p, n)?.value)
            }),
        ),
        (
            "symmetric_igamma",
            Box::new(|rng| {
                let z = Complex64::from_polar(rng.gen_range(2.0..30.0), rng.gen_range(-3.1..3.1));
                LerchPoint::new(z, random_complex(rng, (0.3, 2.5), (-0.5, 0.5)), random_complex(rng, (0.1, 0.9), (-0.3, 0.3))).unwrap()
            }),
            Box::new(|p| Ok(eval_symmetric_igamma(p, 400, 1e-12)?.value)),
        ),
        (
            "oracle",
            Box::new(|rng| {
                let z = Complex64::from_polar(rng.gen_range(0.0..20.0), rng.gen_range(-3.1..3.1));
                LerchPoint::new(z, random_complex(rng, (-1.5, 2.5), (-0.5, 0.5)), random_complex(rng, (0.1, 2.0), (-0.3, 0.3))).unwrap()
            }),
            Box::new(|p| Ok(reference_value(p)?.value)),
        ),
    ];
    let mut summary = Vec::new();
    for (name, gen, eval) in &engines {
        let mut worst: f64 = 0.0;
        for _ in 0..30 {
            let p = gen(&mut rng);
            let d = contiguous_defect(&p, eval.as_ref())?;
            worst = worst.max(d);
            ensure(d <= 1e-8, format!("{name}: contiguous relation off by {d:e} at {p:?}"))?;
        }
        summary.push(format!("{name} {worst:.0e}"));
    }
    Ok(format!(
        "series vs quadrature worst {worst_q:.1e}; contiguous relation worst: {}",
        summary.join(", ")
    ))
}

fn cauchy_coeff(a: Complex64, n: usize) -> Complex64 {
    let dist = (-3..=3)
        .map(|m| (a + m as f64).norm())
        .fold(f64::INFINITY, f64::min);
    let radius = 0.6 * dist;
    let points = 256;
    let mut acc = Complex64::new(0.0, 0.0);
    for k in 0..points {
        let e = Complex64::from_polar(1.0, 2.0 * PI * k as f64 / points as f64);
        let g = Complex64::i() / (2.0 * sinpi(radius * e - a));
        acc += g * e.powi(-(n as i32));
    }
    acc / (points as f64 * radius.powi(n as i32))
}

fn criterion_5() -> Check {
    let mut rng = StdRng::seed_from_u64(5);
    let mut worst_c: f64 = 0.0;
    for _ in 0..10 {
        let a = random_complex(&mut rng, (0.05, 0.95), (-0.5, 0.5));
        let t = taylor_coeffs_g(a, 21).map_err(|e| e.to_string())?;
        for n in 0..=20 {
            let c = cauchy_coeff(a, n);
            let rel = (t.values()[n] - c).norm() / c.norm();
            worst_c = worst_c.max(rel);
            ensure(rel <= 1e-8, format!("a = {a}, n = {n}: recurrence vs Cauchy {rel:e}"))?;
        }
    }
    let a = c64(0.3, 0.0);
    let mut worst_d: f64 = 0.0;
    for n_sub in [1usize, 5, 10] {
        let s = shifted_coeffs(a, n_sub, 31, CoeffMethod::StableZeta).map_err(|e| e.to_string())?;
        let d = shifted_coeffs(a, n_sub, 31, CoeffMethod::DirectSum).map_err(|e| e.to_string())?;
        for n in 0..=30 {
            let rel = (s.values()[n] - d.values()[n]).norm() / s.values()[n].norm();
            worst_d = worst_d.max(rel);
            ensure(rel <= 1e-10, format!("N = {n_sub}, n = {n}: dual path {rel:e}"))?;
        }
    }
    // N = 10 is excluded: the pole at a + N + 1 sits almost as close as a − N − 1
    // and keeps the n = 40 ratio about 11% off.
    let mut tail = Vec::new();
    for n_sub in [1usize, 5] {
        let t = shifted_coeffs(a, n_sub, 61, CoeffMethod::StableZeta).map_err(|e| e.to_string())?;
        let limit = Complex64::i() * if n_sub % 2 == 0 { 1.0 } else { -1.0 } / (2.0 * PI);
        let scaled = |n: usize| t.values()[n] * (a - n_sub as f64 - 1.0).powi(n as i32 + 1);
        let (d40, d60) = ((scaled(40) - limit).norm() / limit.norm(), (scaled(60) - limit).norm() / limit.norm());
        let between = (scaled(40) - scaled(60)).norm() / limit.norm();
        ensure(d60 <= 0.02 && between <= 0.02, format!("N = {n_sub}: tail law deviations {d40:.3}, {d60:.3}"))?;
        tail.push(format!("{d60:.1e}"));
    }
    Ok(format!(
        "Cauchy worst {worst_c:.1e}, dual path worst {worst_d:.1e}, tail law deviation at n = 60: {}",
        tail.join("/")
    ))
}

fn criterion_6() -> Check {
    let p = point(c64(-5.0, 0.0), 0.75, 0.3);
    let reference = reference_value(&p).map_err(|e| e.to_string())?;
    let r = eval_factorial_b(&p, 1e-10, 500).map_err(|e| e.to_string())?;
    let err = (r.value - reference.value).norm();
    ensure(err <= 1e-7 && r.n_terms <= 500, format!("factorial series error {err:e} after {} terms", r.n_terms))?;

    let mut worst: f64 = 0.0;
    for x in [c64(12.0, 3.0), c64(-13.0, 2.0)] {
        for s in [c64(0.75, 0.0)] {
            for n in 0..=6 {
                let d = p_n_direct(x, s, n).map_err(|e| e.to_string())?;
                let st = p_n_stable(x, s, n).map_err(|e| e.to_string())?;
                let rel = (d - st).norm() / d.norm();
                worst = worst.max(rel);
                ensure(rel <= 1e-10, format!("x = {x}, s = {s}, n = {n}: {rel:e}"))?;
            }
        }
    }

    let s = c64(0.75, 0.0);
    let mut drift = Vec::new();
    for n in [1usize, 3, 6] {
        let dev = |r: f64| -> std::result::Result<f64, String> {
            let x = c64(r, 0.0);
            let law = ((-2.0 * PI * Complex64::i() * s).exp() - 1.0)
                * gamma(n as f64 - s + 1.0).map_err(|e| e.to_string())?;
            let v = p_n_stable(x, s, n).map_err(|e| e.to_string())?;
            Ok((v * cpow(x, n as f64 + 1.0 - s) / law - 1.0).norm())
        };
        let (d50, d200) = (dev(50.0)?, dev(200.0)?);
        ensure(d200 < d50, format!("n = {n}: ratio does not approach 1 ({d50:e} -> {d200:e})"))?;
        drift.push(format!("{d50:.1e}->{d200:.1e}"));
    }

    let q = factorial_integral(c64(3.7, 0.0), c64(0.0, 0.0), 4).map_err(|e| e.to_string())?;
    let beta = 24.0 / (3.7 * 4.7 * 5.7 * 6.7 * 7.7);
    let berr = (q.value.re - beta).abs();
    ensure(berr <= 1e-10, format!("Beta identity off by {berr:e}"))?;
    Ok(format!(
        "Φ(-5) error {err:.1e} in {} terms; direct vs stable {worst:.1e}; |ratio-1| {}; Beta {berr:.0e}",
        r.n_terms,
        drift.join(", ")
    ))
}

fn interior_min(v: &[f64]) -> usize {
    v.iter()
        .enumerate()
        .min_by(|x, y| x.1.total_cmp(y.1))
        .map(|(i, _)| i)
        .unwrap()
}

fn criterion_7() -> Check {
    let p = point(c64(-5.0, 0.0), 0.75, 0.3);
    let mags = unsubtracted_term_magnitudes(&p, 31).map_err(|e| e.to_string())?;
    let imin = interior_min(&mags);
    ensure(imin > 0 && imin < 30, format!("unsubtracted terms: minimum at {imin}"))?;
    ensure(mags[30] > mags[imin] && mags[30] > mags[29], "unsubtracted terms do not grow by index 30")?;

    let fl = fl_log_term_magnitudes(&p, 30).map_err(|e| e.to_string())?;
    let fmin = interior_min(&fl);
    ensure(fmin > 0 && fmin < 29, format!("log-series: minimum at {fmin}"))?;

    let q = point(c64(-10.0, 0.0), 0.75, 0.3);
    let truth = eval_symmetric_igamma(&q, 400, 1e-14).map_err(|e| e.to_string())?.value;
    let partials = m_series_partial_sums(&q, 5, 30).map_err(|e| e.to_string())?;
    let errs: Vec<f64> = partials.iter().map(|v| (v - truth).norm()).collect();
    let m_best = interior_min(&errs);
    let m_opt = choose_optimal_m(&q, 5).map_err(|e| e.to_string())?;
    ensure(
        m_best.abs_diff(m_opt) <= 2,
        format!("m-landscape minimum at {m_best}, rule gives {m_opt}"),
    )?;
    Ok(format!(
        "unsubtracted series min at {imin}, log-series min at {fmin}, m-landscape min at {m_best} (rule {m_opt})"
    ))
}

fn criterion_8() -> Check {
    let mut rng = StdRng::seed_from_u64(8);
    let mut worst = [0.0f64; 4];
    let mut count = 0;
    while count < 60 {
        let s = random_complex(&mut rng, (-10.0, 10.0), (-10.0, 10.0));
        if s.norm() > 10.0 || (s.re - s.re.round()).abs() < 0.1 && s.im.abs() < 0.1 {
            continue;
        }
        count += 1;
        let prod = gamma(s).unwrap() * gamma(1.0 - s).unwrap() * sinpi(s) / PI;
        worst[0] = worst[0].max((prod - 1.0).norm());
    }
    for _ in 0..60 {
        let s = random_complex(&mut rng, (-5.0, 5.0), (-3.0, 3.0));
        let w = random_complex(&mut rng, (-20.0, 40.0), (-30.0, 30.0));
        let lhs = upper_incomplete_gamma(s + 1.0, w).unwrap();
        let rhs = s * upper_incomplete_gamma(s, w).unwrap() + (s * w.ln() - w).exp();
        worst[1] = worst[1].max((lhs - rhs).norm() / lhs.norm().max(rhs.norm()));
    }
    for _ in 0..60 {
        let s = random_complex(&mut rng, (-10.0, 20.0), (-10.0, 10.0));
        let a = random_complex(&mut rng, (0.05, 5.0), (-2.0, 2.0));
        if (s - 1.0).norm() < 0.1 {
            continue;
        }
        let lhs = hurwitz_zeta(s, a).unwrap();
        let rhs = cpow(a, -s) + hurwitz_zeta(s, a + 1.0).unwrap();
        worst[2] = worst[2].max((lhs - rhs).norm() / lhs.norm().max(rhs.norm()));
    }
    for _ in 0..60 {
        let a = random_complex(&mut rng, (-20.0, 50.0), (-30.0, 30.0));
        let lhs = digamma(a + 1.0).unwrap() - digamma(a).unwrap();
        worst[3] = worst[3].max((lhs - a.inv()).norm() / a.inv().norm());
    }
    ensure(worst[0] <= 1e-12, format!("gamma reflection {:e}", worst[0]))?;
    ensure(worst[1] <= 1e-11, format!("incomplete gamma recurrence {:e}", worst[1]))?;
    ensure(worst[2] <= 1e-11, format!("Hurwitz recurrence {:e}", worst[2]))?;
    ensure(worst[3] <= 1e-12, format!("digamma recurrence {:e}", worst[3]))?;
    Ok(format!(
        "reflection {:.0e}, Γ(s,w) recurrence {:.0e}, ζ recurrence {:.0e}, ψ recurrence {:.0e}",
        worst[0], worst[1], worst[2], worst[3]
    ))
}

fn main() {
    let criteria: [(&str, fn() -> Check); 8] = [
        ("verification table", criterion_1),
        ("error scaling along z = -5·2^k", criterion_2),
        ("integer-s exactness", criterion_3),
        ("oracle coherence", criterion_4),
        ("coefficient integrity", criterion_5),
        ("factorial series", criterion_6),
        ("divergence demonstrations", criterion_7),
        ("kernel identities", criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = std::time::Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("PASS criterion {}: {name}: {msg} ({secs:.2}s)", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {msg} ({secs:.2}s)", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
