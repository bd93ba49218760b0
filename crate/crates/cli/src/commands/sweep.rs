use crate::args::{OutputFormat, SweepArgs, SweepMode};
use crate::records::{to_csv, to_json_line, ParamValue, SweepRecord};
use crate::{error_outcome, Outcome};
use lerch::engines::{
    choose_optimal_m, eval_main_theorem, m_series_partial_sums, remainder_estimate,
};
use lerch::factorial::factorial_trace;
use lerch::oracle::reference_value;
use lerch::{Complex64, LerchPoint};
use rayon::prelude::*;

fn reference(p: &LerchPoint) -> Option<Complex64> {
    reference_value(p).ok().map(|r| r.value)
}

fn record(name: &str, value: ParamValue, engine: &str, v: Complex64, reference: Option<Complex64>) -> SweepRecord {
    SweepRecord {
        param_name: name.into(),
        param_value: value,
        engine: engine.into(),
        value_re: v.re,
        value_im: v.im,
        abs_err_vs_reference: reference.map(|r| (r - v).norm()),
        est_err: 0.0,
        n_terms: 0,
        m_terms: 0,
        marked: false,
        scaled_remainder: None,
    }
}

/// Main-theorem error as the subtraction order N grows.
fn terms_vs_error(p: &LerchPoint, args: &SweepArgs) -> lerch::Result<Vec<SweepRecord>> {
    let truth = reference(p);
    (args.n_min..=args.n_max)
        .into_par_iter()
        .map(|n| {
            let r = eval_main_theorem(p, n)?;
            let mut rec = record("N", ParamValue::Real(n as f64), r.engine.as_str(), r.value, truth);
            rec.est_err = r.abs_err_estimate;
            rec.n_terms = r.n_terms;
            rec.m_terms = r.m_terms;
            Ok(rec)
        })
        .collect()
}

/// Error of the m-series truncated after M terms, at fixed N.
fn m_landscape(p: &LerchPoint, args: &SweepArgs) -> lerch::Result<Vec<SweepRecord>> {
    let truth = reference(p);
    let m_opt = choose_optimal_m(p, args.n)?;
    let partials = m_series_partial_sums(p, args.n, args.m_max)?;
    partials
        .into_par_iter()
        .enumerate()
        .map(|(m, v)| {
            let mut rec = record("M", ParamValue::Real(m as f64), "main_theorem", v, truth);
            rec.est_err = remainder_estimate(p, args.n, m)?;
            rec.n_terms = args.n;
            rec.m_terms = m;
            rec.marked = m == m_opt;
            Ok(rec)
        })
        .collect()
}

/// |z^{N+1} R_N| along z·factor^k.
fn z_scaling(p: &LerchPoint, args: &SweepArgs) -> lerch::Result<Vec<SweepRecord>> {
    (0..=args.k_max)
        .into_par_iter()
        .map(|k| {
            let z = p.z * args.factor.powi(k as i32);
            let q = LerchPoint { z, ..*p };
            let truth = reference(&q);
            let r = eval_main_theorem(&q, args.n)?;
            let mut rec = record("z", ParamValue::Complex(z), r.engine.as_str(), r.value, truth);
            rec.est_err = r.abs_err_estimate;
            rec.n_terms = r.n_terms;
            rec.m_terms = r.m_terms;
            rec.scaled_remainder = truth.map(|t| (z.powi(args.n as i32 + 1) * (t - r.value)).norm());
            Ok(rec)
        })
        .collect()
}

/// Factorial-series terms: est_err carries |term|, the value the partial sum of B.
fn factorial_trace_rows(p: &LerchPoint, args: &SweepArgs) -> lerch::Result<Vec<SweepRecord>> {
    Ok(factorial_trace(p, args.tol, args.max_terms)?
        .into_iter()
        .map(|t| {
            let mut rec = record("n", ParamValue::Real(t.n as f64), "factorial", t.partial, None);
            rec.est_err = t.term_mag;
            rec.n_terms = t.n + 1;
            rec
        })
        .collect())
}

pub fn records(args: &SweepArgs) -> lerch::Result<Vec<SweepRecord>> {
    let p = LerchPoint::with_side(args.z, args.s, args.a, args.cut_side.into())?;
    match args.mode {
        SweepMode::TermsVsError => terms_vs_error(&p, args),
        SweepMode::MLandscape => m_landscape(&p, args),
        SweepMode::ZScaling => z_scaling(&p, args),
        SweepMode::FactorialTrace => factorial_trace_rows(&p, args),
    }
}

pub fn run(args: &SweepArgs) -> Outcome {
    if args.mode == SweepMode::TermsVsError && args.n_min > args.n_max {
        return Outcome::fail(crate::EXIT_USAGE, "error: --n-min exceeds --n-max");
    }
    match records(args) {
        Ok(rows) => Outcome::ok(match args.format {
            OutputFormat::Csv => to_csv(&rows),
            OutputFormat::Json => rows.iter().map(to_json_line).collect(),
        }),
        Err(e) => error_outcome(&e),
    }
}
