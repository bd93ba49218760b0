use crate::args::EvalArgs;
use crate::format::{complex8, sig8, table};
use crate::records::{to_json_line, EvalRecord};
use crate::{error_outcome, Outcome, EXIT_ACCURACY, EXIT_OK};
use lerch::engines::{eval_engine, EngineReport, WarningTag};

/// Accuracy warning: a cap was hit, a term under/overflowed, or an automatic
/// run (no explicit `--n`) missed the requested tolerance.
pub fn accuracy_warning(r: &EngineReport, tol: f64, explicit_n: bool) -> bool {
    r.warnings
        .iter()
        .any(|w| matches!(w.tag, WarningTag::IterationCap | WarningTag::Underflow))
        || (!explicit_n && r.abs_err_estimate > tol)
}

pub fn run(args: &EvalArgs) -> Outcome {
    if !(args.tol > 0.0) {
        return Outcome::fail(crate::EXIT_USAGE, "error: --tol must be positive");
    }
    let p = match super::point(&args.point) {
        Ok(p) => p,
        Err(e) => return error_outcome(&e),
    };
    let r = match eval_engine(&p, args.engine.kind(), args.tol, args.n) {
        Ok(r) => r,
        Err(e) => return error_outcome(&e),
    };
    let code = if accuracy_warning(&r, args.tol, args.n.is_some()) {
        EXIT_ACCURACY
    } else {
        EXIT_OK
    };
    let rec = EvalRecord::new(&p, &r);
    let text = if args.json {
        to_json_line(&rec)
    } else {
        human(&rec)
    };
    Outcome::with_code(text, code)
}

fn human(r: &EvalRecord) -> String {
    let mut rows = vec![
        vec!["value".into(), complex8(lerch::c64(r.value_re, r.value_im))],
        vec!["engine".into(), r.engine.as_str().into()],
        vec!["n_terms".into(), r.n_terms.to_string()],
        vec!["m_terms".into(), r.m_terms.to_string()],
        vec!["est_err".into(), sig8(r.abs_err_estimate)],
    ];
    for w in &r.warnings {
        let tag = serde_json::to_value(w.tag).ok().and_then(|v| v.as_str().map(String::from));
        rows.push(vec!["warning".into(), format!("{}: {}", tag.unwrap_or_default(), w.message)]);
    }
    table(&["field", "value"], &rows)
}
