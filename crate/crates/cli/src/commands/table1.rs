use crate::args::Table1Args;
use crate::format::{complex8, table};
use crate::records::{to_json_line, Table1Row};
use crate::{Outcome, EXIT_ACCURACY, EXIT_OK};
use lerch::engines::{choose_optimal_m, eval_main_theorem};
use lerch::oracle::reference_value;
use lerch::{c64, Complex64, LerchPoint};

pub const A: f64 = 0.3;
pub const S: f64 = 0.75;
pub const N: usize = 5;
pub const VALUE_TOL: f64 = 5e-8;
pub const SCALED_TOL: f64 = 0.01;

/// z, printed Φ, printed approximation, printed M, printed |z⁶ R₅|.
pub fn printed_rows() -> [(Complex64, Complex64, Complex64, usize, f64); 4] {
    [
        (c64(-5.0, 0.0), c64(1.3421782, 0.0), c64(1.3421692, 0.0), 9, 0.140),
        (c64(-10.0, 0.0), c64(1.0889334, 0.0), c64(1.0889332, 0.0), 13, 0.158),
        (c64(0.0, 10.0), c64(0.98125249, 0.54864116), c64(0.98125270, 0.54864133), 16, 0.269),
        (c64(10.0, 0.01), c64(0.52526675, 1.04285831), c64(0.52526654, 1.04285810), 22, 0.297),
    ]
}

fn close(a: Complex64, b: Complex64) -> bool {
    (a.re - b.re).abs() <= VALUE_TOL && (a.im - b.im).abs() <= VALUE_TOL
}

pub fn compute_row(z: Complex64, phi: Complex64, approx: Complex64, m: usize, scaled: f64) -> Table1Row {
    let mut row = Table1Row {
        z,
        reference: None,
        printed_reference: phi,
        approximation: None,
        printed_approximation: approx,
        m_opt: None,
        printed_m_opt: m,
        scaled_remainder: None,
        printed_scaled_remainder: scaled,
        pass: false,
        error: None,
    };
    let p = match LerchPoint::new(z, c64(S, 0.0), c64(A, 0.0)) {
        Ok(p) => p,
        Err(e) => {
            row.error = Some(e.to_string());
            return row;
        }
    };
    let filled = (|| -> lerch::Result<()> {
        row.reference = Some(reference_value(&p)?.value);
        row.approximation = Some(eval_main_theorem(&p, N)?.value);
        row.m_opt = Some(choose_optimal_m(&p, N)?);
        Ok(())
    })();
    if let Err(e) = filled {
        row.error = Some(e.to_string());
        return row;
    }
    let (r, ap, mo) = (row.reference.unwrap(), row.approximation.unwrap(), row.m_opt.unwrap());
    let sc = (z.powi(N as i32 + 1) * (r - ap)).norm();
    row.scaled_remainder = Some(sc);
    row.pass = close(r, phi) && close(ap, approx) && mo == m && (sc - scaled).abs() <= SCALED_TOL;
    row
}

pub fn rows() -> Vec<Table1Row> {
    printed_rows()
        .into_iter()
        .map(|(z, phi, ap, m, sc)| compute_row(z, phi, ap, m, sc))
        .collect()
}

pub fn run(args: &Table1Args) -> Outcome {
    let rows = rows();
    let code = if rows.iter().all(|r| r.pass) { EXIT_OK } else { EXIT_ACCURACY };
    let text = if args.json {
        rows.iter().map(to_json_line).collect()
    } else {
        human(&rows)
    };
    Outcome::with_code(text, code)
}

fn opt<T>(v: Option<T>, f: impl Fn(T) -> String) -> String {
    v.map(f).unwrap_or_else(|| "-".into())
}

fn human(rows: &[Table1Row]) -> String {
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                complex8(r.z),
                opt(r.reference, complex8),
                complex8(r.printed_reference),
                opt(r.approximation, complex8),
                complex8(r.printed_approximation),
                opt(r.m_opt, |m| m.to_string()),
                r.printed_m_opt.to_string(),
                opt(r.scaled_remainder, |x| format!("{x:.3}")),
                format!("{:.3}", r.printed_scaled_remainder),
                if r.pass { "PASS".into() } else { "FAIL".into() },
            ]
        })
        .collect();
    let mut out = format!("a = {A}, s = {S}, N = {N}\n");
    out += &table(
        &["z", "phi", "phi (printed)", "approx", "approx (printed)", "M", "M (printed)", "|z^6 R|", "|z^6 R| (printed)", "status"],
        &body,
    );
    for r in rows {
        if let Some(e) = &r.error {
            out += &format!("z = {}: {e}\n", complex8(r.z));
        }
    }
    out
}
