use crate::args::CoeffsArgs;
use crate::records::{to_csv, CoeffRow};
use crate::{error_outcome, Outcome};
use lerch::coeffs::{shifted_coeffs, taylor_coeffs_g, CoeffMethod, CoefficientTable};

fn push(rows: &mut Vec<CoeffRow>, t: &CoefficientTable) {
    rows.extend(t.values().iter().enumerate().map(|(n, v)| CoeffRow {
        n,
        re: v.re,
        im: v.im,
        method: t.method().as_str().into(),
    }));
}

pub fn rows(args: &CoeffsArgs) -> lerch::Result<Vec<CoeffRow>> {
    let count = args.n_max + 1;
    let mut rows = Vec::new();
    match args.subtract {
        None => push(&mut rows, &taylor_coeffs_g(args.a, count)?),
        Some(n_sub) => {
            for m in [CoeffMethod::StableZeta, CoeffMethod::DirectSum] {
                push(&mut rows, &shifted_coeffs(args.a, n_sub, count, m)?);
            }
        }
    }
    Ok(rows)
}

pub fn run(args: &CoeffsArgs) -> Outcome {
    match rows(args) {
        Ok(r) => Outcome::ok(to_csv(&r)),
        Err(e) => error_outcome(&e),
    }
}
