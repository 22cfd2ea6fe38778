//! Figure-style sweeps as CSV.
//!
//! Rows are computed in parallel and written in parameter order, so the file
//! is byte-identical for identical flags.

use std::io::Write;

use rayon::prelude::*;
use wgeom_core::closed_form::{pmax_w4_two_param, pmax_wn_one_param};
use wgeom_core::{w_state, OverlapResult, WParams};

use crate::args::{Family, SweepArgs, SweepMethod};
use crate::commands::run_oracle;
use crate::format::{fmt_g, printed_abs_diff};
use crate::{CliError, Outcome};

pub const DEFAULT_WN_STEPS: usize = 100;
/// Odd, so that 1/2 is on the default [0, 1] axis.
pub const DEFAULT_W4_STEPS: usize = 41;

fn axis(lo: f64, hi: f64, steps: usize) -> Vec<f64> {
    (0..steps)
        .map(|i| lo + (hi - lo) * i as f64 / (steps - 1) as f64)
        .collect()
}

fn check_range(name: &str, lo: f64, hi: f64) -> Result<(), CliError> {
    if !(0.0 <= lo && lo <= hi && hi <= 1.0) {
        return Err(CliError::Usage(format!(
            "{name} range [{lo}, {hi}] must satisfy 0 ≤ min ≤ max ≤ 1"
        )));
    }
    Ok(())
}

/// `closed,oracle,regime,abs_diff` cells.
fn cells(
    args: &SweepArgs,
    closed: OverlapResult,
    params: &WParams,
) -> Result<String, CliError> {
    let closed_text = args
        .methods
        .contains(&SweepMethod::Closed)
        .then(|| fmt_g(closed.pmax));
    let oracle_text = if args.methods.contains(&SweepMethod::Oracle) {
        Some(fmt_g(run_oracle(&w_state(params), &args.oracle)?.pmax))
    } else {
        None
    };
    let diff = match (&closed_text, &oracle_text) {
        (Some(c), Some(o)) => printed_abs_diff(c, o),
        _ => String::new(),
    };
    Ok(format!(
        "{},{},{},{diff}",
        closed_text.unwrap_or_default(),
        oracle_text.unwrap_or_default(),
        closed.regime
    ))
}

pub fn render(args: &SweepArgs) -> Result<String, CliError> {
    if args.methods.is_empty() {
        return Err(CliError::Usage("--methods is empty".into()));
    }
    let mut csv = String::new();
    let methods: Vec<&str> = args
        .methods
        .iter()
        .map(|m| match m {
            SweepMethod::Closed => "closed",
            SweepMethod::Oracle => "oracle",
        })
        .collect();
    match args.family {
        Family::Wn => {
            let steps = args.steps.unwrap_or(DEFAULT_WN_STEPS);
            if steps < 2 {
                return Err(CliError::Usage("--steps must be ≥ 2".into()));
            }
            check_range("q", args.q_min, args.q_max)?;
            let rows = axis(args.q_min, args.q_max, steps)
                .into_par_iter()
                .map(|q| -> Result<String, CliError> {
                    let closed = pmax_wn_one_param(args.n, q)?;
                    let params = WParams::one_param(args.n, q)?;
                    Ok(format!("{},{}", fmt_g(q), cells(args, closed, &params)?))
                })
                .collect::<Result<Vec<_>, _>>()?;
            csv += &format!(
                "# family wn, n {}, methods {}, seed {}\n",
                args.n,
                methods.join("+"),
                args.oracle.seed
            );
            csv += "q,closed,oracle,regime,abs_diff\n";
            rows.iter().for_each(|r| {
                csv += r;
                csv.push('\n');
            });
        }
        Family::W4 => {
            let steps = args.steps.unwrap_or(DEFAULT_W4_STEPS);
            if steps < 2 {
                return Err(CliError::Usage("--steps must be ≥ 2".into()));
            }
            check_range("a", args.a_min, args.a_max)?;
            check_range("b", args.b_min, args.b_max)?;
            let (a_axis, b_axis) = (
                axis(args.a_min, args.a_max, steps),
                axis(args.b_min, args.b_max, steps),
            );
            let points: Vec<(f64, f64)> = a_axis
                .iter()
                .flat_map(|&a| b_axis.iter().map(move |&b| (a, b)))
                .collect();
            let inside: Vec<(f64, f64)> = points
                .iter()
                .copied()
                .filter(|(a, b)| a * a + b * b <= 1.0)
                .collect();
            let rows = inside
                .par_iter()
                .map(|&(a, b)| -> Result<String, CliError> {
                    let closed = pmax_w4_two_param(a, b)?;
                    let params = WParams::two_param(a, b)?;
                    let q = params.coefficients()[2];
                    Ok(format!(
                        "{},{},{},{}",
                        fmt_g(a),
                        fmt_g(b),
                        fmt_g(q),
                        cells(args, closed, &params)?
                    ))
                })
                .collect::<Result<Vec<_>, _>>()?;
            csv += &format!(
                "# family w4, {steps}x{steps} grid, methods {}, seed {}\n",
                methods.join("+"),
                args.oracle.seed
            );
            csv += &format!(
                "# skipped {} points with a^2 + b^2 > 1\n",
                points.len() - inside.len()
            );
            csv += "a,b,q,closed,oracle,regime,abs_diff\n";
            rows.iter().for_each(|r| {
                csv += r;
                csv.push('\n');
            });
        }
    }
    Ok(csv)
}

pub fn run(args: &SweepArgs, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let csv = render(args)?;
    match &args.out {
        Some(path) => std::fs::write(path, csv).map_err(|source| CliError::File {
            path: path.clone(),
            source,
        })?,
        None => out.write_all(csv.as_bytes())?,
    }
    Ok(Outcome::Ok)
}
