use std::io::Write;

use crate::args::{MethodChoice, PmaxArgs};
use crate::commands::{run_oracle, write_factors};
use crate::format::{fmt_g, printed_abs_diff};
use crate::input::resolve;
use crate::{CliError, Outcome};

pub fn run(args: &PmaxArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<Outcome, CliError> {
    if !(args.tol >= 0.0) {
        return Err(CliError::Usage(format!("--tol {} must be ≥ 0", args.tol)));
    }
    let target = resolve(&args.input, err)?;
    let closed = match args.method {
        MethodChoice::Oracle => None,
        _ => target.closed()?,
    };
    if args.method == MethodChoice::Closed && closed.is_none() {
        return Err(CliError::Usage(
            "no closed form for this state; use --method oracle".into(),
        ));
    }
    let oracle = match args.method {
        MethodChoice::Closed => None,
        _ => Some(run_oracle(&target.psi, &args.oracle)?),
    };

    writeln!(out, "input {}", target.describe())?;
    let closed_text = closed.as_ref().map(|c| fmt_g(c.pmax));
    let oracle_text = oracle.as_ref().map(|o| fmt_g(o.pmax));
    if let Some(c) = &closed_text {
        writeln!(out, "closed {c}")?;
    }
    if let Some(o) = &oracle_text {
        writeln!(out, "oracle {o}")?;
    }
    let mut outcome = Outcome::Ok;
    if let (Some(c), Some(o)) = (&closed, &oracle) {
        let diff = (c.pmax - o.pmax).abs();
        writeln!(out, "abs_diff {}", printed_abs_diff(&fmt_g(c.pmax), &fmt_g(o.pmax)))?;
        if diff > args.tol {
            outcome = Outcome::Mismatch;
            writeln!(err, "closed form and oracle differ by {} > {}", fmt_g(diff), fmt_g(args.tol))?;
        }
    }
    if let Some(c) = &closed {
        writeln!(out, "regime {}", c.regime)?;
        writeln!(out, "method {}", c.method)?;
        if let Some(r) = c.circumradius {
            writeln!(out, "circumradius {}", fmt_g(r))?;
        }
    }
    if let Some(o) = &oracle {
        writeln!(out, "oracle_start {} of {}", o.best_start, o.starts_used)?;
        if !o.converged {
            writeln!(err, "note: oracle hit the iteration limit")?;
        }
    }
    if args.nearest {
        let prod = closed
            .as_ref()
            .and_then(|c| c.nearest.clone())
            .or_else(|| oracle.as_ref().map(|o| o.nearest.clone()));
        match prod {
            Some(p) => write_factors(out, &p)?,
            None => writeln!(err, "note: no nearest state from the closed form; add the oracle")?,
        }
    }
    Ok(outcome)
}
