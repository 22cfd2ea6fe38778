use std::io::Write;

use wgeom_core::closed_form::nearest_wn_one_param;
use wgeom_core::{overlap, Regime};

use crate::args::{MethodChoice, NearestArgs};
use crate::commands::{run_oracle, write_factors};
use crate::format::fmt_g;
use crate::input::{resolve, Source};
use crate::{CliError, Outcome};

pub fn run(args: &NearestArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<Outcome, CliError> {
    let target = resolve(&args.input, err)?;
    let closed = if args.method == MethodChoice::Oracle {
        None
    } else {
        match (&target.source, target.closed()?) {
            (Source::Wn { n, q }, Some(c)) if c.regime == Regime::HighlyEntangled => {
                Some(nearest_wn_one_param(*n, *q, args.phi)?)
            }
            (_, c) => c.and_then(|c| c.nearest),
        }
    };
    let (source, prod) = match closed {
        Some(p) => ("closed", p),
        None if args.method == MethodChoice::Closed => {
            return Err(CliError::Usage(
                "no closed-form nearest state for this input; use --method oracle".into(),
            ))
        }
        None => ("oracle", run_oracle(&target.psi, &args.oracle)?.nearest),
    };
    let pmax = overlap(&target.psi, &prod)?.norm_sqr();
    writeln!(out, "# input {}", target.describe())?;
    writeln!(out, "# source {source}")?;
    writeln!(out, "# overlap {}", fmt_g(pmax))?;
    write_factors(out, &prod)?;
    Ok(Outcome::Ok)
}
