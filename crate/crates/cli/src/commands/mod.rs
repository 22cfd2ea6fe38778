pub mod nearest;
pub mod pmax;
pub mod sweep;
pub mod verify;

use std::io::Write;

use wgeom_core::{OracleConfig, OracleResult, ProductState, PureState};

use crate::args::OracleArgs;
use crate::format::fmt_g;
use crate::CliError;

pub(crate) fn oracle_config(args: &OracleArgs) -> Result<OracleConfig, CliError> {
    if args.starts == 0 {
        return Err(CliError::Usage("--starts must be ≥ 1".into()));
    }
    Ok(OracleConfig {
        starts: args.starts,
        seed: args.seed,
        ..OracleConfig::default()
    })
}

pub(crate) fn run_oracle(psi: &PureState, args: &OracleArgs) -> Result<OracleResult, CliError> {
    Ok(wgeom_core::oracle::alternating_maximize(psi, &oracle_config(args)?)?)
}

/// One CSV row per factor: amplitudes and Bloch vector.
pub(crate) fn write_factors(out: &mut dyn Write, prod: &ProductState) -> Result<(), CliError> {
    writeln!(out, "qubit,c0_re,c0_im,c1_re,c1_im,bloch_x,bloch_y,bloch_z")?;
    for (k, q) in prod.factors().iter().enumerate() {
        let [c0, c1] = q.amplitudes();
        let s = q.to_bloch();
        let cells = [c0.re, c0.im, c1.re, c1.im, s.x, s.y, s.z].map(fmt_g);
        writeln!(out, "{k},{}", cells.join(","))?;
    }
    Ok(())
}
