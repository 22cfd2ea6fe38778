//! Turns the state flags into a state plus, where one exists, its closed form.

use std::io::Write;

use wgeom_core::closed_form::{
    pmax_slightly_entangled, pmax_two_qubit, pmax_w3, pmax_w4_two_param, pmax_wn_one_param,
};
use wgeom_core::{parse_state, w_state, OverlapResult, PureState, WParams, NORM_TOL};

use crate::args::StateInput;
use crate::format::fmt_g;
use crate::CliError;

/// Relative tolerance for recognizing equal W coefficients in a state file.
const PATTERN_TOL: f64 = 1e-12;

#[derive(Debug, Clone)]
pub enum Source {
    Wn { n: usize, q: f64 },
    W4 { a: f64, b: f64 },
    W3(WParams),
    File(PureState),
}

#[derive(Debug, Clone)]
pub struct Resolved {
    pub source: Source,
    pub psi: PureState,
}

pub fn resolve(input: &StateInput, err: &mut dyn Write) -> Result<Resolved, CliError> {
    let source = if let Some(v) = &input.wn {
        let n = v[0];
        if n.fract() != 0.0 || !(2.0..=64.0).contains(&n) {
            return Err(CliError::Usage(format!("--wn: qubit count {n} is not an integer ≥ 2")));
        }
        Source::Wn { n: n as usize, q: v[1] }
    } else if let Some(v) = &input.w4 {
        Source::W4 { a: v[0], b: v[1] }
    } else if let Some(v) = &input.w3 {
        Source::W3(rescaled(v, err)?)
    } else if let Some(path) = &input.state {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::File {
            path: path.clone(),
            source,
        })?;
        Source::File(parse_state(&text)?)
    } else {
        return Err(CliError::Usage("no state given".into()));
    };
    let psi = match &source {
        Source::Wn { n, q } => w_state(&WParams::one_param(*n, *q)?),
        Source::W4 { a, b } => w_state(&WParams::two_param(*a, *b)?),
        Source::W3(p) => w_state(p),
        Source::File(psi) => psi.clone(),
    };
    Ok(Resolved { source, psi })
}

/// Command-line coefficients carry few digits, so they are normalized here
/// rather than rejected; a note goes to stderr when that changes anything.
fn rescaled(v: &[f64], err: &mut dyn Write) -> Result<WParams, CliError> {
    if v.iter().any(|x| !x.is_finite() || *x < 0.0) {
        return Err(CliError::Usage("W coefficients must be finite and non-negative".into()));
    }
    let norm_sq: f64 = v.iter().map(|x| x * x).sum();
    if norm_sq == 0.0 {
        return Err(CliError::Usage("W coefficients are all zero".into()));
    }
    if (norm_sq - 1.0).abs() > NORM_TOL {
        writeln!(err, "note: coefficients rescaled by 1/{}", fmt_g(norm_sq.sqrt()))?;
    }
    let norm = norm_sq.sqrt();
    Ok(WParams::new(v.iter().map(|x| x / norm).collect())?)
}

impl Resolved {
    pub fn describe(&self) -> String {
        let list = |v: &[f64]| v.iter().map(|x| fmt_g(*x)).collect::<Vec<_>>().join(" ");
        match &self.source {
            Source::Wn { n, q } => format!("wn {n} {}", fmt_g(*q)),
            Source::W4 { a, b } => format!("w4 {} {}", fmt_g(*a), fmt_g(*b)),
            Source::W3(p) => format!("w3 {}", list(p.coefficients())),
            Source::File(psi) => format!("state {} qubits, {} terms", psi.qubits(), psi.support_len()),
        }
    }

    /// Closed form for this state, if one applies.
    pub fn closed(&self) -> Result<Option<OverlapResult>, CliError> {
        Ok(match &self.source {
            Source::Wn { n, q } => Some(pmax_wn_one_param(*n, *q)?),
            Source::W4 { a, b } => Some(pmax_w4_two_param(*a, *b)?),
            Source::W3(p) => Some(pmax_w3(p)?),
            Source::File(psi) => closed_for_state(psi)?,
        })
    }
}

fn close(x: f64, y: f64) -> bool {
    (x - y).abs() <= PATTERN_TOL * x.abs().max(y.abs()).max(1.0)
}

/// Two-qubit states, and W-type states whose coefficient moduli fit one of
/// the solved patterns.
fn closed_for_state(psi: &PureState) -> Result<Option<OverlapResult>, CliError> {
    if psi.qubits() == 2 {
        return Ok(Some(pmax_two_qubit(psi)?));
    }
    let Some(params) = psi.w_coefficients() else {
        return Ok(None);
    };
    if let Some(r) = pmax_slightly_entangled(&params) {
        return Ok(Some(r));
    }
    let c = params.coefficients();
    let n = c.len();
    if n == 3 {
        return Ok(Some(pmax_w3(&params)?));
    }
    if c[..n - 1].iter().all(|x| close(*x, c[0])) {
        return Ok(Some(pmax_wn_one_param(n, c[n - 1])?));
    }
    if n == 4 && close(c[2], c[3]) {
        return Ok(Some(pmax_w4_two_param(c[0], c[1])?));
    }
    Ok(None)
}
