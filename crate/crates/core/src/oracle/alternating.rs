use rayon::prelude::*;

use super::fixed_point::verify_fixed_point;
use super::sampling::{random_product_state, stream_rng};
use crate::qstate::{overlap, partial_inner, ProductState, PureState, Qubit};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleConfig {
    /// Independent random starts; the best one wins.
    pub starts: usize,
    /// Stop once a full sweep improves `|⟨prod|ψ⟩|²` by less than this and the
    /// fixed-point residual is below `10·tol`.
    pub tol: f64,
    /// Sweep cap per start.
    pub max_iters: usize,
    pub seed: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            starts: 32,
            tol: 1e-12,
            max_iters: 10_000,
            seed: 42,
        }
    }
}

impl OracleConfig {
    fn validate(&self) -> Result<()> {
        if self.starts == 0 {
            return Err(Error::InvalidParameter("starts must be ≥ 1".into()));
        }
        if !(self.tol > 0.0) || !self.tol.is_finite() {
            return Err(Error::InvalidParameter(format!("tol = {} must be > 0", self.tol)));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OracleResult {
    /// `|⟨nearest|ψ⟩|²`.
    pub pmax: f64,
    pub nearest: ProductState,
    /// Sweeps taken by the winning start.
    pub iterations: usize,
    pub starts_used: usize,
    /// Index of the winning start.
    pub best_start: usize,
    pub converged: bool,
    pub fixed_point_residual: f64,
}

/// Outcome of one ascent from a given product state.
#[derive(Debug, Clone, PartialEq)]
pub struct Climb {
    pub state: ProductState,
    pub pmax: f64,
    pub sweeps: usize,
    pub converged: bool,
    pub residual: f64,
}

/// Alternating ascent from `initial`.
///
/// Each update replaces factor `k` (ascending `k`) by the normalized
/// `⟨⊗_{j≠k} q_j|ψ⟩`; the objective after that update is the squared norm of
/// the partial inner product and is passed to `observe`. A factor whose
/// partial inner product vanishes is left unchanged.
pub fn climb<F>(
    psi: &PureState,
    initial: ProductState,
    tol: f64,
    max_iters: usize,
    mut observe: F,
) -> Result<Climb>
where
    F: FnMut(f64),
{
    let n = psi.qubits();
    let mut state = initial;
    let mut prev = overlap(psi, &state)?.norm_sqr();
    let mut sweeps = 0;
    let mut residual = f64::INFINITY;
    let mut converged = false;

    while sweeps < max_iters {
        let mut current = prev;
        for k in 0..n {
            let v = partial_inner(psi, &state, k)?;
            let value = v[0].norm_sqr() + v[1].norm_sqr();
            if let Some(q) = Qubit::normalized(v) {
                state.set_factor(k, q);
                current = value;
            }
            observe(current);
        }
        sweeps += 1;
        if current - prev < tol {
            residual = verify_fixed_point(psi, &state)?.residual;
            if residual <= 10.0 * tol {
                converged = true;
                break;
            }
        }
        prev = current;
    }
    if !converged {
        residual = verify_fixed_point(psi, &state)?.residual;
    }
    let pmax = overlap(psi, &state)?.norm_sqr();
    Ok(Climb {
        state,
        pmax,
        sweeps,
        converged,
        residual,
    })
}

/// Multi-start alternating maximization. Start `s` is initialized with a
/// Haar-random product state drawn from stream `s` of `config.seed`; starts
/// run in parallel and the best is chosen by `pmax`, lowest index on ties.
pub fn alternating_maximize(psi: &PureState, config: &OracleConfig) -> Result<OracleResult> {
    config.validate()?;
    let n = psi.qubits();
    let climbs: Vec<Climb> = (0..config.starts)
        .into_par_iter()
        .map(|s| {
            let mut rng = stream_rng(config.seed, s as u64);
            let init = random_product_state(n, &mut rng);
            climb(psi, init, config.tol, config.max_iters, |_| {})
        })
        .collect::<Result<_>>()?;

    let (best_start, best) = climbs
        .into_iter()
        .enumerate()
        .reduce(|best, next| if next.1.pmax > best.1.pmax { next } else { best })
        .expect("starts ≥ 1");
    Ok(OracleResult {
        pmax: best.pmax,
        nearest: best.state,
        iterations: best.sweeps,
        starts_used: config.starts,
        best_start,
        converged: best.converged,
        fixed_point_residual: best.residual,
    })
}
