//! Entanglement witness `Ŵ = P_max(n, q)·𝟙 − |Wₙ(q)⟩⟨Wₙ(q)|`.
//!
//! Stored as the scalar and the W state; the `2ⁿ × 2ⁿ` matrix is only built
//! on request for small `n`. `Tr(Ŵρ) ≥ 0` for every separable `ρ` and
//! `Tr(Ŵ|W⟩⟨W|) = P_max − 1 < 0`.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rayon::prelude::*;

use crate::closed_form::{nearest_wn_one_param, pmax_wn_one_param};
use crate::oracle::climb;
use crate::oracle::sampling::stream_rng;
use crate::qstate::{
    overlap, w_state, DensityMatrix, ProductState, PureState, Qubit, WParams,
    MAX_DENSITY_QUBITS,
};
use crate::{Error, Result};

/// Sweeps spent polishing the best raw sample in [`WitnessOperator::separable_scan`].
const POLISH_SWEEPS: usize = 2000;
const POLISH_TOL: f64 = 1e-15;

#[derive(Debug, Clone, PartialEq)]
pub struct WitnessOperator {
    pub n: usize,
    pub q: f64,
    pub pmax: f64,
    pub w_state: PureState,
}

/// Anything `Ŵ` can be evaluated on.
#[derive(Debug, Clone, Copy)]
pub enum WitnessTarget<'a> {
    Density(&'a DensityMatrix),
    Pure(&'a PureState),
    Product(&'a ProductState),
}

impl<'a> From<&'a DensityMatrix> for WitnessTarget<'a> {
    fn from(rho: &'a DensityMatrix) -> Self {
        WitnessTarget::Density(rho)
    }
}

impl<'a> From<&'a PureState> for WitnessTarget<'a> {
    fn from(psi: &'a PureState) -> Self {
        WitnessTarget::Pure(psi)
    }
}

impl<'a> From<&'a ProductState> for WitnessTarget<'a> {
    fn from(p: &'a ProductState) -> Self {
        WitnessTarget::Product(p)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanResult {
    /// Smallest `Tr(Ŵρ)` seen, polished sample included.
    pub minimum: f64,
    /// Smallest value over the raw samples only.
    pub raw_minimum: f64,
    /// Product state attaining `minimum`.
    pub argmin: ProductState,
}

/// `Ŵ` for `Wₙ(q) = a(|10…0⟩ + …) + q|0…01⟩`, `n ≥ 3`.
pub fn build_witness(n: usize, q: f64) -> Result<WitnessOperator> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("witness needs n ≥ 3, got {n}")));
    }
    let pmax = pmax_wn_one_param(n, q)?.pmax;
    let w_state = w_state(&WParams::one_param(n, q)?);
    Ok(WitnessOperator { n, q, pmax, w_state })
}

impl WitnessOperator {
    /// `Tr(Ŵρ) = P_max·Tr ρ − ⟨W|ρ|W⟩`, via the `n` nonzero amplitudes of W.
    pub fn evaluate<'a>(&self, target: impl Into<WitnessTarget<'a>>) -> Result<f64> {
        match target.into() {
            WitnessTarget::Density(rho) => {
                self.check_qubits(rho.qubits())?;
                let mut w_rho_w = Complex64::new(0.0, 0.0);
                for (i, wi) in self.w_state.iter() {
                    for (j, wj) in self.w_state.iter() {
                        w_rho_w += wi.conj() * rho.get(i as usize, j as usize) * wj;
                    }
                }
                Ok(self.pmax * rho.trace() - w_rho_w.re)
            }
            WitnessTarget::Pure(psi) => {
                self.check_qubits(psi.qubits())?;
                let inner: Complex64 = self
                    .w_state
                    .iter()
                    .map(|(l, w)| w.conj() * psi.amplitude(l))
                    .sum();
                Ok(self.pmax * psi.norm_sqr() - inner.norm_sqr())
            }
            WitnessTarget::Product(p) => {
                self.check_qubits(p.qubits())?;
                Ok(self.pmax - overlap(&self.w_state, p)?.norm_sqr())
            }
        }
    }

    fn check_qubits(&self, found: usize) -> Result<()> {
        if found != self.n {
            return Err(Error::QubitCountMismatch {
                left: self.n,
                right: found,
            });
        }
        Ok(())
    }

    /// Product state where the witness vanishes.
    pub fn nearest(&self) -> Result<ProductState> {
        if 2.0 * self.q * self.q > 1.0 {
            ProductState::one_hot(self.n, self.n - 1)
        } else {
            nearest_wn_one_param(self.n, self.q, 0.0)
        }
    }

    /// Minimum of `Tr(Ŵρ)` over `samples` random pure product states.
    ///
    /// Factors use `cos θ` and `φ` uniform. Sample `i` is drawn from stream `i`
    /// of `seed`, so the result does not depend on the thread count. The best
    /// sample is then polished by alternating updates, which only moves it
    /// within the product states, so `minimum` is still a separable value.
    pub fn separable_scan(&self, samples: usize, seed: u64) -> Result<ScanResult> {
        if samples == 0 {
            return Err(Error::InvalidParameter("samples must be ≥ 1".into()));
        }
        let sample = |i: usize| -> ProductState {
            let mut rng = stream_rng(seed, i as u64);
            let factors = (0..self.n)
                .map(|_| {
                    let cos: f64 = rand::Rng::random_range(&mut rng, -1.0..=1.0);
                    let phi: f64 = rand::Rng::random_range(&mut rng, 0.0..std::f64::consts::TAU);
                    Qubit::from_angles(cos.clamp(-1.0, 1.0).acos(), phi)
                })
                .collect();
            ProductState::new(factors).expect("n ≥ 3")
        };
        let (raw_minimum, best) = (0..samples)
            .into_par_iter()
            .map(|i| {
                let v = self.pmax - overlap(&self.w_state, &sample(i)).map_or(0.0, |z| z.norm_sqr());
                (v, i)
            })
            .reduce(
                || (f64::INFINITY, usize::MAX),
                |a, b| if b.0 < a.0 || (b.0 == a.0 && b.1 < a.1) { b } else { a },
            );
        let start = sample(best);
        let polished = climb(&self.w_state, start.clone(), POLISH_TOL, POLISH_SWEEPS, |_| {})?;
        let polished_value = self.pmax - polished.pmax;
        let (minimum, argmin) = if polished_value < raw_minimum {
            (polished_value, polished.state)
        } else {
            (raw_minimum, start)
        };
        Ok(ScanResult {
            minimum,
            raw_minimum,
            argmin,
        })
    }

    /// Dense `Ŵ`, for `n ≤` [`MAX_DENSITY_QUBITS`].
    pub fn to_dense(&self) -> Result<DMatrix<Complex64>> {
        if self.n > MAX_DENSITY_QUBITS {
            return Err(Error::TooManyQubits {
                qubits: self.n,
                max: MAX_DENSITY_QUBITS,
            });
        }
        let w = self.w_state.to_dense()?;
        let dim = w.len();
        Ok(DMatrix::from_fn(dim, dim, |i, j| {
            let id = if i == j { self.pmax } else { 0.0 };
            Complex64::new(id, 0.0) - w[i] * w[j].conj()
        }))
    }
}
