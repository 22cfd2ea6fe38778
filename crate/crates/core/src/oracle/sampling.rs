//! Deterministic random states.
//!
//! Every stream is a ChaCha8 generator keyed by `(seed, stream)`, so work that
//! is split across threads by stream index reproduces the serial result.

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::qstate::{ProductState, PureState, Qubit, WParams};
use crate::Result;

pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn gaussian_complex<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Haar-random single-qubit state.
pub fn random_qubit<R: Rng + ?Sized>(rng: &mut R) -> Qubit {
    loop {
        if let Some(q) = Qubit::normalized([gaussian_complex(rng), gaussian_complex(rng)]) {
            return q;
        }
    }
}

pub fn random_product_state<R: Rng + ?Sized>(qubits: usize, rng: &mut R) -> ProductState {
    ProductState::new((0..qubits).map(|_| random_qubit(rng)).collect())
        .expect("at least one qubit")
}

/// Haar-random dense state on at most [`crate::qstate::MAX_DENSE_QUBITS`] qubits.
pub fn random_pure_state<R: Rng + ?Sized>(qubits: usize, rng: &mut R) -> Result<PureState> {
    let dim = 1usize << qubits.min(crate::qstate::MAX_DENSE_QUBITS);
    let mut amps: Vec<Complex64> = (0..dim).map(|_| gaussian_complex(rng)).collect();
    let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    amps.iter_mut().for_each(|a| *a /= norm);
    PureState::from_dense(qubits, &amps)
}

/// Moduli of Gaussian samples, normalized.
pub fn random_w_params<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<WParams> {
    let raw: Vec<f64> = (0..n)
        .map(|_| rng.sample::<f64, _>(StandardNormal).abs())
        .collect();
    let norm = raw.iter().map(|x| x * x).sum::<f64>().sqrt();
    WParams::new(raw.into_iter().map(|x| x / norm).collect())
}
