//! Fixed inputs shared by the benchmarks.

use wgeom_core::oracle::sampling::{random_pure_state, stream_rng};
use wgeom_core::{w_state, PureState, WParams};

pub const SEED: u64 = 42;

pub fn one_param(n: usize, q: f64) -> PureState {
    w_state(&WParams::one_param(n, q).expect("valid parameters"))
}

pub fn random(n: usize) -> PureState {
    random_pure_state(n, &mut stream_rng(SEED, n as u64)).expect("n within dense limit")
}
