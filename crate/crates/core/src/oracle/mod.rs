//! Independent numerical computation of the maximal overlap.
//!
//! [`alternating_maximize`] cycles through the factors, replacing each with
//! its normalized partial inner product; the overlap never decreases and every
//! fixed point satisfies the stationarity equations. [`grid_search`] is a
//! brute-force scan for up to three qubits that shares no code with it.

mod alternating;
mod fixed_point;
mod grid;
pub mod sampling;

pub use alternating::{alternating_maximize, climb, Climb, OracleConfig, OracleResult};
pub use fixed_point::{verify_fixed_point, FixedPointCheck};
pub use grid::{grid_search, GridResult, MAX_GRID_QUBITS, MIN_GRID_RESOLUTION};
