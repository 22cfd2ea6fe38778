//! Maximal product-state overlap of multi-qubit pure states.
//!
//! `P_max(ψ) = max |⟨q₁ q₂ … qₙ|ψ⟩|²` over normalized single-qubit factors.
//! The geometric measure of entanglement is `1 − P_max` and `√P_max` is the
//! injective tensor norm of the amplitude tensor.
//!
//! The crate has three layers:
//!
//! * [`qstate`]: sparse pure states, product states, Bloch vectors, reduced
//!   density matrices and Pauli correlation tensors.
//! * [`closed_form`] and [`stationarity`]: analytic overlaps for two-qubit
//!   states and for W-type states `a₁|10…0⟩ + … + aₙ|0…01⟩`, plus the Bloch
//!   vector objective and its stationarity residuals.
//! * [`oracle`] and [`witness`]: independent numerical maximization (multi-start
//!   alternating updates, brute-force grid scan), fixed-point checks and the
//!   entanglement witness `P_max·𝟙 − |W⟩⟨W|`.
//!
//! Qubits are indexed from 0 in the API. In basis labels the leftmost bit is
//! qubit 0, so `"100"` is qubit 0 excited.

pub mod closed_form;
mod error;
pub mod oracle;
pub mod qstate;
pub mod stationarity;
pub mod witness;


pub use closed_form::{Method, OverlapResult, Regime};
pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use oracle::{OracleConfig, OracleResult};
pub use witness::{build_witness, WitnessOperator, WitnessTarget};

pub use qstate::{
    overlap, parse_state, partial_inner, reduced_density, w_state, BlochVector,
    CorrelationTensors, DensityMatrix, ProductState, PureState, Qubit, WParams,
};


/// Tolerance on `Σ|c|² = 1` for states, factors and W coefficients.
pub const NORM_TOL: f64 = 1e-9;
