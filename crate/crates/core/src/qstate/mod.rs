//! Pure states, product states and the reduced quantities derived from them.

mod correlation;
mod density;
mod parse;
mod product;
mod state;

pub use correlation::{correlation_tensors, CorrelationTensors};
pub(crate) use correlation::{bloch_of, two_point};
pub use density::{reduced_density, DensityMatrix, Pauli, DENSITY_TOL, MAX_DENSITY_QUBITS};
pub use parse::parse_state;
pub use product::{overlap, partial_inner, BlochVector, ProductState, Qubit};
pub use state::{w_state, PureState, WParams, MAX_DENSE_QUBITS, MAX_QUBITS};
