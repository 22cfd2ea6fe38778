use super::density::{reduced_density, Pauli};
use super::state::PureState;
use crate::{Error, Result};

/// Pauli correlations of a 4-qubit state seen from its first three qubits.
///
/// * `r[k]` is the Bloch vector `Tr[ρ_k σ⃗]` of qubit `k`.
/// * `g[0]`, `g[1]`, `g[2]` correlate the qubit pairs (1,2), (0,2) and (0,1):
///   each pair omits the qubit with the same index.
/// * `h[i][j][k] = Tr[ρ_{012} σᵢ ⊗ σⱼ ⊗ σₖ]`.
///
/// For a W-type state `g[k] = diag(ω_k, ω_k, −r̃_k)`, `r[k] = (0, 0, r_k)` and
/// `h₃₃₃ = −r₄`; the scalar accessors read those entries back out.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationTensors {
    pub r: [[f64; 3]; 3],
    pub g: [[[f64; 3]; 3]; 3],
    pub h: [[[f64; 3]; 3]; 3],
}

impl CorrelationTensors {
    /// `r₁ … r₄`.
    pub fn r_scalars(&self) -> [f64; 4] {
        [self.r[0][2], self.r[1][2], self.r[2][2], -self.h[2][2][2]]
    }

    /// `r̃₁, r̃₂, r̃₃`.
    pub fn r_tilde(&self) -> [f64; 3] {
        [-self.g[0][2][2], -self.g[1][2][2], -self.g[2][2][2]]
    }

    /// `ω₁, ω₂, ω₃`.
    pub fn omega(&self) -> [f64; 3] {
        [self.g[0][0][0], self.g[1][0][0], self.g[2][0][0]]
    }
}

pub fn correlation_tensors(psi: &PureState) -> Result<CorrelationTensors> {
    if psi.qubits() != 4 {
        return Err(Error::WrongQubitCount {
            expected: 4,
            found: psi.qubits(),
        });
    }
    let r = [
        bloch_of(psi, 0)?,
        bloch_of(psi, 1)?,
        bloch_of(psi, 2)?,
    ];
    let g = [
        two_point(psi, 1, 2)?,
        two_point(psi, 0, 2)?,
        two_point(psi, 0, 1)?,
    ];
    let rho = reduced_density(psi, &[0, 1, 2])?;
    let mut h = [[[0.0; 3]; 3]; 3];
    for (i, si) in Pauli::XYZ.iter().enumerate() {
        for (j, sj) in Pauli::XYZ.iter().enumerate() {
            for (k, sk) in Pauli::XYZ.iter().enumerate() {
                h[i][j][k] = rho.expectation(&[*si, *sj, *sk])?;
            }
        }
    }
    Ok(CorrelationTensors { r, g, h })
}

/// `Tr[ρ_k σ⃗]`.
pub(crate) fn bloch_of(psi: &PureState, k: usize) -> Result<[f64; 3]> {
    let rho = reduced_density(psi, &[k])?;
    let mut out = [0.0; 3];
    for (i, s) in Pauli::XYZ.iter().enumerate() {
        out[i] = rho.expectation(&[*s])?;
    }
    Ok(out)
}

/// `Tr[ρ_{jk} σᵢ ⊗ σₗ]` as a 3×3 array.
pub(crate) fn two_point(psi: &PureState, j: usize, k: usize) -> Result<[[f64; 3]; 3]> {
    let rho = reduced_density(psi, &[j, k])?;
    let mut out = [[0.0; 3]; 3];
    for (a, sa) in Pauli::XYZ.iter().enumerate() {
        for (b, sb) in Pauli::XYZ.iter().enumerate() {
            out[a][b] = rho.expectation(&[*sa, *sb])?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qstate::{w_state, WParams};

    #[test]
    fn equal_w4() {
        let t = correlation_tensors(&w_state(&WParams::new(vec![0.5; 4]).unwrap())).unwrap();
        for k in 0..3 {
            assert!((t.r_scalars()[k] - 0.5).abs() < 1e-15);
            assert!((t.omega()[k] - 0.5).abs() < 1e-15);
            assert!(t.r_tilde()[k].abs() < 1e-15);
            let expected = [[0.5, 0.0, 0.0], [0.0, 0.5, 0.0], [0.0, 0.0, 0.0]];
            for i in 0..3 {
                for j in 0..3 {
                    assert!((t.g[k][i][j] - expected[i][j]).abs() < 1e-15);
                }
            }
        }
    }

    #[test]
    fn one_parameter_h333() {
        let q = 0.3f64;
        let t = correlation_tensors(&w_state(&WParams::one_param(4, q).unwrap())).unwrap();
        let r4 = 1.0 - 2.0 * q * q;
        assert!((t.h[2][2][2] + r4).abs() < 1e-15);
        assert!((t.r_scalars()[3] - r4).abs() < 1e-15);
    }

    #[test]
    fn generic_coefficients_match_closed_expressions() {
        let a = [0.1f64, 0.3, 0.5, (1.0f64 - 0.01 - 0.09 - 0.25).sqrt()];
        let t = correlation_tensors(&w_state(&WParams::new(a.to_vec()).unwrap())).unwrap();
        let sq: Vec<f64> = a.iter().map(|x| x * x).collect();
        let total: f64 = sq.iter().sum();
        for k in 0..4 {
            assert!((t.r_scalars()[k] - (total - 2.0 * sq[k])).abs() < 1e-14);
        }
        let omega = [2.0 * a[1] * a[2], 2.0 * a[0] * a[2], 2.0 * a[0] * a[1]];
        let r_tilde = [
            sq[1] + sq[2] - sq[0] - sq[3],
            sq[0] + sq[2] - sq[1] - sq[3],
            sq[0] + sq[1] - sq[2] - sq[3],
        ];
        for k in 0..3 {
            assert!((t.omega()[k] - omega[k]).abs() < 1e-14);
            assert!((t.r_tilde()[k] - r_tilde[k]).abs() < 1e-14);
            assert!((t.g[k][1][1] - omega[k]).abs() < 1e-14);
        }
        assert!((t.g[2][0][0] - 2.0 * a[0] * a[1]).abs() < 1e-15);
        // nonzero h entries
        assert!((t.h[0][0][2] - omega[2]).abs() < 1e-14);
        assert!((t.h[1][1][2] - omega[2]).abs() < 1e-14);
        assert!((t.h[0][2][0] - omega[1]).abs() < 1e-14);
        assert!((t.h[1][2][1] - omega[1]).abs() < 1e-14);
        assert!((t.h[2][0][0] - omega[0]).abs() < 1e-14);
        assert!((t.h[2][1][1] - omega[0]).abs() < 1e-14);
    }

    #[test]
    fn wrong_qubit_count() {
        let psi = w_state(&WParams::new(vec![0.6, 0.8, 0.0]).unwrap());
        assert!(matches!(
            correlation_tensors(&psi),
            Err(Error::WrongQubitCount { expected: 4, found: 3 })
        ));
    }
}
