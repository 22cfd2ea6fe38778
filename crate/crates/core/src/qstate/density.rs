use std::collections::HashMap;

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

use super::state::PureState;
use crate::{Error, Result};

/// Tolerance for the Hermitian, unit-trace and PSD checks.
pub const DENSITY_TOL: f64 = 1e-12;

/// Density matrices are capped at `2^10 × 2^10`.
pub const MAX_DENSITY_QUBITS: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    pub const XYZ: [Pauli; 3] = [Pauli::X, Pauli::Y, Pauli::Z];

    /// Matrix element `σ[row][col]`.
    #[inline]
    pub fn element(self, row: usize, col: usize) -> Complex64 {
        let c = |re, im| Complex64::new(re, im);
        match (self, row, col) {
            (Pauli::I, r, c_) if r == c_ => c(1.0, 0.0),
            (Pauli::X, 0, 1) | (Pauli::X, 1, 0) => c(1.0, 0.0),
            (Pauli::Y, 0, 1) => c(0.0, -1.0),
            (Pauli::Y, 1, 0) => c(0.0, 1.0),
            (Pauli::Z, 0, 0) => c(1.0, 0.0),
            (Pauli::Z, 1, 1) => c(-1.0, 0.0),
            _ => c(0.0, 0.0),
        }
    }
}

/// Density matrix on `qubits` qubits; row/column index bits follow the same
/// leftmost-is-first convention as basis labels.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    qubits: usize,
    entries: DMatrix<Complex64>,
}

impl DensityMatrix {
    /// Validates Hermiticity, unit trace and positivity.
    pub fn new(qubits: usize, entries: DMatrix<Complex64>) -> Result<Self> {
        if qubits == 0 || qubits > MAX_DENSITY_QUBITS {
            return Err(Error::TooManyQubits {
                qubits,
                max: MAX_DENSITY_QUBITS,
            });
        }
        let dim = 1usize << qubits;
        if entries.nrows() != dim || entries.ncols() != dim {
            return Err(Error::InvalidDensityMatrix(format!(
                "expected {dim}×{dim}, got {}×{}",
                entries.nrows(),
                entries.ncols()
            )));
        }
        let rho = Self { qubits, entries };
        rho.validate()?;
        Ok(rho)
    }

    /// `|ψ⟩⟨ψ|`.
    pub fn from_pure(psi: &PureState) -> Result<Self> {
        let keep: Vec<usize> = (0..psi.qubits()).collect();
        reduced_density(psi, &keep)
    }

    /// `Σ wᵢ ρᵢ` for non-negative weights summing to one.
    pub fn mixture(parts: &[(f64, &DensityMatrix)]) -> Result<Self> {
        let first = parts
            .first()
            .ok_or_else(|| Error::InvalidDensityMatrix("empty mixture".into()))?
            .1;
        let mut entries = DMatrix::zeros(first.dim(), first.dim());
        for (w, rho) in parts {
            if rho.qubits != first.qubits {
                return Err(Error::QubitCountMismatch {
                    left: first.qubits,
                    right: rho.qubits,
                });
            }
            entries += rho.entries.map(|z| z * *w);
        }
        Self::new(first.qubits, entries)
    }

    pub fn qubits(&self) -> usize {
        self.qubits
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn entries(&self) -> &DMatrix<Complex64> {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[(row, col)]
    }

    pub fn trace(&self) -> f64 {
        self.entries.diagonal().iter().map(|z| z.re).sum()
    }

    pub fn determinant(&self) -> f64 {
        self.entries.clone().determinant().re
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        let mut ev: Vec<f64> = SymmetricEigen::new(self.entries.clone())
            .eigenvalues
            .iter()
            .copied()
            .collect();
        ev.sort_by(f64::total_cmp);
        ev
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            for j in i..n {
                let d = (self.entries[(i, j)] - self.entries[(j, i)].conj()).norm();
                if d > DENSITY_TOL {
                    return Err(Error::InvalidDensityMatrix(format!(
                        "not Hermitian at ({i},{j}): deviation {d:e}"
                    )));
                }
            }
        }
        let tr = self.trace();
        if (tr - 1.0).abs() > DENSITY_TOL {
            return Err(Error::InvalidDensityMatrix(format!("trace {tr}")));
        }
        let min = self.eigenvalues()[0];
        if min < -DENSITY_TOL {
            return Err(Error::InvalidDensityMatrix(format!(
                "negative eigenvalue {min:e}"
            )));
        }
        Ok(())
    }

    /// `Re Tr(ρ · σ_{p₀} ⊗ σ_{p₁} ⊗ …)`; one Pauli per qubit.
    pub fn expectation(&self, paulis: &[Pauli]) -> Result<f64> {
        if paulis.len() != self.qubits {
            return Err(Error::WrongQubitCount {
                expected: self.qubits,
                found: paulis.len(),
            });
        }
        let n = self.qubits;
        let dim = self.dim();
        let mut acc = Complex64::new(0.0, 0.0);
        for i in 0..dim {
            for j in 0..dim {
                let rho = self.entries[(i, j)];
                if rho == Complex64::new(0.0, 0.0) {
                    continue;
                }
                // Tr(ρP) = Σ ρ_ij P_ji
                let mut p = Complex64::new(1.0, 0.0);
                for (k, s) in paulis.iter().enumerate() {
                    let shift = n - 1 - k;
                    p *= s.element((j >> shift) & 1, (i >> shift) & 1);
                    if p == Complex64::new(0.0, 0.0) {
                        break;
                    }
                }
                acc += rho * p;
            }
        }
        Ok(acc.re)
    }
}

/// Traces out every qubit not in `keep`. The result is ordered by `keep`
/// (first listed qubit is the leftmost index bit) and normalized by `⟨ψ|ψ⟩`.
pub fn reduced_density(psi: &PureState, keep: &[usize]) -> Result<DensityMatrix> {
    let n = psi.qubits();
    if keep.is_empty() {
        return Err(Error::InvalidSubset("empty subset".into()));
    }
    if keep.len() > MAX_DENSITY_QUBITS {
        return Err(Error::TooManyQubits {
            qubits: keep.len(),
            max: MAX_DENSITY_QUBITS,
        });
    }
    let mut in_keep = vec![false; n];
    for &k in keep {
        if k >= n {
            return Err(Error::QubitIndexOutOfRange { index: k, qubits: n });
        }
        if std::mem::replace(&mut in_keep[k], true) {
            return Err(Error::InvalidSubset(format!("qubit {k} listed twice")));
        }
    }

    let m = keep.len();
    let mut env_mask = 0u64;
    for (k, inside) in in_keep.iter().enumerate() {
        if !inside {
            env_mask |= 1 << (n - 1 - k);
        }
    }
    let mut blocks: HashMap<u64, Vec<(usize, Complex64)>> = HashMap::new();
    for (label, a) in psi.iter() {
        let idx = keep.iter().enumerate().fold(0usize, |acc, (pos, &k)| {
            acc | ((((label >> (n - 1 - k)) & 1) as usize) << (m - 1 - pos))
        });
        blocks.entry(label & env_mask).or_default().push((idx, a));
    }

    let dim = 1usize << m;
    let norm_sq = psi.norm_sqr();
    let mut entries = DMatrix::zeros(dim, dim);
    for block in blocks.values() {
        for &(i, ai) in block {
            for &(j, aj) in block {
                entries[(i, j)] += ai * aj.conj() / norm_sq;
            }
        }
    }
    Ok(DensityMatrix { qubits: m, entries })
}
