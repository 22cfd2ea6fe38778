use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::{Error, Result, NORM_TOL};

/// Labels are stored in a `u64`.
pub const MAX_QUBITS: usize = 63;

/// Largest register that is ever expanded into a dense vector or matrix.
pub const MAX_DENSE_QUBITS: usize = 12;

/// A normalized `n`-qubit pure state stored as `label → amplitude`.
///
/// Bit `n − 1 − k` of a label is qubit `k`, so the label prints with qubit 0
/// leftmost. Labels that are absent have amplitude zero; exact zeros are
/// never stored.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    qubits: usize,
    amplitudes: BTreeMap<u64, Complex64>,
}

impl PureState {
    /// Builds a state from `(label, amplitude)` pairs. Rejects duplicate labels,
    /// labels wider than `qubits` and norms off by more than [`NORM_TOL`].
    pub fn new<I>(qubits: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u64, Complex64)>,
    {
        check_qubit_count(qubits)?;
        let mut amplitudes = BTreeMap::new();
        for (label, amp) in entries {
            if label >> qubits != 0 {
                return Err(Error::InvalidLabel {
                    line: 0,
                    label: format!("{label:#b}"),
                });
            }
            if amplitudes.insert(label, amp).is_some() {
                return Err(Error::DuplicateLabel {
                    line: 0,
                    label: format_label(label, qubits),
                });
            }
        }
        Self::from_map(qubits, amplitudes)
    }

    pub(crate) fn from_map(qubits: usize, mut amplitudes: BTreeMap<u64, Complex64>) -> Result<Self> {
        amplitudes.retain(|_, a| *a != Complex64::new(0.0, 0.0));
        if amplitudes.is_empty() {
            return Err(Error::EmptyState);
        }
        let norm_sq: f64 = amplitudes.values().map(|a| a.norm_sqr()).sum();
        if !norm_sq.is_finite() || (norm_sq - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized {
                norm_sq,
                tol: NORM_TOL,
            });
        }
        Ok(Self { qubits, amplitudes })
    }

    /// Dense amplitude vector of length `2^qubits`, index = label.
    pub fn from_dense(qubits: usize, amplitudes: &[Complex64]) -> Result<Self> {
        check_qubit_count(qubits)?;
        if amplitudes.len() != 1usize << qubits.min(MAX_QUBITS) {
            return Err(Error::InvalidParameter(format!(
                "dense vector of length {} for {qubits} qubits",
                amplitudes.len()
            )));
        }
        let map = amplitudes
            .iter()
            .enumerate()
            .map(|(i, a)| (i as u64, *a))
            .collect();
        Self::from_map(qubits, map)
    }

    pub fn qubits(&self) -> usize {
        self.qubits
    }

    pub fn amplitude(&self, label: u64) -> Complex64 {
        self.amplitudes
            .get(&label)
            .copied()
            .unwrap_or(Complex64::new(0.0, 0.0))
    }

    /// Nonzero amplitudes in ascending label order.
    pub fn iter(&self) -> impl Iterator<Item = (u64, Complex64)> + '_ {
        self.amplitudes.iter().map(|(l, a)| (*l, *a))
    }

    pub fn support_len(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.values().map(|a| a.norm_sqr()).sum()
    }

    /// Whether the qubit bit of `label` is set.
    #[inline]
    pub fn bit(&self, label: u64, qubit: usize) -> usize {
        ((label >> (self.qubits - 1 - qubit)) & 1) as usize
    }

    pub fn to_dense(&self) -> Result<Vec<Complex64>> {
        if self.qubits > MAX_DENSE_QUBITS {
            return Err(Error::TooManyQubits {
                qubits: self.qubits,
                max: MAX_DENSE_QUBITS,
            });
        }
        let mut out = vec![Complex64::new(0.0, 0.0); 1 << self.qubits];
        for (l, a) in self.iter() {
            out[l as usize] = a;
        }
        Ok(out)
    }

    /// Relabels qubits so that new qubit `i` is old qubit `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Self> {
        check_permutation(perm, self.qubits)?;
        let n = self.qubits;
        let amplitudes = self
            .iter()
            .map(|(label, a)| {
                let mut out = 0u64;
                for (new, &old) in perm.iter().enumerate() {
                    if (label >> (n - 1 - old)) & 1 == 1 {
                        out |= 1 << (n - 1 - new);
                    }
                }
                (out, a)
            })
            .collect();
        Ok(Self {
            qubits: n,
            amplitudes,
        })
    }

    /// Moduli of the one-hot amplitudes if every nonzero amplitude sits on a
    /// one-hot label, i.e. the state is W-type up to local phases.
    pub fn w_coefficients(&self) -> Option<WParams> {
        let n = self.qubits;
        let mut coeffs = vec![0.0; n];
        for (label, a) in self.iter() {
            if label.count_ones() != 1 {
                return None;
            }
            let qubit = n - 1 - label.trailing_zeros() as usize;
            coeffs[qubit] = a.norm();
        }
        WParams::new(coeffs).ok()
    }

    pub fn label_string(&self, label: u64) -> String {
        format_label(label, self.qubits)
    }
}

pub(crate) fn format_label(label: u64, qubits: usize) -> String {
    (0..qubits)
        .map(|k| {
            if (label >> (qubits - 1 - k)) & 1 == 1 {
                '1'
            } else {
                '0'
            }
        })
        .collect()
}

fn check_qubit_count(qubits: usize) -> Result<()> {
    if qubits == 0 || qubits > MAX_QUBITS {
        return Err(Error::TooManyQubits {
            qubits,
            max: MAX_QUBITS,
        });
    }
    Ok(())
}

pub(crate) fn check_permutation(perm: &[usize], qubits: usize) -> Result<()> {
    let mut seen = vec![false; qubits];
    if perm.len() != qubits {
        return Err(Error::InvalidSubset(format!(
            "permutation of length {} for {qubits} qubits",
            perm.len()
        )));
    }
    for &p in perm {
        if p >= qubits || std::mem::replace(&mut seen[p], true) {
            return Err(Error::InvalidSubset(format!("{perm:?} is not a permutation")));
        }
    }
    Ok(())
}

/// Real non-negative W coefficients `a₁ … aₙ` with `Σ aₖ² = 1`, `n ≥ 2`.
#[derive(Debug, Clone, PartialEq)]
pub struct WParams {
    coefficients: Vec<f64>,
}

impl WParams {
    pub fn new(coefficients: Vec<f64>) -> Result<Self> {
        if coefficients.len() < 2 {
            return Err(Error::InvalidParameter(format!(
                "W state needs at least 2 coefficients, got {}",
                coefficients.len()
            )));
        }
        if coefficients.len() > MAX_QUBITS {
            return Err(Error::TooManyQubits {
                qubits: coefficients.len(),
                max: MAX_QUBITS,
            });
        }
        if let Some(bad) = coefficients.iter().find(|c| !c.is_finite() || **c < 0.0) {
            return Err(Error::InvalidParameter(format!(
                "W coefficients must be finite and non-negative, got {bad}"
            )));
        }
        let norm_sq: f64 = coefficients.iter().map(|c| c * c).sum();
        if (norm_sq - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized {
                norm_sq,
                tol: NORM_TOL,
            });
        }
        Ok(Self { coefficients })
    }

    /// `a₁ = … = a_{n−1} = √((1 − q²)/(n − 1))`, `aₙ = q`.
    pub fn one_param(n: usize, q: f64) -> Result<Self> {
        if n < 2 || !(0.0..=1.0).contains(&q) {
            return Err(Error::InvalidParameter(format!("one-parameter W state n={n}, q={q}")));
        }
        let a = ((1.0 - q * q) / (n - 1) as f64).sqrt();
        let mut c = vec![a; n - 1];
        c.push(q);
        Self::new(c)
    }

    /// `(a, b, q, q)` with `q = √((1 − a² − b²)/2)`.
    pub fn two_param(a: f64, b: f64) -> Result<Self> {
        let rest = 1.0 - a * a - b * b;
        if rest < -NORM_TOL {
            return Err(Error::InvalidParameter(format!("a² + b² > 1 for a={a}, b={b}")));
        }
        let q = (rest.max(0.0) / 2.0).sqrt();
        Self::new(vec![a, b, q, q])
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Index of the largest coefficient, lowest index on ties.
    pub fn argmax(&self) -> usize {
        let mut best = 0;
        for (k, c) in self.coefficients.iter().enumerate() {
            if *c > self.coefficients[best] {
                best = k;
            }
        }
        best
    }

    pub fn max_square(&self) -> f64 {
        let c = self.coefficients[self.argmax()];
        c * c
    }
}

/// `a₁|10…0⟩ + a₂|010…0⟩ + … + aₙ|0…01⟩`.
pub fn w_state(params: &WParams) -> PureState {
    let n = params.len();
    let amplitudes = params
        .coefficients()
        .iter()
        .enumerate()
        .map(|(k, a)| (1u64 << (n - 1 - k), Complex64::new(*a, 0.0)))
        .collect();
    PureState::from_map(n, amplitudes).expect("WParams are normalized")
}
