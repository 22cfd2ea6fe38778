use num_complex::Complex64;

use super::state::PureState;
use crate::{Error, Result, NORM_TOL};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// A normalized single-qubit state `c₀|0⟩ + c₁|1⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Qubit([Complex64; 2]);

impl Qubit {
    pub fn new(c0: Complex64, c1: Complex64) -> Result<Self> {
        let norm_sq = c0.norm_sqr() + c1.norm_sqr();
        if !norm_sq.is_finite() || (norm_sq - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized {
                norm_sq,
                tol: NORM_TOL,
            });
        }
        Ok(Self([c0, c1]))
    }

    pub fn real(c0: f64, c1: f64) -> Result<Self> {
        Self::new(Complex64::new(c0, 0.0), Complex64::new(c1, 0.0))
    }

    /// Rescales `(c₀, c₁)` to unit norm; `None` for the zero vector.
    pub fn normalized(v: [Complex64; 2]) -> Option<Self> {
        let norm = (v[0].norm_sqr() + v[1].norm_sqr()).sqrt();
        (norm > 0.0 && norm.is_finite()).then(|| Self([v[0] / norm, v[1] / norm]))
    }

    pub fn zero() -> Self {
        Self([ONE, ZERO])
    }

    pub fn one() -> Self {
        Self([ZERO, ONE])
    }

    /// `cos(θ/2)|0⟩ + e^{iφ} sin(θ/2)|1⟩`.
    pub fn from_angles(theta: f64, phi: f64) -> Self {
        let (s, c) = (theta / 2.0).sin_cos();
        Self([Complex64::new(c, 0.0), Complex64::from_polar(s, phi)])
    }

    pub fn from_bloch(s: &BlochVector) -> Self {
        let theta = s.z.clamp(-1.0, 1.0).acos();
        let phi = s.y.atan2(s.x);
        Self::from_angles(theta, phi)
    }

    pub fn to_bloch(&self) -> BlochVector {
        let [c0, c1] = self.0;
        let cross = c0.conj() * c1;
        BlochVector {
            x: 2.0 * cross.re,
            y: 2.0 * cross.im,
            z: c0.norm_sqr() - c1.norm_sqr(),
        }
    }

    #[inline]
    pub fn amp(&self, bit: usize) -> Complex64 {
        self.0[bit]
    }

    pub fn amplitudes(&self) -> [Complex64; 2] {
        self.0
    }

    /// `⟨self|v⟩`.
    pub fn inner(&self, v: [Complex64; 2]) -> Complex64 {
        self.0[0].conj() * v[0] + self.0[1].conj() * v[1]
    }
}

/// Real 3-vector; unit length when it describes a pure qubit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochVector {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl BlochVector {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    /// Unit vector in the x-z plane with the given z component and `x ≥ 0`.
    pub fn xz(z: f64) -> Self {
        Self::new((1.0 - z * z).max(0.0).sqrt(), 0.0, z)
    }

    pub fn from_angles(theta: f64, phi: f64) -> Self {
        let (st, ct) = theta.sin_cos();
        let (sp, cp) = phi.sin_cos();
        Self::new(st * cp, st * sp, ct)
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn norm(&self) -> f64 {
        (self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    pub fn dot(&self, v: &[f64; 3]) -> f64 {
        self.x * v[0] + self.y * v[1] + self.z * v[2]
    }

    pub fn is_unit(&self) -> bool {
        (self.norm() - 1.0).abs() <= NORM_TOL
    }

    pub(crate) fn check_unit(&self) -> Result<()> {
        if self.is_unit() {
            Ok(())
        } else {
            Err(Error::NonUnitBloch(self.norm()))
        }
    }
}

/// `|q₀⟩ ⊗ |q₁⟩ ⊗ … ⊗ |q_{n−1}⟩`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProductState {
    factors: Vec<Qubit>,
}

impl ProductState {
    pub fn new(factors: Vec<Qubit>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidParameter("product state needs at least one factor".into()));
        }
        Ok(Self { factors })
    }

    /// Computational basis state with the given label.
    pub fn basis(qubits: usize, label: u64) -> Result<Self> {
        if qubits == 0 || qubits > super::MAX_QUBITS || label >> qubits != 0 {
            return Err(Error::InvalidParameter(format!(
                "basis label {label:#b} for {qubits} qubits"
            )));
        }
        let factors = (0..qubits)
            .map(|k| {
                if (label >> (qubits - 1 - k)) & 1 == 1 {
                    Qubit::one()
                } else {
                    Qubit::zero()
                }
            })
            .collect();
        Ok(Self { factors })
    }

    /// `|0…010…0⟩` with qubit `k` excited.
    pub fn one_hot(qubits: usize, k: usize) -> Result<Self> {
        if k >= qubits {
            return Err(Error::QubitIndexOutOfRange { index: k, qubits });
        }
        Self::basis(qubits, 1u64 << (qubits - 1 - k))
    }

    pub fn qubits(&self) -> usize {
        self.factors.len()
    }

    pub fn factor(&self, k: usize) -> &Qubit {
        &self.factors[k]
    }

    pub fn factors(&self) -> &[Qubit] {
        &self.factors
    }

    pub fn set_factor(&mut self, k: usize, q: Qubit) {
        self.factors[k] = q;
    }

    pub fn permute(&self, perm: &[usize]) -> Result<Self> {
        super::state::check_permutation(perm, self.qubits())?;
        Ok(Self {
            factors: perm.iter().map(|&old| self.factors[old]).collect(),
        })
    }

    /// `Π_k c_k[bit_k(label)]`.
    pub fn amplitude(&self, label: u64) -> Complex64 {
        let n = self.factors.len();
        self.factors
            .iter()
            .enumerate()
            .fold(ONE, |acc, (k, q)| acc * q.amp(((label >> (n - 1 - k)) & 1) as usize))
    }
}

fn check_counts(psi: &PureState, prod: &ProductState) -> Result<()> {
    if psi.qubits() != prod.qubits() {
        return Err(Error::QubitCountMismatch {
            left: psi.qubits(),
            right: prod.qubits(),
        });
    }
    Ok(())
}

/// `⟨q₀ q₁ … q_{n−1}|ψ⟩`.
pub fn overlap(psi: &PureState, prod: &ProductState) -> Result<Complex64> {
    check_counts(psi, prod)?;
    Ok(psi
        .iter()
        .map(|(label, a)| prod.amplitude(label).conj() * a)
        .sum())
}

/// `⟨⊗_{j≠k} q_j|ψ⟩`, an unnormalized vector on qubit `k`.
///
/// Its norm bounds `|⟨prod|ψ⟩|` from above and normalizing it gives the factor
/// that maximizes the overlap with every other factor held fixed.
pub fn partial_inner(psi: &PureState, prod: &ProductState, k: usize) -> Result<[Complex64; 2]> {
    check_counts(psi, prod)?;
    let n = psi.qubits();
    if k >= n {
        return Err(Error::QubitIndexOutOfRange {
            index: k,
            qubits: n,
        });
    }
    let mut out = [ZERO; 2];
    for (label, a) in psi.iter() {
        let mut weight = ONE;
        for (j, q) in prod.factors().iter().enumerate() {
            if j != k {
                weight *= q.amp(((label >> (n - 1 - j)) & 1) as usize).conj();
            }
        }
        out[((label >> (n - 1 - k)) & 1) as usize] += weight * a;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qstate::{w_state, WParams};

    #[test]
    fn equal_w3_overlap_is_two_thirds() {
        let s = 1.0 / 3f64.sqrt();
        let psi = w_state(&WParams::new(vec![s; 3]).unwrap());
        let f = Qubit::real((2.0f64 / 3.0).sqrt(), s).unwrap();
        let prod = ProductState::new(vec![f; 3]).unwrap();
        let amp = overlap(&psi, &prod).unwrap();
        assert!((amp.norm() - 2.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn equal_w4_overlap() {
        let psi = w_state(&WParams::new(vec![0.5; 4]).unwrap());
        let f = Qubit::real(3f64.sqrt() / 2.0, 0.5).unwrap();
        let prod = ProductState::new(vec![f; 4]).unwrap();
        let amp = overlap(&psi, &prod).unwrap();
        assert!((amp.norm_sqr() - 27.0 / 64.0).abs() < 1e-15);
    }

    #[test]
    fn orthogonal_factor_gives_zero() {
        // W states have no |11·⟩ support
        let psi = w_state(&WParams::new(vec![0.6, 0.0, 0.8]).unwrap());
        let prod = ProductState::basis(3, 0b110).unwrap();
        assert_eq!(overlap(&psi, &prod).unwrap(), ZERO);
    }

    #[test]
    fn partial_inner_one_hot_term() {
        let psi = w_state(&WParams::new(vec![0.6, 0.0, 0.8]).unwrap());
        let prod = ProductState::basis(3, 0).unwrap();
        let v = partial_inner(&psi, &prod, 0).unwrap();
        assert_eq!(v, [ZERO, Complex64::new(0.6, 0.0)]);
    }

    #[test]
    fn partial_inner_fixed_point_for_equal_w4() {
        let psi = w_state(&WParams::new(vec![0.5; 4]).unwrap());
        let f = Qubit::real(3f64.sqrt() / 2.0, 0.5).unwrap();
        let prod = ProductState::new(vec![f; 4]).unwrap();
        for k in 0..4 {
            let v = partial_inner(&psi, &prod, k).unwrap();
            // collinear with (√3/2, 1/2): cross term vanishes
            let cross = v[0] * 0.5 - v[1] * (3f64.sqrt() / 2.0);
            assert!(cross.norm() < 1e-15, "k={k}");
            assert!(((v[0].norm_sqr() + v[1].norm_sqr()) - 27.0 / 64.0).abs() < 1e-15);
        }
    }

    #[test]
    fn errors() {
        let psi = w_state(&WParams::new(vec![0.6, 0.8]).unwrap());
        let prod = ProductState::basis(3, 0).unwrap();
        assert!(matches!(overlap(&psi, &prod), Err(Error::QubitCountMismatch { .. })));
        let prod = ProductState::basis(2, 0).unwrap();
        assert!(matches!(
            partial_inner(&psi, &prod, 2),
            Err(Error::QubitIndexOutOfRange { .. })
        ));
        assert!(Qubit::real(1.0, 1.0).is_err());
    }

    #[test]
    fn bloch_round_trip() {
        let q = Qubit::from_angles(1.1, -2.0);
        let s = q.to_bloch();
        assert!(s.is_unit());
        let back = Qubit::from_bloch(&s);
        assert!((q.inner(back.amplitudes()).norm() - 1.0).abs() < 1e-14);
    }
}
