//! Bloch-vector form of the overlap for three and four qubits.
//!
//! Maximizing over the last factor first leaves
//! `P = max 2^{1−n} Tr[ρ_{1…n−1} ⊗ₖ(𝟙 + s⃗ₖ·σ⃗)]` over unit Bloch vectors `s⃗ₖ`.
//! For W-type states every correlation tensor is diagonal in the x-z plane,
//! so real stationary points can be sought with `s_y = 0`. The Lagrange
//! multipliers are eliminated: at a stationary point the gradient with respect
//! to `s⃗ₖ` is parallel to `s⃗ₖ`, i.e. `s_x·F_z − s_z·F_x = 0`.

use num_complex::Complex64;

use crate::qstate::{
    bloch_of, correlation_tensors, partial_inner, two_point, w_state, BlochVector,
    CorrelationTensors, ProductState, PureState, Qubit, WParams,
};
use crate::{Error, Result};

const Y_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct BlochSolution {
    /// One vector per qubit except the last.
    pub s_vectors: Vec<BlochVector>,
    /// Value of the maximand at `s_vectors`.
    pub objective: f64,
    /// Largest absolute stationarity residual.
    pub residual: f64,
}

fn check_w3(params: &WParams) -> Result<()> {
    if params.len() != 3 {
        return Err(Error::WrongQubitCount {
            expected: 3,
            found: params.len(),
        });
    }
    Ok(())
}

fn check_xz(vectors: &[&BlochVector]) -> Result<()> {
    for s in vectors {
        s.check_unit()?;
        if s.y.abs() > Y_TOL {
            return Err(Error::NonZeroY(s.y));
        }
    }
    Ok(())
}

fn bilinear(g: &[[f64; 3]; 3], u: &BlochVector, v: &BlochVector) -> f64 {
    let (u, v) = (u.as_array(), v.as_array());
    (0..3)
        .flat_map(|i| (0..3).map(move |j| (i, j)))
        .map(|(i, j)| g[i][j] * u[i] * v[j])
        .sum()
}

/// `¼[1 + s⃗₁·r⃗₁ + s⃗₂·r⃗₂ + g_ij s₁ᵢ s₂ⱼ]` for the W₃ state of `params`, with
/// `r⃗ₖ` the Bloch vectors of qubits 0 and 1 and `g` their Pauli correlation.
pub fn objective_bloch3(params: &WParams, s1: &BlochVector, s2: &BlochVector) -> Result<f64> {
    check_w3(params)?;
    s1.check_unit()?;
    s2.check_unit()?;
    let psi = w_state(params);
    let (r1, r2, g) = (bloch_of(&psi, 0)?, bloch_of(&psi, 1)?, two_point(&psi, 0, 1)?);
    Ok(0.25 * (1.0 + s1.dot(&r1) + s2.dot(&r2) + bilinear(&g, s1, s2)))
}

/// `⅛[1 + Σₖ s⃗ₖ·r⃗ₖ + s₁g⁽³⁾s₂ + s₁g⁽²⁾s₃ + s₂g⁽¹⁾s₃ + h_ijk s₁ᵢ s₂ⱼ s₃ₖ]`.
pub fn objective_bloch4(
    t: &CorrelationTensors,
    s1: &BlochVector,
    s2: &BlochVector,
    s3: &BlochVector,
) -> Result<f64> {
    for s in [s1, s2, s3] {
        s.check_unit()?;
    }
    let (u, v, w) = (s1.as_array(), s2.as_array(), s3.as_array());
    let mut triple = 0.0;
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                triple += t.h[i][j][k] * u[i] * v[j] * w[k];
            }
        }
    }
    Ok(0.125
        * (1.0
            + s1.dot(&t.r[0])
            + s2.dot(&t.r[1])
            + s3.dot(&t.r[2])
            + bilinear(&t.g[2], s1, s2)
            + bilinear(&t.g[1], s1, s3)
            + bilinear(&t.g[0], s2, s3)
            + triple))
}

/// Cross-multiplied three-qubit stationarity conditions for `s_y = 0`:
///
/// `s₁ₓ(r₁ − r₃s₂_z) − s₁_z ω s₂ₓ` and `s₂ₓ(r₂ − r₃s₁_z) − s₂_z ω s₁ₓ`
///
/// with `r₁ = a₂² + a₃² − a₁²`, `r₂ = a₁² + a₃² − a₂²`, `r₃ = a₁² + a₂² − a₃²`
/// and `ω = 2a₁a₂`. No division by `s_z`, so one-hot directions are fine.
pub fn residual_lagrange3(params: &WParams, s1: &BlochVector, s2: &BlochVector) -> Result<[f64; 2]> {
    check_w3(params)?;
    check_xz(&[s1, s2])?;
    let c = params.coefficients();
    let sq = [c[0] * c[0], c[1] * c[1], c[2] * c[2]];
    let r1 = sq[1] + sq[2] - sq[0];
    let r2 = sq[0] + sq[2] - sq[1];
    let r3 = sq[0] + sq[1] - sq[2];
    let omega = 2.0 * c[0] * c[1];
    Ok([
        s1.x * (r1 - r3 * s2.z) - s1.z * omega * s2.x,
        s2.x * (r2 - r3 * s1.z) - s2.z * omega * s1.x,
    ])
}

/// Left minus right side of the three multiplier-free four-qubit conditions:
///
/// ```text
/// s₁ₓ[r₁ − r̃₃s₂_z − r̃₂s₃_z + ω₁s₂ₓs₃ₓ − r₄s₂_z s₃_z] = s₁_z[ω₂s₃ₓ(1 + s₂_z) + ω₃s₂ₓ(1 + s₃_z)]
/// s₂ₓ[r₂ − r̃₃s₁_z − r̃₁s₃_z + ω₂s₁ₓs₃ₓ − r₄s₁_z s₃_z] = s₂_z[ω₁s₃ₓ(1 + s₁_z) + ω₃s₁ₓ(1 + s₃_z)]
/// s₃ₓ[r₃ − r̃₁s₂_z − r̃₂s₁_z + ω₃s₁ₓs₂ₓ − r₄s₁_z s₂_z] = s₃_z[ω₂s₁ₓ(1 + s₂_z) + ω₁s₂ₓ(1 + s₁_z)]
/// ```
///
/// The scalars come from `t`, so the conditions hold for W-type tensors only.
pub fn residual_lagrange4(
    t: &CorrelationTensors,
    s1: &BlochVector,
    s2: &BlochVector,
    s3: &BlochVector,
) -> Result<[f64; 3]> {
    check_xz(&[s1, s2, s3])?;
    let [r1, r2, r3, r4] = t.r_scalars();
    let [rt1, rt2, rt3] = t.r_tilde();
    let [w1, w2, w3] = t.omega();
    Ok([
        s1.x * (r1 - rt3 * s2.z - rt2 * s3.z + w1 * s2.x * s3.x - r4 * s2.z * s3.z)
            - s1.z * (w2 * s3.x * (1.0 + s2.z) + w3 * s2.x * (1.0 + s3.z)),
        s2.x * (r2 - rt3 * s1.z - rt1 * s3.z + w2 * s1.x * s3.x - r4 * s1.z * s3.z)
            - s2.z * (w1 * s3.x * (1.0 + s1.z) + w3 * s1.x * (1.0 + s3.z)),
        s3.x * (r3 - rt1 * s2.z - rt2 * s1.z + w3 * s1.x * s2.x - r4 * s1.z * s2.z)
            - s3.z * (w2 * s1.x * (1.0 + s2.z) + w1 * s2.x * (1.0 + s1.z)),
    ])
}

/// Symmetric analytic stationary point of the one-parameter W state with
/// `n = 3` or `n = 4`, valid for `q ≤ 1/√2`.
///
/// * `n = 3`: `s_z = q²/(4a² − q²)`, `s_x = 2√2·a·√(2a² − q²)/(4a² − q²)`.
/// * `n = 4`: `s_z = 1/(9a² − q²)`, `s_x = 2√6·a·√(3a² − q²)/(9a² − q²)`.
pub fn solve_symmetric(n: usize, q: f64) -> Result<BlochSolution> {
    if !(0.0..=1.0).contains(&q) {
        return Err(Error::InvalidParameter(format!("q = {q} outside [0, 1]")));
    }
    let q2 = q * q;
    let a2 = match n {
        3 => (1.0 - q2) / 2.0,
        4 => (1.0 - q2) / 3.0,
        _ => {
            return Err(Error::InvalidParameter(format!(
                "symmetric solution exists for n = 3 or 4, got {n}"
            )))
        }
    };
    let a = a2.sqrt();
    // s_x real ⇔ q² ≤ (n − 1)a²
    let gap = (n - 1) as f64 * a2 - q2;
    if gap < -crate::closed_form::BOUNDARY_TOL {
        return Err(Error::OutsideDomain(format!(
            "q = {q}: q² > (n − 1)a², no real symmetric solution"
        )));
    }
    let gap = gap.max(0.0);
    let params = WParams::one_param(n, q)?;
    if n == 3 {
        let den = 4.0 * a2 - q2;
        let s = BlochVector::new(2.0 * 2f64.sqrt() * a * gap.sqrt() / den, 0.0, q2 / den);
        let objective = objective_bloch3(&params, &s, &s)?;
        let residual = max_abs(&residual_lagrange3(&params, &s, &s)?);
        Ok(BlochSolution {
            s_vectors: vec![s; 2],
            objective,
            residual,
        })
    } else {
        // 9a² − q² with 3a² + q² = 1
        let den = 9.0 * a2 - q2;
        let s = BlochVector::new(2.0 * 6f64.sqrt() * a * gap.sqrt() / den, 0.0, 1.0 / den);
        let t = correlation_tensors(&w_state(&params))?;
        let objective = objective_bloch4(&t, &s, &s, &s)?;
        let residual = max_abs(&residual_lagrange4(&t, &s, &s, &s)?);
        Ok(BlochSolution {
            s_vectors: vec![s; 3],
            objective,
            residual,
        })
    }
}

fn max_abs(v: &[f64]) -> f64 {
    v.iter().fold(0.0, |m, x| m.max(x.abs()))
}

/// Product state whose first factors have the given Bloch vectors and whose
/// last factor is the normalized partial inner product, i.e. optimal given
/// the others.
pub fn complete_product(psi: &PureState, s_vectors: &[BlochVector]) -> Result<ProductState> {
    if s_vectors.len() + 1 != psi.qubits() {
        return Err(Error::QubitCountMismatch {
            left: psi.qubits(),
            right: s_vectors.len() + 1,
        });
    }
    let mut factors: Vec<Qubit> = s_vectors.iter().map(Qubit::from_bloch).collect();
    factors.push(Qubit::zero());
    let mut prod = ProductState::new(factors)?;
    let last = psi.qubits() - 1;
    let v = partial_inner(psi, &prod, last)?;
    prod.set_factor(last, Qubit::normalized(v).unwrap_or(Qubit::zero()));
    Ok(prod)
}

/// Real x-z Bloch vector of a factor after discarding the phases of its two
/// amplitudes. For W-type states with non-negative coefficients this maps a
/// stationary point to an equivalent one with `s_y = 0`.
pub fn xz_gauge(q: &Qubit) -> BlochVector {
    let (c0, c1) = (q.amp(0).norm(), q.amp(1).norm());
    Qubit::new(Complex64::new(c0, 0.0), Complex64::new(c1, 0.0))
        .map(|r| r.to_bloch())
        .unwrap_or_else(|_| q.to_bloch())
}

/// `P` and `Q` of the single-variable four-qubit reduction
/// `s₁ₓ/s₁_z = P/Q`, for a caller-supplied map from (permuted) coefficients
/// to `s₁_z`. Only meaningful for W-type coefficients.
#[cfg_attr(not(test), allow(dead_code))]
pub(crate) fn single_equation_pq(a: [f64; 4], s1z: impl Fn([f64; 4]) -> f64) -> (f64, f64) {
    let sq = a.map(|x| x * x);
    let total: f64 = sq.iter().sum();
    let r1 = total - 2.0 * sq[0];
    let r4 = total - 2.0 * sq[3];
    let rt2 = sq[0] + sq[2] - sq[1] - sq[3];
    let rt3 = sq[0] + sq[1] - sq[2] - sq[3];
    let (w1, w2, w3) = (2.0 * a[1] * a[2], 2.0 * a[0] * a[2], 2.0 * a[0] * a[1]);
    let z21 = s1z([a[1], a[0], a[2], a[3]]);
    let z32 = s1z([a[2], a[1], a[0], a[3]]);
    let x21 = (1.0 - z21 * z21).max(0.0).sqrt();
    let x32 = (1.0 - z32 * z32).max(0.0).sqrt();
    let p = w2 * x32 * (1.0 + z21) + w3 * x21 * (1.0 + z32);
    let q = r1 - rt3 * z21 - rt2 * z32 + w1 * x21 * x32 - r4 * z21 * z32;
    (p, q)
}
