use crate::qstate::{partial_inner, ProductState, PureState};
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FixedPointCheck {
    /// Largest distance between a factor and its phase-aligned normalized
    /// partial inner product.
    pub residual: f64,
    /// Some partial inner product vanished; `residual` is then 1.
    pub degenerate: bool,
}

/// How far `prod` is from satisfying `⟨⊗_{j≠k} q_j|ψ⟩ ∝ |q_k⟩` for every `k`.
///
/// The proportionality constant carries an arbitrary phase, so each normalized
/// partial inner product is rotated to have a real non-negative overlap with
/// the current factor before the distance is taken.
pub fn verify_fixed_point(psi: &PureState, prod: &ProductState) -> Result<FixedPointCheck> {
    let mut worst = 0.0f64;
    for k in 0..psi.qubits() {
        let v = partial_inner(psi, prod, k)?;
        let norm = (v[0].norm_sqr() + v[1].norm_sqr()).sqrt();
        if norm < 1e-150 {
            return Ok(FixedPointCheck {
                residual: 1.0,
                degenerate: true,
            });
        }
        let q = prod.factor(k);
        let u = [v[0] / norm, v[1] / norm];
        let c = q.inner(u);
        let dist = if c.norm() == 0.0 {
            std::f64::consts::SQRT_2
        } else {
            let align = c.conj() / c.norm();
            let d0 = q.amp(0) - u[0] * align;
            let d1 = q.amp(1) - u[1] * align;
            (d0.norm_sqr() + d1.norm_sqr()).sqrt()
        };
        worst = worst.max(dist);
    }
    Ok(FixedPointCheck {
        residual: worst,
        degenerate: false,
    })
}
