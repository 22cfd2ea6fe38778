use num_complex::Complex64;
use rayon::prelude::*;

use crate::qstate::{BlochVector, ProductState, PureState, Qubit};
use crate::{Error, Result};

pub const MAX_GRID_QUBITS: usize = 3;
pub const MIN_GRID_RESOLUTION: usize = 32;
const REFINE_LEVELS: usize = 20;
const MAX_MOVES_PER_LEVEL: usize = 200;

#[derive(Debug, Clone, PartialEq)]
pub struct GridResult {
    pub pmax: f64,
    pub nearest: ProductState,
    /// Objective evaluations, grid and refinement combined.
    pub evaluations: u64,
}

/// Contracts the leading qubit of `tensor` with `⟨q|`.
fn contract(tensor: &[Complex64], q: &Qubit) -> Vec<Complex64> {
    let half = tensor.len() / 2;
    let (c0, c1) = (q.amp(0).conj(), q.amp(1).conj());
    (0..half)
        .map(|i| c0 * tensor[i] + c1 * tensor[half + i])
        .collect()
}

/// Leaves the last qubit open: returns `⟨q₀ … q_{m−1}|ψ⟩` as a 2-vector.
fn open_last(dense: &[Complex64], factors: &[Qubit]) -> Vec<Complex64> {
    factors.iter().fold(dense.to_vec(), |t, q| contract(&t, q))
}

fn value(dense: &[Complex64], factors: &[Qubit]) -> f64 {
    open_last(dense, factors).iter().map(|z| z.norm_sqr()).sum()
}

/// Orthonormal tangent vectors at the unit vector `s`.
fn tangent_basis(s: [f64; 3]) -> ([f64; 3], [f64; 3]) {
    let reference = if s[2].abs() < 0.9 { [0.0, 0.0, 1.0] } else { [1.0, 0.0, 0.0] };
    let e1 = unit(cross(s, reference));
    (e1, cross(s, e1))
}

fn cross(u: [f64; 3], v: [f64; 3]) -> [f64; 3] {
    [
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    ]
}

fn unit(v: [f64; 3]) -> [f64; 3] {
    let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
    [v[0] / n, v[1] / n, v[2] / n]
}

/// Exhaustive scan for states of at most three qubits.
///
/// The first `n − 1` factors each run over a `resolution × resolution` grid
/// of `(θ, φ) ∈ [0, π] × [0, 2π)`; for each grid point the last factor is
/// optimal in closed form (the normalized remaining vector). The best cell is
/// then refined by a pattern search whose step is halved 20 times. The search
/// moves each Bloch vector within its tangent plane and re-centres after every
/// accepted move, so optima near the poles of the (θ, φ) chart are reached too.
pub fn grid_search(psi: &PureState, resolution: usize) -> Result<GridResult> {
    let n = psi.qubits();
    if n > MAX_GRID_QUBITS {
        return Err(Error::TooManyQubits {
            qubits: n,
            max: MAX_GRID_QUBITS,
        });
    }
    if resolution < MIN_GRID_RESOLUTION {
        return Err(Error::InvalidParameter(format!(
            "resolution {resolution} < {MIN_GRID_RESOLUTION}"
        )));
    }
    let dense = psi.to_dense()?;
    let scanned = n - 1;
    let cells = resolution * resolution;
    let theta_step = std::f64::consts::PI / (resolution - 1) as f64;
    let phi_step = 2.0 * std::f64::consts::PI / resolution as f64;
    let cell_angles = |c: usize| [(c / resolution) as f64 * theta_step, (c % resolution) as f64 * phi_step];
    let cell_qubit = |c: usize| {
        let [t, p] = cell_angles(c);
        Qubit::from_angles(t, p)
    };

    // Scan; the ordering (value, then lowest cell) makes the reduction
    // independent of thread scheduling.
    let better = |a: (f64, usize, usize), b: (f64, usize, usize)| {
        if b.0 > a.0 || (b.0 == a.0 && (b.1, b.2) < (a.1, a.2)) {
            b
        } else {
            a
        }
    };
    let (_, c1, c2) = match scanned {
        0 => (value(&dense, &[]), 0, 0),
        1 => (0..cells)
            .into_par_iter()
            .map(|c| {
                let v = contract(&dense, &cell_qubit(c));
                (v.iter().map(|z| z.norm_sqr()).sum(), c, 0)
            })
            .reduce(|| (f64::NEG_INFINITY, usize::MAX, usize::MAX), better),
        _ => (0..cells)
            .into_par_iter()
            .map(|c| {
                let t = contract(&dense, &cell_qubit(c));
                (0..cells)
                    .map(|d| {
                        let v = contract(&t, &cell_qubit(d));
                        (v.iter().map(|z| z.norm_sqr()).sum(), c, d)
                    })
                    .fold((f64::NEG_INFINITY, usize::MAX, usize::MAX), better)
            })
            .reduce(|| (f64::NEG_INFINITY, usize::MAX, usize::MAX), better),
    };
    let mut evaluations = (cells as u64).pow(scanned as u32);

    let mut x: Vec<[f64; 3]> = [c1, c2]
        .iter()
        .take(scanned)
        .map(|&c| cell_qubit(c).to_bloch().as_array())
        .collect();
    let to_factors = |x: &[[f64; 3]]| -> Vec<Qubit> {
        x.iter()
            .map(|s| Qubit::from_bloch(&BlochVector::new(s[0], s[1], s[2])))
            .collect()
    };
    let mut best = value(&dense, &to_factors(&x));
    let mut step = theta_step;
    let neighbours = 9usize.pow(scanned as u32);
    for _ in 0..REFINE_LEVELS {
        for _ in 0..MAX_MOVES_PER_LEVEL {
            let frames: Vec<_> = x.iter().map(|&s| tangent_basis(s)).collect();
            let mut move_to: Option<(f64, Vec<[f64; 3]>)> = None;
            for code in 1..neighbours {
                let mut rest = code;
                let trial: Vec<[f64; 3]> = x
                    .iter()
                    .zip(&frames)
                    .map(|(s, (e1, e2))| {
                        let u = ((rest % 3) as f64 - 1.0) * step;
                        let v = ((rest / 3 % 3) as f64 - 1.0) * step;
                        rest /= 9;
                        unit([0, 1, 2].map(|i| s[i] + u * e1[i] + v * e2[i]))
                    })
                    .collect();
                let v = value(&dense, &to_factors(&trial));
                evaluations += 1;
                if v > move_to.as_ref().map_or(best, |m| m.0) {
                    move_to = Some((v, trial));
                }
            }
            match move_to {
                Some((v, t)) => {
                    best = v;
                    x = t;
                }
                None => break,
            }
        }
        step /= 2.0;
    }

    let mut factors = to_factors(&x);
    let last = open_last(&dense, &factors);
    factors.push(Qubit::normalized([last[0], last[1]]).unwrap_or(Qubit::zero()));
    Ok(GridResult {
        pmax: best,
        nearest: ProductState::new(factors)?,
        evaluations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qstate::{overlap, w_state, WParams};
    use std::f64::consts::FRAC_1_SQRT_2;

    #[test]
    fn bell_state() {
        let s = Complex64::new(FRAC_1_SQRT_2, 0.0);
        let bell = PureState::new(2, [(0, s), (3, s)]).unwrap();
        let r = grid_search(&bell, 64).unwrap();
        assert!((r.pmax - 0.5).abs() < 1e-6);
    }

    #[test]
    fn equal_w3() {
        let s = 1.0 / 3f64.sqrt();
        let psi = w_state(&WParams::new(vec![s; 3]).unwrap());
        let r = grid_search(&psi, 64).unwrap();
        assert!((r.pmax - 4.0 / 9.0).abs() < 1e-6, "{}", r.pmax);
        let amp = overlap(&psi, &r.nearest).unwrap();
        assert!((amp.norm_sqr() - r.pmax).abs() < 1e-12);
    }

    #[test]
    fn isosceles_w3() {
        let a = 0.375f64.sqrt();
        let psi = w_state(&WParams::new(vec![a, a, 0.5]).unwrap());
        let r = grid_search(&psi, 64).unwrap();
        assert!((r.pmax - 0.45).abs() < 1e-6, "{}", r.pmax);
    }

    #[test]
    fn single_qubit_is_one() {
        let psi = PureState::new(1, [(0, Complex64::new(0.6, 0.0)), (1, Complex64::new(0.0, 0.8))]).unwrap();
        assert!((grid_search(&psi, 32).unwrap().pmax - 1.0).abs() < 1e-15);
    }

    #[test]
    fn limits() {
        let psi = w_state(&WParams::new(vec![0.5; 4]).unwrap());
        assert!(matches!(grid_search(&psi, 64), Err(Error::TooManyQubits { .. })));
        let psi = w_state(&WParams::new(vec![0.6, 0.8]).unwrap());
        assert!(grid_search(&psi, 16).is_err());
    }
}
