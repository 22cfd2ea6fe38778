//! Analytic maximal overlaps for two-qubit states and W-type states.
//!
//! Every W-type result splits into two regimes. When the largest squared
//! coefficient is at least 1/2 the state is *slightly entangled*: the one-hot
//! product state on that coefficient is optimal and `P_max = max aₖ²`.
//! Otherwise the state is *highly entangled* and `P_max` comes from the
//! nontrivial stationary point (circumradius for three qubits, the
//! one-parameter law for `n` qubits, the two-parameter surface for four).

use std::fmt;

use num_complex::Complex64;

use crate::qstate::{partial_inner, reduced_density, ProductState, PureState, Qubit, WParams};
use crate::{Error, Result};

/// Distance from a regime boundary that is reported as [`Regime::Boundary`].
pub const BOUNDARY_TOL: f64 = 1e-12;

/// Threshold on `|(4q² − a² − b²)² − 4a²b²|` below which a two-parameter state
/// is treated as lying on the `2q = a + b` line.
pub const DEGENERATE_LINE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    HighlyEntangled,
    SlightlyEntangled,
    Boundary,
}

impl Regime {
    pub fn as_str(self) -> &'static str {
        match self {
            Regime::HighlyEntangled => "highly-entangled",
            Regime::SlightlyEntangled => "slightly-entangled",
            Regime::Boundary => "boundary",
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which formula produced an [`OverlapResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// `½(1 + √(1 − 4 det ρ_A))`.
    TwoQubit,
    /// `4R²` with `R` the circumradius of the triangle of W₃ coefficients.
    Circumradius,
    /// `max aₖ²`, attained by a one-hot product state.
    LargestCoefficient,
    /// `(1 − q²)^{n−1} ((n − 2)/((n − 1) − nq²))^{n−2}`.
    OneParameter,
    /// Four-qubit `(a, b, q, q)` surface.
    TwoParameter,
    /// `(27/256)(a + b)⁴/(ab)` on the `2q = a + b` line.
    DegenerateLine,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::TwoQubit => "two-qubit",
            Method::Circumradius => "circumradius",
            Method::LargestCoefficient => "largest-coefficient",
            Method::OneParameter => "one-parameter",
            Method::TwoParameter => "two-parameter",
            Method::DegenerateLine => "degenerate-line",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OverlapResult {
    pub pmax: f64,
    pub regime: Regime,
    /// Circumradius `R_W`, only for the three-qubit triangle branch.
    pub circumradius: Option<f64>,
    pub nearest: Option<ProductState>,
    pub method: Method,
}

impl OverlapResult {
    fn slightly(pmax: f64, nearest: Option<ProductState>) -> Self {
        Self {
            pmax,
            regime: Regime::SlightlyEntangled,
            circumradius: None,
            nearest,
            method: Method::LargestCoefficient,
        }
    }
}

fn classify(excess: f64) -> Regime {
    if excess.abs() <= BOUNDARY_TOL {
        Regime::Boundary
    } else if excess < 0.0 {
        Regime::HighlyEntangled
    } else {
        Regime::SlightlyEntangled
    }
}

fn one_hot_nearest(params: &WParams) -> ProductState {
    ProductState::one_hot(params.len(), params.argmax()).expect("argmax is in range")
}

/// Two-qubit pure states: `P_max = ½(1 + √(1 − 4 det ρ_A))`, the square of
/// the larger Schmidt coefficient.
///
/// Every two-qubit state has `P_max ≥ 1/2`, so the regime is
/// slightly-entangled, or boundary for maximally entangled states.
pub fn pmax_two_qubit(psi: &PureState) -> Result<OverlapResult> {
    if psi.qubits() != 2 {
        return Err(Error::WrongQubitCount {
            expected: 2,
            found: psi.qubits(),
        });
    }
    let rho = reduced_density(psi, &[0])?;
    let (p, r, c) = (rho.get(0, 0).re, rho.get(1, 1).re, rho.get(0, 1));
    let mut det = p * r - c.norm_sqr();
    if det < 0.0 && det > -BOUNDARY_TOL {
        det = 0.0;
    }
    if det > 0.25 && det < 0.25 + BOUNDARY_TOL {
        det = 0.25;
    }
    let pmax = 0.5 * (1.0 + (1.0 - 4.0 * det).max(0.0).sqrt());

    // Top eigenvector of ρ_A for the first factor, the matching partial inner
    // product for the second.
    let half_gap = 0.5 * (p - r);
    let lambda = 0.5 * (p + r) + (half_gap * half_gap + c.norm_sqr()).sqrt();
    let first = if c.norm() > 1e-300 {
        Qubit::normalized([c, Complex64::new(lambda - p, 0.0)])
    } else if p >= r {
        Some(Qubit::zero())
    } else {
        Some(Qubit::one())
    }
    .expect("nonzero eigenvector");
    let mut prod = ProductState::new(vec![first, Qubit::zero()])?;
    let second = Qubit::normalized(partial_inner(psi, &prod, 1)?).unwrap_or(Qubit::zero());
    prod.set_factor(1, second);

    Ok(OverlapResult {
        pmax,
        regime: if (det - 0.25).abs() <= BOUNDARY_TOL {
            Regime::Boundary
        } else {
            Regime::SlightlyEntangled
        },
        circumradius: None,
        nearest: Some(prod),
        method: Method::TwoQubit,
    })
}

/// Circumradius of the triangle with the given sides, using the
/// cancellation-free ordering of Heron's formula. `None` for degenerate or
/// impossible triangles.
pub fn circumradius(a: f64, b: f64, c: f64) -> Option<f64> {
    let mut s = [a, b, c];
    s.sort_by(|x, y| y.total_cmp(x));
    let [a, b, c] = s;
    // 16·Area² with a ≥ b ≥ c; brackets matter
    let k = (a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c));
    (k > 0.0 && c > 0.0).then(|| a * b * c / k.sqrt())
}

/// Generalized three-qubit W state `a₁|100⟩ + a₂|010⟩ + a₃|001⟩`.
///
/// Highly entangled (`α² < β² + γ²` for sorted coefficients) gives `4R_W²` with
/// `R_W` the circumradius of the triangle with sides `a₁, a₂, a₃`; otherwise
/// `α²`. On the boundary the triangle is right-angled and `R_W = α/2`.
pub fn pmax_w3(params: &WParams) -> Result<OverlapResult> {
    if params.len() != 3 {
        return Err(Error::WrongQubitCount {
            expected: 3,
            found: params.len(),
        });
    }
    let c = params.coefficients();
    let alpha_sq = params.max_square();
    let sum_sq: f64 = c.iter().map(|x| x * x).sum();
    let regime = classify(2.0 * alpha_sq - sum_sq);
    match regime {
        Regime::SlightlyEntangled => Ok(OverlapResult::slightly(
            alpha_sq,
            Some(one_hot_nearest(params)),
        )),
        Regime::Boundary => {
            let radius = alpha_sq.sqrt() / 2.0;
            Ok(OverlapResult {
                pmax: 4.0 * radius * radius,
                regime,
                circumradius: Some(radius),
                nearest: Some(one_hot_nearest(params)),
                method: Method::Circumradius,
            })
        }
        Regime::HighlyEntangled => {
            // α² < β² + γ² forces α < β + γ, so the triangle exists
            let radius = circumradius(c[0], c[1], c[2]).ok_or_else(|| {
                Error::OutsideDomain(format!("coefficients {c:?} do not form a triangle"))
            })?;
            Ok(OverlapResult {
                pmax: 4.0 * radius * radius,
                regime,
                circumradius: Some(radius),
                nearest: None,
                method: Method::Circumradius,
            })
        }
    }
}

/// `(1 − q²)^{n−1} ((n − 2)/((n − 1) − nq²))^{n−2}` without the regime rule.
/// Past `q = 1/√2` this is not the maximal overlap.
pub fn wn_one_param_formula(n: usize, q: f64) -> f64 {
    let nf = n as f64;
    let q2 = q * q;
    (1.0 - q2).powi(n as i32 - 1) * ((nf - 2.0) / ((nf - 1.0) - nf * q2)).powi(n as i32 - 2)
}

fn check_one_param(n: usize, q: f64) -> Result<()> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("n = {n}, need n ≥ 3")));
    }
    if n > crate::qstate::MAX_QUBITS {
        return Err(Error::TooManyQubits {
            qubits: n,
            max: crate::qstate::MAX_QUBITS,
        });
    }
    if !(0.0..=1.0).contains(&q) {
        return Err(Error::InvalidParameter(format!("q = {q} outside [0, 1]")));
    }
    Ok(())
}

/// `a|10…0⟩ + … + a|0…010⟩ + q|0…01⟩` with `a = √((1 − q²)/(n − 1))`.
///
/// For `q ≤ 1/√2` the overlap is [`wn_one_param_formula`] and the nearest
/// product state is [`nearest_wn_one_param`] (with zero phase); above it the
/// overlap is `q²` with nearest state `|0…01⟩`.
pub fn pmax_wn_one_param(n: usize, q: f64) -> Result<OverlapResult> {
    check_one_param(n, q)?;
    let q2 = q * q;
    // q² ≤ (n − 1)a² ⇔ q² ≤ 1/2
    let regime = classify(2.0 * q2 - 1.0);
    if regime == Regime::SlightlyEntangled {
        return Ok(OverlapResult::slightly(
            q2,
            Some(ProductState::one_hot(n, n - 1)?),
        ));
    }
    Ok(OverlapResult {
        pmax: wn_one_param_formula(n, q),
        regime,
        circumradius: None,
        nearest: Some(nearest_wn_one_param(n, q, 0.0)?),
        method: Method::OneParameter,
    })
}

/// Nearest product state of the one-parameter W state in the highly
/// entangled domain `q² ≤ (n − 1)a²`. `φ` is a free relative phase.
///
/// With `d = (n − 1)²a² − q²` the first `n − 1` factors are
/// `(√((n−1)(n−2))·a, √((n−1)a² − q²)·e^{iφ})/√d` and the last one is
/// `(√((n−1)²a² − (n−1)q²), √(n−2)·q·e^{iφ})/√d`.
pub fn nearest_wn_one_param(n: usize, q: f64, phi: f64) -> Result<ProductState> {
    check_one_param(n, q)?;
    let q2 = q * q;
    if 2.0 * q2 - 1.0 > BOUNDARY_TOL {
        return Err(Error::OutsideDomain(format!(
            "q = {q} > 1/√2; the nearest product state is |0…01⟩"
        )));
    }
    let nf = n as f64;
    let a2 = (1.0 - q2) / (nf - 1.0);
    let phase = Complex64::from_polar(1.0, phi);
    // (n−1)²a² − q² = (n − 1) − nq², (n−1)a² − q² = 1 − 2q²
    let d = (nf - 1.0) - nf * q2;
    let gap = (1.0 - 2.0 * q2).max(0.0);
    let scale = 1.0 / d.sqrt();
    let first = Qubit::new(
        Complex64::new(((nf - 1.0) * (nf - 2.0) * a2).sqrt() * scale, 0.0),
        phase * (gap.sqrt() * scale),
    )?;
    let last = Qubit::new(
        Complex64::new(((nf - 1.0) * gap).sqrt() * scale, 0.0),
        phase * ((nf - 2.0).sqrt() * q * scale),
    )?;
    let mut factors = vec![first; n - 1];
    factors.push(last);
    ProductState::new(factors)
}

fn two_param_q2(a: f64, b: f64) -> Result<f64> {
    if !(a.is_finite() && b.is_finite()) || a < 0.0 || b < 0.0 {
        return Err(Error::InvalidParameter(format!(
            "a = {a}, b = {b}; need finite non-negative values"
        )));
    }
    let rest = 1.0 - a * a - b * b;
    if rest < -BOUNDARY_TOL {
        return Err(Error::InvalidParameter(format!(
            "a² + b² = {} > 1",
            a * a + b * b
        )));
    }
    Ok(rest.max(0.0) / 2.0)
}

/// The two-parameter surface as printed, with the square of
/// `(4q² − a² − b²)² − 4a²b²` in the denominator. The numerator vanishes to the
/// same order on `2q = a + b`, so this loses all precision near that line; it
/// is kept as a reference for [`w4_two_param_formula`].
pub fn abqq_literal(a: f64, b: f64) -> Result<f64> {
    let q2 = two_param_q2(a, b)?;
    let d = 4.0 * q2 - a * a - b * b;
    let e = a * a * b * b;
    let num = 2.0 * q2 * q2 * (d * (d * d - 36.0 * e) + (d * d + 12.0 * e).powf(1.5));
    let den = (d * d - 4.0 * e).powi(2);
    Ok(num / den)
}

/// The two-parameter surface in factored form.
///
/// With `D = 4q² − a² − b²` and `S = √(D² + 12a²b²)` the numerator bracket is
/// `(S − 2D)²(S + D)` and the denominator is `(S − 2D)²(S + 2D)²/9`, so
/// `P = 18q⁴(S + D)/(S + 2D)²`. The common factor vanishes on `2q = a + b`;
/// dividing it out leaves a form that is smooth there.
pub fn w4_two_param_formula(a: f64, b: f64) -> Result<f64> {
    let q2 = two_param_q2(a, b)?;
    let d = 4.0 * q2 - a * a - b * b;
    let s = (d * d + 12.0 * a * a * b * b).sqrt();
    Ok(18.0 * q2 * q2 * (s + d) / ((s + 2.0 * d) * (s + 2.0 * d)))
}

/// `(27/256)(a + b)⁴/(ab)`, the two-parameter overlap on the `2q = a + b` line.
pub fn w4_degenerate_line(a: f64, b: f64) -> f64 {
    27.0 / 256.0 * (a + b).powi(4) / (a * b)
}

/// `4q⁴/(4q² − b²)`, the `a = 0` limit (a three-qubit isosceles W state).
pub fn w4_a_zero(b: f64) -> f64 {
    let q2 = (1.0 - b * b) / 2.0;
    4.0 * q2 * q2 / (4.0 * q2 - b * b)
}

/// `4(1 − b²)³/(3 − 4b²)²`, the `a = q` limit.
pub fn w4_a_equals_q(b: f64) -> f64 {
    let b2 = b * b;
    4.0 * (1.0 - b2).powi(3) / ((3.0 - 4.0 * b2) * (3.0 - 4.0 * b2))
}

/// Four-qubit `a|1000⟩ + b|0100⟩ + q|0010⟩ + q|0001⟩` with
/// `q = √((1 − a² − b²)/2)`.
pub fn pmax_w4_two_param(a: f64, b: f64) -> Result<OverlapResult> {
    let q2 = two_param_q2(a, b)?;
    let params = WParams::new(vec![a, b, q2.sqrt(), q2.sqrt()])?;
    let alpha_sq = params.max_square();
    // α² vs β² + γ² + δ² = 1 − α²
    let regime = classify(2.0 * alpha_sq - 1.0);
    if regime == Regime::SlightlyEntangled {
        return Ok(OverlapResult::slightly(
            alpha_sq,
            Some(one_hot_nearest(&params)),
        ));
    }

    let d = 4.0 * q2 - a * a - b * b;
    let on_line = d >= 0.0 && (d * d - 4.0 * a * a * b * b).abs() < DEGENERATE_LINE_TOL;
    let (pmax, method) = if on_line && a > 0.0 && b > 0.0 {
        (w4_degenerate_line(a, b), Method::DegenerateLine)
    } else {
        (w4_two_param_formula(a, b)?, Method::TwoParameter)
    };
    // The surface is 0/0 at the corner a = b = 1/√2, q = 0 (the only highly
    // entangled or boundary point with q = 0), where both branches equal 1/2.
    let (pmax, method) = if pmax.is_finite() && q2 > BOUNDARY_TOL {
        (pmax, method)
    } else {
        (alpha_sq, Method::LargestCoefficient)
    };
    Ok(OverlapResult {
        pmax,
        regime,
        circumradius: None,
        nearest: (regime == Regime::Boundary).then(|| one_hot_nearest(&params)),
        method,
    })
}

/// `max aₖ²` when it is at least 1/2, with the one-hot product state on the
/// largest coefficient (lowest index on ties). `None` otherwise: no analytic
/// value is claimed for generic highly entangled coefficients.
pub fn pmax_slightly_entangled(params: &WParams) -> Option<OverlapResult> {
    let alpha_sq = params.max_square();
    (alpha_sq >= 0.5 - BOUNDARY_TOL).then(|| {
        let mut r = OverlapResult::slightly(alpha_sq, Some(one_hot_nearest(params)));
        if (alpha_sq - 0.5).abs() <= BOUNDARY_TOL {
            r.regime = Regime::Boundary;
        }
        r
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qstate::{overlap, w_state};
    use std::f64::consts::FRAC_1_SQRT_2;

    fn state(entries: &[(u64, f64)], n: usize) -> PureState {
        PureState::new(n, entries.iter().map(|(l, a)| (*l, Complex64::new(*a, 0.0)))).unwrap()
    }

    #[test]
    fn two_qubit_examples() {
        let bell = state(&[(0, FRAC_1_SQRT_2), (3, FRAC_1_SQRT_2)], 2);
        let r = pmax_two_qubit(&bell).unwrap();
        assert!((r.pmax - 0.5).abs() < 1e-15);
        assert_eq!(r.regime, Regime::Boundary);

        let product = state(&[(0b10, 1.0)], 2);
        assert!((pmax_two_qubit(&product).unwrap().pmax - 1.0).abs() < 1e-15);

        let psi = state(&[(0, 0.8f64.sqrt()), (3, 0.2f64.sqrt())], 2);
        let r = pmax_two_qubit(&psi).unwrap();
        assert!((r.pmax - 0.8).abs() < 1e-15);
        let amp = overlap(&psi, r.nearest.as_ref().unwrap()).unwrap();
        assert!((amp.norm_sqr() - 0.8).abs() < 1e-14);

        let w3 = w_state(&WParams::new(vec![0.6, 0.8, 0.0]).unwrap());
        assert!(pmax_two_qubit(&w3).is_err());
    }

    #[test]
    fn two_qubit_nearest_for_complex_state() {
        let psi = PureState::new(
            2,
            [
                (0, Complex64::new(0.3, 0.1)),
                (1, Complex64::new(-0.2, 0.5)),
                (2, Complex64::new(0.4, -0.3)),
                (3, Complex64::new(0.1, (1.0f64 - 0.1 - 0.29 - 0.25 - 0.01).sqrt())),
            ],
        )
        .unwrap();
        let r = pmax_two_qubit(&psi).unwrap();
        let amp = overlap(&psi, r.nearest.as_ref().unwrap()).unwrap();
        assert!((amp.norm_sqr() - r.pmax).abs() < 1e-13);
    }

    #[test]
    fn w3_examples() {
        let s = 1.0 / 3f64.sqrt();
        let r = pmax_w3(&WParams::new(vec![s; 3]).unwrap()).unwrap();
        assert!((r.pmax - 4.0 / 9.0).abs() < 1e-15);
        assert_eq!(r.regime, Regime::HighlyEntangled);
        // equilateral side s: R = s/√3
        assert!((r.circumradius.unwrap() - s / 3f64.sqrt()).abs() < 1e-15);

        let r = pmax_w3(&WParams::new(vec![FRAC_1_SQRT_2, FRAC_1_SQRT_2, 0.0]).unwrap()).unwrap();
        assert!((r.pmax - 0.5).abs() < 1e-15);
        assert_eq!(r.regime, Regime::Boundary);

        let r = pmax_w3(&WParams::new(vec![0.6, 0.6, 0.28f64.sqrt()]).unwrap()).unwrap();
        assert!((r.pmax - 0.5184 / 1.16).abs() < 1e-15);

        let r = pmax_w3(&WParams::new(vec![0.2, 0.9, (1.0f64 - 0.85).sqrt()]).unwrap()).unwrap();
        assert_eq!(r.regime, Regime::SlightlyEntangled);
        assert!((r.pmax - 0.81).abs() < 1e-15);
        assert_eq!(r.nearest.unwrap(), ProductState::basis(3, 0b010).unwrap());

        assert!(pmax_w3(&WParams::new(vec![0.6, 0.8]).unwrap()).is_err());
    }

    #[test]
    fn w3_branches_meet_on_right_triangles() {
        for t in [0.1f64, 0.4, 0.7, 1.2] {
            // α² = β² + γ² = 1/2
            let (b, c) = (FRAC_1_SQRT_2 * t.cos(), FRAC_1_SQRT_2 * t.sin());
            let hyp = FRAC_1_SQRT_2;
            let eps = 1e-7;
            let inside = WParams::new(vec![
                (hyp * hyp - eps).sqrt(),
                (b * b + eps / 2.0).sqrt(),
                (c * c + eps / 2.0).sqrt(),
            ])
            .unwrap();
            let r = pmax_w3(&inside).unwrap();
            assert_eq!(r.regime, Regime::HighlyEntangled);
            assert!((r.pmax - 0.5).abs() < 1e-6, "{}", r.pmax);
        }
    }

    #[test]
    fn circumradius_needle_triangle() {
        // sides 1, 1, ε: R = 1/√(4 − ε²)
        let eps = 1e-6;
        let r = circumradius(1.0, 1.0, eps).unwrap();
        assert!((r - 1.0 / (4.0 - eps * eps).sqrt()).abs() < 1e-12);
        assert!(circumradius(1.0, 0.5, 0.5).is_none());
        assert!((circumradius(3.0, 4.0, 5.0).unwrap() - 2.5).abs() < 1e-15);
    }

    #[test]
    fn one_parameter_examples() {
        let r = pmax_wn_one_param(4, 0.5).unwrap();
        assert!((r.pmax - 27.0 / 64.0).abs() < 1e-15);
        assert_eq!(r.method, Method::OneParameter);

        let r = pmax_wn_one_param(5, 1.0 / 5f64.sqrt()).unwrap();
        assert!((r.pmax - 0.4096).abs() < 1e-15);

        for n in 3..=12 {
            let r = pmax_wn_one_param(n, FRAC_1_SQRT_2).unwrap();
            assert!((r.pmax - 0.5).abs() < 1e-12, "n={n}");
            assert_eq!(r.regime, Regime::Boundary);
        }

        // frozen from a scipy multi-start maximization over product states
        let r = pmax_wn_one_param(6, 0.3).unwrap();
        assert!((r.pmax - 0.403745311456420).abs() < 1e-12);

        let r = pmax_wn_one_param(5, 0.9).unwrap();
        assert_eq!(r.regime, Regime::SlightlyEntangled);
        assert!((r.pmax - 0.81).abs() < 1e-15);
        assert_eq!(r.nearest.unwrap(), ProductState::basis(5, 1).unwrap());

        assert!(pmax_wn_one_param(2, 0.5).is_err());
        assert!(pmax_wn_one_param(4, 1.5).is_err());
        assert!(pmax_wn_one_param(4, -0.1).is_err());
    }

    #[test]
    fn nearest_one_parameter() {
        let s = 1.0 / 3f64.sqrt();
        let p = nearest_wn_one_param(3, s, 0.0).unwrap();
        for f in p.factors() {
            assert!((f.amp(0).re - (2.0f64 / 3.0).sqrt()).abs() < 1e-15);
            assert!((f.amp(1).re - s).abs() < 1e-15);
        }
        let psi = w_state(&WParams::new(vec![s; 3]).unwrap());
        assert!((overlap(&psi, &p).unwrap().norm() - 2.0 / 3.0).abs() < 1e-15);

        let psi = w_state(&WParams::one_param(4, 0.5).unwrap());
        let p = nearest_wn_one_param(4, 0.5, 0.0).unwrap();
        assert!((overlap(&psi, &p).unwrap().norm_sqr() - 27.0 / 64.0).abs() < 1e-15);

        for (n, q, phi) in [(3, 0.2, 0.4), (6, 0.6, 2.0), (9, 0.05, -1.0)] {
            let psi = w_state(&WParams::one_param(n, q).unwrap());
            let a = overlap(&psi, &nearest_wn_one_param(n, q, phi).unwrap()).unwrap();
            let b = overlap(&psi, &nearest_wn_one_param(n, q, phi + std::f64::consts::PI).unwrap())
                .unwrap();
            assert!((a.norm() - b.norm()).abs() < 1e-14);
            assert!((a.norm_sqr() - pmax_wn_one_param(n, q).unwrap().pmax).abs() < 1e-14);
        }

        assert!(matches!(
            nearest_wn_one_param(4, 0.8, 0.0),
            Err(Error::OutsideDomain(_))
        ));
    }

    #[test]
    fn two_parameter_examples() {
        let r = pmax_w4_two_param(0.5, 0.5).unwrap();
        assert!((r.pmax - 27.0 / 64.0).abs() < 1e-15);

        let r = pmax_w4_two_param(0.3, 0.4).unwrap();
        assert_eq!(r.method, Method::TwoParameter);
        // frozen from a scipy multi-start maximization over product states
        assert!((r.pmax - 0.445962783905515).abs() < 1e-12);

        let r = pmax_w4_two_param(0.0, 0.5).unwrap();
        assert!((r.pmax - 0.45).abs() < 1e-15);

        // a = 3b on the 2q = a + b line
        let (a, b) = (2f64.sqrt() / 2.0, 2f64.sqrt() / 6.0);
        let r = pmax_w4_two_param(a, b).unwrap();
        assert!((r.pmax - 0.5).abs() < 1e-12);
        assert_eq!(r.regime, Regime::Boundary);

        let r = pmax_w4_two_param(0.9, 0.1).unwrap();
        assert_eq!(r.regime, Regime::SlightlyEntangled);
        assert!((r.pmax - 0.81).abs() < 1e-15);

        let r = pmax_w4_two_param(FRAC_1_SQRT_2, FRAC_1_SQRT_2).unwrap();
        assert!((r.pmax - 0.5).abs() < 1e-15);

        assert!(pmax_w4_two_param(0.9, 0.9).is_err());
        assert!(pmax_w4_two_param(-0.1, 0.2).is_err());
    }

    #[test]
    fn degenerate_line_uses_special_form() {
        // on 2q = a + b: a² + b² + (a + b)²/2 = 1
        let a: f64 = 0.45;
        // solve 1.5b² + ab + 1.5a² − 1 = 0 for b
        let b = (-a + (a * a - 6.0 * (1.5 * a * a - 1.0)).sqrt()) / 3.0;
        let r = pmax_w4_two_param(a, b).unwrap();
        assert_eq!(r.method, Method::DegenerateLine);
        assert!((r.pmax - w4_degenerate_line(a, b)).abs() < 1e-15);
        assert!((w4_two_param_formula(a, b).unwrap() - r.pmax).abs() < 1e-12);
    }

    #[test]
    fn literal_and_factored_forms_agree_away_from_the_line() {
        for (a, b) in [(0.3, 0.4), (0.2, 0.5), (0.1, 0.15), (0.6, 0.3), (0.35, 0.35)] {
            let lit = abqq_literal(a, b).unwrap();
            let fac = w4_two_param_formula(a, b).unwrap();
            assert!((lit - fac).abs() < 1e-13, "({a},{b}): {lit} vs {fac}");
        }
    }

    #[test]
    fn slightly_entangled_rule() {
        let p = WParams::new(vec![0.8, 0.36, 0.48]).unwrap();
        let r = pmax_slightly_entangled(&p).unwrap();
        assert!((r.pmax - 0.64).abs() < 1e-15);
        assert_eq!(r.nearest.unwrap(), ProductState::basis(3, 0b100).unwrap());

        let s = 1.0 / 3f64.sqrt();
        assert!(pmax_slightly_entangled(&WParams::new(vec![s; 3]).unwrap()).is_none());

        let r = pmax_slightly_entangled(&WParams::new(vec![FRAC_1_SQRT_2; 2]).unwrap()).unwrap();
        assert!((r.pmax - 0.5).abs() < 1e-15);
        assert_eq!(r.nearest.unwrap(), ProductState::basis(2, 0b10).unwrap());
    }
}
