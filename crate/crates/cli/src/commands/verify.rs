//! Self-check suite behind `wgeom verify`.
//!
//! The closed forms under test come in through [`Formulas`], so a test can
//! substitute a wrong formula and watch the suite fail.

use std::f64::consts::FRAC_1_SQRT_2;
use std::io::Write;

use rayon::prelude::*;
use wgeom_core::closed_form::{
    nearest_wn_one_param, pmax_two_qubit, pmax_w3, pmax_w4_two_param, pmax_wn_one_param,
};
use wgeom_core::oracle::sampling::{random_pure_state, random_w_params, stream_rng};
use wgeom_core::oracle::{alternating_maximize, climb, grid_search, verify_fixed_point};
use wgeom_core::qstate::correlation_tensors;
use wgeom_core::stationarity::{residual_lagrange3, residual_lagrange4, solve_symmetric};
use wgeom_core::{
    build_witness, overlap, w_state, OracleConfig, ProductState, PureState, WParams,
};

use crate::args::{Level, VerifyArgs};
use crate::{CliError, Outcome};

type Res<T> = wgeom_core::Result<T>;

/// Closed forms checked by the suite.
#[derive(Debug, Clone, Copy)]
pub struct Formulas {
    pub wn_one_param: fn(usize, f64) -> Res<f64>,
    pub w4_two_param: fn(f64, f64) -> Res<f64>,
    pub w3: fn(&WParams) -> Res<f64>,
    pub two_qubit: fn(&PureState) -> Res<f64>,
}

impl Default for Formulas {
    fn default() -> Self {
        Formulas {
            wn_one_param: |n, q| Ok(pmax_wn_one_param(n, q)?.pmax),
            w4_two_param: |a, b| Ok(pmax_w4_two_param(a, b)?.pmax),
            w3: |p| Ok(pmax_w3(p)?.pmax),
            two_qubit: |psi| Ok(pmax_two_qubit(psi)?.pmax),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub worst: f64,
    pub tol: f64,
    pub pass: bool,
    pub note: String,
}

impl Check {
    fn below(name: &'static str, worst: f64, tol: f64) -> Self {
        Check {
            name,
            worst,
            tol,
            pass: worst < tol,
            note: String::new(),
        }
    }

    fn with(mut self, ok: bool, note: String) -> Self {
        self.pass &= ok;
        self.note = note;
        self
    }

    /// A check whose evaluation itself errored.
    fn broken(name: &'static str, e: wgeom_core::Error) -> Self {
        Check {
            name,
            worst: f64::NAN,
            tol: f64::NAN,
            pass: false,
            note: format!("error: {e}"),
        }
    }
}

struct Sizes {
    sweep_points: usize,
    grid_side: usize,
    witness_samples: usize,
    w3_samples: u64,
    two_qubit_samples: u64,
    oracle_states: u64,
}

fn sizes(level: Level) -> Sizes {
    match level {
        Level::Quick => Sizes {
            sweep_points: 12,
            grid_side: 10,
            witness_samples: 1000,
            w3_samples: 50,
            two_qubit_samples: 20,
            oracle_states: 10,
        },
        Level::Full => Sizes {
            sweep_points: 50,
            grid_side: 40,
            witness_samples: 10_000,
            w3_samples: 200,
            two_qubit_samples: 100,
            oracle_states: 50,
        },
    }
}

fn max_of(it: impl IntoIterator<Item = Res<f64>>) -> Res<f64> {
    it.into_iter().try_fold(0.0f64, |m, x| Ok(m.max(x?)))
}

fn oracle(params: &WParams, seed: u64) -> Res<f64> {
    let config = OracleConfig {
        seed,
        ..OracleConfig::default()
    };
    Ok(alternating_maximize(&w_state(params), &config)?.pmax)
}

fn equal_coefficients(f: &Formulas) -> Res<Check> {
    let worst = max_of((3..=10).map(|n| {
        let nf = n as f64;
        Ok(((f.wn_one_param)(n, 1.0 / nf.sqrt())? - (1.0 - 1.0 / nf).powi(n as i32 - 1)).abs())
    }))?;
    Ok(Check::below("equal-coefficient law", worst, 1e-12))
}

fn reduction(f: &Formulas) -> Res<Check> {
    let worst = max_of((4..=10).map(|n| {
        let m = (n - 1) as f64;
        Ok(((f.wn_one_param)(n, 0.0)? - (1.0 - 1.0 / m).powi(n as i32 - 2)).abs())
    }))?;
    Ok(Check::below("reduction law", worst, 1e-12))
}

fn one_parameter_sweep(f: &Formulas, s: &Sizes, seed: u64) -> Res<Check> {
    let points: Vec<(usize, f64)> = [4, 5, 6]
        .into_iter()
        .flat_map(|n| {
            (0..s.sweep_points).map(move |i| (n, 0.99 * i as f64 / (s.sweep_points - 1) as f64))
        })
        .collect();
    let worst = points
        .par_iter()
        .map(|&(n, q)| {
            let closed = (f.wn_one_param)(n, q)?;
            Ok((closed - oracle(&WParams::one_param(n, q)?, seed)?).abs())
        })
        .collect::<Vec<_>>();
    let worst = max_of(worst)?;
    let mut edge = 0.0f64;
    for n in [4, 5, 6] {
        for q in [FRAC_1_SQRT_2 - 1e-10, FRAC_1_SQRT_2 + 1e-10] {
            edge = edge.max(((f.wn_one_param)(n, q)? - 0.5).abs());
        }
    }
    Ok(Check::below("one-parameter sweep vs oracle", worst, 1e-6)
        .with(edge < 1e-9, format!("|P − 1/2| at q = 1/√2: {edge:.1e}")))
}

fn grid_points(side: usize) -> Vec<(f64, f64)> {
    // i/side keeps a = b = 1/2 on the grid for even sides
    let axis: Vec<f64> = (0..side).map(|i| i as f64 / side as f64).collect();
    axis.iter()
        .flat_map(|&a| axis.iter().map(move |&b| (a, b)))
        .filter(|(a, b)| a * a + b * b <= 1.0)
        .collect()
}

fn two_parameter_grid(f: &Formulas, s: &Sizes, seed: u64) -> Res<Check> {
    let rows = grid_points(s.grid_side)
        .par_iter()
        .map(|&(a, b)| {
            let closed = (f.w4_two_param)(a, b)?;
            let params = WParams::two_param(a, b)?;
            Ok((a, b, closed, (closed - oracle(&params, seed)?).abs()))
        })
        .collect::<Res<Vec<_>>>()?;
    let worst = rows.iter().map(|r| r.3).fold(0.0, f64::max);
    let min = rows.iter().min_by(|x, y| x.2.total_cmp(&y.2)).copied();
    let (ok, note) = match min {
        Some((a, b, p, _)) => (
            a == 0.5 && b == 0.5 && (p - 27.0 / 64.0).abs() < 1e-9,
            format!("minimum {p:.12} at ({a}, {b})"),
        ),
        None => (false, "empty grid".into()),
    };
    Ok(Check::below("two-parameter grid vs oracle", worst, 1e-6).with(ok, note))
}

fn line_b(a: f64) -> f64 {
    // a² + b² + (a + b)²/2 = 1
    (-a + (a * a - 6.0 * (1.5 * a * a - 1.0)).sqrt()) / 3.0
}

fn special_cases(f: &Formulas) -> Res<Check> {
    let mut worst = 0.0f64;
    for b in [0.1, 0.3, 0.5, 0.6] {
        let q2 = (1.0 - b * b) / 2.0;
        worst = worst.max(((f.w4_two_param)(0.0, b)? - 4.0 * q2 * q2 / (4.0 * q2 - b * b)).abs());
        let a = ((1.0 - b * b) / 3.0f64).sqrt();
        let b2 = b * b;
        let special = 4.0 * (1.0 - b2).powi(3) / (3.0 - 4.0 * b2).powi(2);
        worst = worst.max(((f.w4_two_param)(a, b)? - special).abs());
    }
    for a in [0.3, 0.4, 0.5, 0.6] {
        let b = line_b(a);
        let line = 27.0 / 256.0 * (a + b).powi(4) / (a * b);
        worst = worst.max(((f.w4_two_param)(a, b)? - line).abs());
    }
    let b = 1.0 / 18f64.sqrt();
    worst = worst.max(((f.w4_two_param)(3.0 * b, b)? - 0.5).abs());
    Ok(Check::below("special-case identities", worst, 1e-9))
}

fn degenerate_neighbourhood(f: &Formulas, seed: u64) -> Res<Check> {
    let points: Vec<(f64, f64)> = [0.3, 0.45, 0.6]
        .into_iter()
        .flat_map(|a| {
            let b = line_b(a);
            [0.0, 1e-10, -1e-10, 1e-8, -1e-8, 1e-6, -1e-6].map(move |d| (a, b + d))
        })
        .collect();
    let worst = max_of(
        points
            .par_iter()
            .map(|&(a, b)| Ok(((f.w4_two_param)(a, b)? - oracle(&WParams::two_param(a, b)?, seed)?).abs()))
            .collect::<Vec<_>>(),
    )?;
    Ok(Check::below("degenerate-line neighbourhood vs oracle", worst, 1e-6))
}

fn nearest_grid() -> Vec<(usize, f64)> {
    (3..=8)
        .flat_map(|n| (1..=7).map(move |i| (n, 0.1 * i as f64)))
        .collect()
}

fn stationarity() -> Res<Check> {
    let mut worst = 0.0f64;
    for i in 0..20 {
        let q = FRAC_1_SQRT_2 * i as f64 / 19.0;
        let s3 = solve_symmetric(3, q)?.s_vectors[0];
        let p3 = WParams::one_param(3, q)?;
        worst = worst.max(max_of(residual_lagrange3(&p3, &s3, &s3)?.map(|r| Ok(r.abs())))?);
        let s4 = solve_symmetric(4, q)?.s_vectors[0];
        let t = correlation_tensors(&w_state(&WParams::one_param(4, q)?))?;
        worst = worst.max(max_of(residual_lagrange4(&t, &s4, &s4, &s4)?.map(|r| Ok(r.abs())))?);
    }
    let mut fixed = 0.0f64;
    for (n, q) in nearest_grid() {
        let psi = w_state(&WParams::one_param(n, q)?);
        fixed = fixed.max(verify_fixed_point(&psi, &nearest_wn_one_param(n, q, 0.0)?)?.residual);
    }
    Ok(Check::below("stationarity residuals", worst, 1e-10)
        .with(fixed < 1e-12, format!("fixed-point residual {fixed:.1e}")))
}

fn nearest_consistency(f: &Formulas) -> Res<Check> {
    let worst = max_of(nearest_grid().into_iter().map(|(n, q)| {
        let psi = w_state(&WParams::one_param(n, q)?);
        let direct = overlap(&psi, &nearest_wn_one_param(n, q, 0.0)?)?.norm_sqr();
        Ok((direct - (f.wn_one_param)(n, q)?).abs())
    }))?;
    Ok(Check::below("nearest-state consistency", worst, 1e-12))
}

fn witness(s: &Sizes, seed: u64) -> Res<Check> {
    let mut detected = true;
    let mut scan_min = f64::INFINITY;
    let mut zero = 0.0f64;
    for n in 3..=6 {
        for q in [0.2, 0.5, 0.8] {
            let w = build_witness(n, q)?;
            detected &= w.evaluate(&w.w_state)? < 0.0;
            scan_min = scan_min.min(w.separable_scan(s.witness_samples, seed)?.minimum);
            zero = zero.max(w.evaluate(&w.nearest()?)?.abs());
        }
    }
    Ok(Check::below("witness inequalities", zero, 1e-10).with(
        detected && scan_min >= -1e-10,
        format!("W detected: {detected}, separable minimum {scan_min:.1e}"),
    ))
}

fn three_qubit(f: &Formulas, s: &Sizes, seed: u64) -> Res<Check> {
    let rows = (0..s.w3_samples)
        .into_par_iter()
        .map(|i| {
            let params = random_w_params(3, &mut stream_rng(seed, i))?;
            let highly = params.max_square() < 0.5;
            Ok(((f.w3)(&params)? - oracle(&params, seed)?).abs()).map(|d| (d, highly))
        })
        .collect::<Res<Vec<_>>>()?;
    let worst = rows.iter().map(|r| r.0).fold(0.0, f64::max);
    let highly = rows.iter().filter(|r| r.1).count();
    Ok(Check::below("three-qubit closed form vs oracle", worst, 1e-6).with(
        highly > 0 && highly < rows.len(),
        format!("{highly} of {} highly entangled", rows.len()),
    ))
}

fn two_qubit(f: &Formulas, s: &Sizes, seed: u64) -> Res<Check> {
    let worst = max_of(
        (0..s.two_qubit_samples)
            .into_par_iter()
            .map(|i| {
                let psi = random_pure_state(2, &mut stream_rng(seed.wrapping_add(1), i))?;
                Ok(((f.two_qubit)(&psi)? - grid_search(&psi, 32)?.pmax).abs())
            })
            .collect::<Vec<_>>(),
    )?;
    Ok(Check::below("two-qubit formula vs grid", worst, 1e-5))
}

fn oracle_properties(s: &Sizes, seed: u64) -> Res<Check> {
    let mut drop = 0.0f64;
    let mut identical = true;
    for i in 0..s.oracle_states {
        let n = 2 + (i as usize % 7);
        let psi = random_pure_state(n, &mut stream_rng(seed.wrapping_add(2), i))?;
        let start = ProductState::basis(n, 0)?;
        let mut last = overlap(&psi, &start)?.norm_sqr();
        climb(&psi, start, 1e-13, 500, |v| {
            drop = drop.max(last - v);
            last = v;
        })?;
        let config = OracleConfig {
            starts: 8,
            seed,
            ..OracleConfig::default()
        };
        let a = alternating_maximize(&psi, &config)?;
        let b = alternating_maximize(&psi, &config)?;
        identical &= a.pmax.to_bits() == b.pmax.to_bits() && a.nearest == b.nearest;
    }
    Ok(Check::below("oracle monotonicity and determinism", drop, 1e-15)
        .with(identical, format!("reruns identical: {identical}")))
}

pub fn run_checks(level: Level, seed: u64, f: &Formulas) -> Vec<Check> {
    let s = sizes(level);
    let suite: Vec<(&'static str, Box<dyn Fn() -> Res<Check> + '_>)> = vec![
        ("equal-coefficient law", Box::new(|| equal_coefficients(f))),
        ("reduction law", Box::new(|| reduction(f))),
        ("one-parameter sweep vs oracle", Box::new(|| one_parameter_sweep(f, &s, seed))),
        ("two-parameter grid vs oracle", Box::new(|| two_parameter_grid(f, &s, seed))),
        ("special-case identities", Box::new(|| special_cases(f))),
        ("degenerate-line neighbourhood vs oracle", Box::new(|| degenerate_neighbourhood(f, seed))),
        ("stationarity residuals", Box::new(stationarity)),
        ("nearest-state consistency", Box::new(|| nearest_consistency(f))),
        ("witness inequalities", Box::new(|| witness(&s, seed))),
        ("three-qubit closed form vs oracle", Box::new(|| three_qubit(f, &s, seed))),
        ("two-qubit formula vs grid", Box::new(|| two_qubit(f, &s, seed))),
        ("oracle monotonicity and determinism", Box::new(|| oracle_properties(&s, seed))),
    ];
    suite
        .into_iter()
        .map(|(name, check)| check().unwrap_or_else(|e| Check::broken(name, e)))
        .collect()
}

pub fn report(checks: &[Check], out: &mut dyn Write) -> std::io::Result<bool> {
    for c in checks {
        let status = if c.pass { "PASS" } else { "FAIL" };
        write!(out, "{status} {:<40} worst {:.2e}  tol {:.0e}", c.name, c.worst, c.tol)?;
        if !c.note.is_empty() {
            write!(out, "  ({})", c.note)?;
        }
        writeln!(out)?;
    }
    let passed = checks.iter().filter(|c| c.pass).count();
    writeln!(out, "{passed} of {} checks passed", checks.len())?;
    Ok(passed == checks.len())
}

pub fn run(args: &VerifyArgs, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let checks = run_checks(args.level, args.seed, &Formulas::default());
    Ok(if report(&checks, out)? {
        Outcome::Ok
    } else {
        Outcome::Mismatch
    })
}
