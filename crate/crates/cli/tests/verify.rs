use wgeom_cli::args::Level;
use wgeom_cli::commands::verify::{report, run_checks, Formulas};

fn wrong_exponent(n: usize, q: f64) -> wgeom_core::Result<f64> {
    let r = wgeom_core::closed_form::pmax_wn_one_param(n, q)?;
    if r.regime != wgeom_core::Regime::HighlyEntangled {
        return Ok(r.pmax);
    }
    // (1 − q²)^n instead of (1 − q²)^{n−1}
    let q2 = q * q;
    let nf = n as f64;
    Ok((1.0 - q2).powi(n as i32) * ((nf - 2.0) / ((nf - 1.0) - nf * q2)).powi(n as i32 - 2))
}

#[test]
fn default_formulas_pass() {
    let checks = run_checks(Level::Quick, 7, &Formulas::default());
    assert!(checks.iter().all(|c| c.pass), "{checks:#?}");
}

#[test]
fn wrong_exponent_is_caught() {
    let f = Formulas {
        wn_one_param: wrong_exponent,
        ..Formulas::default()
    };
    let checks = run_checks(Level::Quick, 7, &f);
    let failed: Vec<&str> = checks.iter().filter(|c| !c.pass).map(|c| c.name).collect();
    assert!(failed.contains(&"equal-coefficient law"));
    assert!(failed.contains(&"one-parameter sweep vs oracle"));
    assert!(failed.contains(&"nearest-state consistency"));

    let mut out = Vec::new();
    assert!(!report(&checks, &mut out).unwrap());
    let text = String::from_utf8(out).unwrap();
    assert!(text.lines().any(|l| l.starts_with("FAIL")));
}

#[test]
fn shifted_two_parameter_surface_is_caught() {
    let f = Formulas {
        w4_two_param: |a, b| wgeom_core::closed_form::w4_two_param_formula(a, b + 0.01),
        ..Formulas::default()
    };
    let checks = run_checks(Level::Quick, 7, &f);
    assert!(checks.iter().any(|c| !c.pass));
}

#[test]
fn broken_two_qubit_formula_is_caught() {
    let f = Formulas {
        two_qubit: |_| Ok(0.5),
        ..Formulas::default()
    };
    let failed: Vec<_> = run_checks(Level::Quick, 7, &f)
        .into_iter()
        .filter(|c| !c.pass)
        .map(|c| c.name)
        .collect();
    assert_eq!(failed, vec!["two-qubit formula vs grid"]);
}
