use std::collections::BTreeMap;

use num_complex::Complex64;

use super::state::{PureState, MAX_QUBITS};
use crate::{Error, Result};

/// Parses the text state format: one `bitstring real [imag]` triple per line,
/// `#` starts a comment, blank lines are ignored and `imag` defaults to 0.
///
/// The state is checked for normalization, never rescaled.
pub fn parse_state(text: &str) -> Result<PureState> {
    let mut qubits: Option<usize> = None;
    let mut amplitudes = BTreeMap::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if !(2..=3).contains(&tokens.len()) {
            return Err(Error::MalformedLine { line });
        }
        let label_text = tokens[0];
        if label_text.is_empty()
            || label_text.len() > MAX_QUBITS
            || !label_text.bytes().all(|b| b == b'0' || b == b'1')
        {
            return Err(Error::InvalidLabel {
                line,
                label: label_text.to_string(),
            });
        }
        let width = *qubits.get_or_insert(label_text.len());
        if label_text.len() != width {
            return Err(Error::InconsistentLength {
                line,
                expected: width,
                found: label_text.len(),
            });
        }
        let label = u64::from_str_radix(label_text, 2).expect("validated binary digits");
        let re = parse_number(tokens[1], line)?;
        let im = tokens.get(2).map_or(Ok(0.0), |t| parse_number(t, line))?;
        if amplitudes.insert(label, Complex64::new(re, im)).is_some() {
            return Err(Error::DuplicateLabel {
                line,
                label: label_text.to_string(),
            });
        }
    }

    let qubits = qubits.ok_or(Error::EmptyState)?;
    PureState::from_map(qubits, amplitudes)
}

fn parse_number(token: &str, line: usize) -> Result<f64> {
    match token.parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        _ => Err(Error::BadNumber {
            line,
            token: token.to_string(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_1_SQRT_2;

    #[test]
    fn parses_bell_like_state() {
        let psi = parse_state("10 0.7071067811865476 0\n01 0.7071067811865476 0\n").unwrap();
        assert_eq!(psi.qubits(), 2);
        assert!((psi.amplitude(0b10).re - FRAC_1_SQRT_2).abs() < 1e-15);
        assert!((psi.amplitude(0b01).re - FRAC_1_SQRT_2).abs() < 1e-15);
    }

    #[test]
    fn eight_digit_amplitudes_fail_the_norm_check() {
        // 2·0.70710678² = 0.9999999966, off by more than 1e-9
        assert!(matches!(
            parse_state("10 0.70710678 0\n01 0.70710678 0"),
            Err(Error::NotNormalized { .. })
        ));
    }

    #[test]
    fn parses_w3_with_comments_and_missing_imag() {
        let text = "# generalized W\n\n100 0.6\n010 0.6   # second\n001 0.5291502622129181\n";
        let psi = parse_state(text).unwrap();
        assert_eq!(psi.qubits(), 3);
        let w = psi.w_coefficients().unwrap();
        assert_eq!(w.coefficients()[0], 0.6);
        assert!((w.coefficients()[2] - 0.28f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn rejects_unnormalized() {
        let err = parse_state("11 1.0 0\n00 0.1 0").unwrap_err();
        match err {
            Error::NotNormalized { norm_sq, .. } => assert!((norm_sq - 1.01).abs() < 1e-12),
            e => panic!("unexpected {e}"),
        }
    }

    #[test]
    fn rejects_duplicates_lengths_and_numbers() {
        assert!(matches!(
            parse_state("10 1 0\n10 0 0"),
            Err(Error::DuplicateLabel { line: 2, .. })
        ));
        assert!(matches!(
            parse_state("10 1 0\n010 0 0"),
            Err(Error::InconsistentLength { line: 2, expected: 2, found: 3 })
        ));
        assert!(matches!(
            parse_state("10 one 0"),
            Err(Error::BadNumber { line: 1, .. })
        ));
        assert!(matches!(parse_state("10 nan"), Err(Error::BadNumber { .. })));
        assert!(matches!(parse_state("1x 1"), Err(Error::InvalidLabel { .. })));
        assert!(matches!(parse_state("10"), Err(Error::MalformedLine { line: 1 })));
        assert!(matches!(parse_state("# nothing\n"), Err(Error::EmptyState)));
    }

    #[test]
    fn complex_amplitudes() {
        let psi = parse_state("0 0 0.6\n1 0.8 0").unwrap();
        assert_eq!(psi.amplitude(0), Complex64::new(0.0, 0.6));
    }
}
