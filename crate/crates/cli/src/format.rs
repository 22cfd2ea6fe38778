//! Number formatting for reports and CSV: 12 significant digits, shortest
//! form, `.` as decimal separator. Behaves like C's `%.12g`.

pub const SIG_DIGITS: usize = 12;

pub fn fmt_g(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.*e}", SIG_DIGITS - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= SIG_DIGITS as i32 {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", trim_zeros(mantissa), exp.abs())
    } else {
        let decimals = (SIG_DIGITS as i32 - 1 - exp) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Parses a value printed by [`fmt_g`].
pub fn parse_g(s: &str) -> f64 {
    s.parse().unwrap_or(f64::NAN)
}

/// `|a − b|` of the printed values, itself printed.
pub fn printed_abs_diff(a: &str, b: &str) -> String {
    fmt_g((parse_g(a) - parse_g(b)).abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_c_g() {
        assert_eq!(fmt_g(27.0 / 64.0), "0.421875");
        assert_eq!(fmt_g(4.0 / 9.0), "0.444444444444");
        assert_eq!(fmt_g(1.0), "1");
        assert_eq!(fmt_g(0.5), "0.5");
        assert_eq!(fmt_g(-0.0), "0");
        assert_eq!(fmt_g(1.5e-7), "1.5e-07");
        assert_eq!(fmt_g(0.0001), "0.0001");
        assert_eq!(fmt_g(123456789012.0), "123456789012");
        assert_eq!(fmt_g(1234567890123.0), "1.23456789012e+12");
        assert_eq!(fmt_g(0.99999999999995), "1");
        assert_eq!(fmt_g(0.403745311456420), "0.403745311456");
        assert_eq!(fmt_g(-2.5), "-2.5");
    }

    #[test]
    fn round_trip_diff() {
        assert_eq!(printed_abs_diff("0.5", "0.75"), "0.25");
        assert_eq!(printed_abs_diff("0.25", "0.25"), "0");
    }
}
