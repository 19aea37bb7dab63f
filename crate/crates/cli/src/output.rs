//! Number formatting for text output.

/// `v` with 15 significant digits, trailing zeros removed. Plain notation
/// for decimal exponents in `[-5, 15)`, scientific otherwise.
pub fn sig15(v: f64) -> String {
    if !v.is_finite() {
        return if v.is_nan() {
            "NaN".to_string()
        } else if v > 0.0 {
            "inf".to_string()
        } else {
            "-inf".to_string()
        };
    }
    if v == 0.0 {
        return "0".to_string();
    }
    let sci = format!("{v:.14e}");
    let (mantissa, exp) = sci.split_once('e').expect("scientific format has an exponent");
    let exp: i32 = exp.parse().expect("exponent is an integer");
    if (-5..15).contains(&exp) {
        let decimals = (14 - exp).max(0) as usize;
        trim(&format!("{v:.decimals$}"))
    } else {
        format!("{}e{exp}", trim(mantissa))
    }
}

fn trim(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::sig15;

    #[test]
    fn formats() {
        assert_eq!(sig15(1.0), "1");
        assert_eq!(sig15(-4.0), "-4");
        assert_eq!(sig15(1.866_747_375_038_092), "1.86674737503809");
        assert_eq!(sig15(0.721_347_520_444_481_7), "0.721347520444482");
        assert_eq!(sig15(2.5e-7), "2.5e-7");
        assert_eq!(sig15(1.25e20), "1.25e20");
        assert_eq!(sig15(123_456.0), "123456");
        assert_eq!(sig15(0.0), "0");
        assert_eq!(sig15(f64::NAN), "NaN");
    }
}
