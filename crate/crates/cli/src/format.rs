//! Text formats shared by the commands.

use critline_core::{ComplexValue, ZeroRecord};

use crate::CliError;

pub const CSV_HEADER: &str = "index,t,t_lo,t_hi,residual,method";

/// `x` rounded to 12 significant digits, in positional notation.
pub fn sig12(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (11 - magnitude).max(0) as usize;
    let s = format!("{x:.decimals$}");
    // rounding can carry into a new leading digit
    if s.trim_start_matches('-')
        .replace('.', "")
        .trim_start_matches('0')
        .len()
        > 12
        && decimals > 0
    {
        return format!("{x:.prec$}", prec = decimals - 1);
    }
    s
}

/// Scientific notation with three significant digits.
pub fn sci3(x: f64) -> String {
    format!("{x:.2e}")
}

pub fn csv_row(z: &ZeroRecord) -> String {
    format!(
        "{},{},{},{},{},{}",
        z.index,
        sig12(z.t),
        sig12(z.bracket.0),
        sig12(z.bracket.1),
        sci3(z.residual),
        z.method.tag()
    )
}

pub fn complex_json(z: ComplexValue) -> serde_json::Value {
    serde_json::json!({ "re": z.re, "im": z.im })
}

/// Parses `a`, `bi`, `a+bi`, `a-bi` (also `i`, `-i`, exponents, spaces).
pub fn parse_complex(text: &str) -> Result<ComplexValue, CliError> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || CliError::input(format!("--s: cannot parse `{text}` as a+bi"));
    if s.is_empty() {
        return Err(bad());
    }
    let real = |p: &str| p.parse::<f64>().ok().filter(|v| v.is_finite());
    let imag = |p: &str| -> Option<f64> {
        match p {
            "" | "+" => Some(1.0),
            "-" => Some(-1.0),
            _ => real(p),
        }
    };
    let Some(body) = s.strip_suffix('i').or_else(|| s.strip_suffix('j')) else {
        return real(&s)
            .map(|re| ComplexValue::new(re, 0.0))
            .ok_or_else(bad);
    };
    // split at the last sign that is neither leading nor part of an exponent
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (
            real(&body[..k]).ok_or_else(bad)?,
            imag(&body[k..]).ok_or_else(bad)?,
        ),
        None => (0.0, imag(body).ok_or_else(bad)?),
    };
    Ok(ComplexValue::new(re, im))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(sig12(14.134725141734694), "14.1347251417");
        assert_eq!(sig12(101.31785100573139), "101.317851006");
        assert_eq!(sig12(9.9999999999996), "10.0000000000");
        assert_eq!(sig12(0.5), "0.500000000000");
        assert_eq!(sci3(1.23456e-10), "1.23e-10");
    }

    #[test]
    fn complex_forms() {
        let c = ComplexValue::new;
        assert_eq!(parse_complex("0.5").unwrap(), c(0.5, 0.0));
        assert_eq!(parse_complex("0.5+14.1i").unwrap(), c(0.5, 14.1));
        assert_eq!(parse_complex("-1 - 2i").unwrap(), c(-1.0, -2.0));
        assert_eq!(parse_complex("3i").unwrap(), c(0.0, 3.0));
        assert_eq!(parse_complex("-i").unwrap(), c(0.0, -1.0));
        assert_eq!(parse_complex("1e-3+2e+1i").unwrap(), c(1e-3, 20.0));
        assert_eq!(parse_complex("2-i").unwrap(), c(2.0, -1.0));
        for bad in ["", "x", "1+", "nan", "1+2", "0.5+ai"] {
            assert!(parse_complex(bad).is_err(), "{bad}");
        }
    }
}
