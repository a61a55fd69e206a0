//! Locale-independent numeric formatting for the CSV/report surfaces.
//!
//! All emitted numbers carry 12 significant digits, `printf %g` style:
//! plain decimal notation for moderate exponents, scientific otherwise,
//! trailing zeros trimmed.  Output depends only on the `f64` bit pattern,
//! which is what makes byte-level reproducibility checks meaningful.

pub const SIG_DIGITS: usize = 12;

/// Format with 12 significant digits.
pub fn fmt_f64(x: f64) -> String {
    fmt_sig(x, SIG_DIGITS)
}

/// Format `x` with `sig` significant digits, `%g`-style.
pub fn fmt_sig(x: f64, sig: usize) -> String {
    assert!(sig >= 1);
    if x == 0.0 {
        return "0".to_string(); // covers -0.0 as well
    }
    if x.is_nan() {
        return "nan".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    // Round once in scientific form to learn the decimal exponent.
    let sci = format!("{:.*e}", sig - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("scientific format has 'e'");
    let exp: i32 = exp.parse().expect("exponent parses");
    if exp >= -4 && exp < sig as i32 {
        let decimals = (sig as i32 - 1 - exp).max(0) as usize;
        trim_trailing(&format!("{:.*}", decimals, x))
    } else {
        format!("{}e{}", trim_trailing(mantissa), exp)
    }
}

fn trim_trailing(s: &str) -> String {
    if !s.contains('.') {
        return s.to_string();
    }
    let s = s.trim_end_matches('0');
    s.trim_end_matches('.').to_string()
}
