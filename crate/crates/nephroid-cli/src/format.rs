//! Locale-independent %.15g-style formatting: 15 significant digits,
//! `.` decimal separator, trailing zeros trimmed, byte-deterministic.

pub fn fmt_g15(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let exp10 = x.abs().log10().floor() as i32;
    if (-5..15).contains(&exp10) {
        let decimals = (14 - exp10).max(0) as usize;
        let s = format!("{x:.decimals$}");
        trim_zeros(s)
    } else {
        // scientific with 15 significant digits
        let s = format!("{x:.14e}");
        let (mantissa, exp) = s.split_once('e').expect("exponent marker");
        format!("{}e{}", trim_zeros(mantissa.to_string()), exp)
    }
}

fn trim_zeros(s: String) -> String {
    if !s.contains('.') {
        return s;
    }
    let t = s.trim_end_matches('0').trim_end_matches('.');
    t.to_string()
}
