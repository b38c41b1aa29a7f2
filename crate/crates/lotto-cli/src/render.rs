//! Deterministic output rendering: fixed-precision CSV cells and JSON
//! values that spell infinity out instead of dropping it.

use serde_json::Value;

/// Formats a value with 12 significant digits, '.' decimal separator,
/// trailing zeros trimmed, and the literal `inf` for infinities. Identical
/// inputs always yield identical bytes.
pub fn fmt_sig(x: f64) -> String {
    debug_assert!(!x.is_nan(), "refusing to format NaN");
    if x == 0.0 {
        return "0".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    let exponent = x.abs().log10().floor() as i32;
    let decimals = (11 - exponent).max(0) as usize;
    let s = format!("{x:.decimals$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

/// JSON number that survives infinities: finite values become numbers,
/// infinite ones the strings "inf"/"-inf" (plain serialization would turn
/// them into null).
pub fn json_num(x: f64) -> Value {
    if x.is_finite() {
        Value::from(x)
    } else if x > 0.0 {
        Value::from("inf")
    } else {
        Value::from("-inf")
    }
}

/// Renders a rectangular CSV document with a header row.
pub fn render_csv(header: &[&str], rows: &[Vec<f64>]) -> String {
    let mut out = String::new();
    out.push_str(&header.join(","));
    out.push('\n');
    for row in rows {
        debug_assert_eq!(row.len(), header.len(), "CSV rows must be rectangular");
        let cells: Vec<String> = row.iter().map(|&x| fmt_sig(x)).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digit_formatting() {
        assert_eq!(fmt_sig(0.0), "0");
        assert_eq!(fmt_sig(-0.0), "0");
        assert_eq!(fmt_sig(1.0), "1");
        assert_eq!(fmt_sig(0.25), "0.25");
        assert_eq!(fmt_sig(f64::INFINITY), "inf");
        assert_eq!(fmt_sig(f64::NEG_INFINITY), "-inf");
        assert_eq!(fmt_sig(1.0 / 3.0), "0.333333333333");
        assert_eq!(fmt_sig(2.2), "2.2");
        assert_eq!(fmt_sig(1e-9), "0.000000001");
        assert_eq!(fmt_sig(1234.5), "1234.5");
        assert_eq!(fmt_sig(-0.5), "-0.5");
    }

    #[test]
    fn infinity_survives_json() {
        assert_eq!(json_num(f64::INFINITY), Value::from("inf"));
        assert_eq!(json_num(0.5), Value::from(0.5));
    }

    #[test]
    fn csv_layout() {
        let text = render_csv(&["a", "b"], &[vec![1.0, 0.5], vec![2.0, f64::INFINITY]]);
        assert_eq!(text, "a,b\n1,0.5\n2,inf\n");
    }
}
