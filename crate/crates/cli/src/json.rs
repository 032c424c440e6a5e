//! Canonical JSON rendering: insertion-ordered keys, floats at 12
//! significant digits, deterministic layout. Re-serializing a parsed report
//! reproduces it byte for byte.

use serde_json::Value;

/// Formats a finite float with 12 significant digits, `%.12g`-style: plain
/// decimal for moderate exponents, scientific otherwise. Always contains a
/// `.` or an `e` so the value stays a float across a parse round trip.
pub fn fmt_sig(x: f64) -> String {
    if !x.is_finite() {
        // reports never contain non-finite values
        return "0.0".to_string();
    }
    if x == 0.0 {
        return "0.0".to_string();
    }
    let neg = x < 0.0;
    let sci = format!("{:.11e}", x.abs());
    let (mantissa, exp) = sci.split_once('e').expect("exponential format");
    let exp: i32 = exp.parse().expect("numeric exponent");
    let digits: String = mantissa.chars().filter(|c| *c != '.').collect();
    let trimmed = digits.trim_end_matches('0');
    let digits = if trimmed.is_empty() { "0" } else { trimmed };
    let body = if (-4..12).contains(&exp) {
        plain_decimal(digits, exp)
    } else {
        let mut m = String::new();
        m.push_str(&digits[..1]);
        m.push('.');
        if digits.len() > 1 {
            m.push_str(&digits[1..]);
        } else {
            m.push('0');
        }
        format!("{m}e{exp}")
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

fn plain_decimal(digits: &str, exp: i32) -> String {
    let len = digits.len() as i32;
    let point = exp + 1; // digit count left of the decimal point
    if point <= 0 {
        format!("0.{}{}", "0".repeat((-point) as usize), digits)
    } else if point >= len {
        format!("{}{}.0", digits, "0".repeat((point - len) as usize))
    } else {
        format!(
            "{}.{}",
            &digits[..point as usize],
            &digits[point as usize..]
        )
    }
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn write_scalar(out: &mut String, v: &Value) {
    match v {
        Value::Null => out.push_str("null"),
        Value::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
        Value::Number(n) => {
            if n.is_f64() {
                out.push_str(&fmt_sig(n.as_f64().expect("f64 number")));
            } else {
                out.push_str(&n.to_string());
            }
        }
        Value::String(s) => {
            out.push_str(&serde_json::to_string(s).expect("string serializes"))
        }
        _ => unreachable!("composite passed to write_scalar"),
    }
}

fn write_value(out: &mut String, v: &Value, indent: usize) {
    const STEP: &str = "  ";
    match v {
        Value::Array(items) if items.is_empty() => out.push_str("[]"),
        Value::Array(items) if items.iter().all(is_scalar) => {
            out.push('[');
            for (i, item) in items.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                write_scalar(out, item);
            }
            out.push(']');
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                out.push_str(&STEP.repeat(indent + 1));
                write_value(out, item, indent + 1);
                if i + 1 < items.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&STEP.repeat(indent));
            out.push(']');
        }
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            out.push_str("{\n");
            for (i, (key, value)) in map.iter().enumerate() {
                out.push_str(&STEP.repeat(indent + 1));
                out.push_str(&serde_json::to_string(key).expect("key serializes"));
                out.push_str(": ");
                write_value(out, value, indent + 1);
                if i + 1 < map.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&STEP.repeat(indent));
            out.push('}');
        }
        scalar => write_scalar(out, scalar),
    }
}

/// Renders a value in the canonical layout, with a trailing newline.
pub fn render(v: &Value) -> String {
    let mut out = String::new();
    write_value(&mut out, v, 0);
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn fmt_sig_examples() {
        assert_eq!(fmt_sig(0.0), "0.0");
        assert_eq!(fmt_sig(2.0), "2.0");
        assert_eq!(fmt_sig(-2.0), "-2.0");
        assert_eq!(fmt_sig(0.5), "0.5");
        assert_eq!(fmt_sig(0.6180339887498949), "0.61803398875");
        assert_eq!(fmt_sig(0.6180339887444949), "0.618033988744");
        assert_eq!(fmt_sig(1.0e-15), "1.0e-15");
        assert_eq!(fmt_sig(2.220446049250313e-16), "2.22044604925e-16");
        assert_eq!(fmt_sig(100_000_000_000.0), "100000000000.0");
        assert_eq!(fmt_sig(1.0e12), "1.0e12");
    }

    #[test]
    fn fmt_sig_is_reparse_stable() {
        for &x in &[
            0.618033988749894,
            1.0 / 3.0,
            2.0_f64.sqrt(),
            1.23456789e-13,
            9.999999999999e11,
            -0.000123456789,
            // mantissa-rounding boundaries where the exponent bumps
            999999999999.99,
            9.99999999999999e11,
            1.0000000000001e12,
            9.999999999999999e-5,
        ] {
            let s1 = fmt_sig(x);
            let y: f64 = s1.parse().unwrap();
            assert_eq!(fmt_sig(y), s1, "unstable for {x}");
        }
    }

    #[test]
    fn render_layout() {
        let v = json!({
            "name": "x",
            "values": [1, 2, 3],
            "nested": [{"a": true}],
            "empty": [],
            "resid": 1.5e-9,
        });
        let s = render(&v);
        assert_eq!(
            s,
            "{\n  \"name\": \"x\",\n  \"values\": [1, 2, 3],\n  \"nested\": [\n    {\n      \"a\": true\n    }\n  ],\n  \"empty\": [],\n  \"resid\": 1.5e-9\n}\n"
        );
    }

    #[test]
    fn render_round_trips_byte_identical() {
        let v = json!({
            "spec": "4x6x3",
            "order": 72,
            "floats": [0.1, 2.0, 3.5e-11, -1.25],
            "deep": {"pass": true, "detail": null},
        });
        let s1 = render(&v);
        let parsed: Value = serde_json::from_str(&s1).unwrap();
        let s2 = render(&parsed);
        assert_eq!(s1, s2);
    }

    proptest::proptest! {
        #[test]
        fn render_round_trip_property(ints in proptest::collection::vec(proptest::num::i64::ANY, 0..5),
                                      floats in proptest::collection::vec(-1.0e14..1.0e14f64, 0..5),
                                      flag in proptest::bool::ANY) {
            let v = json!({"i": ints, "f": floats, "b": flag});
            let s1 = render(&v);
            let parsed: Value = serde_json::from_str(&s1).unwrap();
            proptest::prop_assert_eq!(render(&parsed), s1);
        }
    }
}
