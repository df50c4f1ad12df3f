//! Deterministic output: an order-preserving value tree serialized to JSON
//! or CSV with floats at 17 significant digits (round-half-even, as the
//! standard float formatter guarantees). Identical inputs therefore yield
//! byte-identical bytes.

use std::fmt::Write as _;

/// Order-preserving JSON-like value. Object keys keep insertion order.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Null,
    Bool(bool),
    Int(i64),
    Float(f64),
    Str(String),
    Array(Vec<Value>),
    Object(Vec<(String, Value)>),
}

impl Value {
    pub fn object() -> Value {
        Value::Object(Vec::new())
    }

    /// Append a field, keeping insertion order.
    pub fn push(&mut self, key: &str, value: Value) -> &mut Self {
        match self {
            Value::Object(fields) => fields.push((key.to_string(), value)),
            _ => panic!("push on non-object"),
        }
        self
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        match self {
            Value::Object(fields) => fields.iter().find(|(k, _)| k == key).map(|(_, v)| v),
            _ => None,
        }
    }
}

impl From<f64> for Value {
    fn from(v: f64) -> Value {
        Value::Float(v)
    }
}

impl From<i64> for Value {
    fn from(v: i64) -> Value {
        Value::Int(v)
    }
}

impl From<bool> for Value {
    fn from(v: bool) -> Value {
        Value::Bool(v)
    }
}

impl From<&str> for Value {
    fn from(v: &str) -> Value {
        Value::Str(v.to_string())
    }
}

impl From<String> for Value {
    fn from(v: String) -> Value {
        Value::Str(v)
    }
}

/// 17 significant digits; non-finite values have no JSON image and map to null.
pub fn fmt_float(v: f64) -> String {
    if !v.is_finite() {
        return "null".to_string();
    }
    if v == 0.0 {
        // Collapse the sign of zero for determinism across code paths.
        return "0.0000000000000000e0".to_string();
    }
    format!("{v:.16e}")
}

fn escape_json(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out
}

pub fn to_json(v: &Value) -> String {
    let mut out = String::new();
    write_json(v, 0, &mut out);
    out.push('\n');
    out
}

fn write_json(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    let pad_in = "  ".repeat(indent + 1);
    match v {
        Value::Null => out.push_str("null"),
        Value::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
        Value::Int(i) => {
            let _ = write!(out, "{i}");
        }
        Value::Float(f) => out.push_str(&fmt_float(*f)),
        Value::Str(s) => {
            let _ = write!(out, "\"{}\"", escape_json(s));
        }
        Value::Array(items) => {
            if items.is_empty() {
                out.push_str("[]");
                return;
            }
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                out.push_str(&pad_in);
                write_json(item, indent + 1, out);
                if i + 1 < items.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad);
            out.push(']');
        }
        Value::Object(fields) => {
            if fields.is_empty() {
                out.push_str("{}");
                return;
            }
            out.push_str("{\n");
            for (i, (k, val)) in fields.iter().enumerate() {
                let _ = write!(out, "{pad_in}\"{}\": ", escape_json(k));
                write_json(val, indent + 1, out);
                if i + 1 < fields.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad);
            out.push('}');
        }
    }
}

fn csv_cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::Bool(b) => b.to_string(),
        Value::Int(i) => i.to_string(),
        Value::Float(f) => {
            if f.is_finite() {
                fmt_float(*f)
            } else {
                String::new()
            }
        }
        Value::Str(s) => {
            if s.contains(',') || s.contains('"') || s.contains('\n') {
                format!("\"{}\"", s.replace('"', "\"\""))
            } else {
                s.clone()
            }
        }
        Value::Array(_) | Value::Object(_) => String::new(),
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, Value)>) {
    match v {
        Value::Object(fields) => {
            for (k, val) in fields {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                flatten(&key, val, out);
            }
        }
        Value::Array(items) => {
            for (i, item) in items.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), item, out);
            }
        }
        other => out.push((prefix.to_string(), other.clone())),
    }
}

/// CSV rendering. A record whose `results` holds a `rows` array of flat
/// objects becomes a header plus one line per row; anything else becomes
/// flattened `key,value` lines. Decimal separator is always '.'.
pub fn to_csv(record: &Value) -> String {
    let rows = record
        .get("results")
        .and_then(|r| r.get("rows"))
        .and_then(|r| match r {
            Value::Array(items) if !items.is_empty() => Some(items),
            _ => None,
        });
    let mut out = String::new();
    if let Some(items) = rows {
        if let Value::Object(first) = &items[0] {
            let header: Vec<&str> = first.iter().map(|(k, _)| k.as_str()).collect();
            out.push_str(&header.join(","));
            out.push('\n');
            for item in items {
                let cells: Vec<String> = header
                    .iter()
                    .map(|k| item.get(k).map(csv_cell).unwrap_or_default())
                    .collect();
                out.push_str(&cells.join(","));
                out.push('\n');
            }
            return out;
        }
    }
    let mut flat = Vec::new();
    flatten("", record, &mut flat);
    out.push_str("key,value\n");
    for (k, v) in flat {
        out.push_str(&k);
        out.push(',');
        out.push_str(&csv_cell(&v));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_formatting() {
        assert_eq!(fmt_float(1.0), "1.0000000000000000e0");
        assert_eq!(fmt_float(0.0), "0.0000000000000000e0");
        assert_eq!(fmt_float(-0.0), "0.0000000000000000e0");
        assert_eq!(fmt_float(f64::NAN), "null");
        assert_eq!(fmt_float(f64::INFINITY), "null");
        // 17 significant digits survive a round trip exactly.
        for &v in &[std::f64::consts::PI, -2.5e-7, 1.0 / 3.0, 6.02e23, 5.11e5] {
            let s = fmt_float(v);
            assert_eq!(s.parse::<f64>().unwrap(), v, "{s}");
        }
    }

    #[test]
    fn json_field_order_is_insertion_order() {
        let mut obj = Value::object();
        obj.push("zebra", Value::Int(1));
        obj.push("alpha", Value::Int(2));
        let s = to_json(&obj);
        assert!(s.find("zebra").unwrap() < s.find("alpha").unwrap());
        // Valid JSON according to an independent parser.
        let parsed: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(parsed["zebra"], 1);
    }

    #[test]
    fn json_escaping() {
        let mut obj = Value::object();
        obj.push("s", Value::Str("a\"b\\c\nd".to_string()));
        let s = to_json(&obj);
        let parsed: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(parsed["s"], "a\"b\\c\nd");
    }

    #[test]
    fn determinism() {
        let build = || {
            let mut o = Value::object();
            o.push("x", Value::Float(1.0 / 3.0));
            o.push("y", Value::Array(vec![Value::Int(1), Value::Null]));
            to_json(&o)
        };
        assert_eq!(build(), build());
    }

    #[test]
    fn csv_rows() {
        let mut row1 = Value::object();
        row1.push("n", Value::Int(0));
        row1.push("e", Value::Float(0.5));
        let mut row2 = Value::object();
        row2.push("n", Value::Int(1));
        row2.push("e", Value::Float(f64::NAN));
        let mut results = Value::object();
        results.push("rows", Value::Array(vec![row1, row2]));
        let mut rec = Value::object();
        rec.push("results", results);
        let csv = to_csv(&rec);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "n,e");
        assert_eq!(lines[1], "0,5.0000000000000000e-1");
        assert_eq!(lines[2], "1,");
    }

    #[test]
    fn csv_fallback_flattens() {
        let mut inner = Value::object();
        inner.push("b", Value::Int(2));
        let mut rec = Value::object();
        rec.push("a", inner);
        let csv = to_csv(&rec);
        assert!(csv.contains("a.b,2\n"));
    }
}
