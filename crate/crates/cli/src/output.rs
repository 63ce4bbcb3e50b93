//! JSON and TSV emission. Integers of any size are emitted as bare JSON
//! numbers (serde_json's arbitrary-precision representation), so unit
//! coordinates with thousands of digits stay valid JSON.

use num_bigint::BigInt;
use serde_json::{Map, Number, Value};

pub fn big(n: &BigInt) -> Value {
    Value::Number(Number::from_string_unchecked(n.to_string()))
}

pub fn emit(value: &Value, tsv: bool) {
    if tsv {
        let obj = value.as_object().expect("top-level output is an object");
        let mut keys = Vec::new();
        let mut cells = Vec::new();
        flatten("", obj, &mut keys, &mut cells);
        println!("{}", keys.join("\t"));
        println!("{}", cells.join("\t"));
    } else {
        println!("{value}");
    }
}

// Nested objects get dotted column names; arrays are rendered as compact
// JSON inside their cell.
fn flatten(
    prefix: &str,
    obj: &Map<String, Value>,
    keys: &mut Vec<String>,
    cells: &mut Vec<String>,
) {
    for (k, v) in obj {
        let name = if prefix.is_empty() {
            k.clone()
        } else {
            format!("{prefix}.{k}")
        };
        match v {
            Value::Object(inner) => flatten(&name, inner, keys, cells),
            Value::Array(_) => {
                keys.push(name);
                cells.push(v.to_string());
            }
            Value::String(s) => {
                keys.push(name);
                cells.push(s.clone());
            }
            other => {
                keys.push(name);
                cells.push(other.to_string());
            }
        }
    }
}
