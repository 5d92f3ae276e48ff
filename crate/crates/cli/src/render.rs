use num_bigint::BigUint;
use serde_json::{json, Map, Value};

use verlab_core::charlab::Character;
use verlab_core::padix::PadicDigits;
use verlab_core::Decomposition;

/// Integers that fit in 64 bits as JSON numbers, larger ones as strings.
pub fn big(x: &BigUint) -> Value {
    match u64::try_from(x) {
        Ok(v) => json!(v),
        Err(_) => json!(x.to_string()),
    }
}

pub fn int128(x: i128) -> Value {
    match i64::try_from(x) {
        Ok(v) => json!(v),
        Err(_) => json!(x.to_string()),
    }
}

pub fn character(c: &Character) -> Value {
    let terms: Vec<Value> = c.terms().map(|(w, k)| json!({"weight": w, "coeff": k})).collect();
    json!({
        "terms": terms,
        "dim": int128(c.dim()),
        "display": c.to_string(),
    })
}

pub fn decomposition(d: &Decomposition) -> Value {
    let key = d.basis.symbol().to_string();
    d.terms
        .iter()
        .map(|(&m, &k)| {
            let mut row = Map::new();
            row.insert(key.clone(), json!(m));
            row.insert("mult".into(), json!(k));
            Value::Object(row)
        })
        .collect()
}

/// Digits least significant first, plus the integer when the expansion
/// ends in a run of `0` or `p - 1`.
pub fn padic(x: &PadicDigits) -> Value {
    json!({
        "p": x.prime().get(),
        "digits": x.digits(),
        "decimal": x.to_integer().map(int128),
    })
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn table(rows: &[Value]) -> Option<String> {
    let first = rows.first()?.as_object()?;
    let keys: Vec<&String> = first.keys().collect();
    let mut cells = vec![keys.iter().map(|k| k.to_string()).collect::<Vec<_>>()];
    for row in rows {
        let obj = row.as_object()?;
        if obj.len() != keys.len() {
            return None;
        }
        cells.push(keys.iter().map(|k| obj.get(*k).map(scalar).unwrap_or_default()).collect());
    }
    let widths: Vec<usize> = (0..keys.len())
        .map(|j| cells.iter().map(|r| r[j].chars().count()).max().unwrap_or(0))
        .collect();
    let lines: Vec<String> = cells
        .iter()
        .map(|r| {
            r.iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:<w$}"))
                .collect::<Vec<_>>()
                .join("  ")
                .trim_end()
                .to_string()
        })
        .collect();
    Some(lines.join("\n"))
}

/// Human-readable rendering: arrays of records become tables, objects
/// become `key: value` lines.
pub fn text(v: &Value, indent: usize) -> String {
    let pad = " ".repeat(indent);
    match v {
        Value::Array(rows) if rows.is_empty() => format!("{pad}(none)"),
        Value::Array(rows) => match table(rows) {
            Some(t) => t.lines().map(|l| format!("{pad}{l}")).collect::<Vec<_>>().join("\n"),
            None => format!("{pad}{}", rows.iter().map(scalar).collect::<Vec<_>>().join(" ")),
        },
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| match v {
                Value::Object(_) | Value::Array(_) if !is_flat(v) => {
                    format!("{pad}{k}:\n{}", text(v, indent + 2))
                }
                Value::Array(xs) => format!("{pad}{k}: {}", xs.iter().map(scalar).collect::<Vec<_>>().join(" ")),
                _ => format!("{pad}{k}: {}", scalar(v)),
            })
            .collect::<Vec<_>>()
            .join("\n"),
        other => format!("{pad}{}", scalar(other)),
    }
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(xs) => xs.iter().all(|x| !x.is_object() && !x.is_array()),
        _ => false,
    }
}
