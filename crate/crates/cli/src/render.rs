//! Output formats. JSON keeps the field order of the report structs; the
//! table view flattens nested values into `path  value` rows.

use serde_json::Value;

pub fn json(doc: &Value) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("values always serialize");
    s.push('\n');
    s
}

pub fn table(doc: &Value) -> String {
    let mut rows = Vec::new();
    flatten("", doc, &mut rows);
    let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    let mut out = String::new();
    for (key, value) in rows {
        let pad = width - key.chars().count();
        out.push_str(&key);
        out.push_str(&" ".repeat(pad + 2));
        out.push_str(&value);
        out.push('\n');
    }
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        _ => None,
    }
}

fn flatten(prefix: &str, v: &Value, rows: &mut Vec<(String, String)>) {
    let join = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(map) => {
            for (k, child) in map {
                flatten(&join(k), child, rows);
            }
        }
        // short lists of scalars stay on one row
        Value::Array(items) if items.iter().all(|i| scalar(i).is_some()) => {
            let parts: Vec<String> = items.iter().filter_map(scalar).collect();
            rows.push((prefix.to_string(), format!("[{}]", parts.join(", "))));
        }
        Value::Array(items) => {
            for (i, child) in items.iter().enumerate() {
                flatten(&join(&i.to_string()), child, rows);
            }
        }
        other => rows.push((prefix.to_string(), scalar(other).expect("scalar"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn nested_rows_align() {
        let doc = json!({"tower": "t", "mu": [2, 1], "report": {"ok": true, "list": [{"a": 1}]}});
        assert_eq!(
            table(&doc),
            "tower            t\n\
             mu               [2, 1]\n\
             report.ok        true\n\
             report.list.0.a  1\n"
        );
    }

    #[test]
    fn json_is_pretty_and_newline_terminated() {
        assert_eq!(json(&json!({"count": 3})), "{\n  \"count\": 3\n}\n");
    }
}
