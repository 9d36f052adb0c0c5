use serde_json::{json, Value};

use crate::{Format, Report};

pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Json => {
            let doc = json!({
                "config": report.config,
                "results": report.results,
                "timings": report.timings,
                "warnings": report.warnings,
            });
            serde_json::to_string_pretty(&doc).expect("serialisable") + "\n"
        }
        Format::Csv => csv(&report.results),
        Format::Text => text(&report.results),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn quote(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn csv(results: &[Value]) -> String {
    let mut header: Vec<String> = vec![];
    for r in results {
        if let Value::Object(m) = r {
            for k in m.keys() {
                if !header.contains(k) {
                    header.push(k.clone());
                }
            }
        }
    }
    let mut out = header.iter().map(|h| quote(h)).collect::<Vec<_>>().join(",") + "\n";
    for r in results {
        let row: Vec<String> = header.iter().map(|h| quote(&scalar(r.get(h).unwrap_or(&Value::Null)))).collect();
        out += &row.join(",");
        out.push('\n');
    }
    out
}

fn text(results: &[Value]) -> String {
    let mut out = String::new();
    for r in results {
        if let Value::Object(m) = r {
            for (k, v) in m {
                out += &format!("{k}: {}\n", scalar(v));
            }
        } else {
            out += &scalar(r);
            out.push('\n');
        }
        out.push('\n');
    }
    out
}
