//! Report assembly. Every real number is written as a decimal string.

use std::time::{SystemTime, UNIX_EPOCH};

use chrono::{DateTime, SecondsFormat};
use oddzeta::numeric::{Complex, Real};
use oddzeta::rapid::{BenchRow, ConvergenceTrace, EvalReport};
use oddzeta::verify::{IdentityCase, Order, Residual, ValidityRule};
use serde_json::{json, Value};

pub const SCHEMA_VERSION: &str = "1";

/// Significant digits for bounds and residuals.
const BOUND_DIGITS: usize = 6;

pub fn real(x: &Real, digits: usize) -> String {
    x.to_sci_string(digits.max(1))
}

fn complex(z: &Complex, digits: usize) -> Value {
    json!({ "re": real(&z.re, digits), "im": real(&z.im, digits) })
}

/// Seconds since the epoch, from `SOURCE_DATE_EPOCH` when it is set.
fn timestamp() -> String {
    let secs = std::env::var("SOURCE_DATE_EPOCH")
        .ok()
        .and_then(|s| s.trim().parse::<i64>().ok())
        .unwrap_or_else(|| {
            SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_secs() as i64)
                .unwrap_or(0)
        });
    DateTime::from_timestamp(secs, 0)
        .unwrap_or_default()
        .to_rfc3339_opts(SecondsFormat::Secs, true)
}

pub fn report(verb: &str, argv: &[String], results: Vec<Value>) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "command": { "verb": verb, "argv": argv },
        "results": results,
        "timestamp": timestamp(),
    })
}

pub fn to_json(report: &Value) -> String {
    let mut text = serde_json::to_string_pretty(report).expect("report serializes");
    text.push('\n');
    text
}

pub fn eval(rep: &EvalReport) -> Value {
    json!({
        "kind": "eval",
        "family": rep.family.tag(),
        "r": rep.r,
        "argument": 2 * rep.r + 1,
        "value": real(&rep.value, rep.certified_digits as usize),
        "certified_digits": rep.certified_digits,
        "terms_used": rep.terms_used,
        "tail_bound": real(&rep.tail_bound, BOUND_DIGITS),
    })
}

pub fn order(order: &Option<Order>) -> Value {
    match order {
        None => Value::Null,
        Some(Order::R(r)) => json!(r.to_string()),
        Some(Order::S(s)) => json!(format!("{s:.10}")),
    }
}

pub fn residual(case: &IdentityCase, res: &Residual, digits: usize, passed: bool) -> Value {
    json!({
        "kind": "residual",
        "identity": res.id.name(),
        "order": order(&case.order),
        "x": case.x.to_string(),
        "n_terms": case.n_terms,
        "k_terms": case.k_terms,
        "lhs": complex(&res.lhs, digits),
        "rhs": complex(&res.rhs, digits),
        "abs_residual": real(&res.abs_residual, BOUND_DIGITS),
        "expected_bound": real(&res.expected_bound, BOUND_DIGITS),
        "gating": res.gating,
        "passed": passed,
        "note": res.note,
    })
}

/// Bench columns in CSV order; the JSON rows use the same strings.
pub const BENCH_COLUMNS: [&str; 6] = [
    "family",
    "r",
    "digits",
    "terms_used",
    "tail_bound",
    "wall_ms",
];

pub fn bench_fields(row: &BenchRow) -> [String; 6] {
    [
        row.family.tag().to_string(),
        row.r.to_string(),
        row.digits.to_string(),
        row.terms_used.to_string(),
        real(&row.tail_bound, BOUND_DIGITS),
        format!("{:.3}", row.wall_ms),
    ]
}

pub fn bench_row(row: &BenchRow) -> Value {
    let mut obj = serde_json::Map::new();
    obj.insert("kind".into(), json!("bench"));
    for (k, v) in BENCH_COLUMNS.iter().zip(bench_fields(row)) {
        obj.insert(k.to_string(), json!(v));
    }
    Value::Object(obj)
}

pub fn trace(t: &ConvergenceTrace, k_end: u32) -> Value {
    json!({
        "kind": "trace",
        "family": t.family.tag(),
        "r": t.r,
        "k_start": t.k_start,
        "k_end": k_end,
        "fitted_ratio": real(&t.fitted_ratio, BOUND_DIGITS),
        "raw_ratio": real(&t.raw_ratio, BOUND_DIGITS),
        "expected_ratio": real(&t.expected_ratio, BOUND_DIGITS),
        "relative_error": format!("{:.6}", t.relative_error()),
    })
}

pub const TABLE_COLUMNS: [&str; 5] = ["identity", "parameter", "domain", "order", "notes"];

pub fn rule_fields(rule: &ValidityRule) -> [String; 5] {
    [
        rule.id.name().to_string(),
        rule.parameter.to_string(),
        rule.domain.to_string(),
        rule.order.to_string(),
        rule.notes.to_string(),
    ]
}

pub fn rule(rule: &ValidityRule) -> Value {
    let mut obj = serde_json::Map::new();
    obj.insert("kind".into(), json!("validity"));
    for (k, v) in TABLE_COLUMNS.iter().zip(rule_fields(rule)) {
        obj.insert(k.to_string(), json!(v));
    }
    Value::Object(obj)
}

pub fn to_csv<const N: usize>(columns: [&str; N], rows: &[[String; N]]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(columns).expect("in-memory write");
    for row in rows {
        w.write_record(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}
