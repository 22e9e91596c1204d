//! Canonical JSON forms. Term ordering is the graded-lexicographic order
//! the core crate already stores, and map keys are emitted sorted, so
//! identical inputs produce byte-identical output.

use envelope_core::abelian::{A2Element, ExpPolyFunction};
use envelope_core::lie::LieAlgebra;
use envelope_core::pbw::{PbwElement, TensorElement};
use envelope_core::verify::CheckResult;
use serde_json::{json, Value};

fn monomial_names(l: &LieAlgebra, indices: &[usize]) -> Value {
    Value::Array(
        indices
            .iter()
            .map(|&i| Value::String(l.basis_names()[i].clone()))
            .collect(),
    )
}

pub fn element(l: &LieAlgebra, u: &PbwElement) -> Value {
    let terms: Vec<Value> = u
        .terms()
        .map(|(m, c)| {
            json!({
                "monomial": monomial_names(l, &m.0),
                "coeff": c.to_string(),
            })
        })
        .collect();
    json!({ "terms": terms })
}

pub fn tensor(l: &LieAlgebra, t: &TensorElement) -> Value {
    let terms: Vec<Value> = t
        .terms()
        .map(|((a, b), c)| {
            json!({
                "left": monomial_names(l, &a.0),
                "right": monomial_names(l, &b.0),
                "coeff": c.to_string(),
            })
        })
        .collect();
    json!({ "tensor_terms": terms })
}

pub fn function(f: &ExpPolyFunction) -> Value {
    let summands: Vec<Value> = f
        .summands()
        .map(|(linear, poly)| {
            let terms: Vec<Value> = poly
                .iter()
                .map(|(powers, c)| {
                    json!({
                        "powers": powers,
                        "coeff": c.to_string(),
                    })
                })
                .collect();
            json!({
                "exp_linear": linear.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                "poly": terms,
            })
        })
        .collect();
    json!({ "dim": f.dim(), "summands": summands })
}

pub fn a2(a: &A2Element) -> Value {
    json!({ "e1": a.0.to_string(), "e2": a.1.to_string() })
}

/// One report record; `status` is pass, fail, or skip.
pub fn record(name: &str, status: &str, detail: &str) -> Value {
    json!({ "name": name, "status": status, "detail": detail })
}

pub fn report(seed: u64, records: Vec<Value>) -> Value {
    let failures = records.iter().filter(|r| r["status"] == "fail").count();
    json!({ "seed": seed, "checks": records, "failures": failures })
}

pub fn check_records(results: &[CheckResult]) -> Vec<Value> {
    results
        .iter()
        .map(|r| record(&r.name, if r.pass { "pass" } else { "fail" }, &r.detail))
        .collect()
}

pub fn render(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON serialization cannot fail")
}
