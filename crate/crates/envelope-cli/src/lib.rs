//! Library half of the command-line workbench: file-format parsers, the
//! element expression evaluator, canonical JSON output, and one function
//! per subcommand. The thin binary in `main.rs` only does argument
//! parsing and exit-code mapping.
//!
//! Exit-code contract: 0 all checks pass, 1 a verification check failed,
//! 2 usage or parse error.

pub mod expr;
pub mod output;
pub mod parse;

use std::fmt;

use envelope_core::lie::Subspace;
use envelope_core::pbw;
use envelope_core::trunc::GradedTruncation;
use envelope_core::verify;
use serde_json::{json, Value};

/// Default seed for the randomized verification checks; printed in every
/// report header and overridable with `--seed`.
pub const DEFAULT_SEED: u64 = 20260824;

/// Usage, I/O, and parse problems; these exit with status 2. Check
/// failures are not errors — they land in reports and exit with 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub line: Option<usize>,
    pub message: String,
}

impl CliError {
    pub fn parse(line: usize, message: String) -> Self {
        Self {
            line: if line == 0 { None } else { Some(line) },
            message,
        }
    }

    pub fn expr(message: String) -> Self {
        Self {
            line: None,
            message,
        }
    }

    pub fn usage(message: impl Into<String>) -> Self {
        Self {
            line: None,
            message: message.into(),
        }
    }

    pub fn at_line(mut self, line: usize) -> Self {
        self.line.get_or_insert(line);
        self
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(n) => write!(f, "line {n}: {}", self.message),
            None => write!(f, "{}", self.message),
        }
    }
}

impl std::error::Error for CliError {}

fn read(path: &str) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::usage(format!("{path}: {e}")))
}

/// Outcome of a subcommand: the JSON value to print and whether any
/// verification check failed.
pub struct Outcome {
    pub value: Value,
    pub failed: bool,
}

/// Parse the file, check the Jacobi identity, and (when weights are
/// declared) check bracket weight-additivity.
pub fn cmd_check(path: &str) -> Result<Outcome, CliError> {
    let text = read(path)?;
    let (l, weights) = parse::parse_lie_parts(&text)?;
    let mut records = Vec::new();
    let jacobi = l.check_jacobi();
    records.push(output::record(
        "jacobi",
        if jacobi.passed() { "pass" } else { "fail" },
        &format!("{} violating triples", jacobi.violations.len()),
    ));
    match weights {
        Some(w) => {
            let additive = l.clone().with_weights(w).is_ok();
            records.push(output::record(
                "weight-additivity",
                if additive { "pass" } else { "fail" },
                "bracket targets carry the sum of the operand weights",
            ));
        }
        None => records.push(output::record(
            "weight-additivity",
            "skip",
            "no weights declared",
        )),
    }
    let failed = records.iter().any(|r| r["status"] == "fail");
    let value = json!({
        "file": path,
        "dimension": l.dim(),
        "basis": l.basis_names(),
        "checks": records,
    });
    Ok(Outcome { value, failed })
}

/// Evaluate one expression in the requested mode and print the canonical
/// JSON element.
pub fn cmd_eval(
    path: &str,
    expression: &str,
    mode: &str,
    cutoff: Option<u32>,
) -> Result<Outcome, CliError> {
    let e = expr::parse(expression)?;
    let value = match mode {
        "pbw" => {
            let l = parse::parse_lie(&read(path)?)?;
            // the coproduct lands in the tensor square, so it gets its
            // own output shape and is only allowed outermost
            if let expr::Expr::Call(name, args) = &e {
                if name == "coproduct" {
                    if args.len() != 1 {
                        return Err(CliError::usage("`coproduct` takes 1 argument"));
                    }
                    let u = expr::eval_pbw(&l, &args[0])?;
                    let t = pbw::coproduct(&l, &u);
                    return Ok(Outcome {
                        value: output::tensor(&l, &t),
                        failed: false,
                    });
                }
            }
            let u = expr::eval_pbw(&l, &e)?;
            output::element(&l, &u)
        }
        "trunc" => {
            let l = parse::parse_lie(&read(path)?)?;
            let cutoff = cutoff.ok_or_else(|| CliError::usage("trunc mode needs --cutoff N"))?;
            let t = GradedTruncation::from_weighted(&l, cutoff)
                .map_err(|e| CliError::usage(e.to_string()))?;
            let u = expr::eval_trunc(&t, &e)?;
            output::element(&l, &u)
        }
        "abelian" => {
            let l = parse::parse_lie(&read(path)?)?;
            match expr::eval_abelian(&l, &e)? {
                expr::DualValue::Function(f) => output::function(&f),
                expr::DualValue::Element(u) => {
                    let f = envelope_core::abelian::q_map(&l, &u)
                        .map_err(|e| CliError::usage(e.to_string()))?;
                    output::function(&f)
                }
            }
        }
        "a2" => output::a2(&expr::eval_a2(&e)?),
        other => {
            return Err(CliError::usage(format!(
                "unknown mode `{other}`; expected pbw, trunc, abelian, or a2"
            )))
        }
    };
    Ok(Outcome {
        value,
        failed: false,
    })
}

/// Basis of the primitive elements on the degree-window of the
/// enveloping algebra.
pub fn cmd_primitives(path: &str, degree: usize) -> Result<Outcome, CliError> {
    let l = parse::parse_lie(&read(path)?)?;
    let (window, space) = pbw::primitive_space(&l, degree);
    let basis: Vec<Value> = space
        .basis()
        .iter()
        .map(|v| {
            let mut u = pbw::PbwElement::zero();
            for (m, c) in window.iter().zip(v) {
                u.add_term(m.clone(), c.clone());
            }
            output::element(&l, &u)
        })
        .collect();
    let value = json!({
        "degree": degree,
        "dimension": space.dim(),
        "lie_dimension": l.dim(),
        "basis": basis,
    });
    Ok(Outcome {
        value,
        failed: false,
    })
}

/// Decide membership of an element in U(L)·J for J the span of the
/// given linear combinations of basis elements.
pub fn cmd_membership(path: &str, expression: &str, ideal: &str) -> Result<Outcome, CliError> {
    let l = parse::parse_lie(&read(path)?)?;
    let u = expr::eval_pbw(&l, &expr::parse(expression)?)?;
    let mut vectors = Vec::new();
    for entry in ideal.split(',') {
        let entry = entry.trim();
        if entry.is_empty() {
            continue;
        }
        vectors.push(expr::parse_linear_combination(&l, entry)?);
    }
    let j =
        Subspace::from_vectors(l.dim(), &vectors).map_err(|e| CliError::usage(e.to_string()))?;
    let member = pbw::membership_ulj(&l, &u, &j).map_err(|e| CliError::usage(e.to_string()))?;
    let value = json!({
        "expression": expression,
        "ideal_dimension": j.dim(),
        "member": member,
    });
    Ok(Outcome {
        value,
        failed: false,
    })
}

/// Build the tower from a description file, report stage dimensions, and
/// check bonding coherence on a degree window.
pub fn cmd_tower(path: &str, degree: usize) -> Result<Outcome, CliError> {
    let tf = parse::parse_tower(&read(path)?)?;
    let chain: Vec<Subspace> = tf.stages.iter().map(|(_, s)| s.clone()).collect();
    let t = envelope_core::tower::make_tower(&tf.base, &chain)
        .map_err(|e| CliError::usage(e.to_string()))?;
    let stages: Vec<Value> = tf
        .stages
        .iter()
        .zip(&t.stages)
        .map(|((name, ideal), stage)| {
            json!({
                "name": name,
                "ideal_dimension": ideal.dim(),
                "stage_dimension": stage.dim(),
            })
        })
        .collect();
    let bonding_ok = t.check_bonding_composition(degree);
    // every generator thread must be bonding-compatible
    let mut threads_ok = true;
    for i in 0..tf.base.dim() {
        let thread = t.project_thread(&pbw::PbwElement::generator(i));
        if !t.check_thread(&thread).unwrap_or(false) {
            threads_ok = false;
        }
    }
    let records = vec![
        output::record(
            "bonding-composition",
            if bonding_ok { "pass" } else { "fail" },
            &format!("degree <= {degree} window"),
        ),
        output::record(
            "generator-threads",
            if threads_ok { "pass" } else { "fail" },
            "stage images of each generator are compatible",
        ),
    ];
    let failed = !(bonding_ok && threads_ok);
    let value = json!({
        "base_dimension": tf.base.dim(),
        "stages": stages,
        "checks": records,
    });
    Ok(Outcome { value, failed })
}

/// Enumerate the unital algebra morphisms from the split algebra K^n.
pub fn cmd_census_a2(n: usize) -> Result<Outcome, CliError> {
    use envelope_core::abelian::a2_morphism_census;
    if n == 0 {
        return Err(CliError::usage("n must be positive"));
    }
    let census = a2_morphism_census(n);
    let mut failed = false;
    let morphisms: Vec<Value> = census
        .iter()
        .map(|m| {
            let ok = m.radical_preimage_in_kernel();
            failed |= !ok;
            json!({
                "idempotent_images": m
                    .idempotent_images
                    .iter()
                    .map(output::a2)
                    .collect::<Vec<_>>(),
                "radical_preimage_in_kernel": ok,
            })
        })
        .collect();
    let value = json!({ "n": n, "count": census.len(), "morphisms": morphisms });
    Ok(Outcome { value, failed })
}

/// Run the named invariant suites (all by default); non-selected suites
/// appear as skipped records so the report shape is stable.
pub fn cmd_verify(suites: &[String], seed: u64) -> Result<Outcome, CliError> {
    for s in suites {
        if !verify::SUITE_NAMES.contains(&s.as_str()) {
            return Err(CliError::usage(format!(
                "unknown suite `{s}`; available: {}",
                verify::SUITE_NAMES.join(", ")
            )));
        }
    }
    let mut records = Vec::new();
    for name in verify::SUITE_NAMES {
        if !suites.is_empty() && !suites.iter().any(|s| s == name) {
            records.push(output::record(
                &format!("{name}/*"),
                "skip",
                "suite not selected",
            ));
            continue;
        }
        let results = verify::run_suite(name, seed).expect("known suite name");
        records.extend(output::check_records(&results));
    }
    records.sort_by(|a, b| a["name"].as_str().cmp(&b["name"].as_str()));
    let failed = records.iter().any(|r| r["status"] == "fail");
    Ok(Outcome {
        value: output::report(seed, records),
        failed,
    })
}

/// Human-readable rendering of a verification report.
pub fn render_report_text(report: &Value) -> String {
    let mut out = String::new();
    out.push_str(&format!("seed: {}\n", report["seed"]));
    for check in report["checks"].as_array().into_iter().flatten() {
        let status = check["status"].as_str().unwrap_or("?");
        out.push_str(&format!(
            "{:<4} {} ({})\n",
            status.to_uppercase(),
            check["name"].as_str().unwrap_or("?"),
            check["detail"].as_str().unwrap_or(""),
        ));
    }
    let failures = report["failures"].as_u64().unwrap_or(0);
    out.push_str(&format!("failures: {failures}\n"));
    out
}
