//! Front-end tests: file-format and expression parsing through the
//! library, plus end-to-end runs of the compiled binary against the
//! bundled fixture files.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

use envelope_cli::{expr, parse};
use envelope_core::pbw::{self, PbwElement, PbwMonomial};
use envelope_core::scalar::{rat, ratio};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_envelope"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn parse_heisenberg_fixture() {
    let text = std::fs::read_to_string(fixture("heisenberg.lie")).unwrap();
    let l = parse::parse_lie(&text).unwrap();
    assert_eq!(l.basis_names(), ["x", "y", "z"]);
    assert_eq!(l.bracket_basis(0, 1), vec![rat(0), rat(0), rat(1)]);
    assert_eq!(l.weights(), Some(&[1u32, 1, 2][..]));
}

#[test]
fn parse_sl2_fixture_brackets() {
    let text = std::fs::read_to_string(fixture("sl2.lie")).unwrap();
    let l = parse::parse_lie(&text).unwrap();
    // declared as [h, e] = 2e, stored antisymmetrized as [e, h] = -2e
    assert_eq!(l.bracket_basis(0, 2), vec![rat(-2), rat(0), rat(0)]);
    assert_eq!(l.bracket_basis(1, 2), vec![rat(0), rat(2), rat(0)]);
    assert!(l.check_jacobi().passed());
}

#[test]
fn parse_rejects_unknown_symbol_with_line_number() {
    let err = parse::parse_lie("basis x y\nbracket x q = y\n").unwrap_err();
    assert_eq!(err.line, Some(2));
    assert!(err.message.contains('q'));
}

#[test]
fn parse_rejects_missing_basis() {
    assert!(parse::parse_lie("bracket x y = z\n").is_err());
}

#[test]
fn parse_mixed_coefficient_rhs() {
    let l = parse::parse_lie("basis a b c\nbracket a b = 2*c - 1/2*a + b\n").unwrap();
    assert_eq!(l.bracket_basis(0, 1), vec![ratio(-1, 2), rat(1), rat(2)]);
}

#[test]
fn expression_straightens_products() {
    let l = parse::parse_lie("basis x y z\nbracket x y = z\n").unwrap();
    let u = expr::eval_pbw(&l, &expr::parse("y*x").unwrap()).unwrap();
    let mut expect = PbwElement::zero();
    expect.add_term(PbwMonomial(vec![0, 1]), rat(1));
    expect.add_term(PbwMonomial::generator(2), rat(-1));
    assert_eq!(u, expect);
}

#[test]
fn expression_scalars_powers_parens() {
    let l = parse::parse_lie("basis x y z\nbracket x y = z\n").unwrap();
    let u = expr::eval_pbw(&l, &expr::parse("(x + 3/2*y)^2 - x*x").unwrap()).unwrap();
    // (x + 3/2 y)^2 = x^2 + 3 xy + 9/4 y^2 - 3/2 z
    let mut expect = PbwElement::zero();
    expect.add_term(PbwMonomial(vec![0, 1]), rat(3));
    expect.add_term(PbwMonomial(vec![1, 1]), ratio(9, 4));
    expect.add_term(PbwMonomial::generator(2), ratio(-3, 2));
    assert_eq!(u, expect);
}

#[test]
fn expression_rejects_series_functions_outside_trunc() {
    let l = parse::parse_lie("basis x\n").unwrap();
    let err = expr::eval_pbw(&l, &expr::parse("exp(x)").unwrap()).unwrap_err();
    assert!(err.message.contains("trunc"));
}

#[test]
fn tower_file_parses_spans() {
    let text = std::fs::read_to_string(fixture("heisenberg_tower.lie")).unwrap();
    let t = parse::parse_tower(&text).unwrap();
    assert_eq!(t.stages.len(), 2);
    assert_eq!(t.stages[0].1.dim(), 1);
    assert_eq!(t.stages[1].1.dim(), 0);
}

#[test]
fn check_passes_on_fixture() {
    let out = run(&["check", fixture("sl2.lie").to_str().unwrap()]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
}

#[test]
fn check_rejects_corrupted_bracket_with_exit_2() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "basis x y").unwrap();
    writeln!(f, "bracket x nope = y").unwrap();
    let out = run(&["check", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn check_fails_on_broken_jacobi_with_exit_1() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    // [a,b]=a, [a,c]=c gives Jacobi sum [[a,b],c]+[[b,c],a]+[[c,a],b] = c
    writeln!(f, "basis a b c").unwrap();
    writeln!(f, "bracket a b = a").unwrap();
    writeln!(f, "bracket a c = c").unwrap();
    let out = run(&["check", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn eval_pbw_example() {
    let out = run(&[
        "eval",
        fixture("heisenberg.lie").to_str().unwrap(),
        "y*x",
        "--mode",
        "pbw",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let terms = v["terms"].as_array().unwrap();
    // graded-lex order: the degree-1 term z first, then x·y
    assert_eq!(terms[0]["monomial"], serde_json::json!(["z"]));
    assert_eq!(terms[0]["coeff"], "-1");
    assert_eq!(terms[1]["monomial"], serde_json::json!(["x", "y"]));
    assert_eq!(terms[1]["coeff"], "1");
}

#[test]
fn eval_trunc_bch_example() {
    let out = run(&[
        "eval",
        fixture("heisenberg.lie").to_str().unwrap(),
        "bch(x,y)",
        "--mode",
        "trunc",
        "--cutoff",
        "4",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 3);
    assert_eq!(terms[2]["monomial"], serde_json::json!(["z"]));
    assert_eq!(terms[2]["coeff"], "1/2");
}

#[test]
fn eval_abelian_q_example() {
    let out = run(&[
        "eval",
        fixture("k1.lie").to_str().unwrap(),
        "q(x^2)",
        "--mode",
        "abelian",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(
        v["summands"][0]["poly"][0]["powers"],
        serde_json::json!([2])
    );
}

#[test]
fn eval_trunc_without_cutoff_is_usage_error() {
    let out = run(&[
        "eval",
        fixture("heisenberg.lie").to_str().unwrap(),
        "exp(x)",
        "--mode",
        "trunc",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn primitives_reports_lie_dimension() {
    let out = run(&[
        "primitives",
        fixture("sl2.lie").to_str().unwrap(),
        "--degree",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["dimension"], 3);
    assert_eq!(v["lie_dimension"], 3);
}

#[test]
fn membership_decisions() {
    let path = fixture("heisenberg.lie");
    let member = run(&["membership", path.to_str().unwrap(), "x*z", "--ideal", "z"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&member)).unwrap();
    assert_eq!(v["member"], true);
    let non = run(&["membership", path.to_str().unwrap(), "x*y", "--ideal", "z"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&non)).unwrap();
    assert_eq!(v["member"], false);
}

#[test]
fn tower_checks_pass() {
    let out = run(&["tower", fixture("heisenberg_tower.lie").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["stages"][0]["stage_dimension"], 2);
    assert_eq!(v["stages"][1]["stage_dimension"], 3);
}

#[test]
fn census_counts_match() {
    for n in 1..=4usize {
        let out = run(&["census-a2", &n.to_string()]);
        assert_eq!(out.status.code(), Some(0));
        let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(v["count"], n);
    }
}

#[test]
fn verify_selector_skips_other_suites_and_is_deterministic() {
    let args = ["verify", "--suite", "a2", "--seed", "42", "--json"];
    let first = run(&args);
    assert_eq!(first.status.code(), Some(0));
    let second = run(&args);
    assert_eq!(first.stdout, second.stdout, "report must be byte-identical");
    let v: serde_json::Value = serde_json::from_str(&stdout(&first)).unwrap();
    assert_eq!(v["seed"], 42);
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.iter().any(|c| c["status"] == "skip"));
    assert!(checks.iter().all(|c| c["status"] != "fail"));
    assert!(checks
        .iter()
        .any(|c| c["name"].as_str().unwrap().starts_with("a2/") && c["status"] == "pass"));
}

#[test]
fn expression_membership_roundtrip_through_library() {
    // sanity: the library agrees with the binary on the membership calls
    let text = std::fs::read_to_string(fixture("heisenberg.lie")).unwrap();
    let l = parse::parse_lie(&text).unwrap();
    let u = expr::eval_pbw(&l, &expr::parse("x*z + 2*y*z").unwrap()).unwrap();
    let j = envelope_core::lie::Subspace::from_vectors(3, &[l.basis_vector(2)]).unwrap();
    assert!(pbw::membership_ulj(&l, &u, &j).unwrap());
}
