use serde_json::Value;

use specht_cli::{exit_code, run_suite, run_with_input, Suite, SuiteOptions, EXIT_OK, EXIT_RESOURCE, EXIT_UNSUPPORTED, EXIT_USAGE, EXIT_VERIFY_FAILED};
use specht_core::Error;

struct Outcome {
    code: i32,
    out: String,
    err: String,
}

fn run(args: &[&str], stdin: &str) -> Outcome {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("specht").chain(args.iter().copied());
    let code = run_with_input(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    Outcome { code, out: String::from_utf8(out).unwrap(), err: String::from_utf8(err).unwrap() }
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let o = run(&full, "");
    assert_eq!(o.code, EXIT_OK, "{}", o.err);
    serde_json::from_str(&o.out).unwrap()
}

#[test]
fn gen_counts_and_degrees() {
    let o = run(&["gen", "--lambda", "1,1,1"], "");
    assert_eq!(o.code, EXIT_OK);
    assert_eq!(o.out.lines().count(), 1);
    let o = run(&["gen", "--lambda", "2,2"], "");
    assert_eq!(o.out.lines().count(), 2);
    assert!(o.out.contains("# T = 1 3 / 2 4"));
    let v = json(&["gen", "--lambda", "2,2,1"]);
    let gens = v["generators"].as_array().unwrap();
    assert_eq!(gens.len(), 5);
    for g in gens {
        let p = specht_core::algebra::parse_polynomial(specht_core::Rationals, g["polynomial"].as_str().unwrap(), 5).unwrap();
        assert_eq!(p.homogeneous_degree().unwrap(), Some(4));
    }
}

#[test]
fn invalid_partition_is_a_usage_error() {
    let o = run(&["gen", "--lambda", "2,3"], "");
    assert_eq!(o.code, EXIT_USAGE);
    assert!(o.err.contains("invalid partition"));
    assert_eq!(run(&["gen", "--lambda", "2,2", "--n", "5"], "").code, EXIT_USAGE);
    assert_eq!(run(&["gen", "--lambda", "2,2", "--field", "fp:4"], "").code, EXIT_USAGE);
}

#[test]
fn hilbert_methods() {
    let o = run(&["hilbert", "--lambda", "3,2", "--method", "both"], "");
    assert_eq!(o.code, EXIT_OK);
    assert_eq!(o.out, "closed form: (1+3t+t^2)/(1-t)^2\ngroebner:    (1+3t+t^2)/(1-t)^2\nmatch\n");
    let v = json(&["hilbert", "--lambda", "2,2,1", "--method", "both", "--field", "fp:2"]);
    assert_eq!(v["match"], Value::Bool(true));
    assert_eq!(v["groebner"]["numerator"], serde_json::json!([1, 2, 3, 4]));
    let o = run(&["hilbert", "--lambda", "2,1,1", "--method", "closed-form"], "");
    assert_eq!(o.code, EXIT_UNSUPPORTED);
    let o = run(&["hilbert", "--lambda", "2,1,1", "--method", "groebner"], "");
    assert_eq!(o.code, EXIT_OK);
    // points with at most two distinct coordinates: S(4,2) = 7 planes
    assert_eq!(o.out.trim(), "groebner:    (1+2t+3t^2+t^3)/(1-t)^2");
}

#[test]
fn gb_from_lambda_and_stdin() {
    let o = run(&["gb", "--lambda", "1,1,1"], "");
    assert_eq!(o.code, EXIT_OK);
    let body: Vec<&str> = o.out.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(body.len(), 1);
    assert!(body[0].starts_with("x2*x3^2 - "));
    assert!(body[0].ends_with("# lm = x2*x3^2"));

    let q = json(&["gb", "--lambda", "2,2"]);
    let f3 = json(&["gb", "--lambda", "2,2", "--field", "fp:3"]);
    let lms = |v: &Value| -> Vec<Value> { v["elements"].as_array().unwrap().iter().map(|e| e["leading_monomial"].clone()).collect() };
    assert_eq!(lms(&q), lms(&f3));
    assert_eq!(f3["reduced"], Value::Bool(true));
    assert_eq!(f3["field"], "fp:3");

    let o = run(&["gb", "--input", "-"], "(x1-x2)\n");
    assert_eq!(o.code, EXIT_OK);
    assert!(o.out.lines().any(|l| l.starts_with("x2 - x1")));
    let o = run(&["--format", "json", "gb"], r#"["x1*x2", "x1 + x2"]"#);
    let v: Value = serde_json::from_str(&o.out).unwrap();
    assert_eq!(v["elements"][1]["polynomial"], "x1^2");
}

#[test]
fn gb_errors() {
    assert_eq!(run(&["gb", "--input", "-"], "x1 +").code, EXIT_USAGE);
    let o = run(&["gb", "--input", "-", "--degree-cap", "3"], "x3^2 - x1\nx3*x2^2 - x1\n");
    assert_eq!(o.code, EXIT_RESOURCE);
    assert!(o.err.contains("degree cap"));
    assert_eq!(run(&["gb", "--lambda", "5,4"], "").code, EXIT_RESOURCE);
}

#[test]
fn verify_suites() {
    for args in [
        &["verify", "--suite", "recursion", "--max-n", "7"][..],
        &["verify", "--suite", "grobner-jdd", "--d", "2"],
        &["verify", "--suite", "radical", "--max-n", "6"],
        &["verify", "--suite", "trm-lemma", "--d", "2"],
        &["verify", "--suite", "char-free"],
    ] {
        let o = run(args, "");
        assert_eq!(o.code, EXIT_OK, "{args:?}: {}{}", o.out, o.err);
        assert!(o.out.contains("PASS"));
    }
    assert_eq!(run(&["verify", "--suite", "nope"], "").code, EXIT_USAGE);
}

fn strip_timing(v: &mut Value) {
    match v {
        Value::Object(map) => {
            map.remove("millis");
            map.values_mut().for_each(strip_timing);
        }
        Value::Array(items) => items.iter_mut().for_each(strip_timing),
        _ => {}
    }
}

#[test]
fn json_is_stable_for_a_seed() {
    let args = ["verify", "--suite", "vanishing", "--max-n", "6", "--seed", "7", "--trials", "20"];
    let mut a = json(&args);
    let mut b = json(&args);
    strip_timing(&mut a);
    strip_timing(&mut b);
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    assert_eq!(a["passed"], Value::Bool(true));
}

#[test]
fn report_flag_matches_cases() {
    let opts = SuiteOptions { max_n: Some(5), d: None, seed: 0, trials: 10 };
    let report = run_suite(Suite::InitialTerms, &opts).unwrap();
    assert!(!report.cases.is_empty());
    assert_eq!(report.passed, report.cases.iter().all(|c| c.status == "pass"));
}

#[test]
fn syt_count() {
    assert_eq!(run(&["syt-count", "--lambda", "3,3,1"], "").out, "21\n");
    assert_eq!(json(&["syt-count", "--lambda", "2,2,1"])["count"], "5");
}

#[test]
fn exit_codes_for_library_errors() {
    assert_eq!(exit_code(&Error::UnsupportedFamily("x".into())), EXIT_UNSUPPORTED);
    assert_eq!(exit_code(&Error::DegreeCap { degree: 4, cap: 3 }), EXIT_RESOURCE);
    assert_eq!(exit_code(&Error::TooManyVariables(17)), EXIT_RESOURCE);
    assert_eq!(exit_code(&Error::NotGroebner { i: 0, j: 1, remainder: "x1".into() }), EXIT_VERIFY_FAILED);
    assert_eq!(exit_code(&Error::Parse { pos: 0, msg: "x".into() }), EXIT_USAGE);
}
