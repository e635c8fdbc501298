use neatalg_harness::{replay, run_suite, Report, Status, Subject, SuiteConfig, SuiteName, REPORT_SCHEMA};
use serde_json::Value;

fn run(text: &str) -> Report {
    run_suite(&SuiteConfig::parse(text).unwrap()).unwrap()
}

/// The report as JSON with every wall time zeroed.
fn without_times(r: &Report) -> Value {
    let mut v: Value = serde_json::from_str(&r.to_json()).unwrap();
    for s in v["suites"].as_array_mut().unwrap() {
        s["wall_time_s"] = Value::from(0.0);
    }
    v
}

/// A real failure: with two search samples the square-separable search in
/// GF(7), κ = 4 exhausts its budget although |F| > κ.
const STARVED: &str = "fields = GF(7)\ntypes = orthogonal\ndegrees = 4\nseed = 5\nsuites = neatquad\nbudget.search = 2";

#[test]
fn cap2_form_dimension_table() {
    let r = run("fields = GF(2), GF(3)\ntypes = orthogonal, unitary, unitary-inner\ndegrees = 2\nsuites = cap2-form");
    let s = r.suite(SuiteName::Cap2Form).unwrap();
    assert_eq!((s.instances_run, s.passes), (6, 6));
    assert!(r.passed());
    let r = run("fields = GF(2), GF(3)\ntypes = symplectic\ndegrees = 4\nsuites = cap2-form\nbudget.det = 20");
    assert!(r.passed());
    let mut dims = std::collections::BTreeSet::new();
    for text in [
        "fields = GF(2), GF(3)\ntypes = orthogonal, unitary\ndegrees = 2\nsuites = cap2-form",
        "fields = GF(2), GF(3)\ntypes = symplectic\ndegrees = 4\nsuites = cap2-form\nbudget.det = 5",
    ] {
        for res in &run(text).suites[0].results {
            let d = res.result.detail.split("dim Syms = ").nth(1).unwrap();
            dims.insert(d[..1].parse::<usize>().unwrap());
        }
    }
    assert_eq!(dims.into_iter().collect::<Vec<_>>(), vec![3, 4, 6]);
}

#[test]
fn albert_rowen_emits_a_triquadratic_certificate() {
    let r = run("fields = GF(2)\ntypes = symplectic\ndegrees = 8\nsuites = albert-rowen");
    let s = r.suite(SuiteName::AlbertRowen).unwrap();
    assert!(r.passed());
    let cert = s.results[0].result.certificate.as_ref().expect("certificate");
    assert_eq!(cert["kind"], "triquadratic");
}

#[test]
fn empty_grid_gives_an_empty_passing_report() {
    let r = run("suites = prop-neat, cap2-form");
    assert!(r.passed());
    assert_eq!(r.suites.len(), 2);
    assert!(r.suites.iter().all(|s| s.instances_run == 0 && s.results.is_empty()));
    let r = run("");
    assert!(r.suites.is_empty() && r.passed());
    assert_eq!(r.schema, REPORT_SCHEMA);
}

#[test]
fn reports_are_deterministic_apart_from_wall_time() {
    let text = "fields = GF(3), GF(4)\ntypes = orthogonal, unitary-inner\ndegrees = 2, 3\nseed = 11\nsuites = prop-neat, keepstype, springer\nbudget.springer = 4";
    let (a, b) = (run(text), run(text));
    assert_eq!(without_times(&a), without_times(&b));
    let indices: Vec<usize> = a.suites[0].results.iter().map(|r| r.index).collect();
    assert_eq!(indices, (0..8).collect::<Vec<_>>());
    assert_eq!(a.suites[0].results[3].seed, 14);
}

#[test]
fn report_round_trips_through_json() {
    let r = run("fields = GF(2)\ntypes = orthogonal\ndegrees = 2\nsuites = capmaxdim, springer\nbudget.springer = 2");
    let back: Report = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(back, r);
    assert_eq!(back.config.seed, 0);
}

#[test]
fn failures_replay_to_the_same_failure() {
    let r = run(STARVED);
    let s = r.suite(SuiteName::NeatQuad).unwrap();
    assert_eq!(s.failures.len(), 1, "{:?}", s.results);
    let rec = &s.failures[0];
    assert!(matches!(rec.subject, Subject::Algebra { .. }));
    let json = serde_json::to_string(rec).unwrap();
    let back = serde_json::from_str(&json).unwrap();
    let again = replay(&back).unwrap();
    assert_eq!(again.status, Status::Fail);
    assert_eq!(again.detail, rec.detail);
}

#[test]
fn not_found_is_not_a_failure() {
    let r = run("fields = GF(5)\ntypes = orthogonal\ndegrees = 2, 4\nsuites = prop-neat\nbudget.search = 1");
    let s = r.suite(SuiteName::PropNeat).unwrap();
    assert!(s.not_found > 0);
    assert!(r.passed());
}

#[test]
fn springer_runs_per_field() {
    let r = run("fields = GF(3), GF(5), GF(3)\nsuites = springer\nbudget.springer = 5");
    let s = r.suite(SuiteName::Springer).unwrap();
    assert_eq!((s.instances_run, s.passes), (10, 10));
    assert!(s.results[5].label.starts_with("GF(5)"));
}
