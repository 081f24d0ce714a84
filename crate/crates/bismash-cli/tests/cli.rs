//! Exit-code and round-trip tests driving the compiled binary.

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bismash"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn path_str(p: &Path) -> &str {
    p.to_str().expect("utf-8 path")
}

#[test]
fn build_check_bismash_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let pair = dir.path().join("p42.json");
    let product = dir.path().join("b42.json");

    let out = run(&[
        "build",
        "pair_4_2",
        "--group",
        "C4",
        "--normal",
        "e,c2",
        "-o",
        path_str(&pair),
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));

    for suite in ["hopf", "action", "coaction", "pmp", "all"] {
        let out = run(&["check", path_str(&pair), "--suite", suite]);
        assert_eq!(code(&out), 0, "suite {suite} failed");
        let doc: serde_json::Value =
            serde_json::from_slice(&out.stdout).expect("report is JSON");
        assert_eq!(doc["passed"], serde_json::json!(true));
    }

    let out = run(&["bismash", path_str(&pair), "-o", path_str(&product)]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let out = run(&["check", path_str(&product), "--suite", "hopf"]);
    assert_eq!(code(&out), 0);
    let out = run(&["theta", path_str(&pair)]);
    assert_eq!(code(&out), 0);

    let out = run(&["fingerprint", path_str(&product)]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8_lossy(&out.stdout).to_string();
    assert!(text.contains("dim: 4"), "{text}");
}

#[test]
fn negative_pair_fails_checks_but_still_builds_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let pair = dir.path().join("neg.json");
    let out = run(&[
        "build",
        "pair_h4_negative",
        "--beta",
        "1",
        "--mode",
        "lambda",
        "-o",
        path_str(&pair),
    ]);
    assert_eq!(code(&out), 0);
    let out = run(&["check", path_str(&pair), "--suite", "pmp"]);
    assert_eq!(code(&out), 1);
    let out = run(&["bismash", path_str(&pair)]);
    assert_eq!(code(&out), 1);
}

#[test]
fn malformed_input_and_bad_usage_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("corrupt.json");
    std::fs::write(&bad, "{\"schema_version\": 1,").unwrap();
    assert_eq!(code(&run(&["check", path_str(&bad)])), 2);
    assert_eq!(code(&run(&["check", "/nonexistent/file.json"])), 2);
    assert_eq!(code(&run(&["build", "nosuch-algebra"])), 2);
    assert_eq!(code(&run(&["build", "h4", "--field", "GF(4)"])), 2);
    assert_eq!(code(&run(&["no-such-command"])), 2);

    // An algebra file is not a pair, so the pair-only suites are a usage error.
    let h4 = dir.path().join("h4.json");
    assert_eq!(code(&run(&["build", "h4", "-o", path_str(&h4)])), 0);
    assert_eq!(code(&run(&["check", path_str(&h4), "--suite", "pmp"])), 2);
}

#[test]
fn dualize_and_compare_detect_self_duality() {
    let dir = tempfile::tempdir().unwrap();
    let h4 = dir.path().join("h4.json");
    let dual = dir.path().join("h4_dual.json");
    let ks3 = dir.path().join("ks3.json");

    assert_eq!(code(&run(&["build", "h4", "-o", path_str(&h4)])), 0);
    assert_eq!(code(&run(&["dualize", path_str(&h4), "-o", path_str(&dual)])), 0);
    let out = run(&["compare", path_str(&h4), path_str(&dual)]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).contains("fingerprints equal"));

    assert_eq!(code(&run(&["build", "kS3", "-o", path_str(&ks3)])), 0);
    let out = run(&["compare", path_str(&h4), path_str(&ks3)]);
    assert_eq!(code(&out), 1);

    let out = run(&["integrals", path_str(&h4)]);
    assert_eq!(code(&out), 0);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["left_integral_dim"], serde_json::json!(1));
    assert_eq!(doc["semisimple"], serde_json::json!(false));
}

#[test]
fn zoo_list_and_prime_field_builds_work() {
    let out = run(&["zoo-list"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8_lossy(&out.stdout).to_string();
    assert!(text.contains("h4") && text.contains("4-2-c4"), "{text}");

    let dir = tempfile::tempdir().unwrap();
    let a22 = dir.path().join("a22_gf5.json");
    assert_eq!(
        code(&run(&["build", "a22", "--field", "GF(5)", "-o", path_str(&a22)])),
        0
    );
    assert_eq!(code(&run(&["check", path_str(&a22), "--suite", "hopf"])), 0);
}
