//! End-to-end acceptance run: every verification suite must pass with the
//! default seed. One line is printed per criterion so a failing run shows
//! exactly which suite broke.

use bismash::verify::{verify_all, DEFAULT_SEED};

#[test]
fn all_acceptance_criteria_pass() {
    let reports = verify_all(DEFAULT_SEED).expect("suites should build their inputs");
    assert_eq!(reports.len(), 13);
    let mut failures = Vec::new();
    for (i, rep) in reports.iter().enumerate() {
        let status = if rep.passed() { "pass" } else { "FAIL" };
        println!("criterion {:>2} ({}): {}", i + 1, rep.name, status);
        if !rep.passed() {
            failures.push(format!("criterion {} ({}):\n{}", i + 1, rep.name, rep.summary()));
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n\n"));
}
