//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line (run with `cargo test --test acceptance -- --nocapture` to see the
//! lines for passing criteria too). Every comparison is exact symbolic
//! equality unless a numeric tolerance is stated.

use std::time::{Duration, Instant};

use dihedral::report::{summarize, VerificationReport};
use dihedral::verify;

fn finish(
    index: u32,
    label: &str,
    reports: &[VerificationReport],
    started: Instant,
    budget: Duration,
) {
    let elapsed = started.elapsed();
    let (total, failures) = summarize(reports);
    let status = if failures == 0 { "PASS" } else { "FAIL" };
    println!(
        "ACCEPTANCE {index} ({label}): {status} — {total} checks, {failures} failures, {:.2?}",
        elapsed
    );
    for r in reports.iter().filter(|r| !r.passed()) {
        println!(
            "    FAIL {} [{}]: {}",
            r.identity,
            r.params,
            r.witness.clone().unwrap_or_default()
        );
    }
    assert_eq!(failures, 0, "criterion {index} ({label}) failed");
    assert!(
        elapsed <= budget,
        "criterion {index} exceeded its runtime budget: {elapsed:.2?} > {budget:.2?}"
    );
}

#[test]
fn criterion_1_golden_formulas() {
    let started = Instant::now();
    let reports = verify::golden_suite();
    finish(1, "golden formulas", &reports, started, Duration::from_secs(1));
}

#[test]
fn criterion_2_defining_property() {
    let started = Instant::now();
    let reports = verify::defining_suite(6);
    finish(2, "defining property", &reports, started, Duration::from_secs(300));
}

#[test]
fn criterion_3_oracle_equivalence() {
    let started = Instant::now();
    let reports = verify::oracle_suite(8, 42);
    finish(3, "oracle equivalence", &reports, started, Duration::from_secs(600));
}

#[test]
fn criterion_4_triple_agreement() {
    let started = Instant::now();
    let reports = verify::triple_suite(6);
    finish(4, "triple agreement", &reports, started, Duration::from_secs(600));
}

#[test]
fn criterion_5_hypergeometric_layer() {
    let started = Instant::now();
    let reports = verify::hypergeom_suite(10);
    finish(5, "hypergeometric layer", &reports, started, Duration::from_secs(600));
}

#[test]
fn criterion_6_harmonic_layer() {
    let started = Instant::now();
    let reports = verify::harmonic_suite();
    finish(6, "harmonic layer", &reports, started, Duration::from_secs(600));
}

#[test]
fn criterion_7_measure_layer() {
    let started = Instant::now();
    let reports = verify::measure_suite();
    finish(7, "measure layer", &reports, started, Duration::from_secs(600));
}

#[test]
fn criterion_8_singular_suite() {
    let started = Instant::now();
    let reports = verify::singular_suite(None);
    finish(8, "singular suite", &reports, started, Duration::from_secs(600));
}
