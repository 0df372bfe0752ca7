//! End-to-end tests of the command-line interface: determinism, JSON
//! round-trips, and exit codes.

use std::process::{Command, Output};

use dihedral::json::{poly_from_dto, PolyTermDto};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dihedral"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = ["intertwine", "--s", "2", "--a", "3", "--b", "1", "--format", "json"];
    let first = run(&args);
    let second = run(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    assert!(!first.stdout.is_empty());
}

#[test]
fn json_output_reparses_to_the_same_polynomial() {
    use dihedral::dunkl::GroupParam;
    use dihedral::intertwine::intertwine_mono;

    let out = run(&["intertwine", "--s", "2", "--a", "2", "--b", "0", "--format", "json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["command"], "intertwine");
    assert_eq!(doc["s"], 2);
    let terms: Vec<PolyTermDto> = serde_json::from_value(doc["result"].clone()).unwrap();
    let poly = poly_from_dto(&terms).unwrap();
    assert_eq!(poly, intertwine_mono(&GroupParam::new(2), 2, 0));
    // and re-encoding is bit-identical
    let reencoded = serde_json::to_value(dihedral::json::poly_to_dto(&poly)).unwrap();
    assert_eq!(reencoded, doc["result"]);
}

#[test]
fn trivial_cases_render_as_one() {
    for args in [
        ["intertwine", "--s", "2", "--a", "0", "--b", "0"].as_slice(),
        ["poisson", "--s", "2", "--N", "0"].as_slice(),
        ["kernel", "--s", "3", "--n", "0"].as_slice(),
    ] {
        let out = run(args);
        assert!(out.status.success());
        assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "1");
    }
}

#[test]
fn harmonic_variants() {
    let out = run(&["harmonic", "--s", "2", "--n", "2", "--variant", "f0"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("z^2"), "{text}");
    // f_0^1 = 0
    let out = run(&["harmonic", "--s", "2", "--n", "0", "--variant", "f1"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "0");
    // unknown variant is a usage error
    let out = run(&["harmonic", "--s", "2", "--n", "0", "--variant", "g"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_defining_suite_passes() {
    let out = run(&["verify", "--suite", "defining", "--max-degree", "4"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("PASS defining_property"));
    assert!(text.contains("all "));
}

#[test]
fn verify_seed_is_reproducible() {
    let args = [
        "verify", "--suite", "oracle", "--max-degree", "4", "--seed", "42", "--format", "json",
    ];
    let first = run(&args);
    let second = run(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn unknown_suite_is_usage_error() {
    let out = run(&["verify", "--suite", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
}
