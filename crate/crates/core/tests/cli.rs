//! Black-box tests of the command-line surface: exit codes, output
//! contracts, and JSON stability.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_defect"))
        .args(args)
        .output()
        .expect("spawn CLI")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn analyze_text_output_reports_profile() {
    let out = run(&["analyze", "x^2+y^2+z^2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for needle in [
        "d:              2",
        "mdr:            1",
        "tau:            0",
        "nu:             1",
        "classification: nearly_free",
        "duality",
        "containment",
    ] {
        assert!(text.contains(needle), "missing {needle:?} in:\n{text}");
    }
}

#[test]
fn analyze_json_has_fixed_key_order_and_round_trips() {
    let out = run(&["analyze", "x^2+y^2+z^2", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    // parse → re-render reproduces the exact bytes (modulo trailing newline)
    let rendered = serde_json::to_string_pretty(&value).unwrap();
    assert_eq!(rendered, text.trim_end());
    let obj = value.as_object().unwrap();
    let keys: Vec<&String> = obj.keys().collect();
    assert_eq!(
        keys,
        vec![
            "input",
            "d",
            "mdr",
            "tau",
            "n_seq",
            "nu",
            "classification",
            "checks",
            "timing_ms"
        ]
    );
    // integers are decimal strings
    assert_eq!(obj["d"], serde_json::Value::String("2".into()));
    assert_eq!(obj["nu"], serde_json::Value::String("1".into()));
    assert!(obj["n_seq"].as_array().unwrap()[0].is_string());
}

#[test]
fn analyze_json_is_deterministic_apart_from_timing() {
    let mut values = Vec::new();
    for _ in 0..2 {
        let out = run(&["analyze", "--family", "nodal", "--d", "4", "--json"]);
        assert_eq!(out.status.code(), Some(0));
        let mut v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        v.as_object_mut().unwrap().remove("timing_ms");
        values.push(v);
    }
    assert_eq!(values[0], values[1]);
}

#[test]
fn analyze_family_equals_explicit_polynomial() {
    // families additionally carry a singularity census (so their verdict
    // block differs); the measured invariants must coincide exactly
    let by_family = run(&["analyze", "--family", "fermat", "--d", "3", "--json"]);
    let by_poly = run(&["analyze", "x^3+y^3+z^3", "--json"]);
    let profile_of = |o: &Output| {
        let v: serde_json::Value = serde_json::from_str(&stdout(o)).unwrap();
        let obj = v.as_object().unwrap();
        ["d", "mdr", "tau", "n_seq", "nu", "classification"]
            .map(|k| obj[k].clone())
    };
    assert_eq!(profile_of(&by_family), profile_of(&by_poly));
}

#[test]
fn non_reduced_input_exits_2_with_reason() {
    let out = run(&["analyze", "x^2*y"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("non-reduced or non-isolated singularities"));
    assert!(stderr(&out).contains("x^2*y"), "echoes the input");
}

#[test]
fn usage_errors_exit_1() {
    let cases: &[&[&str]] = &[
        &["analyze"],                                    // nothing to analyze
        &["analyze", "x^2+y^2+z^2", "--family", "fermat"], // both inputs
        &["analyze", "x^2+)"],                           // parse error
        &["analyze", "--family", "nosuchfamily"],        // unknown family
        &["analyze", "--family", "fermat"],              // missing --d
        &["analyze", "--family", "lines", "--n", "99"],  // over degree cap
        &["bounds", "A"],                                // missing --d
        &["bounds", "dpw", "--d", "8", "--r", "9"],      // r out of range
        &["bounds", "nosuchbound", "--d", "4"],          // unknown calculator
        &["nosuchcommand"],                              // unknown subcommand
    ];
    for args in cases {
        let out = run(args);
        assert_eq!(out.status.code(), Some(1), "args {args:?}");
        assert!(!stderr(&out).is_empty(), "args {args:?} should explain");
    }
}

#[test]
fn help_and_version_exit_0() {
    for args in [&["--help"][..], &["--version"][..], &["analyze", "--help"][..]] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(0), "args {args:?}");
        assert!(!stdout(&out).is_empty());
    }
}

#[test]
fn bounds_pinned_strings() {
    let cases = [
        (vec!["bounds", "A", "--d", "10"], "ν ≥ 99/4 ⇒ ν ≥ 25"),
        (vec!["bounds", "C", "--k", "3"], "ν = 55, genus = 55"),
        (vec!["bounds", "dpw", "--d", "8", "--r", "4"], "36"),
        (vec!["bounds", "lct", "--type", "cusp"], "5/6"),
        (vec!["bounds", "genus", "--d", "5", "--census", "node:3"], "3"),
    ];
    for (args, expected) in cases {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(0), "args {args:?}");
        assert_eq!(stdout(&out).trim_end(), expected, "args {args:?}");
    }
}

#[test]
fn bounds_census_gates() {
    // a bound that needs a census of only nodes declines a cuspidal census
    let out = run(&["bounds", "A", "--d", "6", "--census", "cusp:9"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("not applicable"));
    // impossible census: genus would be negative
    let out = run(&["bounds", "genus", "--d", "4", "--census", "node:20"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("not attainable"));
}

#[test]
fn verification_runner_passes_and_filters() {
    let out = run(&["verify-paper"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("11 passed, 0 failed, 0 skipped"), "{text}");

    let out = run(&["verify-paper", "--only", "conic"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("conic"));
    assert!(text.contains("1 passed, 0 failed, 0 skipped"), "{text}");
}

#[test]
fn verification_cap_skips_rather_than_fails() {
    let out = run(&["verify-paper", "--max-degree", "11"]);
    assert_eq!(out.status.code(), Some(0), "skips are not failures");
    let text = stdout(&out);
    assert!(text.contains("SKIP"), "{text}");
    assert!(text.contains("0 failed"), "{text}");
    assert!(text.contains("2 skipped"), "{text}");
}

#[test]
fn verification_json_lists_items_in_order() {
    let out = run(&["verify-paper", "--only", "arith", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let items = v.as_array().unwrap();
    assert_eq!(items.len(), 1);
    assert_eq!(items[0]["id"], "arithmetic-identities");
    assert_eq!(items[0]["status"], "pass");
}
