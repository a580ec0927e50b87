//! End-to-end runs of the installed binary: output text, JSON shape, exit
//! codes, and determinism across thread counts and repeated seeds.

use std::process::{Command, Output};

fn jtdual(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jtdual"))
        .args(args)
        .output()
        .expect("binary should run")
}

fn jtdual_with_threads(threads: &str, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jtdual"))
        .env("JT_THREADS", threads)
        .args(args)
        .output()
        .expect("binary should run")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn unflagged_enumeration_text() {
    let out = jtdual(&["compute", "--outer", "1,1", "--inner", "0,0", "--nx", "2", "--method", "enum"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "x1*x2 + x1*t1 + x2*t1\n");
}

#[test]
fn column_counterexample_pair() {
    let enumeration = jtdual(&[
        "compute", "--outer", "3,3", "--inner", "2,0", "--col", "--alpha", "2,0", "--beta", "2,2",
        "--method", "enum",
    ]);
    assert!(enumeration.status.success());
    assert_eq!(stdout_of(&enumeration), "0\n");

    let determinant = jtdual(&[
        "compute", "--outer", "3,3", "--inner", "2,0", "--col", "--alpha", "2,0", "--beta", "2,2",
        "--method", "det-e",
    ]);
    assert!(determinant.status.success());
    assert_eq!(stdout_of(&determinant), "-x1*x2*t1*t2\n");
}

#[test]
fn usage_errors_exit_2() {
    let wrong_pairing = jtdual(&[
        "compute", "--outer", "2,2", "--inner", "1,0", "--row", "--alpha", "0,0", "--beta", "2,2",
        "--method", "det-e",
    ]);
    assert_eq!(wrong_pairing.status.code(), Some(2));

    let missing_nx = jtdual(&["compute", "--outer", "2,1"]);
    assert_eq!(missing_nx.status.code(), Some(2));

    let unknown_flag = jtdual(&["compute", "--outer", "2,1", "--frobnicate"]);
    assert_eq!(unknown_flag.status.code(), Some(2));

    let short_flags = jtdual(&[
        "compute", "--outer", "2,1", "--row", "--alpha", "0", "--beta", "2,2",
    ]);
    assert_eq!(short_flags.status.code(), Some(2));
}

#[test]
fn domain_errors_exit_3() {
    let out = jtdual(&[
        "compute", "--outer", "1,2", "--row", "--alpha", "0,0", "--beta", "2,2", "--method", "det-h",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("weakly decreasing"), "stderr was: {err}");
}

#[test]
fn t_substitution_matches_phi_method() {
    let phi = jtdual(&["compute", "--outer", "3,1", "--inner", "1,0", "--nx", "3", "--method", "phi-t1"]);
    let enum_t1 = jtdual(&["compute", "--outer", "3,1", "--inner", "1,0", "--nx", "3", "--t", "1"]);
    assert!(phi.status.success() && enum_t1.status.success());
    assert_eq!(stdout_of(&phi), stdout_of(&enum_t1));
}

#[test]
fn json_output_shape() {
    let out = jtdual(&["compute", "--outer", "1,1", "--nx", "2", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 3);
    assert_eq!(terms[0]["coeff"], "1");
    assert!(terms[0]["x"].is_object() && terms[0]["t"].is_object());
}

#[test]
fn inner_is_zero_padded() {
    let padded = jtdual(&["compute", "--outer", "2,1", "--inner", "1,0", "--nx", "2"]);
    let short = jtdual(&["compute", "--outer", "2,1", "--inner", "1", "--nx", "2"]);
    assert_eq!(stdout_of(&padded), stdout_of(&short));
}

#[test]
fn verify_small_sweeps_pass() {
    for mode in ["col", "row", "equiv", "t0", "t1"] {
        let out = jtdual(&[
            "verify", "--mode", mode, "--max-part", "2", "--max-len", "2", "--max-flag", "2",
        ]);
        assert!(out.status.success(), "mode {mode} failed");
        assert!(stdout_of(&out).contains("mismatches: 0"), "mode {mode}: {}", stdout_of(&out));
    }
}

#[test]
fn verify_partial_is_seed_deterministic() {
    let a = jtdual(&["verify", "--mode", "partial", "--seed", "11", "--json"]);
    let b = jtdual(&["verify", "--mode", "partial", "--seed", "11", "--json"]);
    assert!(a.status.success() && b.status.success());
    let strip = |s: String| {
        let mut v: serde_json::Value = serde_json::from_str(&s).unwrap();
        v.as_object_mut().unwrap().remove("elapsed_ms");
        v.to_string()
    };
    assert_eq!(strip(stdout_of(&a)), strip(stdout_of(&b)));
}

#[test]
fn verify_is_thread_count_independent() {
    let one = jtdual_with_threads("1", &["verify", "--mode", "col", "--max-part", "2", "--max-len", "2", "--max-flag", "1"]);
    let four = jtdual_with_threads("4", &["verify", "--mode", "col", "--max-part", "2", "--max-len", "2", "--max-flag", "1"]);
    assert!(one.status.success() && four.status.success());
    let head = |s: String| s.lines().take(2).collect::<Vec<_>>().join("\n");
    assert_eq!(head(stdout_of(&one)), head(stdout_of(&four)));
}

#[test]
fn demo_prints_all_three_instances() {
    let out = jtdual(&["demo-remarks"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("determinant: -x1*x2*t1*t2"));
    assert!(text.contains("determinant: -x1^3 + x1^2*t1"));
    assert!(text.contains("determinant: t1"));
    assert!(text.contains("column flag condition: false"));
    assert!(text.contains("row flag condition: false"));
    assert!(text.matches("enumeration: 0").count() == 3);
}
