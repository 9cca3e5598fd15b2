use std::process::Command;

use cyclic_area::cli::{run, EXIT_INFEASIBLE, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

fn cli(args: &[&str]) -> cyclic_area::cli::Outcome {
    run(std::iter::once("cyclic-area").chain(args.iter().copied()))
}

fn json(text: &str) -> Value {
    serde_json::from_str(text).unwrap_or_else(|e| panic!("bad json {text:?}: {e}"))
}

#[test]
fn area_of_square() {
    let out = cli(&["area", "--spec", r#"{"kind":"side_lengths","sides":[2,2,2,2]}"#]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    let v = json(&out.stdout);
    assert!((v["area"].as_f64().unwrap() - 4.0).abs() < 1e-12);
    assert!((v["factor_pair"]["f1"].as_f64().unwrap() - 4.0).abs() < 1e-12);
    assert!((v["factor_pair"]["f2"].as_f64().unwrap() - 4.0).abs() < 1e-12);
    assert_eq!(v["n"], 2);
    assert_eq!(v["apex"], 0);
    assert!(v.get("apex_sweep").is_none());
}

#[test]
fn area_with_apex_sweep() {
    let out = cli(&[
        "area",
        "--spec",
        r#"{"kind":"random","seed":5,"vertex_count":7,"radius":1.5}"#,
        "--apex",
        "3",
        "--all-apices",
    ]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    let v = json(&out.stdout);
    assert_eq!(v["apex"], 3);
    assert_eq!(v["apex_sweep"].as_array().unwrap().len(), 7);
    assert!(v["apex_spread"].as_f64().unwrap() < 1e-8);
}

#[test]
fn decompose_lists_triangles_and_diagonals() {
    let out = cli(&["decompose", "--spec", r#"{"kind":"side_lengths","sides":[1,1,1,1,1]}"#]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    let v = json(&out.stdout);
    let triangles = v["triangles"].as_array().unwrap();
    assert_eq!(triangles.len(), 3);
    for key in ["index", "r", "s", "t", "p", "rho", "area"] {
        assert!(triangles[0].get(key).is_some(), "missing {key}");
    }
    let diagonals = v["diagonals"].as_array().unwrap();
    assert_eq!(diagonals.len(), 2);
    for d in diagonals {
        let (a, b) = (d["from_left"].as_f64().unwrap(), d["from_right"].as_f64().unwrap());
        assert!((a - b).abs() < 1e-12);
    }
}

#[test]
fn solve_radius_right_triangle() {
    let out = cli(&["solve-radius", "--sides", "3,4,5"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    assert_eq!(out.stdout, "{\"radius\":2.5,\"center_inside\":true}\n");

    let out = cli(&["solve-radius", "--spec", r#"{"kind":"side_lengths","sides":[2,2,3.9]}"#]);
    let v = json(&out.stdout);
    assert_eq!(v["center_inside"], false);
}

#[test]
fn verify_regular_pentagon() {
    let out = cli(&["verify", "--spec", r#"{"kind":"side_lengths","sides":[1,1,1,1,1]}"#]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stdout);
    let v = json(&out.stdout);
    assert_eq!(v["pass"], true);
    assert!((v["area"].as_f64().unwrap() - 1.720_477_400_6).abs() < 1e-9);
    let identities = v["identities"].as_object().unwrap();
    assert_eq!(identities.len(), 15);
    for (name, record) in identities {
        for key in ["trials", "max_rel_err", "worst_seed", "pass"] {
            assert!(record.get(key).is_some(), "{name} lacks {key}");
        }
    }
}

#[test]
fn verify_fails_with_impossible_tolerance() {
    let out = cli(&[
        "verify",
        "--spec",
        r#"{"kind":"random","seed":2,"vertex_count":9,"radius":1}"#,
        "--tolerance",
        "incircle_area=0",
    ]);
    let v = json(&out.stdout);
    if v["identities"]["incircle_area"]["max_rel_err"].as_f64().unwrap() > 0.0 {
        assert_eq!(out.code, EXIT_INFEASIBLE);
        assert_eq!(v["pass"], false);
    }
}

#[test]
fn fuzz_small_grid() {
    let out = cli(&["fuzz", "--seed-count", "10", "--vertex-counts", "4,6"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stdout);
    let v = json(&out.stdout);
    assert_eq!(v["config"]["seed_count"], 10);
    assert_eq!(v["identities"]["oracle_equivalence"]["trials"], 20);
    assert_eq!(v["identities"]["brahmagupta"]["trials"], 10);
}

#[test]
fn fuzz_config_file() {
    let dir = std::env::temp_dir().join(format!("cyclic-area-fuzz-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("fuzz.json");
    std::fs::write(
        &path,
        r#"{"seed_start": 100, "seed_count": 5, "vertex_counts": [5], "near_degenerate": 1e-6,
            "tolerances": {"pair_product_form1": 1e-3}}"#,
    )
    .unwrap();
    let out = cli(&["fuzz", "--config", path.to_str().unwrap()]);
    let v = json(&out.stdout);
    assert_eq!(v["config"]["seed_start"], 100);
    assert_eq!(v["config"]["tolerances"]["pair_product_form1"].as_f64(), Some(1e-3));
    assert_eq!(
        v["identities"]["oracle_equivalence"]["worst_case"]["kind"],
        "central_angles"
    );
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn json_output_is_byte_stable() {
    let args = ["fuzz", "--seed-count", "25", "--vertex-counts", "3,5,8"];
    assert_eq!(cli(&args).stdout, cli(&args).stdout);
    let args = ["decompose", "--spec", r#"{"kind":"random","seed":1,"vertex_count":6,"radius":1}"#];
    assert_eq!(cli(&args).stdout, cli(&args).stdout);
}

#[test]
fn error_exit_codes() {
    let out = cli(&["solve-radius", "--sides", "1,1,3"]);
    assert_eq!(out.code, EXIT_INFEASIBLE);
    let diag = json(&out.stderr);
    assert_eq!(diag["error"], "infeasible_sides");
    assert!(out.stdout.is_empty());

    let out = cli(&["area", "--spec", r#"{"kind":"side_lengths","sides":[1,1,1],"seed":3}"#]);
    assert_eq!(out.code, EXIT_INFEASIBLE);
    assert_eq!(json(&out.stderr)["error"], "invalid_spec");

    let out = cli(&["area", "--input", "/nonexistent/spec.json"]);
    assert_eq!(out.code, EXIT_INFEASIBLE);

    let out = cli(&["--format", "text", "solve-radius", "--sides", "1,1,3"]);
    assert!(out.stderr.starts_with("error (infeasible_sides)"));
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(cli(&[]).code, EXIT_USAGE);
    assert_eq!(cli(&["area"]).code, EXIT_USAGE);
    assert_eq!(cli(&["bogus"]).code, EXIT_USAGE);
    assert_eq!(
        cli(&["area", "--spec", "{}", "--input", "x.json"]).code,
        EXIT_USAGE
    );
    assert_eq!(cli(&["verify", "--spec", "{}", "--tolerance", "nope=1"]).code, EXIT_USAGE);
    assert_eq!(cli(&["solve-radius"]).code, EXIT_USAGE);
    let help = cli(&["--help"]);
    assert_eq!(help.code, EXIT_OK);
    assert!(help.stdout.contains("solve-radius"));
}

#[test]
fn text_format() {
    let out = cli(&["--format", "text", "area", "--spec", r#"{"kind":"side_lengths","sides":[3,4,5]}"#]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.starts_with("area      6"), "{}", out.stdout);
    let out = cli(&["verify", "--format", "text", "--spec", r#"{"kind":"side_lengths","sides":[3,4,5]}"#]);
    assert!(out.stdout.trim_end().ends_with("PASS"), "{}", out.stdout);
}

#[test]
fn binary_exit_status_and_streams() {
    let exe = env!("CARGO_BIN_EXE_cyclic-area");
    let ok = Command::new(exe)
        .args(["solve-radius", "--sides", "1,1,1,1,1,1"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let v = json(std::str::from_utf8(&ok.stdout).unwrap());
    assert!((v["radius"].as_f64().unwrap() - 1.0).abs() < 1e-14);

    let bad = Command::new(exe).args(["solve-radius", "--sides", "1,2,3"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(1));
    assert!(bad.stdout.is_empty());
    assert!(!bad.stderr.is_empty());

    let usage = Command::new(exe).arg("frobnicate").output().unwrap();
    assert_eq!(usage.status.code(), Some(64));
}
