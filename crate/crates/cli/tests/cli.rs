use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn bethe(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bethe")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| {
        panic!("bad json ({e}): {}\n{}", String::from_utf8_lossy(&o.stdout), String::from_utf8_lossy(&o.stderr))
    })
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn verify_rtt_on_irreps_and_vermas() {
    for f in ["(1,0),(3,2)", "(2,0)", "M(1/3,-2/7;3),M(-5/2,3/2;3)", "D(1/2,0;3)"] {
        let o = bethe(&["verify-rtt", "--factors", f, "--samples", "4"]);
        assert_eq!(code(&o), 0, "{f}: {}", stderr(&o));
        let v = json(&o);
        assert_eq!(v["schema"], 1);
        assert_eq!(v["command"], "verify-rtt");
        assert_eq!(v["ok"], true);
        assert_eq!(v["qdet_central"], true);
        assert_eq!(v["config"]["samples"], 4);
        assert_eq!(v["rtt"]["samples"].as_array().unwrap().len(), 4);
    }
}

#[test]
fn same_seed_same_report() {
    let a = json(&bethe(&["verify-rtt", "--factors", "(1,0)", "--seed", "9"]));
    let b = json(&bethe(&["verify-rtt", "--factors", "(1,0)", "--seed", "9"]));
    assert_eq!(a, b);
}

#[test]
fn malformed_input_exits_two() {
    for args in [
        &["verify-rtt", "--factors", "(1,0"][..],
        &["verify-rtt", "--factors", "(1,x)"],
        &["verify-rtt", "--factors", "M(1,0)"],
        &["verify-rtt"],
        &["shapovalov", "--n", "2"],
        &["unitary", "--blocks", "(1,1)"],
        &["no-such-command"],
    ] {
        let o = bethe(args);
        assert_eq!(code(&o), 2, "{args:?}: {}", stderr(&o));
        assert!(o.stdout.is_empty());
    }
}

#[test]
fn shapovalov_cases() {
    let o = bethe(&["shapovalov", "--n", "2", "--m", "3"]);
    assert_eq!(code(&o), 0);
    let r = &json(&o)["result"];
    assert_eq!(r["match"], true);
    assert_eq!(r["degree_found"], 6);

    let r = &json(&bethe(&["shapovalov", "--n", "2", "--m", "1"]))["result"];
    assert_eq!(r["constant"], "-1");

    let o = bethe(&["shapovalov", "--n", "3", "--m", "3", "--mode", "interpolated"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let r = &json(&o)["result"];
    assert_eq!(r["match"], true);
    assert_eq!(r["degree_found"], 30);
    assert!(r["agreements"].as_u64().unwrap() >= 10);
}

#[test]
fn over_budget_exits_three() {
    let o = bethe(&["shapovalov", "--n", "3", "--m", "4"]);
    assert_eq!(code(&o), 3, "{}", stderr(&o));
    assert!(stderr(&o).contains("budget"));
}

#[test]
fn spectrum_scan_dim_four() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("flow.csv");
    let o = bethe(&["spectrum-scan", "--factors", "(1,0),(3,2)", "--csv", csv.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let v = json(&o);
    assert_eq!(v["points"], 11);
    assert_eq!(v["min_eigenlines"], 4);
    assert_eq!(v["max_eigenlines"], 4);
    let certs = v["certificates"].as_array().unwrap();
    assert_eq!(certs.len(), 11);
    assert!(certs.iter().all(|c| c["verdict"] == "simple" && c["closure_dim"] == 4));
    let table = std::fs::read_to_string(&csv).unwrap();
    assert!(table.lines().count() > 11);
}

#[test]
fn spectrum_scan_scalar_point_from_config() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("scan.json");
    std::fs::write(
        &cfg,
        r#"{
            "command": "spectrum-scan",
            "factors": [{"kind": "FiniteIrrep", "a": "1", "b": "0"}, {"kind": "FiniteIrrep", "a": "3", "b": "2"}],
            "grid": {"type": "points", "points": [["1", "1"]]}
        }"#,
    )
    .unwrap();
    let o = bethe(&["spectrum-scan", "--config", cfg.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let v = json(&o);
    assert_eq!(v["points"], 1);
    assert_eq!(v["certificates"][0]["verdict"], "simple");

    let wrong = dir.path().join("wrong.json");
    std::fs::write(&wrong, r#"{"command": "unitary", "blocks": [["3", "2"], ["1", "0"]]}"#).unwrap();
    assert_eq!(code(&bethe(&["spectrum-scan", "--config", wrong.to_str().unwrap()])), 2);
    let unknown = dir.path().join("unknown.json");
    std::fs::write(&unknown, r#"{"factorz": []}"#).unwrap();
    assert_eq!(code(&bethe(&["verify-rtt", "--config", unknown.to_str().unwrap()])), 2);
}

#[test]
fn overlapping_strings_warn() {
    let o = bethe(&["spectrum-scan", "--factors", "(1,0),(1,0)", "--count", "3"]);
    let v = json(&o);
    assert!(!v["warnings"].as_array().unwrap().is_empty());
    assert!(stderr(&o).contains("warning"));
    assert!(v["certificates"].is_null());
    assert_eq!(code(&o), 4);
}

#[test]
fn unitary_blocks() {
    for b in ["(3,2),(1,0)", "(1,0)", "(5,3),(2,0)"] {
        let o = bethe(&["unitary", "--blocks", b]);
        assert_eq!(code(&o), 0, "{b}: {}", stderr(&o));
        let v = json(&o);
        assert_eq!(v["ok"], true);
        assert_eq!(v["tau_rank"], v["expected_rank"]);
    }
    let o = bethe(&["unitary", "--blocks", "(2,1),(3,2)"]);
    assert_eq!(code(&o), 5);
    assert!(stderr(&o).contains("hypothesis violated"));
    assert_eq!(stderr(&o).matches("hypothesis violated").count(), 1);
}

#[test]
fn cyclic_truncated_vermas() {
    let o = bethe(&["cyclic", "--factors", "M(1/3,-2/7;3),M(-5/2,3/2;3)", "--c", "0,1,0,0"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let v = json(&o);
    assert_eq!(v["cyclic"], true);
    assert_eq!(v["module_dim"], 10);
    // a2 - b1 = 1: the highest-weight vector stops generating in grade 2
    let o = bethe(&["cyclic", "--factors", "M(1/2,-1;2),M(0,-3/5;2)", "--c", "0,1,0,0", "--grade", "2"]);
    let v = json(&o);
    assert_eq!(v["cyclic"], false);
    assert_eq!(v["krylov_dim"], 5);
    assert_eq!(code(&bethe(&["cyclic", "--factors", "M(1,0;2)", "--c", "0,1,0,0", "--grade", "3"])), 2);
}

#[test]
fn cyclic_at_limit_point() {
    let args = ["cyclic", "--factors", "(1,0),(3,2)", "--c", "1,0,0,1", "--y", "1,0,0"];
    let v = json(&bethe(&args));
    assert_eq!(v["highest_weight"]["krylov_dim"], 1);
    assert_eq!(v["cyclic"], false);
    let mut generic = args.to_vec();
    generic.extend(["--vector", "generic"]);
    let v = json(&bethe(&generic));
    assert_eq!(v["cyclic"], true);
    assert_eq!(v["krylov_dim"], 4);
    // scalar C needs the exceptional direction
    assert_eq!(code(&bethe(&args[..6])), 2);
}

fn no_temp_leftovers(dir: &Path, keep: &[&str]) {
    for e in std::fs::read_dir(dir).unwrap() {
        let name = e.unwrap().file_name().into_string().unwrap();
        assert!(keep.contains(&name.as_str()), "stray file {name}");
    }
}

#[test]
fn report_written_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let o = bethe(&["unitary", "--blocks", "(3,2),(1,0)", "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["config"]["blocks"][0][0], "3");
    no_temp_leftovers(dir.path(), &["report.json"]);
}
