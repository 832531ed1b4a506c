use std::process::{Command, Output};

use birdtrack::epsilon::TransientParams;
use birdtrack::singlets::{singlet_basis, BasisSource, SingletOperator};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_birdtrack"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn stderr_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stderr).expect("stderr is JSON")
}

#[test]
fn transient_baryon_record() {
    let v = json(&["transient", "--m", "3", "--n", "0", "--N", "3"]);
    assert_eq!(v["schema"], "1");
    let params: Vec<TransientParams> = serde_json::from_value(v["params"].clone()).unwrap();
    assert_eq!(params, vec![TransientParams { a: 1, b: 0, k: 0, alpha: 2 }]);
}

#[test]
fn eval_counts_one_singlet_at_n_one() {
    let v = json(&["eval", "--k", "2", "--N", "1", "--source", "trace"]);
    assert_eq!(v["singlet_count"], 1);
}

#[test]
fn singlet_table_has_projectors_and_transitions() {
    let v = json(&["singlets", "--k", "3", "--source", "builtin"]);
    assert_eq!(v["projectors"], 6);
    assert_eq!(v["transitions"], 30);
    let ops = v["operators"].as_array().unwrap();
    assert_eq!(ops.len(), 36);
    let basis = singlet_basis(3, BasisSource::Builtin).unwrap();
    for op in ops {
        let parsed: SingletOperator = serde_json::from_value(op["operator"].clone()).unwrap();
        let (i, j) = (op["row"].as_u64().unwrap() as usize, op["col"].as_u64().unwrap() as usize);
        if i == j {
            assert_eq!(parsed.ket, basis[i].ket);
            assert_eq!(parsed.normalization, basis[i].normalization);
        }
        // round trip
        assert_eq!(serde_json::to_value(&parsed).unwrap(), op["operator"]);
    }
}

#[test]
fn latex_table_carries_chi_constants() {
    let out = run(&["singlets", "--k", "3", "--source", "builtin", "--format", "latex"]);
    assert!(out.status.success());
    let tex = String::from_utf8(out.stdout).unwrap();
    assert!(tex.contains("\\begin{array}{cccccc}"));
    assert!(tex.contains("\\chi_{1} = \\frac{6}{N^{3} + 3N^{2} + 2N}"));
    assert!(tex.contains("\\chi_{6} = \\frac{6}{N^{3} - 3N^{2} + 2N}"));
    assert_eq!(tex.matches("T_{").count(), 30);
}

#[test]
fn outputs_are_deterministic() {
    for args in [
        &["correlator", "--k", "2", "--N", "3", "--seed", "5"][..],
        &["gram", "--k", "3", "--source", "trace", "--N", "2"][..],
        &["trace-basis", "--k", "3", "--format", "text"][..],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
}

#[test]
fn json_artifacts_round_trip() {
    for args in [
        &["basis", "--k", "2"][..],
        &["gram", "--k", "3"][..],
        &["trace-basis", "--k", "2"][..],
        &["lr", "--m", "2", "--n", "1", "--N", "3"][..],
        &["correlator", "--k", "1", "--N", "2"][..],
    ] {
        let out = run(args);
        assert!(out.status.success(), "{args:?}");
        let v: Value = serde_json::from_slice(&out.stdout).unwrap();
        let again: Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
        assert_eq!(v, again);
        assert_eq!(v["schema"], "1");
    }
}

#[test]
fn gram_rank_drops_at_two() {
    let v = json(&["gram", "--k", "3", "--source", "trace", "--N", "2"]);
    assert_eq!(v["rank"], 5);
    assert_eq!(v["gram"][4][5], "-3/1");
}

#[test]
fn lr_dimension_sum() {
    let v = json(&["lr", "--m", "1", "--n", "1", "--N", "4"]);
    assert_eq!(v["total_dimension"], "16/1");
    assert_eq!(v["shapes"].as_array().unwrap().len(), 2);
}

#[test]
fn config_errors_exit_two_with_json() {
    for args in [
        &["basis", "--k", "4", "--source", "builtin"][..],
        &["basis", "--k", "0"][..],
        &["transient", "--m", "3", "--n", "0", "--N", "1"][..],
        &["basis", "--k", "2", "--source", "nonsense"][..],
        &["frobnicate"][..],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert_eq!(stderr_json(&out)["error"]["kind"], "config", "{args:?}");
    }
}

#[test]
fn thread_cap_is_validated() {
    let out = Command::new(env!("CARGO_BIN_EXE_birdtrack"))
        .args(["transient", "--m", "3", "--n", "0", "--N", "3"])
        .env("BIRDTRACK_THREADS", "0")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_birdtrack"))
        .args(["eval", "--k", "3", "--N", "2"])
        .env("BIRDTRACK_THREADS", "1")
        .output()
        .unwrap();
    assert!(out.status.success());
}

#[test]
fn verify_passes_and_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("verify.json");
    let out = run(&["verify", "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["failed"], 0);
    assert_eq!(v["passed"], v["checks"].as_array().unwrap().len());
}
