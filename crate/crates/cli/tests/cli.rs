use std::path::Path;
use std::process::{Command, Output};

use aybe_core::builders::{build_r_st_quantum, hat_r, build_r_ts, MatrixDoc};
use aybe_core::bd::{cg_triple, compatible_permutations, s0_from_structure};
use aybe_core::tensor::Tensor2;
use aybe_core::verify::u_coefficients;
use serde_json::Value;

fn aybe(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_aybe")).args(args).env_remove("AYBE_OUTPUT_DIR").output().expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

const REVERSING: &str = r#"{"n":5,"gamma1":[1,2],"gamma2":[3,4],"t_map":[[1,4],[2,3]]}"#;

#[test]
fn enumerate_examples() {
    let v = json_of(&aybe(&["enumerate", "--n", "3", "--filter", "cg"]));
    assert_eq!(v["count"], 2);
    let v = json_of(&aybe(&["enumerate", "--n", "2", "--filter", "all"]));
    assert_eq!(v["count"], 1);
    assert_eq!(v["triples"][0]["compatible_permutations"], 1);
    assert_eq!(v["triples"][0]["associative"], true);
    let v = json_of(&aybe(&["enumerate", "--n", "5"]));
    let rev = v["triples"]
        .as_array()
        .unwrap()
        .iter()
        .find(|t| t["structure"]["t_map"] == serde_json::json!([[1, 4], [2, 3]]))
        .expect("reversing triple listed");
    assert_eq!(rev["associative"], false);
    assert_eq!(rev["orientation_preserving"], false);
    assert_eq!(rev["valid"], true);
    let v = json_of(&aybe(&["enumerate", "--n", "4", "--filter", "associative"]));
    assert_eq!(v["count"], 9);
}

#[test]
fn enumerate_matches_committed_oracle() {
    let fixture: Value = serde_json::from_str(include_str!("fixtures/enumeration_oracle.json")).unwrap();
    for n in 2..=5 {
        let first = aybe(&["enumerate", "--n", &n.to_string()]);
        let again = aybe(&["enumerate", "--n", &n.to_string()]);
        assert_eq!(first.stdout, again.stdout);
        let v = json_of(&first);
        let rows = v["triples"].as_array().unwrap();
        let expect = &fixture[n.to_string()];
        assert_eq!(rows.len() as u64, expect["triples"].as_u64().unwrap());
        let cycles: u64 = rows.iter().map(|t| t["compatible_permutations"].as_u64().unwrap()).sum();
        assert_eq!(cycles, expect["n_cycles_compatible"].as_u64().unwrap());
        let assoc = rows.iter().filter(|t| t["associative"] == true).count() as u64;
        assert_eq!(assoc, expect["with_cycle"].as_u64().unwrap());
    }
}

#[test]
fn enumerate_bound_exceeded_exits_2() {
    let out = aybe(&["enumerate", "--n", "9"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("bound"));
    assert_eq!(code(&aybe(&["enumerate", "--n", "9", "--filter", "cg"])), 0);
}

#[test]
fn build_ruv_has_identity_pole() {
    let out = aybe(&["build", "--n", "3", "--cg", "1", "--target", "ruv"]);
    assert_eq!(code(&out), 0);
    let doc: MatrixDoc = serde_json::from_slice(&out.stdout).unwrap();
    let m = doc.to_matrix().unwrap();
    let c = u_coefficients(&m, 0).unwrap();
    assert_eq!(c[0], Tensor2::identity(3));
    let a = compatible_permutations(&cg_triple(3, 1).unwrap()).remove(0);
    let hat = hat_r(&build_r_ts(a.triple(), &s0_from_structure(&a)).unwrap().tensor);
    assert_eq!(&c[1], hat.tensor());
    let prov = doc.provenance.unwrap();
    assert_eq!(prov.structure.tilde_t, Some(vec![2, 3, 1]));
    assert_eq!(prov.s, vec!["1/6", "-1/6", "1/6"]);
}

#[test]
fn build_ggs_n2_is_standard() {
    let out = aybe(&["build", "--n", "2", "--trivial", "--perm", "2,1", "--target", "ggs"]);
    let doc: MatrixDoc = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc.to_matrix().unwrap(), build_r_st_quantum(2));
    let text = aybe(&["build", "--n", "2", "--trivial", "--target", "ggs", "--format", "text"]);
    let s = String::from_utf8(text.stdout).unwrap();
    assert!(s.contains("t_{11}^{11} = X1^2"), "{s}");
}

#[test]
fn build_on_reversing_triple_exits_2_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rev.json");
    std::fs::write(&path, REVERSING).unwrap();
    let out = aybe(&["build", "--n", "5", "--triple-file", path.to_str().unwrap(), "--target", "ruv"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("(3,3,4|1,4,5)=1"));
    // The classical matrix still exists.
    let out = aybe(&["build", "--n", "5", "--triple-file", path.to_str().unwrap(), "--target", "classical"]);
    assert_eq!(code(&out), 0);
}

#[test]
fn selector_errors_exit_2() {
    assert_eq!(code(&aybe(&["build", "--n", "3", "--trivial", "--target", "ruv"])), 2);
    assert_eq!(code(&aybe(&["build", "--n", "4", "--cg", "2", "--target", "ruv"])), 2);
    assert_eq!(code(&aybe(&["build", "--n", "3", "--cg", "1", "--target", "ruv", "--s", "s0+phi:1,0,0"])), 2);
    assert_eq!(code(&aybe(&["verify", "--n", "3", "--suite", "nope"])), 2);
    assert_eq!(code(&aybe(&["build", "--n", "3"])), 2);
}

#[test]
fn build_with_gauge() {
    // Φ = diag(1, 1, 1) is always admissible and leaves s unchanged.
    let out = aybe(&["build", "--n", "3", "--cg", "1", "--target", "ruv", "--s", "s0+phi:1,1,1"]);
    assert_eq!(code(&out), 0);
    let base = aybe(&["build", "--n", "3", "--cg", "1", "--target", "ruv"]);
    let a: MatrixDoc = serde_json::from_slice(&out.stdout).unwrap();
    let b: MatrixDoc = serde_json::from_slice(&base.stdout).unwrap();
    assert_eq!(a.to_matrix().unwrap(), b.to_matrix().unwrap());
}

#[test]
fn verify_symbolic_n3_passes() {
    let out = aybe(&["verify", "--n", "3", "--mode", "symbolic", "--suite", "all"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let v = json_of(&out);
    assert_eq!(v["summary"]["failed"], 0);
    let ids: Vec<&str> = v["reports"].as_array().unwrap().iter().map(|r| r["report"]["identity"].as_str().unwrap()).collect();
    for id in ["cybe", "qybe", "hecke", "aybe", "unitarity", "lift", "r01", "pr-limit", "rRc", "cab", "ps", "cross-formula"] {
        assert!(ids.contains(&id), "{id}");
    }
}

#[test]
fn verify_cab_nonassociative_exits_1() {
    let out = aybe(&["verify", "--n", "5", "--suite", "cab", "--include-nonassociative"]);
    assert_eq!(code(&out), 1);
    let v = json_of(&out);
    let failed: Vec<&Value> = v["reports"].as_array().unwrap().iter().filter(|r| r["report"]["result"] == "fail").collect();
    assert_eq!(failed.len(), 2);
    for f in failed {
        assert!(f["report"]["witness"]["index"].is_array());
    }
    assert_eq!(code(&aybe(&["verify", "--n", "5", "--suite", "cab"])), 0);
}

#[test]
fn numeric_verify_is_reproducible() {
    let args = ["verify", "--n", "6", "--cg", "1", "--mode", "numeric", "--suite", "aybe,unitarity", "--samples", "20", "--seed", "7"];
    let a = aybe(&args);
    let b = aybe(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let v = json_of(&a);
    assert_eq!(v["reports"][0]["report"]["samples"], 20);
    assert!(v["reports"][0]["report"]["max_abs_residual"].as_f64().unwrap() < 1e-9);
}

fn verify_file(path: &Path) -> Output {
    aybe(&["verify", "--input", path.to_str().unwrap(), "--suite", "aybe,unitarity,lift"])
}

#[test]
fn build_then_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let out = aybe(&["build", "--n", "3", "--cg", "2", "--target", "ruv", "--output", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let a = verify_file(&path);
    let b = verify_file(&path);
    assert_eq!(code(&a), 0, "{}", String::from_utf8_lossy(&a.stderr));
    assert_eq!(a.stdout, b.stdout);
    // The same reports as verifying the structure directly.
    let direct = json_of(&aybe(&["verify", "--n", "3", "--cg", "2", "--suite", "aybe,unitarity,lift"]));
    let from_file = json_of(&a);
    let reports = |v: &Value| v["reports"].as_array().unwrap().iter().map(|r| r["report"].clone()).collect::<Vec<_>>();
    assert_eq!(reports(&direct), reports(&from_file));
}

#[test]
fn output_dir_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_aybe"))
        .args(["enumerate", "--n", "3", "--filter", "cg"])
        .env("AYBE_OUTPUT_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(dir.path().join("enumerate-n3-cg.json")).unwrap();
    assert!(written.contains("\"count\": 2"));
}
