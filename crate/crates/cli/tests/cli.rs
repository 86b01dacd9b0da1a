use std::path::Path;
use std::process::{Command, Output};

const KSTAR: &str = "1 2 2 1 1 2 2 1 1 -2 -2 -2";

fn run(args: &[&str], cache: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_knotbound"));
    cmd.args(args).env_remove("KNOTBOUND_CACHE");
    if let Some(dir) = cache {
        cmd.env("KNOTBOUND_CACHE", dir);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

#[test]
fn homfly_of_kstar() {
    let o = run(&["invariants", KSTAR, "--strands", "3", "--homfly"], None);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("a^8 (-q^4 - 1 - q^-4) + a^6 (q^6 + q^2 + q^-2 + q^-6)"));
}

#[test]
fn unknot_everything() {
    let o = run(&["invariants", "1", "--strands", "2", "--all", "--json"], None);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["khovanov"], serde_json::json!([[0, 0, 1]]));
    assert_eq!(v["signature"], 0);
    assert_eq!(v["determinant"], 1);
    assert_eq!(v["homfly"]["terms"], serde_json::json!([[0, 0, 1]]));
}

#[test]
fn exit_codes() {
    assert_eq!(code(&run(&["invariants", "3", "--strands", "3"], None)), 2);
    assert_eq!(code(&run(&["invariants", "x", "--strands", "2"], None)), 2);
    assert_eq!(code(&run(&["invariants", "1 1", "--strands", "3", "--seifert"], None)), 3);
    assert_eq!(code(&run(&["family", "bm", "--x", "1"], None)), 2);
    assert_eq!(code(&run(&["family", "kstar", "--label", "0+"], None)), 2);
    assert_eq!(code(&run(&["bounds", "", "--strands", "1"], None)), 0);
    assert_eq!(code(&run(&["cache", "list"], None)), 3);
    assert_eq!(code(&run(&["no-such-verb"], None)), 2);
}

#[test]
fn family_outputs() {
    let o = run(&["family", "elrifai-k", "--k", "1", "--emit", "word"], None);
    assert_eq!(stdout(&o).trim(), KSTAR);
    let o = run(&["family", "bm", "--x", "1", "--y", "1", "--z", "1", "--w", "1", "--emit", "bounds", "--json"], None);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!((v["b_d"].as_i64(), v["w_d"].as_i64()), (Some(4), Some(8)));
    let o = run(&["family", "torus2", "--q", "7", "--emit", "bounds", "--json"], None);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["mfw_bound"], 2);
    assert_eq!((v["mfw_sharp_lower"].as_bool(), v["mfw_sharp_upper"].as_bool()), (Some(true), Some(true)));
}

#[test]
fn kr_bounds_with_supplied_deltas() {
    let o = run(&["bounds", KSTAR, "--strands", "3", "--delta-minus", "4", "--delta-plus", "8", "--json"], None);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["kr_bound"], 3);
    assert_eq!(v["mfw_bound"], 2);
    assert_eq!(v["kr_sharp_lower"], true);
    assert_eq!(v["kr_sharp_upper"], true);
}

#[test]
fn verify_sections() {
    for s in ["1", "3", "4"] {
        let o = run(&["verify-paper", "--section", s], None);
        assert_eq!(code(&o), 0, "section {s}: {}", stdout(&o));
        assert!(!stdout(&o).contains("[FAIL]"));
    }
    // the K0 signature row is the one red claim
    let o = run(&["verify-paper", "--section", "2", "--json"], None);
    assert_eq!(code(&o), 1);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let red: Vec<&str> = v["claims"].as_array().unwrap().iter().filter(|c| c["passed"] == false).map(|c| c["id"].as_str().unwrap()).collect();
    assert_eq!(red, ["table-0"]);
}

#[test]
fn json_is_deterministic_and_cache_is_transparent() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["invariants", "1 -2 1 -2", "--strands", "3", "--all", "--json"];
    let cold = run(&args, None);
    let first = run(&args, Some(dir.path()));
    let hit = run(&args, Some(dir.path()));
    assert_eq!(code(&cold), 0);
    assert_eq!(cold.stdout, first.stdout);
    assert_eq!(first.stdout, hit.stdout);
    let list = run(&["cache", "list"], Some(dir.path()));
    assert_eq!(stdout(&list).lines().count(), 1);
    // a rotated word has the same closure key
    let o = run(&["cache", "get", "-2 1 -2 1", "--strands", "3"], Some(dir.path()));
    assert_eq!(code(&o), 0);
    assert_eq!(code(&run(&["cache", "get", "1 1 1", "--strands", "2"], Some(dir.path()))), 1);
}

#[test]
fn corrupted_cache_lines_are_skipped() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("invariants.jsonl"), "{broken\n").unwrap();
    let o = run(&["invariants", "1 1 1", "--strands", "2", "--seifert"], Some(dir.path()));
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8_lossy(&o.stderr).contains("skipped"));
    assert!(stdout(&o).contains("determinant  3"));
    assert_eq!(code(&run(&["cache", "clear"], Some(dir.path()))), 0);
}

#[test]
fn planar_diagram_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["pd", "1 1 1", "--strands", "2"], None);
    assert_eq!(code(&o), 0);
    let file = dir.path().join("trefoil.pd");
    std::fs::write(&file, stdout(&o)).unwrap();
    let o = run(&["pd", "--file", file.to_str().unwrap()], None);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("q^2+q^6t^2+q^8t^3"));
    std::fs::write(&file, "X 1 2 3\n").unwrap();
    assert_eq!(code(&run(&["pd", "--file", file.to_str().unwrap()], None)), 2);
}
