use std::process::Command;

fn staircase() -> Command {
    Command::new(env!("CARGO_BIN_EXE_staircase"))
}

fn run(args: &[&str]) -> (i32, String) {
    let out = staircase().args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn tangent_of_named_ideals() {
    let (code, out) = run(&["tangent", "x,y,z"]);
    assert_eq!(code, 0);
    assert!(out.contains("total   3") && out.contains("smooth  yes"));
    let (code, out) = run(&["tangent", "--ed", "16"]);
    assert_eq!(code, 0);
    assert!(out.contains("total   84"));
    let (_, out) = run(&["tangent", "--fat", "3", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["total"], 60);
    assert_eq!(v["smooth"], false);
    let (code, out) = run(&["tangent", "--cx", "3", "2", "--oracle", "--prime", "3", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["oracle"]["agrees"], true);
}

#[test]
fn tangent_from_file_and_errors() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ideal.txt");
    std::fs::write(&path, "x^2, y, z\n").unwrap();
    let (code, out) = run(&["tangent", "--file", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("d       2"));
    assert_eq!(run(&["tangent", "x^"]).0, 2);
    assert_eq!(run(&["tangent", "x*y, z"]).0, 3);
    assert_eq!(run(&["tangent", "--prime", "9", "--oracle", "x,y,z"]).0, 1);
}

#[test]
fn census_writes_files() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("c.csv");
    let out = staircase()
        .args(["census", "--d", "10", "--csv", csv.to_str().unwrap()])
        .env("STAIRCASE_WORKERS", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let summary = String::from_utf8(out.stdout).unwrap();
    assert!(summary.contains("max total 60"));
    let text = std::fs::read_to_string(&csv).unwrap();
    assert!(text.starts_with("ideal,d,total,ppn,pnp,npp,pnn,npn,nnp,socle,min_x_power,flags\n"));
    let rows = text.lines().count() - 1;
    assert!(summary.starts_with(&format!("count {rows} ")));

    let jsonl = dir.path().join("c.jsonl");
    let (code, _) = run(&["census", "--d", "6", "--filter-xpow", "1", "--jsonl", jsonl.to_str().unwrap()]);
    assert_eq!(code, 0);
    for line in std::fs::read_to_string(&jsonl).unwrap().lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(v["min_x_power"].as_u64().unwrap() > 1);
    }
}

#[test]
fn census_guards() {
    assert_eq!(run(&["census", "--d", "61"]).0, 1);
    assert_eq!(run(&["census", "--d", "5", "--csv", "/nonexistent/dir/x.csv"]).0, 5);
    assert_eq!(run(&["census", "--d", "5", "--csv", "a", "--jsonl", "b"]).0, 2);
}

#[test]
fn verify_passes_and_mutation_fails() {
    let (code, out) = run(&["verify", "--d-max", "6"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.lines().all(|l| !l.starts_with("FAIL")));
    let (code, out) = run(&["verify", "--d-max", "4", "--mutate"]);
    assert_eq!(code, 1);
    assert!(out.contains("FAIL"));
    let (code, out) = run(&["verify", "--d-max", "5", "--oracle", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(v["rows"].as_array().unwrap().iter().any(|r| r["statement"].as_str().unwrap().starts_with("oracle")));
}

#[test]
fn counterexample_and_formulas() {
    let (code, out) = run(&["counterexample", "--r", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("total 84  socle 77  non-socle 7"));
    let (code, _) = run(&["counterexample", "--r", "5", "--i", "3"]);
    assert_eq!(code, 0);
    assert_eq!(run(&["counterexample", "--r", "2"]).0, 1);
    let (code, out) = run(&["formulas", "--r", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("m^3: total 60"));
    assert!(out.contains("E(16): total 84"));
}
