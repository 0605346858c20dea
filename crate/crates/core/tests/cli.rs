use std::process::Command;

fn twdp(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_twdp")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

const TRIANGLES: &str = "p grl 5 6\npr sfvs\ne 1 2\ne 2 3\ne 3 1\ne 3 4\ne 4 5\ne 5 3\nvs 1\nvs 5\n";

#[test]
fn solve_reports_optimum_and_budget_status() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.grl");
    std::fs::write(&path, TRIANGLES).unwrap();
    let p = path.to_str().unwrap();

    let (code, text) = twdp(&["solve", "--graph", p]);
    assert_eq!(code, 0);
    assert!(text.contains("status: optimal"), "{text}");
    assert!(text.contains("deletion_set: 3"), "{text}");

    let (code, text) = twdp(&["solve", "--graph", p, "--budget", "0", "--json"]);
    assert_eq!(code, 1);
    let record: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(record["status"], "budget-exceeded");
    assert_eq!(record["optimum_weight"], 1);
}

#[test]
fn malformed_input_exits_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.grl");
    std::fs::write(&path, "p grl 2 1\ne 1 3\n").unwrap();
    let (code, _) = twdp(&["solve", "--graph", path.to_str().unwrap(), "--problem", "soct"]);
    assert_eq!(code, 2);
    assert_eq!(twdp(&["frobnicate"]).0, 2);
}

#[test]
fn generated_instances_verify() {
    let dir = tempfile::tempdir().unwrap();
    let prefix = dir.path().join("g");
    let prefix = prefix.to_str().unwrap();
    let (code, _) = twdp(&["generate", "--problem", "soct", "--k", "2", "--edges", "2", "--seed", "1", "--plant", "--out", prefix]);
    assert_eq!(code, 0);
    let graph = format!("{prefix}.grl");
    let (code, text) = twdp(&["verify", "--graph", &graph, "--td", &format!("{prefix}.td")]);
    assert_eq!(code, 0, "{text}");
    let meta: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(format!("{prefix}.meta.json")).unwrap()).unwrap();
    assert_eq!(meta["meta"]["budget"], 8);
}
