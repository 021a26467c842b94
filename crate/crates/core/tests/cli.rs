use std::path::Path;
use std::process::{Command, Output};

fn bmres(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bmres"))
        .args(args)
        .output()
        .unwrap()
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_string()
}

fn path_json(n: usize) -> String {
    let edges: Vec<String> = (0..n - 1).map(|i| format!("[{},{}]", i, i + 1)).collect();
    format!(r#"{{"n":{n},"edges":[{}]}}"#, edges.join(","))
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn betti_of_p3_and_p7() {
    let dir = tempfile::tempdir().unwrap();
    let p3 = write(dir.path(), "p3.json", &path_json(3));
    let o = bmres(&["--json", "betti", "--graph", &p3]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(
        v["table"]["entries"],
        serde_json::json!([{"i":0,"j":0,"value":1},{"i":1,"j":2,"value":2},{"i":2,"j":3,"value":1}])
    );
    let p7 = write(dir.path(), "p7.txt", "7\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n");
    let o = bmres(&["betti", "--graph", &p7, "--oracle", "gf:32003,2"]);
    let s = stdout(&o);
    assert!(o.status.success(), "{s}");
    assert!(
        s.contains(r#"{"i":3,"j":6,"value":4}"#) && s.contains("oracle: AGREE"),
        "{s}"
    );
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.json", r#"{"n":2,"edges":[[0,5]]}"#);
    assert_eq!(bmres(&["betti", "--graph", &bad]).status.code(), Some(2));
    let g = write(dir.path(), "p3.json", &path_json(3));
    assert_eq!(
        bmres(&["betti", "--graph", &g, "--oracle", "gf:4"])
            .status
            .code(),
        Some(2)
    );
    let big = write(dir.path(), "p30.json", &path_json(30));
    assert_eq!(bmres(&["betti", "--graph", &big]).status.code(), Some(3));
    let out = dir.path().join("s.jsonl");
    let o = bmres(&["survey", "--max-n", "11", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn algorithm1_and_classify() {
    let dir = tempfile::tempdir().unwrap();
    let p4 = write(dir.path(), "p4.json", &path_json(4));
    let o = bmres(&["--json", "algorithm1", "--graph", &p4]);
    assert_eq!(stdout(&o).trim(), r#"{"sigma":[0,1],"v_sigma":[0,3]}"#);
    let o = bmres(&["classify", "--graph", &p4]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["generic"], true);
}

#[test]
fn bridge_friendly_search_and_order_file() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = write(dir.path(), "c5.txt", "5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    let o = bmres(&["--json", "bridge-friendly", "--graph", &c5, "--search"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert!(v["order"].is_array() || v["order"].is_null());
    let p3 = write(dir.path(), "p3.json", &path_json(3));
    let ord = write(dir.path(), "o.json", r#"{"order":[1,0]}"#);
    let o = bmres(&[
        "--json",
        "--order-file",
        &ord,
        "bridge-friendly",
        "--graph",
        &p3,
    ]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["order"], serde_json::json!([1, 0]));
    assert_eq!(v["bridge_friendly"], true);
}

#[test]
fn path_formulas_and_survey() {
    let o = bmres(&["--json", "path-formulas", "--n", "5"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert!(v["quotient"]["entries"]
        .as_array()
        .unwrap()
        .contains(&serde_json::json!({"i":2,"j":4,"value":3})));
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("s.jsonl");
    let o = bmres(&["survey", "--max-n", "7", "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&out).unwrap();
    assert_eq!(text.lines().count(), 26);
    let again = bmres(&["survey", "--max-n", "7", "--out", out.to_str().unwrap()]);
    assert!(stdout(&again).contains(r#""written":0,"skipped":25"#));
}

#[test]
fn verify_paper_passes() {
    let o = bmres(&["verify-paper"]);
    let s = stdout(&o);
    assert!(o.status.success(), "{s}");
    assert!(s.contains("720/720"));
    assert!(!s.contains("FAIL"));
}
