use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn corpus(file: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus").join(file).to_string_lossy().into_owned()
}

fn tightcomp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tightcomp")).args(args).env_remove("TIGHTCOMP_CAP").output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is json")
}

#[test]
fn dm_on_antichain_has_four_cuts() {
    let out = tightcomp(&["dm", &corpus("antichain2.json")]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["kind"], "dm");
    assert_eq!(v["count"], 4);
    assert_eq!(v["cuts"].as_array().unwrap().len(), 4);
}

#[test]
fn output_is_sorted_and_deterministic() {
    let a = tightcomp(&["cuts-enum", &corpus("diamond.json"), "--cap", "1"]);
    let b = tightcomp(&["cuts-enum", &corpus("diamond.json"), "--cap", "1"]);
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    let keys: Vec<usize> = ["\"cap\"", "\"count\"", "\"cuts\"", "\"kind\"", "\"status\""]
        .iter()
        .map(|k| text.rfind(&format!("\n  {k}")).expect(k))
        .collect();
    assert!(keys.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn malformed_category_exits_one() {
    let out = tightcomp(&["validate", &corpus("malformed.json")]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["error"], "MissingComposite");
}

#[test]
fn usage_and_parse_errors_exit_two() {
    assert_eq!(tightcomp(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(tightcomp(&["dm"]).status.code(), Some(2));
    let out = tightcomp(&["dm", &corpus("does_not_exist.json")]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["error"], "UnknownReference");
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"kind\": \"poset\", ").unwrap();
    let out = tightcomp(&["dm", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["error"], "ParseError");
}

#[test]
fn size_limit_exits_two() {
    let out = Command::new(env!("CARGO_BIN_EXE_tightcomp"))
        .args(["z4-demo"])
        .env("TIGHTCOMP_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["error"], "SizeLimit");
}

#[test]
fn workspace_references_resolve() {
    let out = tightcomp(&["tight-colim", &format!("{}#tight_b", corpus("arrow.json"))]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["result"]["object"], "b");
    assert_eq!(v["result"], v["via_split"]);
    let out = tightcomp(&["lan", &format!("{}#nothing", corpus("arrow.json"))]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn z4_demo_table() {
    let out = tightcomp(&["z4-demo"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let rows = v["free"].as_array().unwrap();
    for (n, row) in rows.iter().enumerate() {
        let n = n as u32 + 1;
        assert_eq!(row["lan_size"], 4u64.pow(n));
        assert_eq!(row["lan_orbits"], 4u64.pow(n - 1));
    }
}

#[test]
fn text_format() {
    let out = tightcomp(&["dm", &corpus("antichain2.json"), "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l == "count: 4"));
}

#[test]
fn broken_golden_file_is_named() {
    let dir = tempfile::tempdir().unwrap();
    let src = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus");
    std::fs::create_dir(dir.path().join("expected")).unwrap();
    for entry in std::fs::read_dir(&src).unwrap() {
        let p = entry.unwrap().path();
        if p.is_file() {
            std::fs::copy(&p, dir.path().join(p.file_name().unwrap())).unwrap();
        }
    }
    for entry in std::fs::read_dir(src.join("expected")).unwrap() {
        let p = entry.unwrap().path();
        std::fs::copy(&p, dir.path().join("expected").join(p.file_name().unwrap())).unwrap();
    }
    let ok = tightcomp(&["corpus-verify", "--golden-only", "--corpus", dir.path().to_str().unwrap()]);
    assert_eq!(ok.status.code(), Some(0));
    let target = dir.path().join("expected/dm_antichain2.json");
    let text = std::fs::read_to_string(&target).unwrap().replace("\"count\": 4", "\"count\": 5");
    std::fs::write(&target, text).unwrap();
    let out = tightcomp(&["corpus-verify", "--golden-only", "--corpus", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    let failed: Vec<&str> = v["golden"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|g| g["pass"] == false)
        .map(|g| g["name"].as_str().unwrap())
        .collect();
    assert_eq!(failed, vec!["dm_antichain2"]);
}
