//! End-to-end tests of the `helix` binary.

use std::collections::BTreeMap;
use std::path::Path;
use std::process::{Command, Output};

fn helix(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_helix"))
        .args(args)
        .env_remove("HELIX_CAPACITY")
        .output()
        .expect("binary must run")
}

fn stdout_json(output: &Output) -> serde_json::Value {
    assert!(output.status.success(), "stderr: {}", String::from_utf8_lossy(&output.stderr));
    serde_json::from_slice(&output.stdout).expect("stdout must be JSON")
}

#[test]
fn enumerate_emits_one_record_per_loop() {
    let out = helix(&["enumerate", "--max-length", "4"]);
    assert!(out.status.success());
    let lines: Vec<&str> = std::str::from_utf8(&out.stdout).unwrap().trim().lines().collect();
    assert_eq!(lines.len(), 7);
    for line in lines {
        let rec: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(rec["schema"], 1);
        assert!(rec["length"] == 3 || rec["length"] == 4);
    }
    let out = helix(&["enumerate", "--max-length", "3"]);
    assert_eq!(std::str::from_utf8(&out.stdout).unwrap().trim().lines().count(), 4);
}

#[test]
fn index_of_synthetic_diagrams() {
    let rec = stdout_json(&helix(&["index", "--synthetic", "3", "2"]));
    assert_eq!(rec["result"], "index");
    assert_eq!(rec["n"], 2);
    assert_eq!(rec["core"]["matching"].as_array().unwrap().len(), 2);

    let rec = stdout_json(&helix(&["index", "--synthetic", "5", "4"]));
    assert_eq!(rec["result"], "not_minimal");
    assert!(rec.get("n").is_none());
}

#[test]
fn index_of_a_triangle_is_zero() {
    let rec = stdout_json(&helix(&["index", "3-0"]));
    assert_eq!(rec["result"], "index");
    assert_eq!(rec["n"], 0);
    assert_eq!(rec["homology"]["empty"], true);
}

#[test]
fn chords_and_render_of_a_spiral() {
    let rec = stdout_json(&helix(&["chords", "12-0"]));
    assert_eq!(rec["k"], 3);
    assert_eq!(rec["offset"], 2);
    assert_eq!(rec["V"].as_array().unwrap().len(), 3);
    assert_eq!(rec["W"].as_array().unwrap().len(), 3);

    let out = helix(&["render", "--synthetic", "3", "2"]);
    assert!(out.status.success());
    let svg = String::from_utf8(out.stdout).unwrap();
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg.matches("<line").count(), 6);

    let out = helix(&["render", "--synthetic", "3", "2", "--format", "dot"]);
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("graph compatibility {"));
}

#[test]
fn complex_formats() {
    let rec = stdout_json(&helix(&["complex", "--synthetic", "3", "2"]));
    assert_eq!(rec["labels"].as_array().unwrap().len(), 6);
    assert_eq!(rec["edges"].as_array().unwrap().len(), 8);
    assert_eq!(rec["simplices"].as_array().unwrap().len(), 16);

    let out = helix(&["complex", "--synthetic", "3", "2", "--format", "dot"]);
    let dot = String::from_utf8(out.stdout).unwrap();
    assert!(dot.contains("graph compatibility {"));
    assert!(dot.contains("--"));
}

#[test]
fn bad_inputs_fail_cleanly() {
    let out = helix(&["classify", "monkey"]);
    assert_eq!(out.status.code(), Some(2));
    let out = helix(&["chords", "3-0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
    let out = helix(&["index", "--synthetic", "5", "9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn capacity_env_var_bounds_the_work() {
    let out = Command::new(env!("CARGO_BIN_EXE_helix"))
        .args(["index", "--synthetic", "3", "2"])
        .env("HELIX_CAPACITY", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));

    let out = Command::new(env!("CARGO_BIN_EXE_helix"))
        .args(["index", "--synthetic", "3", "2"])
        .env("HELIX_CAPACITY", "pony")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

fn read_tree(dir: &Path) -> BTreeMap<String, Vec<u8>> {
    let mut files = BTreeMap::new();
    let mut stack = vec![dir.to_path_buf()];
    while let Some(d) = stack.pop() {
        for entry in std::fs::read_dir(&d).unwrap() {
            let path = entry.unwrap().path();
            if path.is_dir() {
                stack.push(path);
            } else {
                let rel = path.strip_prefix(dir).unwrap().to_string_lossy().into_owned();
                files.insert(rel, std::fs::read(&path).unwrap());
            }
        }
    }
    files
}

#[test]
fn verify_bundles_are_byte_identical() {
    let base = std::env::temp_dir().join(format!("helix-cli-test-{}", std::process::id()));
    let (dir1, dir2) = (base.join("one"), base.join("two"));
    for dir in [&dir1, &dir2] {
        let out = helix(&["verify", "--max-length", "12", "--out", dir.to_str().unwrap()]);
        assert!(
            out.status.success(),
            "verify failed: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(report["passed"], true);
        assert_eq!(report["checks"].as_array().unwrap().len(), 9);
    }
    assert_eq!(read_tree(&dir1), read_tree(&dir2), "bundles must be byte-identical");
    std::fs::remove_dir_all(&base).ok();
}
