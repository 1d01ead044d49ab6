//! End-to-end checks of the command-line interface: JSON round-trips,
//! exit-code conventions and campaign artifact layout.

use std::io::Write;
use std::process::{Command, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hypertree-spectra"))
}

fn run_with_stdin(args: &[&str], stdin: &str) -> (String, String, i32) {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().unwrap(),
    )
}

#[test]
fn generate_then_verify_round_trip() {
    let out = bin()
        .args(["generate", "--kind", "loose_path", "--k", "3", "--m", "2"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let generated = String::from_utf8(out.stdout).unwrap();
    let v: serde_json::Value = serde_json::from_str(&generated).unwrap();
    assert_eq!(v["k"], 3);
    assert_eq!(v["n"], 5);

    let (stdout, _, code) = run_with_stdin(&["verify-multiplicity"], &generated);
    assert_eq!(code, 0);
    let report: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(report["predicted"], "9");
    assert_eq!(report["measured"], "9");
    assert_eq!(report["match"], true);
}

#[test]
fn matching_via_stdin() {
    let (stdout, _, code) = run_with_stdin(
        &["matching"],
        r#"{"k":3,"n":3,"edges":[[0,1,2]]}"#,
    );
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["counts"], serde_json::json!(["1", "1"]));
    assert_eq!(v["z_reduction"]["r"], 0);
}

#[test]
fn guard_trips_with_exit_code_2() {
    let (_, stderr, code) = run_with_stdin(
        &["charpoly", "--degree-guard", "10"],
        r#"{"k":3,"n":5,"edges":[[0,1,2],[2,3,4]]}"#,
    );
    assert_eq!(code, 2);
    assert!(stderr.contains("degree guard"));
}

#[test]
fn invalid_input_exits_3() {
    let (_, stderr, code) = run_with_stdin(&["spectrum"], r#"{"k":3,"n":3,"edges":[[0,1]]}"#);
    assert_eq!(code, 3);
    assert!(stderr.contains("edge size"));
}

#[test]
fn campaign_writes_artifacts_and_summary() {
    let dir = std::env::temp_dir().join(format!("hts-campaign-{}", std::process::id()));
    let spec = serde_json::json!({
        "output_dir": dir,
        "commands": ["matching", "spectral-radius"],
        "instances": [
            {"id": "edge", "kind": "single_edge", "k": 3},
            {"id": "star", "kind": "hyperstar", "k": 3, "m": 2}
        ]
    });
    let spec_path = dir.with_extension("json");
    std::fs::write(&spec_path, serde_json::to_string(&spec).unwrap()).unwrap();
    let out = bin().arg("campaign").arg(&spec_path).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let summary: serde_json::Value =
        serde_json::from_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(summary["passed"], 4);
    assert_eq!(summary["failed"], 0);
    for name in [
        "edge__matching.json",
        "edge__spectral-radius.json",
        "star__matching.json",
        "star__spectral-radius.json",
    ] {
        assert!(dir.join(name).is_file(), "missing artifact {name}");
    }
    std::fs::remove_dir_all(&dir).ok();
    std::fs::remove_file(&spec_path).ok();
}
