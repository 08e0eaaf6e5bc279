use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn hurwitz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hurwitz")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hurwitz-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn nielsen_with_oracle() {
    let out = hurwitz(&["nielsen", "--n", "8", "--oracle"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("a1"));
}

#[test]
fn braid_orbit_json_is_versioned() {
    let out = hurwitz(&["braid-orbit", "--n", "10", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["schema"], "hurwitz-family/1");
    assert_eq!(v["n"], 10);
    assert_eq!(v["passed"], true);
}

#[test]
fn degenerate_covers() {
    let out = hurwitz(&["degenerate", "--n", "12"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn bad_degree_is_an_error() {
    let out = hurwitz(&["nielsen", "--n", "7"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn published_model_check() {
    let out = hurwitz(&["verify-paper-n6", "--latex"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("coefficients match: true"));
    assert!(text.contains("H_{6}(T) = "));
}

#[test]
fn specialize_then_replay() {
    let out = hurwitz(&["specialize", "--json"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let path = scratch("report.json");
    std::fs::write(&path, &out.stdout).unwrap();
    let replay = hurwitz(&["replay", path.to_str().unwrap()]);
    assert_eq!(replay.status.code(), Some(0), "{}", stdout(&replay));

    let mut v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let probe = &mut v["result"]["probe"]["probes"][0]["real_root_count"];
    *probe = Value::from(probe.as_u64().unwrap() + 1);
    let forged = scratch("forged.json");
    std::fs::write(&forged, serde_json::to_vec(&v).unwrap()).unwrap();
    assert_eq!(hurwitz(&["replay", forged.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn verify_a_saved_model() {
    let out = hurwitz(&["algebraize", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let path = scratch("model.json");
    std::fs::write(&path, &out.stdout).unwrap();
    let verify = hurwitz(&["verify", "--model", path.to_str().unwrap()]);
    assert_eq!(verify.status.code(), Some(0), "{}", stdout(&verify));
}
