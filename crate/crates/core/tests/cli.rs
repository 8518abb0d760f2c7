//! The `hypcert` binary: exit codes and output plumbing.

use std::path::PathBuf;
use std::process::{Command, Output};

fn hypcert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hypcert")).args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hypcert-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn lorentz_is_consistent() {
    let o = hypcert(&["check-hypersurface", "--poly", "x0^2 - x1^2 - x2^2", "--nvars", "3", "--e", "1,0,0"]);
    assert_eq!(code(&o), 0);
    let cert: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(cert["verdict"], "ConsistentAndStrictAtSamples");
    assert_eq!(cert["seed"], 0);
}

#[test]
fn sum_of_squares_is_falsified_with_a_witness() {
    let o = hypcert(&["check-hypersurface", "--poly", "x0^2 + x1^2 + x2^2", "--nvars", "3", "--e", "1,0,0", "--count", "5"]);
    assert_eq!(code(&o), 2);
    let cert: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(!cert["result"]["failures"][0]["witness"].is_null());
}

#[test]
fn malformed_input_is_an_error() {
    let o = hypcert(&["check-hypersurface", "--poly", "x0^^2", "--nvars", "3", "--e", "1,0,0"]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
    assert_eq!(code(&hypcert(&["check-hypersurface", "--nvars", "3"])), 1);
    assert_eq!(code(&hypcert(&["no-such-command"])), 1);
}

#[test]
fn center_meeting_the_curve_is_falsified() {
    assert_eq!(code(&hypcert(&["corpus", "run", "center-meets-curve"])), 2);
    let o = hypcert(&["check-curve", "--forms", "x1^3; x0*x1^2; x0^2*x1; x0^3", "--degree", "3", "--center", "4,0,1,0; 0,1,0,1"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn scheme_step_is_inconclusive() {
    let o = hypcert(&[
        "tighten", "--fan", "(x2 - x0, x3); (x2 - 2*x0, x3); (x2 - x0, x3 - x0)", "--nvars", "4", "--k", "1", "--mu-budget", "4",
    ]);
    assert_eq!(code(&o), 3, "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn task_files_are_validated() {
    let path = scratch("unknown-field.json");
    std::fs::write(&path, r#"{"task": {"kind": "quadric", "poly": "x0^2", "nvars": 2, "e": [1, 0], "extra": 1}}"#).unwrap();
    assert_eq!(code(&hypcert(&["run", path.to_str().unwrap()])), 1);
    let path = scratch("quadric.json");
    std::fs::write(&path, r#"{"task": {"kind": "quadric", "poly": "x0^2 - x1^2", "nvars": 2, "e": [1, 0]}}"#).unwrap();
    assert_eq!(code(&hypcert(&["run", path.to_str().unwrap()])), 0);
    assert_eq!(code(&hypcert(&["quadric", "--task", path.to_str().unwrap()])), 0);
    assert_eq!(code(&hypcert(&["bezout", "--task", path.to_str().unwrap()])), 1);
}

#[test]
fn output_file_and_summary() {
    let path = scratch("trefoil.json");
    let o = hypcert(&["--summary", "--output", path.to_str().unwrap(), "corpus", "run", "shastri-trefoil"]);
    assert_eq!(code(&o), 0);
    let summary = String::from_utf8_lossy(&o.stdout);
    assert!(summary.contains("verdict: StrictlyHyperbolic"));
    let written = std::fs::read_to_string(&path).unwrap();
    let golden = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/corpus/golden/shastri-trefoil.json")).unwrap();
    assert_eq!(written, golden);
}

#[test]
fn corpus_listing() {
    let o = hypcert(&["corpus", "list"]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8_lossy(&o.stdout);
    assert!(text.contains("shastri-trefoil"));
    assert!(text.contains("(extended)"));
    assert_eq!(code(&hypcert(&["corpus", "run", "missing"])), 1);
}

#[test]
fn direct_flags_for_small_tasks() {
    assert_eq!(code(&hypcert(&["quadric", "--poly", "x0^2 - x1^2 - x2^2", "--nvars", "3", "--e", "1,0,0"])), 0);
    assert_eq!(code(&hypcert(&["quadric", "--poly", "x0^2 + x1^2 - x2^2", "--nvars", "3", "--e", "1,0,0"])), 2);
    assert_eq!(code(&hypcert(&["bezout", "--p", "x1^2 - x0^2", "--q", "x0*x1", "--degree", "2"])), 0);
    assert_eq!(code(&hypcert(&["bezout", "--p", "x1^2 - x0^2", "--q", "x1^2 - 4*x0^2", "--degree", "2"])), 2);
    assert_eq!(code(&hypcert(&["hermite", "--poly", "x0^3 - x0"])), 0);
    assert_eq!(code(&hypcert(&["nuij", "--poly", "x0^2 - x1^2", "--nvars", "3", "--e", "1,0,0", "--s", "1/2", "--count", "20"])), 0);
    assert_eq!(code(&hypcert(&["distract", "--ideal", "x2^2, x2*x3, x3^2", "--nvars", "4", "--k", "1", "--seed", "3"])), 0);
    assert_eq!(code(&hypcert(&["nstar", "--ideal", "x2^2, x2*x3, x3^2", "--nvars", "4"])), 0);
    assert_eq!(code(&hypcert(&["nstar", "--fan", "(x2, x3); (x1, x3)", "--nvars", "4"])), 0);
}
