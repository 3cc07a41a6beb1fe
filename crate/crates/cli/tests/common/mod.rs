#![allow(dead_code)]

use std::path::PathBuf;

pub fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

/// Runs the CLI in process; returns (exit code, stdout, stderr).
pub fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("relchow").chain(args.iter().copied());
    let code = relchow_cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

/// Runs with `--no-timestamp` and parses the JSON report.
pub fn report(args: &[&str]) -> (i32, serde_json::Value) {
    let mut full = vec!["--no-timestamp"];
    full.extend_from_slice(args);
    let (code, out, _) = run(&full);
    (code, serde_json::from_str(&out).expect("report is JSON"))
}
