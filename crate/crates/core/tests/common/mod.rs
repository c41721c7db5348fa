#![allow(dead_code)]

use std::fs;
use std::path::PathBuf;

use splitroots::cli;

pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the CLI in-process with the given arguments (without the program name).
pub fn run_cli(args: &[&str], stdin: &str) -> Outcome {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut input = stdin.as_bytes();
    let argv = std::iter::once("splitroots").chain(args.iter().copied());
    let code = cli::run(argv, &mut input, &mut out, &mut err);
    Outcome {
        code,
        stdout: String::from_utf8(out).expect("utf-8 stdout"),
        stderr: String::from_utf8(err).expect("utf-8 stderr"),
    }
}

/// The pinned invocations whose full transcripts live in `tests/golden/`.
pub const GOLDEN_CASES: [(&str, &[&str]); 3] = [
    ("solve_cubic", &["solve", "z^3 - 7z + 6"]),
    ("solve_degree_five", &["solve", "z^5 + 1"]),
    (
        "split_quadratic",
        &["split-system", "z^2 + z + 1", "--x=-0.5", "--y=0.8660254"],
    ),
];

pub fn transcript(args: &[&str], o: &Outcome) -> String {
    let quoted: Vec<String> = args
        .iter()
        .map(|a| {
            if a.contains(' ') {
                format!("\"{a}\"")
            } else {
                a.to_string()
            }
        })
        .collect();
    format!(
        "$ splitroots {}\nexit: {}\n--- stdout\n{}--- stderr\n{}",
        quoted.join(" "),
        o.code,
        o.stdout,
        o.stderr
    )
}

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("golden")
        .join(format!("{name}.txt"))
}

/// Compares the live transcript against the stored one. Setting
/// `UPDATE_GOLDEN=1` rewrites the stored files instead.
pub fn check_golden(name: &str, args: &[&str]) -> Result<(), String> {
    let live = transcript(args, &run_cli(args, ""));
    let path = golden_path(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        fs::write(&path, &live).map_err(|e| e.to_string())?;
        return Ok(());
    }
    let stored = fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    if stored == live {
        Ok(())
    } else {
        Err(format!(
            "{name}: output differs\n--- expected\n{stored}\n--- actual\n{live}"
        ))
    }
}
