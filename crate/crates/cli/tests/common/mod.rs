//! Helpers shared by the golden, round-trip and acceptance targets.
#![allow(dead_code)]

use std::fs;
use std::path::{Path, PathBuf};

use fpalg::syntax::{parse_presentation, print_presentation};

pub fn crate_dir() -> &'static Path {
    Path::new(env!("CARGO_MANIFEST_DIR"))
}

pub fn golden_cases() -> Vec<PathBuf> {
    let mut dirs: Vec<PathBuf> = fs::read_dir(crate_dir().join("tests/golden"))
        .expect("golden directory")
        .map(|e| e.expect("entry").path())
        .filter(|p| p.is_dir())
        .collect();
    dirs.sort();
    dirs
}

/// `fpalg` followed by the lines of `args`.
pub fn golden_args(dir: &Path) -> Vec<String> {
    let text = fs::read_to_string(dir.join("args")).expect("args file");
    let mut args = vec!["fpalg".to_string()];
    args.extend(text.lines().map(str::to_string));
    args
}

/// Runs every golden case; with `update` the expected files are rewritten.
/// Returns one message per mismatching file.
pub fn check_goldens(update: bool) -> Vec<String> {
    std::env::set_current_dir(crate_dir()).expect("crate dir");
    let mut failures = Vec::new();
    for dir in golden_cases() {
        let out = fpalg::run(golden_args(&dir));
        let status = format!("{}\n", out.status);
        let files = [
            ("stdout", &out.stdout),
            ("stderr", &out.stderr),
            ("status", &status),
        ];
        let name = dir.file_name().unwrap().to_string_lossy().into_owned();
        for (file, got) in files {
            if update {
                fs::write(dir.join(file), got).unwrap();
                continue;
            }
            let want = fs::read_to_string(dir.join(file)).unwrap_or_default();
            if want != *got {
                failures.push(format!(
                    "{name}/{file}:\n--- expected\n{want}--- got\n{got}"
                ));
            }
        }
    }
    failures
}

pub fn corpus() -> Vec<PathBuf> {
    let mut files: Vec<PathBuf> = fs::read_dir(crate_dir().join("tests/data"))
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "alg"))
        .collect();
    files.sort();
    files
}

pub fn is_bad(p: &Path) -> bool {
    p.file_name().unwrap().to_string_lossy().starts_with("bad_")
}

/// Checks parse, print, reparse on every well-formed corpus file and that
/// the malformed ones are rejected. Returns the offending files.
pub fn corpus_round_trip() -> Vec<String> {
    let mut failures = Vec::new();
    for path in corpus() {
        let text = fs::read_to_string(&path).unwrap();
        let name = path.display().to_string();
        let parsed = parse_presentation(&text);
        if is_bad(&path) {
            if parsed.is_ok() {
                failures.push(format!("{name}: accepted"));
            }
            continue;
        }
        let Ok(p) = parsed else {
            failures.push(format!("{name}: rejected"));
            continue;
        };
        let printed = print_presentation(&p);
        match parse_presentation(&printed) {
            Ok(q) if q == p && print_presentation(&q) == printed => {}
            _ => failures.push(format!("{name}: print/parse mismatch")),
        }
    }
    failures
}
