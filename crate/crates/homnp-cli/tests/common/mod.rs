//! Shared helpers for driving the compiled binary in tests.

#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use homnp::{algebra_to_file, canonical_json, fixture_catalog, DoubleHomAlgebra};

/// Path to the compiled CLI under test.
pub fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_homnp")
}

/// Run the binary with the given arguments, capturing everything.
pub fn run<I, S>(args: I) -> Output
where
    I: IntoIterator<Item = S>,
    S: AsRef<std::ffi::OsStr>,
{
    Command::new(bin())
        .args(args)
        .output()
        .expect("binary runs")
}

pub fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

pub fn stderr(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).into_owned()
}

pub fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

/// Serialize a catalog member into `dir`, returning the file path.
pub fn write_member(dir: &Path, name: &str) -> PathBuf {
    let catalog = fixture_catalog(0);
    let entry = catalog
        .iter()
        .find(|e| e.name == name)
        .unwrap_or_else(|| panic!("{name} is not in the catalog"));
    write_algebra(dir, name, &entry.algebra)
}

/// Serialize any algebra into `dir` under `<name>.json`.
pub fn write_algebra(dir: &Path, name: &str, algebra: &DoubleHomAlgebra) -> PathBuf {
    let path = dir.join(format!("{name}.json"));
    let doc = algebra_to_file(algebra, None);
    std::fs::write(&path, canonical_json(&doc)).expect("temp dir is writable");
    path
}
