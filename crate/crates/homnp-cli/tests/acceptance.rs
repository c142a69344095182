//! Acceptance battery for the command-line contract: round-trip identity,
//! exit-status classes, and a green depth-2 verification run with enough
//! theorem instances.  Prints one pass/fail line.

mod common;

use std::fs;

use homnp::{algebra_to_file, file_to_algebra, fixture_catalog};

use common::{exit_code, run, stderr, stdout, write_member};

fn require(condition: bool, message: impl Into<String>) -> Result<(), String> {
    if condition {
        Ok(())
    } else {
        Err(message.into())
    }
}

fn round_trip_identity() -> Result<(), String> {
    // Library-level identity on the whole catalog: serialize, load, compare.
    for entry in fixture_catalog(0) {
        let doc = algebra_to_file(&entry.algebra, None);
        let back = file_to_algebra(&doc)
            .map_err(|e| format!("{} does not load its own document: {e}", entry.name))?;
        require(
            back == entry.algebra,
            format!("{} round-trip changed the algebra", entry.name),
        )?;
    }

    // CLI-level identity: the zero-power twist is the identity construction,
    // so its output document must equal the canonical input byte for byte.
    let dir = tempfile::tempdir().expect("temp dir");
    let input = write_member(dir.path(), "double-trunc3");
    let output = dir.path().join("round-tripped.json");
    let construct = run([
        "construct",
        "ntwist",
        "--in",
        input.to_str().expect("utf8"),
        "--n",
        "0",
        "--out",
        output.to_str().expect("utf8"),
    ]);
    require(
        exit_code(&construct) == 0,
        format!("identity construction failed: {}", stderr(&construct)),
    )?;
    let original = fs::read_to_string(&input).expect("file exists");
    let round_tripped = fs::read_to_string(&output).expect("file exists");
    require(
        original == round_tripped,
        "round-tripped document differs from the canonical input",
    )?;

    // Non-canonical spellings normalize on the way through.
    let noisy = original.replacen("\"1\"", "\"+2/2\"", 1);
    fs::write(&input, noisy).expect("temp dir is writable");
    let again = run([
        "construct",
        "ntwist",
        "--in",
        input.to_str().expect("utf8"),
        "--n",
        "0",
        "--out",
        output.to_str().expect("utf8"),
    ]);
    require(exit_code(&again) == 0, "normalizing pass failed")?;
    let normalized = fs::read_to_string(&output).expect("file exists");
    require(
        normalized == original,
        "non-canonical input did not normalize to the canonical form",
    )
}

fn exit_status_classes() -> Result<(), String> {
    let dir = tempfile::tempdir().expect("temp dir");
    let good = write_member(dir.path(), "double-trunc2");

    // Class 0: a passing check.
    let pass = run(["check", good.to_str().expect("utf8"), "--identity", "hnp"]);
    require(exit_code(&pass) == 0, "passing check must exit 0")?;

    // Class 1: an identity that fails on a loadable document.
    let euler = write_member(dir.path(), "derive-n4-k1-c1-id");
    let fail = run([
        "check",
        euler.to_str().expect("utf8"),
        "--identity",
        "admissible",
    ]);
    require(exit_code(&fail) == 1, "failing check must exit 1")?;

    // Class 1: a construction precondition violation.
    let three = write_member(dir.path(), "three-dim-admissible");
    let refused = run([
        "construct",
        "perturb-diamond",
        "--in",
        three.to_str().expect("utf8"),
        "--a",
        "0,1,0",
        "--out",
        dir.path().join("x.json").to_str().expect("utf8"),
    ]);
    require(
        exit_code(&refused) == 1 && stderr(&refused).contains("fixed-point hypothesis"),
        "precondition violation must exit 1 naming the hypothesis",
    )?;

    // Class 2: unparseable input.
    let broken = dir.path().join("broken.json");
    fs::write(&broken, "{ \"format_version\": 1 ").expect("temp dir is writable");
    let parse = run(["check", broken.to_str().expect("utf8"), "--identity", "hnp"]);
    require(exit_code(&parse) == 2, "parse error must exit 2")?;

    // Class 2: usage error.
    let usage = run(["check", good.to_str().expect("utf8"), "--identity", "nonsense"]);
    require(exit_code(&usage) == 2, "usage error must exit 2")
}

fn verification_run_is_green() -> Result<(), String> {
    let out = run([
        "verify", "--seed", "0", "--depth", "2", "--format", "machine",
    ]);
    require(
        exit_code(&out) == 0,
        format!("verification run failed: {}", stdout(&out)),
    )?;
    let report: serde_json::Value =
        serde_json::from_str(&stdout(&out)).map_err(|e| format!("bad machine output: {e}"))?;
    let stats = report["stats"].as_array().ok_or("missing stats array")?;
    let instances: u64 = stats
        .iter()
        .map(|s| s["instances"].as_u64().unwrap_or(0))
        .sum();
    let failures: u64 = stats
        .iter()
        .map(|s| s["failures"].as_u64().unwrap_or(0))
        .sum();
    require(
        instances >= 200 && failures == 0,
        format!("{instances} instances, {failures} failures"),
    )
}

#[test]
fn criterion_10_cli_contract() {
    let outcome = round_trip_identity()
        .and_then(|()| exit_status_classes())
        .and_then(|()| verification_run_is_green());
    match &outcome {
        Ok(()) => println!(
            "criterion 10: pass — round-trip identity, exit-status classes, and a green depth-2 verification with at least 200 instances"
        ),
        Err(reason) => println!("criterion 10: FAIL — CLI contract: {reason}"),
    }
    if let Err(reason) = outcome {
        panic!("criterion 10 failed: {reason}");
    }
}
