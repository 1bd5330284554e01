//! End-to-end tests driving the compiled binary: exit codes, JSON output,
//! determinism of trace files.

use std::path::Path;
use std::process::{Command, Output};

fn dualcx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dualcx"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write(path: &Path, text: &str) {
    std::fs::write(path, text).unwrap();
}

const TORUS7: &str = r#"{"vertices":["t0","t1","t2","t3","t4","t5","t6"],
"facets":[["t0","t1","t3"],["t1","t2","t4"],["t2","t3","t5"],["t3","t4","t6"],
["t0","t4","t5"],["t1","t5","t6"],["t0","t2","t6"],["t0","t2","t3"],
["t1","t3","t4"],["t2","t4","t5"],["t3","t5","t6"],["t0","t4","t6"],
["t0","t1","t5"],["t1","t2","t6"]]}"#;

const RP2: &str = r#"{"vertices":["p1","p2","p3","p4","p5","p6"],
"facets":[["p1","p2","p5"],["p1","p2","p6"],["p1","p3","p4"],["p1","p3","p6"],
["p1","p4","p5"],["p2","p3","p4"],["p2","p3","p5"],["p2","p4","p6"],
["p3","p5","p6"],["p4","p5","p6"]]}"#;

#[test]
fn realize_torus_exits_zero_with_two_steps() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("torus7.json");
    let trace = dir.path().join("trace.json");
    write(&input, TORUS7);
    let out = dualcx(&[
        "realize",
        input.to_str().unwrap(),
        "--trace",
        trace.to_str().unwrap(),
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["certified"], serde_json::json!(true));
    assert_eq!(value["steps"].as_array().unwrap().len(), 2);
    assert_eq!(value["steps"][0]["cells_removed"], serde_json::json!(21));
    let on_disk: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&trace).unwrap()).unwrap();
    assert_eq!(on_disk, value);
}

#[test]
fn realize_is_byte_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("rp2.json");
    write(&input, RP2);
    let a = dualcx(&["realize", input.to_str().unwrap()]);
    let b = dualcx(&["realize", input.to_str().unwrap()]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn malformed_json_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("bad.json");
    write(&input, "{not json");
    let out = dualcx(&["homology", input.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty(), "diagnostics must go to stderr");
    assert!(!out.stderr.is_empty());
}

#[test]
fn missing_file_exits_one() {
    let out = dualcx(&["realize", "/nonexistent/nowhere.json"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn homology_rings() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("rp2.json");
    write(&input, RP2);
    let out = dualcx(&["homology", input.to_str().unwrap(), "--ring", "Q"]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["betti"], serde_json::json!([1, 0, 0]));
    assert!(value.get("torsion").is_none());

    let out = dualcx(&["homology", input.to_str().unwrap(), "--ring", "Z"]);
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["torsion"][1], serde_json::json!(["2"]));
}

#[test]
fn homology_accepts_delta_files() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("circle.json");
    write(
        &input,
        r#"{"cells":[{"id":0,"dim":0,"label":"v"},{"id":1,"dim":1,"faces":[0,0]}]}"#,
    );
    let out = dualcx(&["homology", input.to_str().unwrap(), "--ring", "Q"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["betti"], serde_json::json!([1, 1]));
}

#[test]
fn arrangement_certifies() {
    let out = dualcx(&["arrangement", "--labels", "a,b,c", "--dim", "1", "--check"]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(
        value["general_position"]["in_general_position"],
        serde_json::json!(true)
    );
    assert_eq!(
        value["strata_certification"]["dual_complex_f_vector"],
        serde_json::json!([3, 3])
    );
}

#[test]
fn arrangement_rejects_duplicate_nodes() {
    let out = dualcx(&[
        "arrangement",
        "--labels",
        "a,b,c",
        "--dim",
        "1",
        "--nodes",
        "0,1,0",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn surgery_roundtrip_holds() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("torus7.json");
    write(&input, TORUS7);
    let out = dualcx(&["surgery", "roundtrip", input.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["holds"], serde_json::json!(true));
    assert_eq!(value["exhaustive"], serde_json::json!(false)); // 14 top cells
}

#[test]
fn surgery_rejects_delta_input() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("circle.json");
    write(
        &input,
        r#"{"cells":[{"id":0,"dim":0,"label":"v"},{"id":1,"dim":1,"faces":[0,0]}]}"#,
    );
    let out = dualcx(&["surgery", "roundtrip", input.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn localmodel_resolve() {
    let out = dualcx(&["localmodel", "resolve", "--branches", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["depth"], serde_json::json!(4));
    assert_eq!(value["leaves"], serde_json::json!(5));

    let out = dualcx(&["localmodel", "resolve", "--branches", "0"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn group_pipeline_with_cycles() {
    let dir = tempfile::tempdir().unwrap();
    let cycles = dir.path().join("cycles.json");
    // fan triangles of the torus relator in rim order: a b fwd, a b reversed
    write(&cycles, r#"{"cycles":[[1,1,1,1,1,1,-1,-1,-1,-1,-1,-1]]}"#);
    let emitted = dir.path().join("c3.json");
    let out = dualcx(&[
        "group",
        "--gens",
        "a,b",
        "--rels",
        "abAB",
        "--cycles",
        cycles.to_str().unwrap(),
        "--emit-complex",
        emitted.to_str().unwrap(),
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["q_superperfect_proxy"], serde_json::json!(false));
    assert_eq!(value["h3_zero"], serde_json::json!(true));
    assert_eq!(value["c2_profile"]["betti"], serde_json::json!([1, 2, 1]));
    // C2's H2 must be gone after coning
    assert_eq!(value["c3_profile"]["betti"][2], serde_json::json!(0));
    // the emitted simplicialization parses and realizes
    let text = std::fs::read_to_string(&emitted).unwrap();
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert!(!value["facets"].as_array().unwrap().is_empty());
}

#[test]
fn group_rejects_bad_cycles() {
    let dir = tempfile::tempdir().unwrap();
    let cycles = dir.path().join("cycles.json");
    write(&cycles, r#"{"cycles":[[1]]}"#);
    let out = dualcx(&[
        "group",
        "--gens",
        "a,b",
        "--rels",
        "abAB",
        "--cycles",
        cycles.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn realize_with_custom_nodes() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("rp2.json");
    write(&input, RP2);
    let out = dualcx(&[
        "realize",
        input.to_str().unwrap(),
        "--nodes",
        "1/2,-3,7/4,5,0,9",
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["arrangement"]["nodes"][0], serde_json::json!("1/2"));
    assert_eq!(value["certified"], serde_json::json!(true));

    let out = dualcx(&["realize", input.to_str().unwrap(), "--nodes", "0,1,bogus"]);
    assert_eq!(out.status.code(), Some(1));
    let out = dualcx(&["realize", input.to_str().unwrap(), "--nodes", "0,1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn empty_complex_is_invalid_input() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("empty.json");
    write(&input, r#"{"vertices": [], "facets": []}"#);
    for args in [
        vec!["homology", input.to_str().unwrap()],
        vec!["realize", input.to_str().unwrap()],
        vec!["surgery", "roundtrip", input.to_str().unwrap()],
    ] {
        let out = dualcx(&args);
        assert_eq!(out.status.code(), Some(1), "args: {args:?}");
    }
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(dualcx(&["--help"]).status.code(), Some(0));
    assert_eq!(dualcx(&["--version"]).status.code(), Some(0));
    assert_eq!(dualcx(&["realize", "--help"]).status.code(), Some(0));
    // unknown subcommand is invalid input
    assert_eq!(dualcx(&["frobnicate"]).status.code(), Some(1));
}

#[test]
fn group_emitted_complex_feeds_realize() {
    // circle presentation: the simplicialization is a 12-cycle, small enough
    // to realize end to end
    let dir = tempfile::tempdir().unwrap();
    let emitted = dir.path().join("circle.json");
    let out = dualcx(&[
        "group",
        "--gens",
        "a",
        "--emit-complex",
        emitted.to_str().unwrap(),
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let out = dualcx(&["realize", emitted.to_str().unwrap()]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["certified"], serde_json::json!(true));
}
