//! End-to-end checks of the binary: output schemas, exit codes, and
//! byte-level determinism of the atlas.

use std::process::Command;

fn isotropy(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_isotropy"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = isotropy(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn atlas_rank_one_contains_only_sl2() {
    let text = stdout(&["atlas", "--max-rank", "1", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    let gradings = doc["gradings"].as_array().unwrap();
    assert_eq!(gradings.len(), 1);
    assert_eq!(gradings[0]["grading"]["type"], "A1(1)");
    assert_eq!(gradings[0]["subalgebras"].as_array().unwrap().len(), 3);
}

#[test]
fn atlas_rank_four_flags_the_special_subalgebra() {
    let text = stdout(&["atlas", "--max-rank", "4", "--types", "D4"]);
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    let entry = doc["gradings"]
        .as_array()
        .unwrap()
        .iter()
        .find(|e| e["grading"]["id"] == "D4(1):00100")
        .expect("D4 s2 grading present");
    assert_eq!(entry["nonspherical_exists"], true);
    let abar = entry["abar"].as_u64().expect("abar index set") as usize;
    let sub = &entry["subalgebras"][abar];
    // here the minimal non-spherical element is the special subalgebra
    assert_eq!(sub["dim"], 5);
    assert_eq!(sub["maximal"], true);
    assert_eq!(sub["spherical"], false);
    assert_eq!(sub["abar_contained"], true);
    // orbit records: 2^4 orthogonal subsets of the four pairwise-orthogonal
    // weights plus combinations with the lowest weight
    assert!(sub["orbit_count"].as_u64().unwrap() >= 16);
}

#[test]
fn atlas_output_is_deterministic() {
    let a = stdout(&["atlas", "--max-rank", "3"]);
    let b = stdout(&["atlas", "--max-rank", "3", "--jobs", "2"]);
    assert_eq!(a, b);
}

#[test]
fn classify_emits_flat_records() {
    let text = stdout(&["classify", "--max-rank", "2"]);
    let records: serde_json::Value = serde_json::from_str(&text).unwrap();
    let records = records.as_array().unwrap();
    assert!(records.len() >= 10);
    for r in records {
        assert!(r["grading"].is_string());
        assert!(r["spherical"].is_boolean());
        assert!(r["heights"].is_array());
    }
    // the non-spherical records carry a witness weight
    assert!(records
        .iter()
        .any(|r| r["spherical"] == false && r["witness"].is_array()));
}

#[test]
fn verify_suites_pass_and_fail_cleanly() {
    for (theorem, rank) in [
        ("mt", "5"),
        ("p63", "7"),
        ("cor73", "4"),
        ("antichain", "4"),
        ("hermitian-ranks", "8"),
        ("panyushev", "4"),
        ("orbit-dim", "4"),
    ] {
        let out = isotropy(&["verify", "--theorem", theorem, "--max-rank", rank]);
        assert!(out.status.success(), "{theorem}");
        assert!(String::from_utf8_lossy(&out.stdout).starts_with("OK"));
    }
    let out = isotropy(&["verify", "--theorem", "nonsense", "--max-rank", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn invalid_type_filter_is_usage_error() {
    let out = isotropy(&["atlas", "--max-rank", "3", "--types", "Q7"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn orbits_listing_matches_subalgebra() {
    let text = stdout(&["orbits", "--grading", "A3:1:1010", "--subalgebra", "0"]);
    let records: serde_json::Value = serde_json::from_str(&text).unwrap();
    // the zero subalgebra has a single (empty, open) orbit
    let records = records.as_array().unwrap();
    assert_eq!(records.len(), 1);
    assert_eq!(records[0]["dim"], 0);
    assert_eq!(records[0]["open"], true);

    let text = stdout(&["orbits", "--grading", "flip:A2", "--subalgebra", "1"]);
    let records: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert!(!records.as_array().unwrap().is_empty());

    let out = isotropy(&["orbits", "--grading", "A3:1:1010", "--subalgebra", "99"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn hermitian_report_shape() {
    let text = stdout(&["hermitian", "--type", "C3", "--node", "3", "--all-ort", "--antichain"]);
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["rank"], 3);
    assert_eq!(doc["tube_type"], true);
    assert_eq!(doc["cascade"]["roots"].as_array().unwrap().len(), 3);
    assert_eq!(doc["max_antichain"]["type"][0], 1);
    assert!(doc["orthogonal_subsets"].as_array().unwrap().len() > 10);
    // a non-tube pair refuses the antichain request
    let out = isotropy(&["hermitian", "--type", "A3", "--node", "1", "--antichain"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn dot_export_carries_edge_attributes() {
    let dot = stdout(&["dot", "--type", "F4"]);
    assert!(dot.contains("digraph"));
    assert!(dot.contains("mult=\"2\""));
    assert!(dot.contains("arrow=\"forward\""));
    let dot = stdout(&["dot", "--type", "A2", "--twist", "2"]);
    assert!(dot.contains("mult=\"4\""));
}

#[test]
fn json_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("atlas.json");
    let out = isotropy(&[
        "atlas",
        "--max-rank",
        "2",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(doc["gradings"].as_array().unwrap().len() >= 5);
}
