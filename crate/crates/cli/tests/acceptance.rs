//! Acceptance suite: nine end-to-end criteria, one test (and one
//! pass/fail line) each. All nine share a single verification sweep at
//! the full default range, and each criterion additionally spot-checks
//! the emitted bundle or the library directly, independently of the
//! sweep's own bookkeeping.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use helix_cli::sweep::{run_sweep, CheckReport, SweepConfig, SweepOutcome};
use helix_core::chords::{chords_from_loop, offset_of, synthetic_chords, BoundaryLabeling};

static OUTCOME: OnceLock<SweepOutcome> = OnceLock::new();

fn outcome() -> &'static SweepOutcome {
    OUTCOME.get_or_init(|| {
        run_sweep(&SweepConfig::default()).expect("verification sweep must complete")
    })
}

fn criterion(id: usize) -> &'static CheckReport {
    let c = outcome().checks.iter().find(|c| c.id == id).expect("check must exist");
    println!(
        "criterion {} ({}): {} \u{2014} {}",
        c.id,
        c.name,
        if c.pass { "PASS" } else { "FAIL" },
        c.detail
    );
    c
}

fn assert_pass(id: usize) -> &'static CheckReport {
    let c = criterion(id);
    assert!(c.pass, "criterion {id} failed: {}", c.detail);
    c
}

fn bundle_json(name: &str) -> serde_json::Value {
    let bytes = outcome().files.get(name).unwrap_or_else(|| panic!("{name} missing from bundle"));
    serde_json::from_slice(bytes).unwrap_or_else(|e| panic!("{name} is not JSON: {e}"))
}

fn loop_records() -> Vec<serde_json::Value> {
    let bytes = &outcome().files["loops.jsonl"];
    std::str::from_utf8(bytes)
        .expect("catalog is UTF-8")
        .lines()
        .map(|l| serde_json::from_str(l).expect("each catalog line is JSON"))
        .collect()
}

#[test]
fn criterion_1_trichotomy_and_census() {
    assert_pass(1);
    let mut counts: BTreeMap<u64, usize> = BTreeMap::new();
    for rec in loop_records() {
        let len = rec["length"].as_u64().unwrap();
        assert!(
            len == 3 || len == 4 || (len >= 8 && len % 4 == 0),
            "loop {} has impossible length {len}",
            rec["id"]
        );
        *counts.entry(len).or_insert(0) += 1;
    }
    let small: Vec<(u64, usize)> = counts.into_iter().filter(|(l, _)| *l <= 24).collect();
    assert_eq!(
        small,
        [(3, 4), (4, 3), (8, 3), (12, 6), (16, 6), (20, 12), (24, 6)],
        "walker-confirmed census changed"
    );
}

#[test]
fn criterion_2_triangles_and_quadrilaterals() {
    assert_pass(2);
    let records = loop_records();
    let triangles: Vec<&serde_json::Value> =
        records.iter().filter(|r| r["class"].as_str().unwrap().starts_with("vertex_link")).collect();
    let quads: Vec<&serde_json::Value> =
        records.iter().filter(|r| r["class"].as_str().unwrap().starts_with("quad")).collect();
    assert_eq!(triangles.len(), 4);
    assert_eq!(quads.len(), 3);
    for rec in triangles.iter().chain(&quads) {
        let id = rec["id"].as_str().unwrap();
        let cert = bundle_json(&format!("certificates/{id}.json"));
        assert_eq!(cert["result"], "index", "{id} has no index");
        assert_eq!(cert["n"], 0, "{id} should have index 0");
        assert!(cert["homology"]["empty"].as_bool().unwrap(), "{id} complex should be empty");
    }
}

#[test]
fn criterion_3_helicoid_index_ladder() {
    assert_pass(3);
    let expected: Vec<(usize, usize)> = (2..=10).map(|k| (k, k - 1)).collect();
    assert_eq!(outcome().helicoid_indices, expected, "index ladder must be n = k - 1 for k = 2..10");
}

#[test]
fn criterion_4_two_chord_free_points_on_opposite_edges() {
    assert_pass(4);
    let lp = helix_cli::catalog::find_loop("12-0").unwrap();
    let fam = chords_from_loop(&lp).unwrap();
    let labeling = BoundaryLabeling::from_loop(&lp);
    let free = fam.uncovered_labels();
    assert_eq!(free.len(), 2);
    assert_eq!(labeling.point(free[0]).edge.opposite(), labeling.point(free[1]).edge);
}

#[test]
fn criterion_5_forbidden_offsets_never_occur() {
    assert_pass(5);
    for (name, bytes) in &outcome().files {
        let Some(rest) = name.strip_prefix("chords/") else { continue };
        if rest.starts_with("synthetic") {
            continue;
        }
        let rec: serde_json::Value = serde_json::from_slice(bytes).unwrap();
        let offset = rec["offset"].as_u64().unwrap();
        assert!(
            ![0, 1, 3].contains(&offset),
            "{name} has forbidden offset {offset}"
        );
    }
}

#[test]
fn criterion_6_high_offsets_are_never_minimal() {
    assert_pass(6);
    // A length-20 catalog loop with offset 4 exists and is not minimal.
    let witness = outcome().files.iter().find_map(|(name, bytes)| {
        let rest = name.strip_prefix("chords/")?;
        if !rest.starts_with("20-") {
            return None;
        }
        let rec: serde_json::Value = serde_json::from_slice(bytes).ok()?;
        (rec["offset"] == 4).then(|| rest.trim_end_matches(".json").to_string())
    });
    let id = witness.expect("a length-20 offset-4 loop must exist");
    let cert = bundle_json(&format!("certificates/{id}.json"));
    assert_eq!(cert["result"], "not_minimal", "loop {id} must not carry an index");
    // Every synthetic offset >= 4 collapses to a point.
    for k in 5..=10usize {
        for offset in 4..k {
            let cert = bundle_json(&format!("certificates/synthetic-{k}-{offset}.json"));
            assert_eq!(cert["result"], "not_minimal", "synthetic ({k}, {offset})");
            assert_eq!(cert["core"]["vertices"].as_array().unwrap().len(), 1);
        }
    }
}

#[test]
fn criterion_7_oracle_cross_validation() {
    let c = assert_pass(7);
    assert!(c.detail.contains("complexes"), "cross-validation must cover complexes");
    for name in ["1-reduced-Betti-numbers-vs-F2-oracle", "2-pairwise-chord-compatibility"] {
        let report = bundle_json(&format!("oracles/{name}.json"));
        assert_eq!(report["agree"], true, "oracle report {name} disagrees");
    }
}

#[test]
fn criterion_8_synthetic_chord_families() {
    assert_pass(8);
    for (k, offset) in [(2usize, 2usize), (5, 3), (7, 5), (10, 9)] {
        let fam = synthetic_chords(k, offset).unwrap();
        let off = offset_of(&fam).unwrap();
        assert_eq!(off.value, offset, "synthetic ({k}, {offset}) offset mismatch");
        assert_eq!(off.degenerate, k == 2);
    }
}

#[test]
fn criterion_9_reproducible_output() {
    assert_pass(9);
    assert!(outcome().files.len() > 300, "bundle should contain the full artifact set");
    assert_eq!(bundle_json("report.json")["passed"], true);
}
