use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn macforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_macforge")).args(args).output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = macforge(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn square_invariants() {
    let r = json(&["invariants", path_str(&data("square.json"))]);
    let p = &r["payload"];
    assert_eq!(p["euler_characteristic"]["rendered"], "0");
    let betti: Vec<(i64, i64, u64)> = p["a1_betti"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| (e["i"].as_i64().unwrap(), e["j"].as_i64().unwrap(), e["rank"].as_u64().unwrap()))
        .collect();
    assert_eq!(betti, vec![(0, 0, 1), (3, 2, 2), (6, 4, 1)]);
    assert_eq!(p["motivic_cohomology"]["rendered"], "A[3,2]^2 ⊕ A[6,4]");
    assert!(r["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
    assert_eq!(r["input"]["m"], 4);
    assert_eq!(r["input"]["hash"].as_str().unwrap().len(), 64);
}

#[test]
fn rp2_invariants() {
    let r = json(&["invariants", path_str(&data("rp2.json"))]);
    let h = r["payload"]["cellular_a1_homology"].as_array().unwrap();
    assert_eq!(h.len(), 3);
    assert_eq!(h[2]["rendered"], "KMW(3)^10 ⊕ KMW(4)^15 ⊕ KMW(5)^6 ⊕ (Z/2 ⊗ KMW(6))");
    assert_eq!(r["payload"]["motivic_cohomology"]["module_form"], "unavailable");
}

#[test]
fn simplex_invariants() {
    let r = json(&["invariants", path_str(&data("simplex.json"))]);
    assert_eq!(r["payload"]["euler_characteristic"]["rendered"], "<1>");
    assert_eq!(r["payload"]["splitting"]["non_faces"], 0);
}

#[test]
fn field_specializations() {
    let rp2 = data("rp2.json");
    let value = |field: &str| json(&["euler", "--field", field, path_str(&rp2)])["payload"].clone();
    let generic = value("generic");
    assert_eq!(generic["rendered"], "16<1> - 16<-1>");
    assert_eq!(value("C")["field_value"], serde_json::json!({ "rank": 0 }));
    assert_eq!(value("R")["field_value"], serde_json::json!({ "rank": 0, "signature": 32 }));
    assert_eq!(generic["field_value"]["a"], 16);
}

#[test]
fn text_input_is_accepted() {
    let r = json(&["splitting", "--flavor", "real", path_str(&data("points3.txt"))]);
    let h = &r["payload"]["rzk_reduced_homology"];
    assert_eq!(h[0]["deg"], 1);
    assert_eq!(h[0]["rank"], 5);
}

#[test]
fn every_subcommand_exits_zero() {
    let sq = data("square.json");
    let sq = path_str(&sq);
    for args in [
        vec!["invariants", sq],
        vec!["splitting", sq],
        vec!["splitting", "--flavor", "complex", sq],
        vec!["homology", "--dump-matrices", sq],
        vec!["euler", sq],
        vec!["betti", "--prime", "3", sq],
        vec!["affine", "--model", "sr", sq],
        vec!["affine", "--model", "complement", sq],
        vec!["oracle-verify", sq],
    ] {
        let out = macforge(&args);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn corrupted_file_exits_2() {
    let bad = scratch("corrupted.json", "{\"m\": 4, \"facets\": [[1, 2], [3");
    assert_eq!(macforge(&["invariants", path_str(&bad)]).status.code(), Some(2));
    let bad_text = scratch("corrupted.txt", "m=3\n1 x\n");
    assert_eq!(macforge(&["euler", path_str(&bad_text)]).status.code(), Some(2));
    assert_eq!(macforge(&["oracle-verify", path_str(&bad)]).status.code(), Some(2));
    assert_eq!(macforge(&["invariants", "/nonexistent/complex.json"]).status.code(), Some(2));
    assert_eq!(macforge(&["invariants"]).status.code(), Some(2));
}

#[test]
fn validation_errors_exit_3() {
    let ghost = data("ghost.json");
    let out = macforge(&["invariants", path_str(&ghost)]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("ghost"));
    let range = scratch("range.json", "{\"m\": 2, \"facets\": [[1, 3]]}");
    assert_eq!(macforge(&["euler", path_str(&range)]).status.code(), Some(3));
    let sq = data("square.json");
    assert_eq!(macforge(&["betti", "--prime", "4", path_str(&sq)]).status.code(), Some(3));
    assert_eq!(macforge(&["oracle-verify", "--exhaustive", "6"]).status.code(), Some(3));
}

#[test]
fn allow_ghost_warns() {
    let r = json(&["--allow-ghost", "invariants", path_str(&data("ghost.json"))]);
    let warnings = r["warnings"].as_array().unwrap();
    assert!(warnings.iter().any(|w| w.as_str().unwrap().contains("ghost vertices [3]")));
    assert!(r["payload"].get("cellular_a1_homology").is_none());
}

#[test]
fn reports_are_byte_stable() {
    let rp2 = data("rp2.json");
    for args in [
        vec!["invariants", path_str(&rp2)],
        vec!["--markdown", "betti", "--prime", "2", path_str(&rp2)],
        vec!["oracle-verify", "--random", "20", "6", "--seed", "7"],
    ] {
        let a = macforge(&args);
        let b = Command::new(env!("CARGO_BIN_EXE_macforge")).args(&args).env("MACFORGE_THREADS", "1").output().unwrap();
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn oracle_verify_reports_suites() {
    let r = json(&["oracle-verify", "--random", "50", "6", "--seed", "7"]);
    assert_eq!(r["payload"]["complexes"], 50);
    let suites = r["payload"]["suites"].as_array().unwrap();
    assert_eq!(suites.len(), 6);
    assert!(suites.iter().all(|s| s["passed"] == true && s["failures"] == 0));
    let other = json(&["oracle-verify", "--random", "50", "6", "--seed", "8"]);
    assert_eq!(other["options"]["seed"], 8);
}

#[test]
fn markdown_rendering() {
    let out = macforge(&["--markdown", "invariants", path_str(&data("square.json"))]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("# macforge invariants\n"));
    assert!(text.contains("| j \\ i | 0 | 3 | 6 |"));
    assert!(text.contains("- H_1 = KMW(2)^2"));
    assert!(text.contains("## Checks"));
}

#[test]
fn affine_models_match_goldens() {
    let golden = |name: &str| {
        std::fs::read_to_string(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)).unwrap()
    };
    let rendered = |args: &[&str]| format!("{}\n", json(args)["payload"]["model"]["rendered"].as_str().unwrap());
    let sq = data("square.json");
    assert_eq!(rendered(&["affine", path_str(&data("points2.json"))]), golden("sl2.txt"));
    assert_eq!(rendered(&["affine", path_str(&sq)]), golden("square_dual.txt"));
    assert_eq!(rendered(&["affine", "--model", "sr", path_str(&sq)]), golden("square_sr.txt"));
}
