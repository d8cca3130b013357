use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use t2weights::constructors::{enumerate_legal, EnumerationBounds};
use t2weights::document;
use t2weights::equivalence::reverse_orientation;
use t2weights::surgery::is_simple;
use t2weights::validate;

fn corpus(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/corpus").join(name)
}

fn t2weights(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_t2weights")).args(args).output().expect("binary runs")
}

fn with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_t2weights"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn validate_suspension() {
    let o = t2weights(&["validate", path(&corpus("suspension_1_0__2_5.json"))]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "legal\n");
}

#[test]
fn validate_excluded_disk_from_stdin() {
    let text = fs::read_to_string(corpus("suspension_regular.json")).unwrap().replace("\"f\": -1", "\"f\": 1");
    let o = with_stdin(&["validate", "-"], &text);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("two-point-cycle"), "{}", stderr(&o));
}

#[test]
fn validate_malformed() {
    let o = with_stdin(&["validate", "-"], "{\"schema_version\": \"1\"");
    assert_eq!(o.status.code(), Some(1));
    let o = t2weights(&["validate", "/nonexistent/document.json"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn compare_permuted_copy() {
    let dir = tempfile::tempdir().unwrap();
    let mut w = document::parse(&fs::read_to_string(corpus("two_cycles_mixed.json")).unwrap()).unwrap();
    w.fixed_cycles.reverse();
    w.fixed_cycles[0] = w.fixed_cycles[0].rotated(2).with_sign_flipped(1).unwrap();
    let copy = dir.path().join("copy.json");
    fs::write(&copy, document::to_pretty(&w)).unwrap();
    let o = t2weights(&["compare", path(&corpus("two_cycles_mixed.json")), path(&copy)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "isomorphic\n");
}

#[test]
fn compare_different_lens_spaces_strict() {
    let a = corpus("suspension_1_0__2_5.json");
    let b = corpus("suspension_1_0__3_5.json");
    let o = t2weights(&["compare", "--mode", "strict", path(&a), path(&b)]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(stdout(&o), "not isomorphic\n");
}

#[test]
fn compare_reversed_orientation_weak() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["cycle_circle_exceptional_reversed.json", "triangle_singular.json", "closed_obstruction.json"] {
        let w = document::parse(&fs::read_to_string(corpus(name)).unwrap()).unwrap();
        let reversed = dir.path().join(name);
        fs::write(&reversed, document::to_pretty(&reverse_orientation(&w).unwrap())).unwrap();
        let o = t2weights(&["compare", "--mode", "weak", path(&corpus(name)), path(&reversed)]);
        assert_eq!(o.status.code(), Some(0), "{name}: {}", stderr(&o));
        assert!(stdout(&o).starts_with("isomorphic\nwitness: orientation reversed"), "{}", stdout(&o));
    }
}

#[test]
fn compare_rejects_illegal_input() {
    let text = fs::read_to_string(corpus("sphere.json")).unwrap().replace("\"genus\": 0", "\"genus\": -1");
    let o = with_stdin(&["compare", path(&corpus("sphere.json")), "-"], &text);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("genus-nonnegative"));
}

#[test]
fn localmodels_listing() {
    let o = t2weights(&["localmodels", path(&corpus("suspension_1_0__2_5.json"))]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<String> = stdout(&o).lines().map(str::to_owned).collect();
    assert_eq!(
        lines,
        [
            "cycle 0 point 0: (1,0) (2,5) f=5 SF L(5,2) (s=2)",
            "cycle 0 point 1: (2,5) (1,0) f=-5 SF L(5,2) (s=3)",
        ]
    );

    for name in ["cp2.json", "square_regular.json"] {
        let o = t2weights(&["localmodels", path(&corpus(name))]);
        let out = stdout(&o);
        assert!(out.lines().all(|l| l.contains(" RF L(1,0)")), "{out}");
    }
    assert_eq!(stdout(&t2weights(&["localmodels", path(&corpus("cp2.json"))])).lines().count(), 3);
}

#[test]
fn decompose_writes_documents_and_manifest() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("parts");
    let o = t2weights(&["decompose", path(&corpus("two_cycles_mixed.json")), "--out", path(&out)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));

    let manifold = document::parse(&fs::read_to_string(out.join("manifold.json")).unwrap()).unwrap();
    assert!(validate(&manifold).is_legal());
    assert!(!manifold.has_singular_point());
    assert_eq!(manifold.t(), 1);
    assert_eq!(manifold.s(), 1);

    let piece = document::parse(&fs::read_to_string(out.join("piece_0.json")).unwrap()).unwrap();
    assert!(is_simple(&piece).unwrap());
    assert!(!out.join("piece_1.json").exists());

    let manifest: serde_json::Value = serde_json::from_str(&fs::read_to_string(out.join("manifest.json")).unwrap()).unwrap();
    let gluing = &manifest["gluings"][0];
    assert_eq!(gluing["piece"], "piece_0.json");
    let circle = gluing["manifold_selection"]["circle"].as_u64().unwrap() as usize;
    let iso = manifold.circle_boundaries[circle];
    assert_eq!(gluing["isotropy"], serde_json::json!([iso.m, iso.n]));
    assert_eq!(piece.fixed_cycles[0].entries()[0].pair, iso);
}

#[test]
fn generate_matches_corpus() {
    let o = t2weights(&["generate", "suspension", "--first", "1,0", "--second", "2,5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), fs::read_to_string(corpus("suspension_1_0__2_5.json")).unwrap());

    let o = t2weights(&["generate", "suspension", "--first", "-1,0", "--second", "2,5", "--orientation", "-1"]);
    assert_eq!(stdout(&o), fs::read_to_string(corpus("suspension_negative_reps.json")).unwrap());

    let o = t2weights(&["generate", "weighted-projective", "1", "1", "1"]);
    assert_eq!(stdout(&o), fs::read_to_string(corpus("cp2.json")).unwrap());
    let o = t2weights(&["generate", "weighted-projective", "1", "2", "3"]);
    assert_eq!(stdout(&o), fs::read_to_string(corpus("weighted_projective_1_2_3.json")).unwrap());
}

#[test]
fn generate_reports_bad_parameters() {
    let o = t2weights(&["generate", "weighted-projective", "2", "2", "3"]);
    assert_ne!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("pairwise coprime"));
    assert!(stdout(&o).is_empty());

    let o = t2weights(&["generate", "suspension", "--first", "1,0", "--second", "-1,0"]);
    assert_ne!(o.status.code(), Some(0));
}

#[test]
fn enumerate_streams_documents() {
    let o = t2weights(&["enumerate", "--max-weight-entry", "2", "--max-cycle-length", "3", "--max-circles", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let bounds = EnumerationBounds { max_weight_entry: 2, max_cycle_length: 3, max_circles: 1, ..Default::default() };
    let expected: Vec<String> = enumerate_legal(&bounds).unwrap().map(|w| document::to_line(&w)).collect();
    let lines: Vec<&str> = std::str::from_utf8(&o.stdout).unwrap().lines().collect();
    assert_eq!(lines, expected);
    assert_eq!(stderr(&o), format!("{} weight systems\n", expected.len()));

    let again = t2weights(&["enumerate", "--max-weight-entry", "2", "--max-cycle-length", "3", "--max-circles", "1"]);
    assert_eq!(again.stdout, o.stdout);
}
