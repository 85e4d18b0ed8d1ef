use std::process::{Command, Output};

use extcan::report::{analyze, AnalysisReport};
use extcan::WeightSequence;
use serde_json::Value;

fn extcan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_extcan"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let o = extcan(args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn analyze_237() {
    let v = json(&["analyze", "2,3,7", "--json"]);
    assert_eq!(v["factorization"]["pretty"], "phi42");
    assert_eq!(v["period"]["finite"], 42);
    assert_eq!(
        v["support_monoid"]["generators"],
        serde_json::json!([6, 14, 21])
    );
    assert_eq!(v["support_monoid"]["frobenius"], 43);
    assert_eq!(v["spectral_radius"]["decimal"], "1.0000");
    assert_eq!(v["spectral_radius"]["lo"], "1/1");
}

#[test]
fn analyze_normalizes_order() {
    let a = extcan(&["analyze", "2,3,7", "--json"]);
    let b = extcan(&["analyze", "7,3,2", "--json"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(
        extcan(&["analyze", "1,2,3,7"]).stdout,
        extcan(&["analyze", "2,3,7"]).stdout
    );
}

#[test]
fn analyze_tubular_marks_wild_fields() {
    let v = json(&["analyze", "2,3,6", "--json"]);
    assert_eq!(v["repr_type"], "Tubular");
    for key in [
        "poincare",
        "support_monoid",
        "formal_decomposition",
        "dynkin_index",
    ] {
        assert_eq!(v[key], "not-applicable", "{key}");
    }
    let text = stdout(&extcan(&["analyze", "2,3,6"]));
    assert!(text.contains("poincare series      not applicable"));
}

#[test]
fn analyze_json_round_trips() {
    for w in ["2,3,7", "2,3,10", "2,3,11", "3,3,3,3", "2,4,6", "2,2,5"] {
        let o = extcan(&["analyze", w, "--json"]);
        let text = stdout(&o);
        let parsed = AnalysisReport::from_json(&text).unwrap();
        let p: WeightSequence = w.parse().unwrap();
        assert_eq!(parsed, analyze(&p).unwrap(), "{w}");
        assert_eq!(parsed.to_json().unwrap() + "\n", text, "{w}");
    }
}

#[test]
fn analyze_rejects_bad_input() {
    for bad in ["2,x,7", "5", "0,2,3", ""] {
        let o = extcan(&["analyze", bad]);
        assert_eq!(o.status.code(), Some(2), "{bad}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn table_row_counts() {
    for (which, rows) in [("1", 18), ("2", 38), ("3", 32), ("4", 14), ("5", 8)] {
        let v = json(&["table", which, "--format", "json"]);
        assert_eq!(v.as_array().unwrap().len(), rows, "table {which}");
    }
}

#[test]
fn table_annotations() {
    let csv = stdout(&extcan(&["table", "2", "--format", "csv"]));
    let row = csv.lines().find(|l| l.contains("\"2,3,10\"")).unwrap();
    assert!(row.contains("144 [printed: 72]"), "{row}");
    let md = stdout(&extcan(&["table", "1"]));
    assert!(md.contains("| 2,3,11 |"));
    assert!(md.contains("1.1065 [printed: 1.1064]"));
    let t3 = stdout(&extcan(&["table", "3", "--format", "csv"]));
    assert_eq!(t3.matches("label_collision").count(), 2);
    let t4 = stdout(&extcan(&["table", "4", "--format", "csv"]));
    assert!(t4.contains("Y^3+XZ^2+X^4 [printed: Z^2+XZ^2+X^4]"));
}

#[test]
fn table_rejects_unknown() {
    assert_eq!(extcan(&["table", "6"]).status.code(), Some(2));
    assert_eq!(
        extcan(&["table", "1", "--format", "xml"]).status.code(),
        Some(2)
    );
}

#[test]
fn verify_passes_and_strict_fails() {
    let o = extcan(&["verify", "--max-sum", "10", "--max-t", "5"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    assert!(text.contains("ok   representability"));
    assert!(!text.contains("FAIL"));
    let o = extcan(&["verify", "--max-sum", "10", "--max-t", "5", "--strict"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL table 2 (2,3,10) period"));
}

#[test]
fn verify_bounds_must_be_sensible() {
    assert_eq!(extcan(&["verify", "--max-sum", "0"]).status.code(), Some(2));
}

#[test]
fn diagram_canonical_222() {
    let dot = stdout(&extcan(&["diagram", "2,2,2", "--kind", "canonical"]));
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("[label=\"alpha").count(), 6);
    assert_eq!(
        dot.lines()
            .filter(|l| l.trim_start().starts_with("// relation"))
            .count(),
        1
    );
    let vertices = dot
        .lines()
        .filter(|l| l.contains(" [label=\"") && !l.contains("->"))
        .count();
    assert_eq!(vertices, 5);
}

#[test]
fn diagram_extended_and_double_extended() {
    let dot = stdout(&extcan(&["diagram", "2,3,7", "--kind", "extended"]));
    assert!(dot.contains("star -> omega [label=\"beta\"]"));
    let dot = stdout(&extcan(&["diagram", "2,3,5", "--kind", "double-extended"]));
    assert!(dot.contains("// star [2,3,7]"));
    let o = extcan(&["diagram", "2,3,7", "--kind", "double-extended"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn diagram_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("star.dot");
    let o = extcan(&[
        "diagram",
        "2,3,7",
        "--kind",
        "star",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let dot = std::fs::read_to_string(&path).unwrap();
    assert!(dot.contains("// star [2,3,7]"));
}
