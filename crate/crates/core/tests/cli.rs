use std::path::{Path, PathBuf};
use std::process::Command;

use cmwild::io::{BettiReportJson, HilbertJson, ReportJson, SCHEMA};
use serde::de::DeserializeOwned;
use serde::Serialize;
use tempfile::TempDir;

const QUARTIC: &str = r#"{"vars":["x","y","z"],"relations":["x^4+y^4+z^4"],"p":32003}"#;
const INSTANCE: &str = r#"{"ring":{"vars":["x","y","z"],"relations":["x^4+y^4+z^4"]},"sequence":["x^2","y^2"],"c":4,"basis":["x*y*z^2","x*z^3","y*z^3"],"n":2,"Ax":[[0,1],[0,0]],"Ay":[[0,0],[0,0]]}"#;

struct Run {
    stdout: String,
    stderr: String,
    code: i32,
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn cmwild(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_cmwild")).args(args).output().unwrap();
    Run { stdout: String::from_utf8(out.stdout).unwrap(), stderr: String::from_utf8(out.stderr).unwrap(), code: out.status.code().unwrap() }
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

/// Parses under the published schema and re-serializes byte for byte.
fn roundtrip<T: DeserializeOwned + Serialize>(stdout: &str) -> T {
    let v: T = serde_json::from_str(stdout).unwrap();
    assert_eq!(serde_json::to_string(&v).unwrap() + "\n", stdout);
    v
}

#[test]
fn check_fermat_quartic() {
    let dir = TempDir::new().unwrap();
    let ring = write(dir.path(), "ring.json", QUARTIC);
    let run = cmwild(&["check", "--ring", path(&ring)]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let rep: ReportJson = roundtrip(&run.stdout);
    assert_eq!(rep.schema, SCHEMA);
    assert_eq!(rep.verdict, "CMWild");
    assert_eq!((rep.m, rep.d, rep.c, rep.dim_c), (4, 2, Some(4), Some(3)));
    assert_eq!(rep.sequence, ["x^2", "y^2"]);
    assert_eq!((rep.p, rep.seed), (32003, 0));
}

#[test]
fn explicit_sequence_and_window() {
    let dir = TempDir::new().unwrap();
    let ring = write(dir.path(), "ring.json", QUARTIC);
    let run = cmwild(&["check", "--ring", path(&ring), "--sequence", "x,y", "--c-window", "3..8"]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let rep: ReportJson = roundtrip(&run.stdout);
    // R/(x, y) = k[z]/(z^4): one dimension per degree up to 3
    assert_eq!(rep.verdict, "Inconclusive");
    assert!(rep.narrative.contains("not a proof"));
    let run = cmwild(&["check", "--ring", path(&ring), "--sequence", "x,x^2"]);
    assert_eq!(run.code, 2);
    let run = cmwild(&["check", "--ring", path(&ring), "--c-window", "8..3"]);
    assert_eq!(run.code, 2);
}

#[test]
fn reports_are_reproducible() {
    let dir = TempDir::new().unwrap();
    let ring = write(dir.path(), "ring.json", r#"{"vars":["x","y","z","w"],"relations":["x^3+y^3+z^3+w^3+x*y*z"]}"#);
    let inst = write(dir.path(), "inst.json", INSTANCE);
    for args in [
        vec!["--seed", "17", "check", "--ring", path(&ring)],
        vec!["--seed", "17", "iso", "--instance", path(&inst), "--instance", path(&inst)],
        vec!["verify", "--instance", path(&inst)],
        vec!["--format", "text", "family", "--instance", path(&inst)],
    ] {
        let a = cmwild(&args);
        let b = cmwild(&args);
        assert_eq!(a.code, 0, "{}", a.stderr);
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn non_homogeneous_relation_is_rejected() {
    let dir = TempDir::new().unwrap();
    let ring = write(dir.path(), "ring.json", r#"{"vars":["x","y"],"relations":["x^4+y"]}"#);
    let run = cmwild(&["check", "--ring", path(&ring)]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("x^4+y"), "{}", run.stderr);
    assert!(run.stdout.is_empty());
    let missing = cmwild(&["check", "--ring", path(&dir.path().join("absent.json"))]);
    assert_eq!(missing.code, 2);
}

#[test]
fn budget_exhaustion_exits_3() {
    let dir = TempDir::new().unwrap();
    // two planes meeting in a point: depth 1, dimension 2
    let ring = write(dir.path(), "ring.json", r#"{"vars":["x","y","z","w"],"relations":["x*z","x*w","y*z","y*w"]}"#);
    let run = cmwild(&["check", "--ring", path(&ring)]);
    assert_eq!(run.code, 3);
    assert!(run.stderr.contains("regular sequence"));
}

#[test]
fn iso_of_equal_members_is_identity() {
    let dir = TempDir::new().unwrap();
    let a = write(dir.path(), "a.json", INSTANCE);
    let b = write(dir.path(), "b.json", &INSTANCE.replace(r#""Ax":[[0,1],[0,0]]"#, r#""Ax":[[0,0],[0,0]]"#));
    let run = cmwild(&["iso", "--instance", path(&a), "--instance", path(&a)]);
    assert_eq!(run.code, 0);
    let v: serde_json::Value = serde_json::from_str(&run.stdout).unwrap();
    assert_eq!(v["schema"], SCHEMA);
    assert_eq!(v["outcome"], "Isomorphic");
    assert_eq!(v["sigma"], serde_json::json!([[1, 0], [0, 1]]));
    let run = cmwild(&["iso", "--instance", path(&a), "--instance", path(&b)]);
    assert_eq!(run.code, 0);
    let v: serde_json::Value = serde_json::from_str(&run.stdout).unwrap();
    assert_eq!(v["outcome"], "NotIsomorphic");
    let run = cmwild(&["iso", "--instance", path(&a)]);
    assert_eq!(run.code, 2);
}

#[test]
fn resolve_and_hilbert_schemas() {
    let dir = TempDir::new().unwrap();
    let ring = write(dir.path(), "ring.json", QUARTIC);
    let run = cmwild(&["resolve", "--ring", path(&ring), "--sequence", "x^2,y^2"]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let b: BettiReportJson = roundtrip(&run.stdout);
    let triples: Vec<_> = b.betti.iter().map(|e| (e.i, e.j, e.rank)).collect();
    assert_eq!(triples, [(0, 0, 1), (1, 2, 2), (2, 4, 1)]);
    assert!(b.minimal);

    let run = cmwild(&["hilbert", "--ring", path(&ring), "--degrees", "0..5"]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let h: HilbertJson = roundtrip(&run.stdout);
    assert_eq!(h.krull_dimension, 2);
    assert_eq!(h.values, [(0, 1), (1, 3), (2, 6), (3, 10), (4, 14), (5, 18)]);
}

#[test]
fn verify_and_family_reports() {
    let dir = TempDir::new().unwrap();
    let inst = write(dir.path(), "inst.json", INSTANCE);
    let run = cmwild(&["verify", "--instance", path(&inst)]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let v: serde_json::Value = serde_json::from_str(&run.stdout).unwrap();
    assert_eq!(v["schema"], SCHEMA);
    assert_eq!(v["pass"], true);
    assert_eq!(v["mcm_verified"], true);
    let run = cmwild(&["family", "--instance", path(&inst)]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let v: serde_json::Value = serde_json::from_str(&run.stdout).unwrap();
    assert_eq!(v["schema"], SCHEMA);
    let text = cmwild(&["--format", "text", "verify", "--instance", path(&inst)]);
    assert!(text.stdout.contains("MCM: true"));
}

#[test]
fn recipes_and_field_override() {
    let dir = TempDir::new().unwrap();
    let ci = write(dir.path(), "ci.json", r#"{"vars":["x0","x1","x2","x3"],"relations":["x0^3+x1^3+x2^3+x3^3","x0*x1+x2*x3"]}"#);
    let run = cmwild(&["ci", "--ring", path(&ci)]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let rep: ReportJson = roundtrip(&run.stdout);
    assert_eq!((rep.verdict.as_str(), rep.c, rep.dim_c), ("CMWild", Some(3), Some(3)));

    let bad = write(dir.path(), "bad.json", r#"{"vars":["x0","x1","x2"],"relations":["x0*x1","x0*x2"]}"#);
    assert_eq!(cmwild(&["ci", "--ring", path(&bad)]).code, 2);

    let hyp = write(dir.path(), "hyp.json", r#"{"vars":["x","y"],"relations":["x^4+y^4"]}"#);
    let run = cmwild(&["--field-char", "101", "hypersurface", "--ring", path(&hyp)]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let rep: ReportJson = roundtrip(&run.stdout);
    assert_eq!((rep.verdict.as_str(), rep.p), ("StrictlyCMInfinite", 101));
    assert_eq!(cmwild(&["--field-char", "100", "hypersurface", "--ring", path(&hyp)]).code, 2);
}
