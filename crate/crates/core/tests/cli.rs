use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const GOLDEN: &str = r#"{"type":"denjoy_flip","theta":{"p":-1,"q":1,"d":5,"r":2}}"#;
const ODOMETER3: &str = r#"{"type":"odometer","chain":{"base":3,"growth":"geometric","levels":5}}"#;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cantor-dihedral")).args(args).output().unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    let dir = TempDir::new().unwrap();
    let sys = write(dir.path(), "golden.json", GOLDEN);
    let sys = sys.to_str().unwrap();
    for args in [
        vec!["homology", "--system", sys, "--max-level", "6", "--method", "both"],
        vec!["certify", "--system", sys, "--eps", "1/4"],
        vec!["castle", "--system", sys],
        vec!["oracle-check", "--seed", "9", "--count", "5"],
    ] {
        let a = bin(&args);
        let b = bin(&args);
        assert!(a.status.success(), "{args:?}: {}", String::from_utf8_lossy(&a.stderr));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn fixed_points_and_exit_codes() {
    let dir = TempDir::new().unwrap();
    let golden = write(dir.path(), "golden.json", GOLDEN);
    let od = write(dir.path(), "od.json", ODOMETER3);
    let v = json(&bin(&["fixed-points", "--system", golden.to_str().unwrap()]));
    assert_eq!(v, serde_json::json!({"(0,1)": ["1/2"], "(1,1)": ["θ/2", "(1+θ)/2"]}));
    let v = json(&bin(&["fixed-points", "--system", od.to_str().unwrap(), "--elements", "[[0,1]]"]));
    assert_eq!(v, serde_json::json!({"(0,1)": {"count": 1, "stabilizedAt": 1}}));

    let identity = bin(&["fixed-points", "--system", golden.to_str().unwrap(), "--elements", "[[0,0]]"]);
    assert_eq!(identity.status.code(), Some(2));
    let bad = write(dir.path(), "bad.json", r#"{"type":"denjoy_flip","theta":{"p":-1,"q":1,"d":5,"r":2},"extra":0}"#);
    assert_eq!(bin(&["homology", "--system", bad.to_str().unwrap()]).status.code(), Some(2));
    let short = bin(&["fixed-points", "--system", od.to_str().unwrap(), "--max-level", "2"]);
    assert_eq!(short.status.code(), Some(3));
    let fp_on_odometer = bin(&["homology", "--system", od.to_str().unwrap(), "--method", "freeproduct"]);
    assert_eq!(fp_on_odometer.status.code(), Some(2));
}

#[test]
fn certificate_round_trip_through_files() {
    let dir = TempDir::new().unwrap();
    let sys = write(dir.path(), "golden.json", GOLDEN);
    let cert = dir.path().join("cert.json");
    let out = bin(&["certify", "--system", sys.to_str().unwrap(), "--eps", "1/3", "--out", cert.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v = json(&bin(&["certify", "--verify", cert.to_str().unwrap()]));
    assert_eq!(v["verified"]["covers"], Value::Bool(true));

    let mut tampered: Value = serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    tampered["eps"] = Value::String("1/100".into());
    let bad = write(dir.path(), "tampered.json", &tampered.to_string());
    assert_eq!(bin(&["certify", "--verify", bad.to_str().unwrap()]).status.code(), Some(4));
}

#[test]
fn odometer_homology_through_cli() {
    let dir = TempDir::new().unwrap();
    let od = write(dir.path(), "od.json", ODOMETER3);
    let v = json(&bin(&["homology", "--system", od.to_str().unwrap()]));
    assert_eq!(v["H0"]["localization"], "Z[1/3]");
    assert_eq!(v["H1"]["torsion"], serde_json::json!([2, 2]));
    assert_eq!(v["tail"]["from"], 2);
}
