use std::path::Path;
use std::process::{Command, Output};

use cwlab::algebra_file::load_algebra_file;
use cwlab::verify_cartan_weyl;

fn cwlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cwlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn table_prints_exact_rows() {
    let o = cwlab(&["table", "--source", "su3-x", "--format", "txt"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("[X1,X2] = 2*i · X7\n"));
    assert!(text.contains("[X1,X5] = i · X4\n"));
    assert!(text.contains("[X5,X6] = -i · X7 + sqrt3*i · X8\n"));
    assert_eq!(text.lines().count(), 28);
}

#[test]
fn exit_codes() {
    assert_eq!(cwlab(&["verify", "--source", "su3-boson"]).status.code(), Some(0));
    assert_eq!(cwlab(&["verify", "--source", "su3-x"]).status.code(), Some(2));
    assert_eq!(cwlab(&["verify", "--source", "sl3c"]).status.code(), Some(2));
    assert_eq!(cwlab(&["roots", "--source", "sl3c"]).status.code(), Some(0));
    assert_eq!(cwlab(&["table", "--source", "su4"]).status.code(), Some(1));
    assert_eq!(cwlab(&["table", "--source", "sl3c", "--format", "svg"]).status.code(), Some(1));
    assert_eq!(cwlab(&["plot", "--source", "sl3c"]).status.code(), Some(1));
    assert_eq!(cwlab(&["table"]).status.code(), Some(1));
}

#[test]
fn outputs_are_deterministic() {
    for (cmd, fmt) in [
        ("table", "md"),
        ("roots", "json"),
        ("verify", "json"),
        ("verify", "txt"),
        ("errata", "md"),
        ("diagram", "svg"),
        ("diagram", "txt"),
        ("normalize", "json"),
    ] {
        let a = cwlab(&[cmd, "--source", "sl3c", "--format", fmt]);
        let b = cwlab(&[cmd, "--source", "sl3c", "--format", fmt]);
        assert!(!a.stdout.is_empty(), "{cmd} {fmt}");
        assert_eq!(a.stdout, b.stdout, "{cmd} {fmt}");
    }
}

#[test]
fn normalize_round_trip_passes_strict() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sl3c-normalized.json");
    let o = cwlab(&["normalize", "--source", "sl3c", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());

    let p = load_algebra_file(&path).unwrap();
    assert!(verify_cartan_weyl(&p).verdicts.eq3_strict);
    let o = cwlab(&["verify", "--source", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verdicts"]["strict"], true);
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn invalid_files_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let dup = write(
        dir.path(),
        "dup.json",
        r#"{"name": "d", "backend": "matrix", "n": 2, "cartan": ["A"], "generators": [
            {"label": "A", "entries": [["1","0"],["0","-1"]]},
            {"label": "A", "entries": [["0","1"],["0","0"]]}]}"#,
    );
    let o = cwlab(&["table", "--source", &dup]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("duplicate label \"A\""));

    let ragged = write(
        dir.path(),
        "ragged.json",
        r#"{"name": "r", "backend": "matrix", "n": 3, "cartan": ["A"], "generators": [
            {"label": "A", "entries": [["1","0","0"],["0","-1","0"]]}]}"#,
    );
    let o = cwlab(&["roots", "--source", &ragged]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not square"));

    let missing = dir.path().join("missing.json");
    assert_eq!(
        cwlab(&["table", "--source", missing.to_str().unwrap()]).status.code(),
        Some(1)
    );
}

#[test]
fn boson_file_source() {
    let dir = tempfile::tempdir().unwrap();
    let sl2 = write(
        dir.path(),
        "sl2-boson.json",
        r#"{"name": "sl2-boson", "backend": "boson", "modes": 2, "cartan": ["H"],
            "generators": [
              {"label": "H", "terms": [
                {"creation": [1,0], "annihilation": [1,0], "coeff": "1/2"},
                {"creation": [0,1], "annihilation": [0,1], "coeff": "-1/2"}]},
              {"label": "E", "terms": [{"creation": [1,0], "annihilation": [0,1], "coeff": "1"}]},
              {"label": "F", "terms": [{"creation": [0,1], "annihilation": [1,0], "coeff": "1"}]}]}"#,
    );
    let o = cwlab(&["roots", "--source", &sl2, "--format", "txt"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "E: (1)\nF: (-1)\n");
    let o = cwlab(&["diagram", "--source", &sl2]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("rank 2"));
}
