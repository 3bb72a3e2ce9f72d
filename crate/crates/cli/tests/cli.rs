use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use hlk::catalog;
use hlk::io::{canonical, parse};
use serde_json::Value;

fn hlk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hlk"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_entry(dir: &Path, name: &str) -> Vec<PathBuf> {
    let out = hlk(&["catalog", name, "--out", dir.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .map(PathBuf::from)
        .collect()
}

fn suite(cmd: &str, files: &[PathBuf], report: Option<&Path>) -> Output {
    let mut args = vec![cmd.to_string()];
    for f in files {
        args.push("-i".into());
        args.push(f.display().to_string());
    }
    if let Some(r) = report {
        args.push("--report".into());
        args.push(r.display().to_string());
    }
    let refs: Vec<&str> = args.iter().map(String::as_str).collect();
    hlk(&refs)
}

#[test]
fn catalog_files_round_trip_byte_for_byte() {
    for (name, _, _) in catalog::ENTRIES {
        for (file, text) in catalog::files(name, None, None).unwrap() {
            let v = parse(&text).unwrap();
            assert_eq!(canonical(&v), text, "{file}");
        }
    }
}

#[test]
fn every_catalog_file_validates() {
    let dir = tempfile::tempdir().unwrap();
    for (name, _, _) in catalog::ENTRIES {
        let sub = dir.path().join(name);
        let files = write_entry(&sub, name);
        let out = suite("validate", &files, None);
        assert_eq!(out.status.code(), Some(0), "{name}: {}", String::from_utf8_lossy(&out.stdout));
    }
}

#[test]
fn reports_are_deterministic_apart_from_timings() {
    let dir = tempfile::tempdir().unwrap();
    let files = write_entry(dir.path(), "abelian-surface");
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    assert_eq!(suite("lefschetz", &files, Some(&a)).status.code(), Some(0));
    assert_eq!(suite("lefschetz", &files, Some(&b)).status.code(), Some(0));
    let strip = |p: &Path| {
        let mut v: Value = serde_json::from_str(&fs::read_to_string(p).unwrap()).unwrap();
        assert!(v["timings"]["total_ms"].is_number());
        v.as_object_mut().unwrap().remove("timings");
        canonical(&v)
    };
    assert_eq!(strip(&a), strip(&b));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let torus = write_entry(dir.path(), "torus");
    assert_eq!(suite("lefschetz", &torus, None).status.code(), Some(0));

    // A class outside the cone is a check failure, not an input error.
    let mut v: Value = serde_json::from_str(&fs::read_to_string(&torus[0]).unwrap()).unwrap();
    v["kahler_classes"][0][0]["coeff"]["num"] = Value::from(-1);
    let bad_class = dir.path().join("negative.json");
    fs::write(&bad_class, canonical(&v)).unwrap();
    let out = suite("lefschetz", &[bad_class], None);
    assert_eq!(out.status.code(), Some(1), "{}", String::from_utf8_lossy(&out.stdout));
    assert!(String::from_utf8_lossy(&out.stdout).contains("FAIL"));

    let dplus = write_entry(&dir.path().join("dplus"), "dplus-only");
    assert_eq!(suite("assemble", &dplus, None).status.code(), Some(1));

    let broken = dir.path().join("broken.json");
    fs::write(&broken, "{ not json").unwrap();
    let out = suite("validate", &[broken], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));

    let missing = dir.path().join("missing.json");
    assert_eq!(suite("validate", &[missing], None).status.code(), Some(2));
    assert_eq!(hlk(&["catalog", "nope"]).status.code(), Some(2));
    assert_eq!(suite("assemble", &torus, None).status.code(), Some(2));
}

#[test]
fn catalog_listing_names_every_entry() {
    let out = hlk(&["catalog"]);
    let text = String::from_utf8(out.stdout).unwrap();
    for (name, _, _) in catalog::ENTRIES {
        assert!(text.lines().any(|l| l.starts_with(name)), "{name}");
    }
}

#[test]
fn thread_count_does_not_change_results() {
    let dir = tempfile::tempdir().unwrap();
    let files = write_entry(dir.path(), "genus2");
    let run = |threads: &str, name: &str| {
        let report = dir.path().join(name);
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_hlk"));
        cmd.env("HLK_THREADS", threads).arg("assemble").arg("--report").arg(&report);
        for f in &files {
            cmd.arg("-i").arg(f);
        }
        assert!(cmd.output().unwrap().status.success());
        let mut v: Value = serde_json::from_str(&fs::read_to_string(&report).unwrap()).unwrap();
        v.as_object_mut().unwrap().remove("timings");
        canonical(&v)
    };
    assert_eq!(run("1", "one.json"), run("2", "two.json"));
}
