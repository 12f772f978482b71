//! The `fock-canon` binary: output streams, exit codes and the cache.

use std::process::{Command, Output};

fn bin(args: &[&str], cache: &std::path::Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fock-canon"))
        .args(args)
        .env("FOCK_CANON_CACHE", cache)
        .env_remove("RUST_LOG")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn documented_examples() {
    let dir = tempfile::tempdir().unwrap();
    let o = bin(&["pstar", "--e", "5", "--core", "3,3", "--mu", "8,3,2,1,1,1"], dir.path());
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "true\n"));
    let o = bin(&["lr", "3,2,1", "2,1", "2,1"], dir.path());
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "2\n"));
    let o = bin(&["verify", "main1", "--e", "2", "--max-n", "8"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("main1 e=2: pass"));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(bin(&["--help"], dir.path()).status.code(), Some(0));
    assert_eq!(bin(&[], dir.path()).status.code(), Some(2));
    assert_eq!(bin(&["canonical", "--e", "2"], dir.path()).status.code(), Some(2));
    let o = bin(&["verify", "main1", "--e", "2", "--jobs", "0"], dir.path());
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("jobs"));
    let o = bin(&["jantzen", "--e", "3", "--mu", "3", "--lambda", "2,1", "--l", "1"], dir.path());
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
}

#[test]
fn cache_is_written_and_reused() {
    let dir = tempfile::tempdir().unwrap();
    let first = bin(&["canonical", "--e", "3", "--n", "7", "--format", "json"], dir.path());
    assert_eq!(first.status.code(), Some(0));
    assert!(dir.path().join("canonical-e3-n7.json").exists());
    let second = bin(&["canonical", "--e", "3", "--n", "7", "--format", "json"], dir.path());
    assert_eq!(first.stdout, second.stdout);

    std::fs::write(dir.path().join("canonical-e3-n7.json"), "{").unwrap();
    let third = bin(&["canonical", "--e", "3", "--n", "7", "--format", "json"], dir.path());
    assert_eq!(first.stdout, third.stdout);

    let other = tempfile::tempdir().unwrap();
    let o = bin(&["--cache-dir", other.path().to_str().unwrap(), "canonical", "--e", "2", "--n", "3"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert!(other.path().join("canonical-e2-n3.json").exists());
}

#[test]
fn formats() {
    let dir = tempfile::tempdir().unwrap();
    let csv = stdout(&bin(&["canonical", "--e", "2", "--n", "3", "--format", "csv"], dir.path()));
    assert!(csv.starts_with("mu,lambda,coefficient\n"));
    let tex = stdout(&bin(&["canonical", "--e", "2", "--n", "3", "--format", "latex"], dir.path()));
    assert_eq!(tex.matches("\\begin{tabular}").count(), 2);
    let json = stdout(&bin(&["hvector", "--e", "5", "--core", "3,3", "--mu", "8,3,2,1,1,1", "--format", "json"], dir.path()));
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["in_pstar"], serde_json::json!(true));
}
