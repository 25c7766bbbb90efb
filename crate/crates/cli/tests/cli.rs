use std::path::PathBuf;
use std::process::{Command, Output};

use moncoh_cli::render_json;
use serde_json::Value;

fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

fn corpus_files() -> Vec<PathBuf> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(corpus_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "ideal"))
        .collect();
    files.sort();
    files
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_moncoh"))
        .args(args)
        .output()
        .unwrap()
}

fn write_temp(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("moncoh-cli-tests-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn verify_passes_on_every_corpus_ideal() {
    let files = corpus_files();
    assert!(files.len() >= 5);
    for f in files {
        let out = run(&["verify", "--dmax", "2", f.to_str().unwrap()]);
        assert_eq!(
            out.status.code(),
            Some(0),
            "{}: {}",
            f.display(),
            String::from_utf8_lossy(&out.stdout)
        );
    }
}

#[test]
fn verify_random_instances() {
    let f = corpus_dir().join("intro.ideal");
    let out = run(&[
        "--json",
        "verify",
        "--random",
        "5",
        "--seed",
        "11",
        "--dmax",
        "2",
        f.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["results"]["reports"].as_array().unwrap().len(), 6);
    assert_eq!(doc["results"]["passed"], true);
    let again = run(&[
        "--json",
        "verify",
        "--random",
        "5",
        "--seed",
        "11",
        "--dmax",
        "2",
        f.to_str().unwrap(),
    ]);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn json_documents_round_trip() {
    let f = corpus_dir().join("intro.ideal");
    let f = f.to_str().unwrap();
    let commands: Vec<Vec<&str>> = vec![
        vec!["dual", f],
        vec!["complex", f],
        vec!["complex", "--alpha", "-1,0,-1,-1", f],
        vec!["complex", "--alpha", "-1,0,-1,-1", "--nerve", f],
        vec!["betti", f],
        vec!["betti", "--of", "dual", f],
        vec!["lc", "--i", "2", "--alpha", "-2,-1,-1,-1", f],
        vec!["lc", "--i", "2", "--alpha", "-2,-1,-1,-1", "--via-t", f],
        vec!["ext", "--i", "2", "--alpha", "-1,-1,-1,-1", f],
        vec![
            "mult",
            "--i",
            "2",
            "--alpha",
            "-1,-1,-1,-1",
            "--var",
            "a",
            f,
        ],
        vec!["filtration", "--i", "2", f],
        vec!["ass", "--i", "2", f],
        vec!["ass", "--i", "2", "--minimal", f],
        vec!["hilbert", "--i", "2", f],
        vec!["hilbert", "--i", "2", "--box", "-1..1", f],
        vec!["hilbert", "--i", "2", "--box", "-2..0", "--module", "lc", f],
        vec!["check", f],
        vec!["verify", "--dmax", "1", f],
    ];
    for args in commands {
        let mut full = vec!["--json"];
        full.extend(args.iter());
        let out = run(&full);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        let text = String::from_utf8(out.stdout).unwrap();
        let doc: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(render_json(&doc), text.trim_end(), "{args:?}");
        for key in ["command", "input_hash", "field", "results"] {
            assert!(doc.get(key).is_some(), "{args:?} lacks {key}");
        }
        assert_eq!(doc["command"], args[0]);
        assert_eq!(doc["input_hash"].as_str().unwrap().len(), 64);
    }
}

#[test]
fn documented_outputs() {
    let dir = corpus_dir();
    let intro = dir.join("intro.ideal");
    let out = run(&[
        "ext",
        "--i",
        "2",
        "--alpha",
        "-1,-1,-1,-1",
        intro.to_str().unwrap(),
    ]);
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("Ext^2(R/B,R)_(-1,-1,-1,-1) = 1"));
    let out = run(&[
        "--json",
        "ext",
        "--i",
        "2",
        "--alpha",
        "-1,-1,-1,-1",
        intro.to_str().unwrap(),
    ]);
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["results"]["dim"], 1);
    let out = run(&[
        "ass",
        "--i",
        "3",
        dir.join("square_diagonal.ideal").to_str().unwrap(),
    ]);
    assert_eq!(
        String::from_utf8_lossy(&out.stdout).trim(),
        "(a,b,d) (b,c,d)"
    );
}

#[test]
fn field_flag_and_file_field() {
    let f = corpus_dir().join("pentagon.ideal");
    let out = run(&["--json", "dual", f.to_str().unwrap()]);
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["field"], "gf 32003");
    let out = run(&["--json", "--field", "rational", "dual", f.to_str().unwrap()]);
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["field"], "rational");
    let out = run(&["--field", "gf 6", "dual", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn non_squarefree_ext_uses_the_general_complex() {
    let f = write_temp("powers.ideal", "vars x y\nx^2, x*y\n");
    let out = run(&[
        "--json",
        "ext",
        "--i",
        "1",
        "--alpha",
        "-2,0",
        f.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["lc", "--i", "1", "--alpha", "-2,0", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn exit_codes() {
    let bad = write_temp("bad.ideal", "vars a b\nab, az\n");
    let out = run(&["dual", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains(":2:6:"), "{stderr}");

    let intro = corpus_dir().join("intro.ideal");
    let out = run(&[
        "ext",
        "--i",
        "2",
        "--alpha",
        "-1,-1",
        intro.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&[
        "mult",
        "--i",
        "2",
        "--alpha",
        "0,0,0,0",
        "--var",
        "q",
        intro.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));

    let zero = write_temp("zero.ideal", "vars a b\n");
    assert_eq!(
        run(&["dual", zero.to_str().unwrap()]).status.code(),
        Some(3)
    );
    let unit = write_temp("unit.ideal", "vars a b\n1\n");
    assert_eq!(
        run(&["betti", unit.to_str().unwrap()]).status.code(),
        Some(3)
    );
    let missing = corpus_dir().join("does-not-exist.ideal");
    assert_eq!(
        run(&["dual", missing.to_str().unwrap()]).status.code(),
        Some(1)
    );
}

#[test]
fn thread_cap_is_honoured() {
    let f = corpus_dir().join("square_diagonal.ideal");
    let out = Command::new(env!("CARGO_BIN_EXE_moncoh"))
        .env("MONCOH_THREADS", "1")
        .args(["ass", "--i", "3", f.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(
        String::from_utf8_lossy(&out.stdout).trim(),
        "(a,b,d) (b,c,d)"
    );
}
