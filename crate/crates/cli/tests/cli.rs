use std::path::Path;
use std::process::{Command, Output};

fn relroots(args: &[&str], cache: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_relroots"))
        .args(args)
        .env("RELROOTS_CACHE_DIR", cache)
        .output()
        .expect("relroots runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn project_a2_flip() {
    let dir = tempfile::tempdir().unwrap();
    let o = relroots(&["project", "A", "2", "--gamma", "flip", "--J", "all"], dir.path());
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("roots=4\n"), "{s}");
    assert!(s.contains("type=BC1\n"), "{s}");
}

#[test]
fn borel_bc_from_a4_lists_eight() {
    let dir = tempfile::tempdir().unwrap();
    let o = relroots(&["--json", "borel", "BC-from-A4"], dir.path());
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["count"], 8);
    assert_eq!(v["borel[7].witness"].as_array().unwrap().len(), 2);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(relroots(&["nonsense"], dir.path()).status.code(), Some(2));
    assert_eq!(relroots(&["project", "A", "3", "--gamma", "flip", "--J", "1"], dir.path()).status.code(), Some(2));
    assert_eq!(relroots(&["regular", "BC-from-A2"], dir.path()).status.code(), Some(1));
    assert_eq!(relroots(&["regular", "C-from-A3"], dir.path()).status.code(), Some(0));
    assert_eq!(relroots(&["core", "BC-from-A4", "--borel", "3"], dir.path()).status.code(), Some(0));
    assert_eq!(relroots(&["core", "BC-from-A4", "--borel", "99"], dir.path()).status.code(), Some(2));
}

#[test]
fn support_reports_terms() {
    let dir = tempfile::tempdir().unwrap();
    let o = relroots(&["support", "BC-from-A4", "--alpha", "1,0", "--beta", "0,1"], dir.path());
    assert!(o.status.success());
    assert!(stdout(&o).contains("terms=3\n"));
    let o = relroots(&["support", "BC-from-A4", "--alpha", "0,2", "--beta", "0,-1"], dir.path());
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn certify_verify_round_trip_and_tamper() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("cert.json");
    let c = cert.to_str().unwrap();
    let o = relroots(&["certify", "C-from-A3", "--out", c], dir.path());
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let o = relroots(&["verify", c], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("valid=true"));

    // Changing the body breaks the digest.
    let text = std::fs::read_to_string(&cert).unwrap();
    let tampered = text.replacen("\"chamber\":[1,1,1]", "\"chamber\":[1,1,2]", 1);
    assert!(tampered != text, "nothing to tamper with");
    std::fs::write(&cert, tampered).unwrap();
    let o = relroots(&["verify", c], dir.path());
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("valid=false"));
}

#[test]
fn corrupt_cache_is_recomputed() {
    let dir = tempfile::tempdir().unwrap();
    let first = relroots(&["certify", "BC-from-A4"], dir.path());
    assert!(first.status.success());
    let cached: Vec<_> = std::fs::read_dir(dir.path()).unwrap().map(|e| e.unwrap().path()).collect();
    assert_eq!(cached.len(), 1);
    std::fs::write(&cached[0], "{ not json").unwrap();
    let second = relroots(&["certify", "BC-from-A4"], dir.path());
    assert!(second.status.success());
    assert_eq!(first.stdout, second.stdout);
    let third = relroots(&["certify", "BC-from-A4"], dir.path());
    assert_eq!(first.stdout, third.stdout);
}

#[test]
fn catalog_lists_entries() {
    let dir = tempfile::tempdir().unwrap();
    let s = stdout(&relroots(&["catalog"], dir.path()));
    assert!(s.contains("F-from-E6=E 6 --gamma flip --J all type=F4"));
    assert!(s.contains("G-from-D4=D 4 --gamma triality --J all type=G2"));
}

#[test]
fn build_lists_roots() {
    let dir = tempfile::tempdir().unwrap();
    let s = stdout(&relroots(&["build", "G", "2"], dir.path()));
    assert!(s.contains("roots=12\n") && s.contains("positive=6\n"), "{s}");
}
