use std::path::Path;
use std::process::{Command, Output};

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_clawchroma"))
        .args(args)
        .current_dir(dir)
        .env("CLAWCHROMA_THREADS", "0")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, body: &str) {
    std::fs::write(dir.join(name), body).unwrap();
}

#[test]
fn check_reports_membership_and_witness() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "w6.col", "p edge 6 10\ne 1 2\ne 1 3\ne 1 4\ne 1 5\ne 1 6\ne 2 3\ne 3 4\ne 4 5\ne 5 6\ne 2 6\n");
    write(dir.path(), "claw.col", "p edge 4 3\ne 1 2\ne 1 3\ne 1 4\n");
    let o = run(dir.path(), &["check", "w6.col"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "in_class\n");
    let o = run(dir.path(), &["check", "claw.col"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "excluded claw center 1 leaves 2 3 4\n");
}

#[test]
fn color_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let gen = run(dir.path(), &["gen", "blowup", "2", "3"]);
    write(dir.path(), "b.col", &stdout(&gen));
    let o = run(dir.path(), &["color", "b.col"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("c colors_used 5\n"));
    write(dir.path(), "b.sol", &text);
    let v = run(dir.path(), &["verify", "b.col", "b.sol"]);
    assert!(v.status.success());
    assert_eq!(stdout(&v), "proper colors_used 5\n");
}

#[test]
fn strict_color_refuses_middle_case() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "b.col", &stdout(&run(dir.path(), &["gen", "blowup", "2", "2"])));
    let o = run(dir.path(), &["color", "--strict-omega", "b.col"]);
    assert_eq!(o.status.code(), Some(2));
    write(dir.path(), "k4.col", "p edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n");
    let o = run(dir.path(), &["color", "--strict-omega", "k4.col"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("c colors_used 4\n"));
}

#[test]
fn verify_flags_monochromatic_edge() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "p.col", "p edge 3 2\ne 1 2\ne 2 3\n");
    write(dir.path(), "bad.sol", "v 1 1\nv 2 2\nv 3 2\n");
    let o = run(dir.path(), &["verify", "p.col", "bad.sol"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "improper edge 2 3\n");
}

#[test]
fn malformed_input_exits_with_two() {
    let dir = tempfile::tempdir().unwrap();
    for (name, body) in [
        ("loop.col", "p edge 2 1\ne 1 1\n"),
        ("range.col", "p edge 2 1\ne 1 3\n"),
        ("noheader.col", "e 1 2\n"),
        ("junk.col", "p edge 2 1\nx 1 2\n"),
    ] {
        write(dir.path(), name, body);
        let o = run(dir.path(), &["check", name]);
        assert_eq!(o.status.code(), Some(2), "{name}");
        assert!(!o.stderr.is_empty());
    }
    assert_eq!(run(dir.path(), &["check", "missing.col"]).status.code(), Some(2));
    assert_eq!(run(dir.path(), &["gen", "random", "5", "1.5", "1"]).status.code(), Some(2));
    assert_eq!(run(dir.path(), &["stress", "--exhaustive", "9"]).status.code(), Some(2));
}

#[test]
fn header_edge_mismatch_only_warns() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "g.col", "p edge 3 5\ne 1 2\n");
    let o = run(dir.path(), &["check", "g.col"]);
    assert!(o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));
}

#[test]
fn text_report_and_clean_stress() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "w.col", &stdout(&run(dir.path(), &["gen", "wheel", "5"])));
    let o = run(dir.path(), &["report", "w.col"]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "in_class true\nomega 3\ndelta 5\nchi 4\nbranch wheel_case\nw6_witness 1 2 3 4 5 6\ncolors_used 4\n"
    );
    let s = run(dir.path(), &["stress", "--exhaustive", "5"]);
    assert!(s.status.success());
    let json: serde_json::Value = serde_json::from_slice(&s.stdout).unwrap();
    assert_eq!(json["graphs_checked"], 1099);
    assert_eq!(json["in_class_count"], 810);
    assert_eq!(json["theorem_violations"], 0);
    assert!(std::fs::read_dir(dir.path()).unwrap().all(|e| !e
        .unwrap()
        .file_name()
        .to_string_lossy()
        .starts_with("counterexample")));
}
