use std::path::PathBuf;
use std::process::{Command, Output};

use extri_core::karoubi::FTriangle;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples").join(name)
}

fn extri(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_extri")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn validate_accepts_the_shipped_categories() {
    for name in ["a2_balanced.json", "a3_balanced.json", "a2_formal.json", "a2_tampered.json"] {
        let o = extri(&["validate", fixture(name).to_str().unwrap()]);
        assert_eq!(code(&o), 0, "{name}: {}", stderr(&o));
        assert!(stdout(&o).starts_with("ok: "));
    }
}

#[test]
fn validate_reports_split_verdicts() {
    let o = extri(&["validate", fixture("a2_balanced.json").to_str().unwrap()]);
    let text = stdout(&o);
    assert!(text.contains("idempotent e on G image (1,0) splits in base: no"), "{text}");
    assert!(text.contains("idempotent one on G image (1,1) splits in base: yes"), "{text}");
    assert!(text.contains("idempotent e_plus_f on GG image (1,1) splits in base: yes"), "{text}");
}

#[test]
fn malformed_json_exits_two() {
    let o = extri(&["validate", fixture("malformed.json").to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("parse error"));
}

#[test]
fn missing_file_exits_two() {
    let o = extri(&["validate", "/nonexistent/extri.json"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn semantic_errors_exit_three_and_name_the_field() {
    let cases = [
        ("bad_prime.json", "prime:"),
        ("cyclic.json", "quiver:"),
        ("nonmember.json", "objects.S1: not a member"),
        ("not_idempotent.json", "idempotents.bad"),
    ];
    for (name, needle) in cases {
        let o = extri(&["validate", fixture(name).to_str().unwrap()]);
        assert_eq!(code(&o), 3, "{name}");
        assert!(stderr(&o).contains(needle), "{name}: {}", stderr(&o));
    }
}

#[test]
fn ext_dimensions_on_the_a2_fixture() {
    let cfg = fixture("a2_balanced.json");
    let cfg = cfg.to_str().unwrap();
    let first = |args: &[&str]| -> String {
        let o = extri(args);
        assert_eq!(code(&o), 0, "{}", stderr(&o));
        stdout(&o).lines().next().unwrap().to_string()
    };
    assert_eq!(first(&["ext", cfg, "G", "G"]), "dim 1");
    assert_eq!(first(&["ext", cfg, "G", "G", "--idem-p", "e", "--idem-q", "f"]), "dim 1");
    assert_eq!(first(&["ext", cfg, "G", "G", "--idem-p", "f", "--idem-q", "e"]), "dim 0");
}

#[test]
fn ext_rejects_unknown_names() {
    let cfg = fixture("a2_balanced.json");
    let o = extri(&["ext", cfg.to_str().unwrap(), "G", "Nope"]);
    assert_eq!(code(&o), 3);
    let o = extri(&["ext", cfg.to_str().unwrap(), "G", "G", "--idem-p", "nope"]);
    assert_eq!(code(&o), 3);
    let o = extri(&["ext", cfg.to_str().unwrap(), "P1", "G", "--idem-p", "e"]);
    assert_eq!(code(&o), 3);
}

#[test]
fn realize_matches_golden_output() {
    let cfg = fixture("a2_balanced.json");
    let o = extri(&["realize", cfg.to_str().unwrap(), "G", "G", "--coords", "1", "--idem-p", "e", "--idem-q", "f"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let golden = include_str!("golden/realize_a2_ef.json");
    assert_eq!(stdout(&o), golden);
}

#[test]
fn realize_output_round_trips() {
    let cfg = fixture("a2_balanced.json");
    let o = extri(&["realize", cfg.to_str().unwrap(), "G", "G", "--coords", "1", "--idem-p", "e", "--idem-q", "f"]);
    let tri: FTriangle = serde_json::from_str(&stdout(&o)).unwrap();
    let again = serde_json::to_string_pretty(&tri).unwrap();
    assert_eq!(format!("{again}\n"), stdout(&o));
    let back: FTriangle = serde_json::from_str(&again).unwrap();
    assert_eq!(back, tri);
}

#[test]
fn realize_zero_class_and_bad_coords() {
    let cfg = fixture("a2_balanced.json");
    let cfg = cfg.to_str().unwrap();
    let o = extri(&["realize", cfg, "G", "G", "--coords", "0", "--idem-p", "e", "--idem-q", "f"]);
    assert_eq!(code(&o), 0);
    let o = extri(&["realize", cfg, "G", "G", "--coords", "1,1", "--idem-p", "e", "--idem-q", "f"]);
    assert_eq!(code(&o), 3);
    assert!(stderr(&o).contains("coords"));
    let o = extri(&["realize", cfg, "G", "G", "--coords", "-1", "--idem-p", "e", "--idem-q", "f"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn zero_trials_pass_trivially() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("r.json");
    let o = extri(&[
        "check",
        fixture("a2_balanced.json").to_str().unwrap(),
        "--trials",
        "0",
        "--report",
        report.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert!(stdout(&o).contains("passed 0 failed 0"));
    assert!(report.exists());
}

#[test]
fn unknown_suite_or_tamper_is_semantic() {
    let cfg = fixture("a2_balanced.json");
    let o = extri(&["check", cfg.to_str().unwrap(), "--trials", "1", "--suite", "everything"]);
    assert_eq!(code(&o), 3);
    let o = extri(&["check", cfg.to_str().unwrap(), "--trials", "1", "--tamper", "no.such.check"]);
    assert_eq!(code(&o), 3);
}

#[test]
fn tampered_fixture_fails_and_replays() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("r.json");
    let o = extri(&[
        "check",
        fixture("a2_tampered.json").to_str().unwrap(),
        "--report",
        report.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 1, "{}", stdout(&o));
    assert!(stdout(&o).contains("FAIL karoubi.well_defined 0/20"), "{}", stdout(&o));
    for line in stdout(&o).lines().filter(|l| l.starts_with("PASS") || l.starts_with("FAIL")) {
        assert_eq!(line.starts_with("FAIL"), line.contains("karoubi.well_defined"), "{line}");
    }

    let o = extri(&["replay", report.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let text = stdout(&o);
    assert!(text.contains("replayed 4 failures"), "{text}");
    assert_eq!(text.lines().filter(|l| l.starts_with("REPRODUCED")).count(), 4);
}

#[test]
fn tamper_flag_adds_to_the_config() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("r.json");
    let o = extri(&[
        "check",
        fixture("a3_balanced.json").to_str().unwrap(),
        "--trials",
        "5",
        "--suite",
        "weak",
        "--tamper",
        "weak.split_idem_fill",
        "--report",
        report.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("FAIL weak.split_idem_fill 0/5"), "{}", stdout(&o));
}

#[test]
fn replay_of_a_garbage_report_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("r.json");
    std::fs::write(&report, "{not json").unwrap();
    let o = extri(&["replay", report.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
}

#[test]
fn check_reports_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = fixture("a3_balanced.json");
    let run = |name: &str| {
        let path = dir.path().join(name);
        let o = extri(&[
            "check",
            cfg.to_str().unwrap(),
            "--seed",
            "7",
            "--trials",
            "10",
            "--report",
            path.to_str().unwrap(),
        ]);
        assert_eq!(code(&o), 0, "{}", stdout(&o));
        (stdout(&o).replace(path.to_str().unwrap(), ""), std::fs::read(path).unwrap())
    };
    assert_eq!(run("a.json"), run("b.json"));
}

#[test]
fn formal_backend_commands_work() {
    let cfg = fixture("a2_formal.json");
    let o = extri(&["ext", cfg.to_str().unwrap(), "G", "G"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let o = extri(&["validate", cfg.to_str().unwrap()]);
    assert!(stdout(&o).contains("formal [S1, S2, P1]"), "{}", stdout(&o));
}
