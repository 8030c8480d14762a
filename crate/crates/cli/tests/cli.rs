use std::path::Path;
use std::process::{Command, Output};

use moufang::suite::MachineReport;

fn verify(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_moufang-verify"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn gen_is_deterministic_and_rejects_unknown_names() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert_eq!(
        code(&verify(
            d,
            &["gen", "random-anticomm", "--seed", "42", "--out", "a.json"]
        )),
        0
    );
    assert_eq!(
        code(&verify(
            d,
            &["gen", "random-anticomm", "--seed", "42", "--out", "b.json"]
        )),
        0
    );
    assert_eq!(
        std::fs::read(d.join("a.json")).unwrap(),
        std::fs::read(d.join("b.json")).unwrap()
    );
    let bad = verify(d, &["gen", "nonions", "--out", "c.json"]);
    assert_eq!(code(&bad), 64);
    assert!(!d.join("c.json").exists());
}

#[test]
fn validate_reports_shape_and_errors() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    verify(d, &["gen", "octonions", "--out", "o.json"]);
    let ok = verify(d, &["validate", "o.json"]);
    assert_eq!(code(&ok), 0);
    assert!(stdout(&ok).contains("binary-algebra, dim 8, unit e0"));
    std::fs::write(
        d.join("bad.json"),
        "{\n  \"kind\": \"anticomm-algebra\",\n  \"dim\": 2,\n  \"c\": [[0, 1, 0, \"2/4\"]]\n}\n",
    )
    .unwrap();
    let bad = verify(d, &["validate", "bad.json"]);
    assert_eq!(code(&bad), 64);
    assert!(String::from_utf8_lossy(&bad.stderr).contains("c[0]"));
    std::fs::write(d.join("broken.json"), "{\n  \"kind\": ").unwrap();
    let broken = verify(d, &["validate", "broken.json"]);
    assert!(String::from_utf8_lossy(&broken.stderr).contains("line 2"));
}

#[test]
fn lie_cross_suites() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    verify(d, &["gen", "lie-cross", "--out", "l.json"]);
    let out = verify(
        d,
        &[
            "check",
            "l.json",
            "--suite",
            "sagle-yamaguti,maltsev,equivalence",
        ],
    );
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("  sagle-yamaguti: pass"));
    assert!(text.contains("  maltsev: pass"));
    assert!(text.contains("  equivalence: agree"));
}

#[test]
fn usage_errors_precede_any_work() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    verify(d, &["gen", "lie-cross", "--out", "l.json"]);
    for suites in ["maltsev,triality", "maltsev,maurer-cartan"] {
        let out = verify(d, &["check", "l.json", "--suite", suites, "--out", "r.txt"]);
        assert_eq!(code(&out), 64, "{suites}");
        assert!(!d.join("r.txt").exists());
    }
    assert_eq!(
        code(&verify(
            d,
            &["check", "l.json", "--suite", "maltsev", "--cap", "0"]
        )),
        64
    );
    assert_eq!(
        code(&verify(
            d,
            &["check", "l.json", "--suite", "maltsev", "--format", "xml"]
        )),
        64
    );
    assert_eq!(
        code(&verify(d, &["check", "missing.json", "--suite", "maltsev"])),
        64
    );
}

#[test]
fn exit_code_counts_failed_suites_and_witnesses_replay() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    verify(d, &["gen", "sedenions", "--out", "s.json"]);
    let out = verify(
        d,
        &[
            "check",
            "s.json",
            "--suite",
            "axioms,maurer-cartan,maltsev,equivalence",
            "--format",
            "machine",
            "--out",
            "r.json",
        ],
    );
    // axioms, maurer-cartan and maltsev fail; both equivalence checkers fail, so they agree
    assert_eq!(code(&out), 3);
    let report: MachineReport =
        serde_json::from_str(&std::fs::read_to_string(d.join("r.json")).unwrap()).unwrap();
    assert_eq!(report.failed_suites, 3);
    assert_eq!(report.inputs[0].flags, vec!["unverified model".to_string()]);
    let outcomes: Vec<&str> = report.inputs[0]
        .suites
        .iter()
        .map(|s| s.outcome.as_str())
        .collect();
    assert_eq!(outcomes, ["fail", "fail", "fail", "agree"]);
    let total: usize = report.inputs[0]
        .suites
        .iter()
        .flat_map(|s| &s.checks)
        .map(|c| c.witnesses.len())
        .sum();
    assert!(total > 10);
    for index in 0..total {
        let replay = verify(
            d,
            &["verify-witness", "r.json", "--index", &index.to_string()],
        );
        assert_eq!(code(&replay), 0, "witness {index}: {}", stdout(&replay));
        assert!(stdout(&replay).ends_with("reproduced\n"));
    }
    assert_eq!(
        code(&verify(
            d,
            &["verify-witness", "r.json", "--index", &total.to_string()]
        )),
        64
    );
}

#[test]
fn tampered_report_is_caught() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    verify(d, &["gen", "sedenions", "--out", "s.json"]);
    verify(
        d,
        &[
            "check",
            "s.json",
            "--suite",
            "maurer-cartan",
            "--format",
            "machine",
            "--out",
            "r.json",
        ],
    );
    let text = std::fs::read_to_string(d.join("r.json")).unwrap();
    let mut report: MachineReport = serde_json::from_str(&text).unwrap();
    let w = &mut report.inputs[0].suites[0].checks[0].witnesses[0];
    w.indices = vec![0, 0];
    std::fs::write(
        d.join("t.json"),
        serde_json::to_string_pretty(&report).unwrap(),
    )
    .unwrap();
    let replay = verify(d, &["verify-witness", "t.json", "--index", "0"]);
    assert_eq!(code(&replay), 1);
    assert!(stdout(&replay).contains("MISMATCH"));
    report.inputs[0].document.push(' ');
    std::fs::write(
        d.join("u.json"),
        serde_json::to_string_pretty(&report).unwrap(),
    )
    .unwrap();
    assert_eq!(
        code(&verify(d, &["verify-witness", "u.json", "--index", "0"])),
        64
    );
}

#[test]
fn machine_reports_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    verify(d, &["gen", "quaternions", "--out", "q.json"]);
    verify(
        d,
        &["gen", "random-anticomm", "--seed", "5", "--out", "g.json"],
    );
    let args = [
        "check",
        "q.json",
        "g.json",
        "--suite",
        "axioms,maltsev",
        "--seed",
        "9",
        "--format",
        "machine",
    ];
    let first = verify(d, &args);
    let second = verify(d, &args);
    assert_eq!(first.stdout, second.stdout);
    let report: MachineReport = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(report.inputs.len(), 2);
    assert_eq!(code(&first) as usize, report.failed_suites);
}
