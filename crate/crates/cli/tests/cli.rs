use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use rayfan_cli::report::{Report, Results};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(format!("{name}.json"))
}

fn rayfan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rayfan"))
        .args(args)
        .env("RUST_LOG", "off")
        .output()
        .expect("binary runs")
}

fn with_input(cmd: &str, input: &Path, extra: &[&str]) -> Output {
    let mut args = vec![cmd, "--input", input.to_str().unwrap()];
    args.extend_from_slice(extra);
    rayfan(&args)
}

fn temp_spec(dir: &tempfile::TempDir, text: &str) -> PathBuf {
    let p = dir.path().join("spec.json");
    std::fs::write(&p, text).unwrap();
    p
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn output_is_byte_identical_across_runs() {
    for (cmd, name) in [("chambers", "planar_xyz"), ("fan", "segre_semigroup"), ("classgroup", "p1xp1_half_rulings")] {
        let a = with_input(cmd, &fixture(name), &["--seed", "7"]);
        let b = with_input(cmd, &fixture(name), &["--seed", "7"]);
        assert_eq!(a.status.code(), Some(0), "{cmd}: {}", stderr(&a));
        assert_eq!(a.stdout, b.stdout, "{cmd} on {name}");
    }
}

#[test]
fn reports_reparse_and_reserialize_unchanged() {
    let runs: Vec<(&str, &str, Vec<&str>)> = vec![
        ("chambers", "five_variables", vec![]),
        ("fan", "planar_xyz", vec![]),
        ("rayideal", "planar_xyz", vec!["--point", "1/2,3"]),
        ("compare", "planar_xyz", vec!["--point", "2,1", "--point", "1,2"]),
        ("thm4", "five_variables", vec![]),
        ("roundtrip", "weighted_p1xp1", vec!["--grid-bound", "3"]),
        ("msr-dim", "p1xp1_half_rulings", vec!["--grid-bound", "2"]),
        ("classgroup", "p1xp1_ruling", vec![]),
        ("factorial", "p1_half_point", vec![]),
    ];
    for (cmd, name, extra) in runs {
        let out = with_input(cmd, &fixture(name), &extra);
        assert_eq!(out.status.code(), Some(0), "{cmd}: {}", stderr(&out));
        let text = stdout(&out);
        let report: Report = serde_json::from_str(&text).unwrap_or_else(|e| panic!("{cmd}: {e}"));
        assert_eq!(report.command, cmd);
        assert!(report.passed());
        assert_eq!(serde_json::to_string_pretty(&report).unwrap() + "\n", text, "{cmd}");
    }
}

#[test]
fn selftest_passes() {
    let out = rayfan(&["selftest"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let report: Report = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(report.verification.len() >= 8);
}

#[test]
fn report_can_go_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let dest = dir.path().join("r.json");
    let out = with_input("thm4", &fixture("weighted_p1xp1"), &["--output", dest.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let report: Report = serde_json::from_str(&std::fs::read_to_string(dest).unwrap()).unwrap();
    match report.results {
        Results::Thm4(t) => assert!(t.one_chamber && t.finite_extension && t.witness.is_none()),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn timing_is_opt_in() {
    let plain = stdout(&with_input("fan", &fixture("planar_xyz"), &[]));
    assert!(!plain.contains("timing_ms"));
    let timed = stdout(&with_input("fan", &fixture("planar_xyz"), &["--timing"]));
    assert!(timed.contains("timing_ms"));
}

#[test]
fn symbolic_rees_input_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let p = temp_spec(&dir, r#"{"kind": "symbolic-rees", "degrees": [[1, 0]]}"#);
    let out = with_input("chambers", &p, &[]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("Noetherian"), "{}", stderr(&out));
}

#[test]
fn non_integral_entries_are_rejected_with_every_violation() {
    let dir = tempfile::tempdir().unwrap();
    let p = temp_spec(&dir, r#"{"degrees": [[1.4142, 0], [0, "pi"], [1]]}"#);
    let out = with_input("fan", &p, &[]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("degrees[0][0]") && err.contains("rational"), "{err}");
    assert!(err.contains("degrees[1][1]"), "{err}");
    assert!(err.contains("degrees[2] has length 1"), "{err}");
}

#[test]
fn positivity_failure_cites_the_degree_zero_part() {
    let dir = tempfile::tempdir().unwrap();
    let p = temp_spec(&dir, r#"{"degrees": [[1, 0], [-1, 0], [0, 1]]}"#);
    let out = with_input("fan", &p, &[]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("A_0 = k"), "{}", stderr(&out));
}

#[test]
fn zero_degree_rows_are_dropped_with_a_warning() {
    let dir = tempfile::tempdir().unwrap();
    let p = temp_spec(&dir, r#"{"degrees": [[1, 0], [0, 0], [0, 1]]}"#);
    let out = with_input("fan", &p, &[]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let report: Report = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report.warnings.len(), 1);
    match report.results {
        Results::Fan(f) => assert_eq!(f.ring.generators, ["x", "z"]),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(rayfan(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(rayfan(&["fan"]).status.code(), Some(2));
    assert_eq!(rayfan(&["fan", "--input", "/nonexistent/spec.json"]).status.code(), Some(2));
    assert_eq!(with_input("compare", &fixture("planar_xyz"), &["--point", "1,1"]).status.code(), Some(2));
    assert_eq!(with_input("rayideal", &fixture("planar_xyz"), &["--point", "1,x"]).status.code(), Some(2));
    // a toric spec handed to a ring command
    assert_eq!(with_input("fan", &fixture("p1_point"), &[]).status.code(), Some(2));
}

#[test]
fn roundtrip_preconditions_exit_with_two() {
    // the positive axis is a ray of the fan, not a chamber
    let out = with_input("roundtrip", &fixture("five_variables"), &["--chamber", "1,0"]);
    assert_eq!(out.status.code(), Some(2), "{}", stderr(&out));
}

#[test]
fn plot_of_the_blow_up_has_two_sectors() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("fan.svg");
    let out = with_input("plot2d", &fixture("five_variables"), &["--output", svg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let report: Report = serde_json::from_str(&stdout(&out)).unwrap();
    match report.results {
        Results::Plot2d(p) => {
            assert_eq!(p.sectors, 2);
            assert_eq!(p.arrows, 3);
        }
        other => panic!("unexpected {other:?}"),
    }
    let text = std::fs::read_to_string(&svg).unwrap();
    assert_eq!(text.matches("class=\"sector\"").count(), 2);
    assert!(text.contains(" 0 0 0 "));
    let csv = std::fs::read_to_string(svg.with_extension("csv")).unwrap();
    assert_eq!(csv.lines().count(), 6);
}

#[test]
fn plot_needs_a_planar_grading() {
    let dir = tempfile::tempdir().unwrap();
    let p = temp_spec(&dir, r#"{"degrees": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]}"#);
    let svg = dir.path().join("x.svg");
    let out = with_input("plot2d", &p, &["--output", svg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}
