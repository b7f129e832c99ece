//! End-to-end tests of the command-line binary: exit codes, determinism,
//! color stripping, and file input.

use std::io::Write as _;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_macroscope"))
        .args(args)
        .env("MACROSCOPE_NO_COLOR", "1")
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is UTF-8")
}

#[test]
fn tables_all_agree_with_exit_zero() {
    let output = run(&["tables"]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    assert!(
        text.contains("28 records — 28 agree, 0 differ, 0 failed"),
        "{text}"
    );
}

#[test]
fn single_table_selection() {
    let one = run(&["tables", "1", "--format", "csv"]);
    let two = run(&["tables", "2", "--format", "csv"]);
    assert_eq!(stdout(&one).lines().count(), 15);
    assert_eq!(stdout(&two).lines().count(), 15);
    assert!(stdout(&one)
        .lines()
        .skip(1)
        .all(|l| l.starts_with("matterwave,")));
    assert!(stdout(&two)
        .lines()
        .skip(1)
        .all(|l| l.starts_with("ramsey,")));
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        vec!["tables"],
        vec!["tables", "--format", "csv"],
        vec!["tables", "--format", "json"],
        vec!["plot-data", "beta_vs_mass", "--format", "csv"],
        vec!["appendix", "tau_general", "nu0=1.4204GHz"],
    ] {
        let first = run(&args);
        let second = run(&args);
        assert_eq!(first.stdout, second.stdout, "args: {args:?}");
        assert_eq!(first.status.code(), second.status.code());
    }
}

#[test]
fn corrupted_value_fails_with_exit_one_naming_the_row() {
    let exported = run(&["export-builtin", "2"]);
    assert_eq!(exported.status.code(), Some(0));
    let text = stdout(&exported);
    // The 2013 rubidium fountain published β = 370; corrupt it tenfold.
    let corrupted = text.replace("beta = 3.7e2", "beta = 3.7e1");
    assert_ne!(text, corrupted, "fixture value must be present");

    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(corrupted.as_bytes()).unwrap();
    let output = run(&["tables", "--input", file.path().to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(1));
    let report = stdout(&output);
    let bad_row = report
        .lines()
        .find(|line| line.contains("DIFFER"))
        .expect("a row is flagged");
    assert!(bad_row.contains("2013Rb"), "row not named: {bad_row}");
    assert!(report.contains("1 differ"), "{report}");
}

#[test]
fn color_codes_appear_only_without_the_env_var() {
    let plain = run(&["tables", "1"]);
    assert!(!stdout(&plain).contains('\u{1b}'));

    let colored = Command::new(env!("CARGO_BIN_EXE_macroscope"))
        .args(["tables", "1"])
        .env_remove("MACROSCOPE_NO_COLOR")
        .output()
        .expect("binary runs");
    let text = stdout(&colored);
    assert!(text.contains("\u{1b}[32m"), "no green status in {text:?}");
    // Same content once the decoration is stripped.
    let stripped = text
        .replace("\u{1b}[1m", "")
        .replace("\u{1b}[32m", "")
        .replace("\u{1b}[31m", "")
        .replace("\u{1b}[0m", "");
    assert_eq!(stripped, stdout(&plain));
}

#[test]
fn unreadable_input_exits_two() {
    let output = run(&["tables", "--input", "/nonexistent/file.rec"]);
    assert_eq!(output.status.code(), Some(2));
    let stderr = String::from_utf8(output.stderr).unwrap();
    assert!(stderr.starts_with("error:"), "{stderr}");
}

#[test]
fn malformed_record_file_exits_two_with_line_number() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(b"kind = matterwave\nlabel broken line\n")
        .unwrap();
    let output = run(&["tables", "--input", file.path().to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(2));
    let stderr = String::from_utf8(output.stderr).unwrap();
    assert!(stderr.contains("line 2"), "{stderr}");
}

#[test]
fn compute_missing_parameter_exits_two() {
    let output = run(&["compute", "mw", "lambda=50pm", "theta=0.58urad"]);
    assert_eq!(output.status.code(), Some(2));
    let stderr = String::from_utf8(output.stderr).unwrap();
    assert!(stderr.contains("missing parameter"), "{stderr}");
}

#[test]
fn compute_text_report_echoes_inputs() {
    let output = run(&["compute", "trap", "e=1eV", "d=2.480um"]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    assert!(text.contains("e = 1.602e-19"), "{text}");
    assert!(text.contains("beta = 1.000e0"), "{text}");
}

#[test]
fn json_output_is_parseable() {
    for args in [
        vec!["tables", "--format", "json"],
        vec!["plot-data", "beta_vs_year_ramsey", "--format", "json"],
        vec![
            "compute",
            "mw",
            "lambda=50pm",
            "theta=0.58urad",
            "d=0.062um",
            "--format",
            "json",
        ],
    ] {
        let output = run(&args);
        assert_eq!(output.status.code(), Some(0), "args: {args:?}");
        serde_json::from_slice::<serde_json::Value>(&output.stdout)
            .unwrap_or_else(|e| panic!("invalid JSON for {args:?}: {e}"));
    }
}

#[test]
fn exported_records_reparse_to_the_same_evaluation() {
    let exported = run(&["export-builtin", "both"]);
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(&exported.stdout).unwrap();

    let from_file = run(&[
        "tables",
        "--input",
        file.path().to_str().unwrap(),
        "--format",
        "csv",
    ]);
    let builtin = run(&["tables", "--format", "csv"]);
    assert_eq!(from_file.stdout, builtin.stdout);
}

#[test]
fn plot_series_on_missing_kind_exits_two() {
    let exported = run(&["export-builtin", "1"]);
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(&exported.stdout).unwrap();
    let output = run(&[
        "plot-data",
        "beta_vs_year_ramsey",
        "--input",
        file.path().to_str().unwrap(),
    ]);
    assert_eq!(output.status.code(), Some(2));
    let stderr = String::from_utf8(output.stderr).unwrap();
    assert!(stderr.contains("empty dataset"), "{stderr}");
}

#[test]
fn tolerance_flag_tightens_agreement() {
    // The worst built-in deviation is ≈6%; a 1% tolerance must flag it.
    let output = run(&["tables", "--tolerance", "0.01"]);
    assert_eq!(output.status.code(), Some(1));
    assert!(stdout(&output).contains("DIFFER"));
}
