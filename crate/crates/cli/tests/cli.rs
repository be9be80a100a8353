//! Black-box tests of the binary: exit codes, round trips, and output
//! determinism.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use symforge_core::format::MatrixFile;
use symforge_core::{Order, OrderMatrix};

fn symforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symforge"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

#[test]
fn forge_then_verify_round_trip_exits_zero() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("cert.json");
    let out = symforge(&[
        "forge",
        "--disc",
        "2",
        "--n",
        "2",
        "-o",
        cert.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("f = 4 + 3√2"));
    assert!(text.contains("g = 3 + 2√2"));
    assert!(text.contains("det = 17 + 12√2"));

    let out = symforge(&["verify", cert.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    assert!(stdout(&out).contains("overall: pass"));

    let out = symforge(&[
        "verify",
        cert.to_str().unwrap(),
        "--torsion",
        "2,3,5",
        "--exhaustive",
    ]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
}

#[test]
fn forge_outputs_are_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for (path, n) in [(&a, "3"), (&b, "3")] {
        let out = symforge(&[
            "forge",
            "--disc",
            "2",
            "--n",
            n,
            "-o",
            path.to_str().unwrap(),
        ]);
        assert_eq!(code(&out), 0);
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
}

#[test]
fn tampered_certificate_fails_verify_and_names_the_check() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("cert.json");
    symforge(&[
        "forge",
        "--disc",
        "2",
        "--n",
        "2",
        "-o",
        cert.to_str().unwrap(),
    ]);

    let mut value: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&cert).unwrap()).unwrap();
    value["g"] = serde_json::json!(["0", "0"]);
    fs::write(&cert, value.to_string()).unwrap();

    let out = symforge(&["verify", cert.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("g_nonzero"), "{text}");
    assert!(text.contains("failed check:"), "{text}");
}

#[test]
fn recognize_reports_decomposition_and_naturality() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("cert.json");
    symforge(&[
        "forge",
        "--disc",
        "2",
        "--n",
        "2",
        "-o",
        cert.to_str().unwrap(),
    ]);

    let out = symforge(&["recognize", cert.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("symmetric form: yes"));
    assert!(text.contains("sigma = identity"));
    assert!(text.contains("f = 4 + 3√2"));
    assert!(text.contains("g = 3 + 2√2"));
    assert!(text.contains("nonnatural: yes"));
}

#[test]
fn recognize_rejects_non_form_matrix() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("matrix.json");
    let order = Order::quadratic(2).unwrap();
    let m = OrderMatrix::from_rows(vec![
        vec![order.one(), order.theta()],
        vec![order.zero(), order.one()],
    ])
    .unwrap();
    fs::write(&path, MatrixFile::from_matrix(&m).to_json()).unwrap();

    let out = symforge(&["recognize", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("not of symmetric form"));
    assert!(text.contains("nonnatural: yes"));
}

#[test]
fn units_commands_print_certificates() {
    let out = symforge(&["units", "--disc", "3"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("unit = 2 + √3"));

    let out = symforge(&["units", "--minpoly", "-1,-2,1,1", "--bound", "1"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("unit = θ"));

    // height bound 0 leaves only 0 and ±1 in the box
    let out = symforge(&["units", "--minpoly", "-2,0,1", "--bound", "0"]);
    assert_eq!(code(&out), 1);
}

#[test]
fn model_check_passes_for_forged_matrix_and_writes_reports() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("cert.json");
    let reports = dir.path().join("reports.json");
    symforge(&[
        "forge",
        "--disc",
        "2",
        "--n",
        "2",
        "-o",
        cert.to_str().unwrap(),
    ]);

    let out = symforge(&[
        "model-check",
        cert.to_str().unwrap(),
        "--m",
        "2,5",
        "--exhaustive",
        "--json",
        reports.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("descent (m = 5, exhaustive): pass"));
    assert!(text.contains("no natural form"));

    let parsed: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&reports).unwrap()).unwrap();
    let entries = parsed.as_array().unwrap();
    // bijective + descent + big_diagonal + naturality per modulus
    assert_eq!(entries.len(), 8);
    assert!(entries.iter().any(|e| e["check"] == "naturality_probe"));

    // report files are deterministic too
    let again = dir.path().join("again.json");
    symforge(&[
        "model-check",
        cert.to_str().unwrap(),
        "--m",
        "2,5",
        "--exhaustive",
        "--json",
        again.to_str().unwrap(),
    ]);
    assert_eq!(fs::read(&reports).unwrap(), fs::read(&again).unwrap());
}

#[test]
fn model_check_fails_for_non_descending_matrix() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("matrix.json");
    let order = Order::quadratic(2).unwrap();
    let m = OrderMatrix::from_rows(vec![
        vec![order.one(), order.zero()],
        vec![order.zero(), order.element(&[1, 1])],
    ])
    .unwrap();
    fs::write(&path, MatrixFile::from_matrix(&m).to_json()).unwrap();

    let out = symforge(&[
        "model-check",
        path.to_str().unwrap(),
        "--m",
        "5",
        "--exhaustive",
    ]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("descent (m = 5, exhaustive): fail"));
    assert!(text.contains("counterexample"));
    assert!(text.contains("overall: FAIL"));
}

#[test]
fn verify_auto_mode_and_sampling_flags() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("cert.json");
    symforge(&[
        "forge",
        "--disc",
        "2",
        "--n",
        "2",
        "-o",
        cert.to_str().unwrap(),
    ]);

    // small models enumerate exhaustively without being asked
    let out = symforge(&["verify", cert.to_str().unwrap(), "--torsion", "2"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("exhaustive"));

    let out = symforge(&[
        "verify",
        cert.to_str().unwrap(),
        "--torsion",
        "5",
        "--samples",
        "200",
        "--seed",
        "7",
    ]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("sample"));
}

#[test]
fn usage_errors_exit_with_two() {
    // no subcommand
    assert_eq!(code(&symforge(&[])), 2);
    // both order flags at once
    assert_eq!(
        code(&symforge(&[
            "forge",
            "--disc",
            "2",
            "--minpoly",
            "-2,0,1",
            "--n",
            "2"
        ])),
        2
    );
    // neither order flag
    assert_eq!(code(&symforge(&["forge", "--n", "2"])), 2);
    // malformed list
    assert_eq!(
        code(&symforge(&["forge", "--minpoly", "-2,zero,1", "--n", "2"])),
        2
    );
    // n below 2
    assert_eq!(code(&symforge(&["forge", "--disc", "2", "--n", "1"])), 2);
    // invalid order is a usage problem, not a crash
    assert_eq!(code(&symforge(&["units", "--minpoly", "1,0,1"])), 2);
}

#[test]
fn summary_numbers_match_the_certificate_file() {
    let dir = tempfile::tempdir().unwrap();
    let cert_path = dir.path().join("cert.json");
    let out = symforge(&[
        "forge",
        "--disc",
        "2",
        "--n",
        "2",
        "-o",
        cert_path.to_str().unwrap(),
    ]);
    let summary = stdout(&out);
    let value: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&cert_path).unwrap()).unwrap();
    // every number shown in the summary is re-derivable from the file
    assert_eq!(value["f"], serde_json::json!(["4", "3"]));
    assert_eq!(value["g"], serde_json::json!(["3", "2"]));
    assert_eq!(value["det"]["value"], serde_json::json!(["17", "12"]));
    assert_eq!(value["exponents"]["i"], "3");
    assert_eq!(value["exponents"]["j"], "1");
    assert!(summary.contains("i = 3, j = 1"));
    assert!(Path::new(&cert_path).exists());
}
