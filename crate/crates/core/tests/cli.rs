mod common;

use std::process::Command;

use common::*;
use formstab::io::{read_matrix, read_matrix_file, MatrixFormat};
use formstab::verify::{form_residual, orthogonality_residual};
use formstab::RealMatrix;

fn stdout(out: &std::process::Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn symplectic_rotation_with_certificate() {
    let out = formstab(&[
        "gen",
        "--form",
        "symplectic",
        "--n",
        "1",
        "--seed",
        "7",
        "--count",
        "1",
        "--verify",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let a = read_matrix(&text, MatrixFormat::Mm).unwrap();
    assert_eq!(a.shape(), (2, 2));
    assert!((a[(0, 0)] - a[(1, 1)]).abs() < 1e-12 && (a[(0, 1)] + a[(1, 0)]).abs() < 1e-12);
    let cert_line = text
        .lines()
        .find(|l| l.starts_with("% certificate "))
        .unwrap();
    let cert: serde_json::Value =
        serde_json::from_str(&cert_line["% certificate ".len()..]).unwrap();
    assert_eq!(cert["passed"], true);
}

#[test]
fn lorentz_samples_pass() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("lorentz");
    let out = formstab(&[
        "gen",
        "--form",
        "indefinite",
        "--p",
        "1",
        "--q",
        "3",
        "--seed",
        "1",
        "--count",
        "10",
        "--verify",
        "--out",
        out_dir.to_str().unwrap(),
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(out.stdout.is_empty());
    let s = RealMatrix::from_diag(&[1.0, -1.0, -1.0, -1.0]);
    for i in 0..10 {
        let a = read_matrix_file(&out_dir.join(format!("sample_{i:04}.mtx"))).unwrap();
        assert!(form_residual(&a, &s) < 1e-12);
        assert!(orthogonality_residual(&a) < 1e-12);
        let cert: serde_json::Value = serde_json::from_str(
            &std::fs::read_to_string(out_dir.join(format!("sample_{i:04}.cert.json"))).unwrap(),
        )
        .unwrap();
        let mut keys: Vec<&str> = cert
            .as_object()
            .unwrap()
            .keys()
            .map(String::as_str)
            .collect();
        keys.sort_unstable();
        assert_eq!(
            keys,
            [
                "det_value",
                "passed",
                "residual_orth",
                "residual_s",
                "warnings"
            ]
        );
        assert_eq!(cert["passed"], true);
    }
}

#[test]
fn odd_skew_file_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("odd_skew.mtx");
    write_rows(
        &path,
        &[
            vec![0.0, 1.0, 2.0],
            vec![-1.0, 0.0, 3.0],
            vec![-2.0, -3.0, 0.0],
        ],
    );
    let out = formstab(&["gen", "--file", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("odd"));
}

#[test]
fn missing_and_malformed_files_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("nope.mtx");
    assert_eq!(
        formstab(&["gen", "--file", missing.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
    let bad = dir.path().join("bad.csv");
    std::fs::write(&bad, "1,2\n3\n").unwrap();
    assert_eq!(
        formstab(&["gen", "--file", bad.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn verify_identity_rotation_and_shear() {
    let dir = tempfile::tempdir().unwrap();
    let ident = dir.path().join("ident.mtx");
    write_rows(&ident, &[vec![1.0, 0.0], vec![0.0, 1.0]]);
    let out = formstab(&[
        "verify",
        "--form",
        "symplectic",
        "--n",
        "1",
        "--matrix",
        ident.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));

    let (c, s) = (0.3f64.cos(), 0.3f64.sin());
    let rot = dir.path().join("rot.json");
    std::fs::write(
        &rot,
        format!("[[{c:.17e}, {:.17e}], [{s:.17e}, {c:.17e}]]", -s),
    )
    .unwrap();
    let out = formstab(&[
        "verify",
        "--form",
        "symplectic",
        "--n",
        "1",
        "--matrix",
        rot.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let cert: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(cert["passed"], true);
    assert!((cert["det_value"].as_f64().unwrap() - 1.0).abs() < 1e-15);

    let shear = dir.path().join("shear.csv");
    std::fs::write(&shear, "1,1\n0,1\n").unwrap();
    let out = formstab(&[
        "verify",
        "--form",
        "identity",
        "--n",
        "2",
        "--matrix",
        shear.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(4));
    let cert: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(cert["passed"], false);
    assert!(cert["residual_orth"].as_f64().unwrap() > 1.0);
}

#[test]
fn verify_shape_mismatch_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let m = dir.path().join("m.mtx");
    write_rows(&m, &[vec![1.0, 0.0], vec![0.0, 1.0]]);
    let out = formstab(&[
        "verify",
        "--form",
        "minkowski",
        "--matrix",
        m.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn stats_summary() {
    let out = formstab(&[
        "stats", "--form", "identity", "--n", "4", "--count", "10000", "--seed", "3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["count"], 10000);
    let mean = v["mean"].as_array().unwrap();
    assert_eq!(mean.len(), 4);
    for row in mean {
        for x in row.as_array().unwrap() {
            assert!(x.as_f64().unwrap().abs() < 0.025);
        }
    }
    for row in v["second_moment"].as_array().unwrap() {
        for x in row.as_array().unwrap() {
            assert!((x.as_f64().unwrap() - 0.25).abs() < 0.0125);
        }
    }
}

#[test]
fn unknown_form_exits_2() {
    let out = formstab(&["stats", "--form", "hyperbolic", "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn same_seed_same_bytes() {
    for format in ["mm", "csv", "json"] {
        let args = [
            "gen",
            "--form",
            "indefinite",
            "--p",
            "2",
            "--q",
            "1",
            "--seed",
            "11",
            "--count",
            "4",
            "--format",
            format,
        ];
        let a = formstab(&args);
        let b = formstab(&args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout, "{format}");
    }
    let a = formstab(&["gen", "--form", "minkowski", "--seed", "1"]);
    let b = formstab(&["gen", "--form", "minkowski", "--seed", "2"]);
    assert_ne!(a.stdout, b.stdout);
}

#[test]
fn golden_stream_is_stable() {
    let out = formstab(&GOLDEN_ARGS);
    assert_eq!(out.stdout, std::fs::read(GOLDEN_FILE).unwrap());
}

#[test]
fn form_from_json_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("form.json");
    std::fs::write(&path, r#"{"matrix": [[2, 1, 0], [1, 2, 0], [0, 0, -1]]}"#).unwrap();
    let out = formstab(&[
        "gen",
        "--file",
        path.to_str().unwrap(),
        "--count",
        "3",
        "--format",
        "json",
        "--verify",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["form_kind"], "symmetric");
    assert_eq!(v["dim"], 3);
    assert_eq!(v["samples"].as_array().unwrap().len(), 3);
}

#[test]
fn tolerance_environment_and_flag_precedence() {
    let bin = env!("CARGO_BIN_EXE_formstab");
    let base = [
        "gen",
        "--form",
        "symplectic",
        "--n",
        "3",
        "--seed",
        "5",
        "--count",
        "2",
        "--verify",
    ];
    let strict = Command::new(bin)
        .args(base)
        .env("FORMSTAB_GEN_TOL", "1e-40")
        .output()
        .unwrap();
    assert_eq!(strict.status.code(), Some(4));
    let relaxed = Command::new(bin)
        .args(base)
        .args(["--gen-tol", "1e-11"])
        .env("FORMSTAB_GEN_TOL", "1e-40")
        .output()
        .unwrap();
    assert_eq!(relaxed.status.code(), Some(0));
}

#[test]
fn singular_form_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sing.mtx");
    write_rows(
        &path,
        &[
            vec![0.0, 1.0, 0.0, 0.0],
            vec![-1.0, 0.0, 0.0, 0.0],
            vec![0.0; 4],
            vec![0.0; 4],
        ],
    );
    assert_eq!(
        formstab(&["gen", "--file", path.to_str().unwrap()])
            .status
            .code(),
        Some(3)
    );
}
