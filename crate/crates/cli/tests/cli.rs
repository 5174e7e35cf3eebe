use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn qschub(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qschub")).args(args).env_remove("QSCHUB_CACHE_DIR").output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = qschub(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn cache_files(dir: &Path) -> Vec<std::path::PathBuf> {
    match fs::read_dir(dir) {
        Ok(entries) => entries.map(|e| e.unwrap().path()).collect(),
        Err(_) => Vec::new(),
    }
}

#[test]
fn universal_double_312() {
    assert_eq!(stdout(&["universal", "312", "--double"]), "c_1(1)c_1(2) - c_1(1)d_1(2) - c_2(2) + d_2(2)\n");
}

#[test]
fn identity_schubert_is_one() {
    assert_eq!(stdout(&["schubert", "1"]), "1\n");
    assert_eq!(stdout(&["schubert", "1", "--double", "--n", "4"]), "1\n");
}

#[test]
fn comma_separated_permutations() {
    assert_eq!(stdout(&["schubert", "1,3,2"]), stdout(&["schubert", "132"]));
}

#[test]
fn quiver_coeffs_312_json() {
    let v: Value = serde_json::from_str(&stdout(&["quiver-coeffs", "312", "--n", "2", "--json"])).unwrap();
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 2);
    assert!(entries.iter().all(|e| e["coeff"] == 1));
    assert_eq!(v["w"], "312");
    assert_eq!(v["n"], 2);
}

#[test]
fn table_variants_agree() {
    let plain = stdout(&["quiver-coeffs", "4132", "--n", "3"]);
    assert_eq!(stdout(&["quiver-coeffs", "4132", "--n", "3", "--skew"]), plain);
    assert_eq!(stdout(&["quiver-coeffs", "4132", "--n", "3", "--stanley-product"]), plain);
}

#[test]
fn json_output_round_trips() {
    let commands: &[&[&str]] = &[
        &["reduced-words", "321"],
        &["schubert", "2143", "--double"],
        &["universal", "312"],
        &["stanley", "321"],
        &["stanley", "2143", "--vars", "3"],
        &["quiver-coeffs", "2143", "--n", "3"],
        &["split", "321", "--a", "1,2", "--b", "1,2"],
        &["split", "32541", "--a", "1,3,4"],
        &["monomial-coeff", "321", "--x", "1,1", "--y", "1"],
        &["giambelli", "32541", "--a", "1,3,4", "--n", "5", "--form", "I"],
        &["giambelli", "321", "--a", "1,2", "--n", "3", "--form", "II"],
        &["verify", "--suite", "s3"],
    ];
    for args in commands {
        let mut args = args.to_vec();
        args.push("--json");
        let text = stdout(&args);
        let parsed: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(serde_json::to_string_pretty(&parsed).unwrap() + "\n", text, "{args:?}");
    }
}

#[test]
fn split_and_giambelli_examples() {
    let out = stdout(&["split", "32541", "--a", "1,3,4"]);
    assert!(out.contains("polynomial: x_1^3x_2x_3x_4 + x_1^2x_2^2x_3x_4 + x_1^2x_2x_3^2x_4\n"), "{out}");
    assert_eq!(
        stdout(&["giambelli", "32541", "--a", "1,3,4", "--n", "5", "--form", "I"]),
        "s_(2)(Q_1) s_(2,1)(Q_2) s_(1)(Q_3) + s_(3)(Q_1) s_(1,1)(Q_2) s_(1)(Q_3)\n"
    );
    assert_eq!(stdout(&["giambelli", "312", "--a", "1", "--n", "3", "--form", "II"]), "s_(2)(F_1)\n");
}

#[test]
fn small_subcommands() {
    assert_eq!(stdout(&["reduced-words", "321"]), "1 2 1\n2 1 2\n");
    assert_eq!(stdout(&["reduced-words", "1"]), "()\n");
    assert_eq!(stdout(&["stanley", "321"]), "s_(2,1)\n");
    assert_eq!(stdout(&["stanley", "321", "--vars", "2"]), "x_1^2x_2 + x_1x_2^2\n");
    assert_eq!(stdout(&["monomial-coeff", "321", "--x", "2,1"]), "1\n");
    assert_eq!(stdout(&["monomial-coeff", "321", "--x", "1,1", "--y", "1"]), "-1\n");
}

#[test]
fn argument_errors_exit_2_with_one_line() {
    let cases: &[&[&str]] = &[
        &["schubert", "3x2"],
        &["schubert", "113"],
        &["schubert", "312", "--n", "2"],
        &["quiver-coeffs", "312", "--n", "1"],
        &["split", "312", "--a", "2"],
        &["split", "312", "--a", "1,a"],
        &["giambelli", "312", "--a", "1", "--n", "3", "--form", "III"],
        &["stanley", "321", "--vars", "2", "--schur"],
        &["verify", "--suite", "s9"],
        &["frobnicate"],
        &[],
    ];
    for args in cases {
        let out = qschub(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        let err = String::from_utf8(out.stderr).unwrap();
        assert_eq!(err.lines().count(), 1, "{args:?}: {err}");
        assert!(err.starts_with("error:"), "{args:?}: {err}");
    }
}

#[test]
fn verify_passes_on_s3() {
    let out = qschub(&["verify", "--suite", "s3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().all(|l| l.starts_with("[PASS]")), "{text}");
}

#[test]
fn cache_hit_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let path = cache.to_str().unwrap();
    for json in [false, true] {
        let mut args = vec!["quiver-coeffs", "4132", "--n", "3", "--cache-dir", path];
        if json {
            args.push("--json");
        }
        let cold = stdout(&args);
        let warm = stdout(&args);
        assert_eq!(cold, warm);
        args.truncate(4);
        if json {
            args.push("--json");
        }
        assert_eq!(stdout(&args), cold);
    }
    assert_eq!(cache_files(&cache).len(), 2);
}

#[test]
fn cache_keys_are_canonical() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().to_str().unwrap();
    stdout(&["schubert", "132", "--cache-dir", path]);
    stdout(&["schubert", "1,3,2", "--n", "3", "--cache-dir", path]);
    assert_eq!(cache_files(dir.path()).len(), 1);
    stdout(&["schubert", "132", "--n", "4", "--cache-dir", path]);
    assert_eq!(cache_files(dir.path()).len(), 2);
}

#[test]
fn corrupt_cache_entries_are_recomputed() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().to_str().unwrap();
    let args = ["universal", "312", "--double", "--cache-dir", path];
    let cold = stdout(&args);
    let files = cache_files(dir.path());
    assert_eq!(files.len(), 1);
    fs::write(&files[0], "not json").unwrap();
    assert_eq!(stdout(&args), cold);
    let stored: Value = serde_json::from_str(&fs::read_to_string(&files[0]).unwrap()).unwrap();
    assert_eq!(stored["output"], cold);
}

#[test]
fn cache_dir_flag_beats_environment() {
    let env_dir = tempfile::tempdir().unwrap();
    let flag_dir = tempfile::tempdir().unwrap();
    let run = |extra: &[&str]| {
        let out = Command::new(env!("CARGO_BIN_EXE_qschub"))
            .args(["schubert", "231"])
            .args(extra)
            .env("QSCHUB_CACHE_DIR", env_dir.path())
            .output()
            .unwrap();
        assert!(out.status.success());
        String::from_utf8(out.stdout).unwrap()
    };
    let from_env = run(&[]);
    assert_eq!(cache_files(env_dir.path()).len(), 1);
    let from_flag = run(&["--cache-dir", flag_dir.path().to_str().unwrap(), "--double"]);
    assert_eq!(cache_files(env_dir.path()).len(), 1);
    assert_eq!(cache_files(flag_dir.path()).len(), 1);
    assert_eq!(from_env, "x_1x_2\n");
    assert_eq!(from_flag, stdout(&["schubert", "231", "--double"]));
}
