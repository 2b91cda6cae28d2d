//! End-to-end tests of the `evoperm` binary: exit codes, deterministic
//! output, and JSON round-trips through the real process boundary.

use std::io::Write;
use std::process::{Command, Output};

fn evoperm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_evoperm"))
        .args(args)
        .env_remove("EVOPERM_SEED")
        .output()
        .expect("binary runs")
}

fn write_temp(name: &str, contents: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("evoperm-test-{name}-{}", std::process::id()));
    let mut f = std::fs::File::create(&path).unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    path
}

#[test]
fn analyze_fixture_succeeds() {
    let out = evoperm(&["analyze", "--fixture", "example1"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("det(system) = 0, rank = 3"), "{text}");
    assert!(text.contains("product = 4"), "{text}");
    assert!(text.contains("unique absolute nilpotent: yes"), "{text}");
}

#[test]
fn repeated_runs_are_byte_identical() {
    for args in [
        vec!["analyze", "--fixture", "example2"],
        vec!["analyze", "--fixture", "example2", "--json"],
        vec!["verify", "--trials", "20", "--max-n", "4"],
        vec!["census", "--n", "3", "--coeffs", "-1,1", "--limit", "50"],
    ] {
        let a = evoperm(&args);
        let b = evoperm(&args);
        assert_eq!(a.stdout, b.stdout, "args {args:?}");
        assert_eq!(a.status.code(), b.status.code());
    }
}

#[test]
fn json_round_trips_through_binary() {
    let out = evoperm(&["analyze", "--fixture", "section3-allones", "--json"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let report: evoperm::cli::AnalyzeReport = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&report).unwrap(), text.trim_end());
}

#[test]
fn parse_error_exits_2() {
    let path = write_temp("badjson", "{ not json");
    let out = evoperm(&["analyze", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let _ = std::fs::remove_file(path);

    // repeated permutation image names the index
    let path = write_temp(
        "badperm",
        r#"{"n": 3, "pi": [1, 1, 2], "tau": [1, 2, 3], "a_pi": ["1","1","1"], "a_tau": ["1","1","1"]}"#,
    );
    let out = evoperm(&["analyze", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("repeated"), "{err}");
    let _ = std::fs::remove_file(path);

    let out = evoperm(&["analyze", "--fixture", "does-not-exist"]);
    assert_eq!(out.status.code(), Some(2));

    let out = evoperm(&["analyze", "/nonexistent/path.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn precondition_failure_exits_3() {
    // example2's cycle supports interleave, so decompose must refuse
    let out = evoperm(&["decompose", "--fixture", "example2"]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("interleave"), "{err}");

    // example2 fits neither canonical hypothesis: its pi is not a
    // single n-cycle, and the message names the failed hypothesis
    let out = evoperm(&["canonical", "--fixture", "example2"]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("not a single n-cycle"), "{err}");

    // a full-cycle pair that is not inverse names that hypothesis too
    let path = write_temp(
        "notinv",
        r#"{"n": 4, "pi": [2, 3, 4, 1], "tau": [3, 4, 1, 2], "a_pi": ["1","1","1","1"], "a_tau": ["1","1","1","1"]}"#,
    );
    let out = evoperm(&["canonical", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("tau is not pi^{-1}"), "{err}");
    let _ = std::fs::remove_file(path);

    let out = evoperm(&["census", "--n", "7"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn canonical_on_valid_shapes() {
    let out = evoperm(&["canonical", "--fixture", "section3-allones"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("cycle-identity"), "{text}");
    assert!(text.contains("isomorphism verified: true"), "{text}");

    let path = write_temp(
        "invpair",
        r#"{"n": 3, "pi": [2, 3, 1], "tau": [3, 1, 2], "a_pi": ["1","2","3"], "a_tau": ["4","5","6"]}"#,
    );
    let out = evoperm(&["canonical", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("inverse-pair"), "{text}");
    assert!(text.contains("isomorphism verified: true"), "{text}");
    let _ = std::fs::remove_file(path);
}

#[test]
fn verify_fixture_exits_0_and_reports_agreement() {
    let out = evoperm(&["verify", "--fixture", "example1"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("analytic/oracle agreement"), "{text}");
    assert!(!text.contains("FAIL"), "{text}");
}

#[test]
fn verify_random_100_instances() {
    let out = evoperm(&["verify", "--trials", "100", "--max-n", "5"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("analytic/oracle agreement: 100/100"), "{text}");
}

#[test]
fn verify_seed_env_changes_sampling() {
    let base = evoperm(&["verify", "--trials", "10", "--max-n", "4"]);
    let seeded = Command::new(env!("CARGO_BIN_EXE_evoperm"))
        .args(["verify", "--trials", "10", "--max-n", "4"])
        .env("EVOPERM_SEED", "42")
        .output()
        .unwrap();
    let base_text = String::from_utf8(base.stdout).unwrap();
    let seeded_text = String::from_utf8(seeded.stdout).unwrap();
    assert!(base_text.contains("seed 314159"), "{base_text}");
    assert!(seeded_text.contains("seed 42"), "{seeded_text}");
    // and the flag wins over the environment
    let flag = Command::new(env!("CARGO_BIN_EXE_evoperm"))
        .args(["verify", "--trials", "10", "--max-n", "4", "--seed", "7"])
        .env("EVOPERM_SEED", "42")
        .output()
        .unwrap();
    let flag_text = String::from_utf8(flag.stdout).unwrap();
    assert!(flag_text.contains("seed 7"), "{flag_text}");
}

#[test]
fn census_rows_limit_and_shape() {
    let out = evoperm(&["census", "--n", "2", "--coeffs", "1"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<&str> = text.lines().filter(|l| l.starts_with(char::is_numeric)).collect();
    assert_eq!(rows.len(), 2, "{text}");

    let out = evoperm(&["census", "--n", "3", "--coeffs", "-1,1", "--limit", "100"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<&str> = text.lines().filter(|l| l.starts_with(char::is_numeric)).collect();
    assert_eq!(rows.len(), 100, "{text}");
}

#[test]
fn nilpotent_family_reported() {
    let path = write_temp(
        "family",
        r#"{"n": 2, "pi": [2, 1], "tau": [1, 2], "a_pi": ["1", "1"], "a_tau": ["-1", "-1"]}"#,
    );
    let out = evoperm(&["nilpotent", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("one-parameter family"), "{text}");
    assert!(text.contains("unique absolute nilpotent: no"), "{text}");
    assert!(text.contains("witness squares"), "{text}");
    let _ = std::fs::remove_file(path);
}

#[test]
fn baric_command_formats_weights() {
    let path = write_temp(
        "baric",
        r#"{"n": 3, "pi": [1, 3, 2], "tau": [1, 2, 3], "a_pi": ["3", "1", "1"], "a_tau": ["3", "1", "1"]}"#,
    );
    let out = evoperm(&["baric", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    // both permutations fix 1, so the weight doubles: sigma(x) = 6*x_1
    assert!(text.contains("sigma(x) = 6*x_1"), "{text}");
    let _ = std::fs::remove_file(path);
}
