//! The exit-code and output contract of the batch binary: 0 when every check
//! passes, 1 on a check failure, 2 on usage or parse errors; JSON on stdout,
//! human lines on stderr.

use std::process::Command;

fn coadex() -> Command {
    Command::new(env!("CARGO_BIN_EXE_coadex"))
}

#[test]
fn verify_fixture_passes_with_json_on_stdout() {
    let out = coadex().arg("verify-fixture").output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["command"], "verify-fixture");
    assert_eq!(json["passed"], true);
    assert!(json["checks"].as_array().unwrap().len() >= 8);
    let human = String::from_utf8_lossy(&out.stderr);
    assert!(human.contains("verify-fixture: PASS"));
}

#[test]
fn same_seed_gives_byte_identical_reports() {
    let run = || {
        coadex()
            .args(["verify-fixture", "--seed", "99"])
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(run(), run());
}

#[test]
fn seed_env_var_is_honored() {
    let flagged = coadex()
        .args(["verify-fixture", "--seed", "123"])
        .output()
        .unwrap();
    let env = coadex()
        .arg("verify-fixture")
        .env("COADEX_SEED", "123")
        .output()
        .unwrap();
    assert_eq!(flagged.stdout, env.stdout);
}

#[test]
fn build_writes_a_loadable_algebra() {
    let dir = std::env::temp_dir().join("coadex-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("a1.json");
    let out = coadex()
        .args(["build", "--type", "A", "--rank", "1", "--out"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let out = coadex()
        .args(["index", "--algebra"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["data"]["index_certificate"]["index"], 1);
}

#[test]
fn usage_errors_exit_2() {
    let out = coadex()
        .args(["build", "--type", "Z", "--rank", "9"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = coadex().arg("no-such-command").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = coadex()
        .args(["index", "--algebra", "/nonexistent/file.json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn failed_checks_exit_1() {
    let fixture = concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/fixtures/f4_centralizer.json"
    );
    // x16 is not invariant
    let out = coadex()
        .args(["invariant-check", "--algebra", fixture, "--poly", "x16"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    // the central element is
    let out = coadex()
        .args(["invariant-check", "--algebra", fixture, "--poly", "x4 + x5"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn weights_and_delta_on_the_fixture() {
    let fixture = concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/fixtures/f4_centralizer.json"
    );
    let out = coadex()
        .args(["weights", "--algebra", fixture, "--torus", "16"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["data"]["weights"].as_array().unwrap().len(), 7);

    let out = coadex()
        .args(["delta", "--algebra", fixture, "--torus", "16"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["data"]["delta_report"]["delta_nonzero"], false);
}
