use std::process::{Command, Output};

fn cusa(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cusa"))
        .args(args)
        .env_remove("CUSA_CONFIG")
        .output()
        .expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    cusa(args).status.code().expect("exit code")
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["constants", "--name", "p0"]), 0);
    assert_eq!(code(&["verify", "--claim", "C-MC"]), 0);
    assert_eq!(code(&["verify", "--claim", "C-MT5b", "--q", "1.1", "--seed", "7"]), 1);
    assert_eq!(code(&["verify", "--claim", "C-NOPE"]), 2);
    assert_eq!(code(&["verify", "--claim", "C-MT1-i", "--p", "2", "--q", "0.5"]), 2);
    assert_eq!(code(&["eval", "ratio", "--p", "1", "--q", "1", "--x", "2"]), 2);
    assert_eq!(code(&["no-such-command"]), 2);
    assert_eq!(code(&["probe", "--claim", "C-MT5b"]), 0);
    assert_eq!(code(&["means", "check", "--a", "1", "--b", "3"]), 0);
}

#[test]
fn json_report_round_trips_and_is_deterministic() {
    let args = ["verify", "--claim", "C-MT5b", "--q", "1.1", "--seed", "7", "--json", "-"];
    let a = cusa(&args);
    let b = cusa(&args);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["status"], "fail");
    assert_eq!(v["seed"], 7);
    assert_eq!(v["claim_id"], "C-MT5b");
    let back: cusa::verifier::Report = serde_json::from_value(v).unwrap();
    assert!(back.min_margin < 0.0);
}

#[test]
fn constants_print_six_digits() {
    let out = cusa(&["constants", "--name", "p0"]);
    assert!(String::from_utf8_lossy(&out.stdout).contains("1.42033"));
}

#[test]
fn csv_output() {
    let out = cusa(&["verify", "--claim", "C-MC", "--grid", "32", "--random", "0", "--csv", "-"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("x,lhs,rhs,margin"));
    assert_eq!(lines.count(), 32);
}

#[test]
fn config_file_sets_defaults() {
    let dir = std::env::temp_dir().join(format!("cusa-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cfg.toml");
    std::fs::write(&path, "grid = 64\nrandom = 0\n").unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_cusa"))
        .args(["verify", "--claim", "C-MC", "--json", "-"])
        .env("CUSA_CONFIG", &path)
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["samples_evaluated"], 64);
    std::fs::write(&path, "bogus = 1\n").unwrap();
    let bad = Command::new(env!("CARGO_BIN_EXE_cusa"))
        .args(["verify", "--claim", "C-MC"])
        .env("CUSA_CONFIG", &path)
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).ok();
}
