use std::process::{Command, Output};

fn kerov(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kerov"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = kerov(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap().trim_end().to_string()
}

#[test]
fn poly_text() {
    assert_eq!(
        stdout(&["poly", "--k", "6", "--basis", "R"]),
        "R7 + 35*R5 + 35*R3*R2 + 84*R3"
    );
    assert_eq!(stdout(&["poly", "--k", "2", "--basis", "S"]), "S3");
    assert_eq!(stdout(&["poly", "--k", "3", "--basis", "S"]), "S4 - 3/2*S2^2 + S2");
}

#[test]
fn poly_routes_agree() {
    for basis in ["R", "S"] {
        for k in ["4", "5"] {
            let count = stdout(&["poly", "--k", k, "--basis", basis, "--route", "count"]);
            for route in ["convert", "stanley"] {
                assert_eq!(stdout(&["poly", "--k", k, "--basis", basis, "--route", route]), count);
            }
        }
    }
}

#[test]
fn poly_out_of_range() {
    let out = kerov(&["poly", "--k", "9", "--basis", "R"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains('8'));
    assert_eq!(kerov(&["poly", "--k", "0"]).status.code(), Some(1));
}

#[test]
fn poly_json_round_trips() {
    let text = stdout(&["poly", "--k", "5"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&["--json", "poly", "--k", "5"])).unwrap();
    assert_eq!(doc["k"], 5);
    assert_eq!(doc["basis"], "R");
    assert_eq!(doc["route"], "count");
    let p = kerov_core::RatPoly::from_json(&doc).unwrap();
    assert_eq!(p.to_string(), text);
}

#[test]
fn character_values() {
    assert_eq!(stdout(&["character", "--lambda", "2,1", "--k", "3"]), "-3");
    assert_eq!(stdout(&["character", "--lambda", "2,1", "--k", "5"]), "0");
    assert_eq!(stdout(&["character", "--lambda", "4,3,1", "--k", "1"]), "8");
    assert_eq!(
        kerov(&["character", "--lambda", "1,2", "--k", "1"]).status.code(),
        Some(1)
    );
    assert_eq!(
        kerov(&["character", "--lambda", "x", "--k", "1"]).status.code(),
        Some(1)
    );
}

#[test]
fn cumulant_tables() {
    assert_eq!(
        stdout(&["cumulants", "--lambda", "2,1", "--max-k", "4"]),
        "k\tS_k\tR_k\n2\t3\t3\n3\t0\t0\n4\t15/2\t-6"
    );
    assert_eq!(
        stdout(&["cumulants", "--lambda", "1", "--max-k", "3"]),
        "k\tS_k\tR_k\n2\t1\t1\n3\t0\t0"
    );
    assert_eq!(
        stdout(&["cumulants", "--lambda", "", "--max-k", "3"]),
        "k\tS_k\tR_k\n2\t0\t0\n3\t0\t0"
    );
    assert_eq!(
        stdout(&["cumulants", "--p", "1,1", "--q", "2,1", "--max-k", "4"]),
        stdout(&["cumulants", "--lambda", "2,1", "--max-k", "4"])
    );
    let doc: serde_json::Value = serde_json::from_str(&stdout(&[
        "--json",
        "cumulants",
        "--p",
        "1/2",
        "--q",
        "3",
        "--max-k",
        "3",
    ]))
    .unwrap();
    assert!(doc["rows"]
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r["routes_agree"] == true));
}

#[test]
fn verify_reports() {
    let empty = kerov(&["--json", "verify", "--max-n", "0"]);
    assert_eq!(empty.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&empty.stdout).trim(), r#"{"checks":[]}"#);
    let full = stdout(&["verify", "--max-n", "6", "--max-k", "5"]);
    assert!(!full.is_empty());
    assert!(full.lines().all(|l| l.starts_with("pass\t")), "{full}");
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(kerov(&["nonsense"]).status.code(), Some(1));
    assert_eq!(kerov(&["poly"]).status.code(), Some(1));
    assert_eq!(kerov(&["poly", "--k", "3", "--basis", "T"]).status.code(), Some(1));
}

#[test]
fn deterministic_output() {
    for args in [
        &["poly", "--k", "7"][..],
        &["--json", "verify", "--max-n", "4", "--max-k", "4"][..],
    ] {
        assert_eq!(kerov(args).stdout, kerov(args).stdout);
    }
}
