use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

const UNIT_SQUARE: &str = r#"{"points": [["0","0"],["1","0"],["0","1"],["1","1"]]}"#;
const TWO_LINES: &str = r#"{"system": [
  {"terms": [{"exp": [1,0], "coef": "1"}, {"exp": [0,1], "coef": "2"}, {"exp": [0,0], "coef": "-1"}]},
  {"terms": [{"exp": [1,0], "coef": "3"}, {"exp": [0,1], "coef": "-1"}, {"exp": [0,0], "coef": "5"}]}
]}"#;

fn mixvol(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_mixvol"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn ok_json(args: &[&str], stdin: &str) -> Value {
    let out = mixvol(args, stdin);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn unit_square_volume() {
    let out = mixvol(&["--format", "plain", "volume"], UNIT_SQUARE);
    assert_eq!(stdout(&out), "2\n");
    let v = ok_json(&["volume"], UNIT_SQUARE);
    assert_eq!(v["normalized_volume"], "2");
    assert_eq!(v["volume"], "1");
    assert_eq!(v["seed"], 0);
}

#[test]
fn verify_unit_square() {
    for engine in ["ie", "cells"] {
        let v = ok_json(&["verify", "--engine", engine, "--seed", "9"], UNIT_SQUARE);
        assert_eq!(v["lhs"], "2");
        assert_eq!(v["rhs"], "2");
        assert_eq!(v["equal"], true);
        assert_eq!(v["engine"], engine);
        assert_eq!(v["seed"], 9);
    }
    let out = mixvol(&["verify", "--format", "plain"], UNIT_SQUARE);
    assert_eq!(stdout(&out), "lhs 2\nrhs 2\nequal true\n");
}

#[test]
fn bkk_of_two_lines() {
    let v = ok_json(&["bkk"], TWO_LINES);
    assert_eq!(v["bkk_bound"], "1");
    assert_eq!(v["kushnirenko_bound"], "1");
}

#[test]
fn rationals_are_canonical() {
    let v = ok_json(&["volume", "--inline", r#"{"points": [["0","0"],["2/4",0],[0,"1/3"]]}"#], "");
    assert_eq!(v["normalized_volume"], "1/6");
    assert_eq!(v["volume"], "1/12");
    assert_eq!(v["vertices"][1][0], "1/2");
}

#[test]
fn reduce_round_trips_through_mixed_volume() {
    let config = r#"{"points": [[0,0],[3,1],[1,3],[-1,1],[1,1]]}"#;
    let reduced = mixvol(&["reduce"], config);
    assert!(reduced.status.success());
    let reduced = stdout(&reduced);
    let r: Value = serde_json::from_str(&reduced).unwrap();
    assert_eq!(r["polytopes"].as_array().unwrap().len(), 5);
    let mv = ok_json(&["mixed-volume"], &reduced);
    let vol = ok_json(&["volume"], config);
    assert_eq!(mv["mixed_volume"], vol["normalized_volume"]);
    let mv = ok_json(&["mixed-volume", "--engine", "cells", "--seed", "4"], &reduced);
    assert_eq!(mv["mixed_volume"], vol["normalized_volume"]);
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--engine", "cells", "--seed", "77"];
    let config = r#"{"points": [[0,0,0],[2,0,1],[0,3,0],[1,1,2],[-1,0,1]]}"#;
    assert_eq!(mixvol(&args, config).stdout, mixvol(&args, config).stdout);
}

#[test]
fn initial_system_from_flag_and_key() {
    let plain = mixvol(&["initial", "--alpha", "1,-1/2", "--format", "plain"], TWO_LINES);
    assert!(plain.status.success());
    assert_eq!(stdout(&plain), "2*x2\n-1*x2\n");
    let with_key = TWO_LINES.trim_end_matches('}').to_string() + r#", "alpha": [1, "-1/2"]}"#;
    let v = ok_json(&["initial"], &with_key);
    assert_eq!(v["system"][0]["terms"][0]["exp"], serde_json::json!([0, 1]));
    assert_eq!(v["alpha"][1], "-1/2");
    assert_eq!(mixvol(&["initial"], TWO_LINES).status.code(), Some(2));
}

#[test]
fn out_flag_writes_a_file() {
    let dir = std::env::temp_dir().join(format!("mixvol-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("square.json");
    std::fs::write(&path, UNIT_SQUARE).unwrap();
    let target = dir.join("out.txt");
    let out = mixvol(
        &["volume", path.to_str().unwrap(), "--format", "plain", "--out", target.to_str().unwrap()],
        "",
    );
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&target).unwrap(), "2\n");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_statuses() {
    let code = |args: &[&str], input: &str| mixvol(args, input).status.code();
    assert_eq!(code(&["volume", "/no/such/file.json"], ""), Some(1));

    let bad = mixvol(&["volume"], "{\"points\": [[0, 0],\n [1.5, 0]]}");
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("line 2"));
    assert_eq!(code(&["volume"], "{\"points\": [[\"1/0\", 0]]}"), Some(2));
    assert_eq!(code(&["volume"], "not json"), Some(2));
    assert_eq!(code(&["verify", "--engine", "simplex"], UNIT_SQUARE), Some(2));

    assert_eq!(code(&["volume"], r#"{"points": [[0,0],[1,1],[0,0]]}"#), Some(3));
    assert_eq!(code(&["verify"], r#"{"points": [[0,0],[1,1]]}"#), Some(3));
    assert_eq!(code(&["volume"], r#"{"points": [[0,0],[1]]}"#), Some(3));
    assert_eq!(code(&["mixed-volume"], r#"{"polytopes": [[[0,0],[1,0]]]}"#), Some(3));
    let squares = r#"{"polytopes": [[[0,0],[1,0],[0,1],[1,1]], [[0,0],[1,0],[0,1],[1,1]]]}"#;
    assert_eq!(code(&["mixed-volume", "--engine", "segments"], squares), Some(3));
}

#[test]
fn engine_failure_exit_status() {
    // A registry-level failure is covered in the library; the CLI maps it to 4.
    let e = mixvol_cli::CliError::from(mixvol::Error::NonGenericLifting { attempts: 8, last_seed: 1 });
    assert_eq!(e.exit_code(), 4);
}

#[test]
fn bench_emits_csv() {
    let out = mixvol(&["bench", "--max-n", "3", "--seed", "2"], "");
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "family,size,engine,wall_time_us");
    assert_eq!(lines.len(), 1 + 3 * 2);
    for line in &lines[1..] {
        let f: Vec<&str> = line.split(',').collect();
        assert_eq!(f.len(), 4);
        assert!(["boxes", "simplices", "segments"].contains(&f[0]));
        f[1].parse::<usize>().unwrap();
        f[3].parse::<u128>().unwrap();
    }
    assert_eq!(mixvol(&["bench", "--engine", "segments"], "").status.code(), Some(3));
}
