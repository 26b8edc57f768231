use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superplactic")).args(args).output().expect("binary runs")
}

fn run_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superplactic")).args(args).env(key, value).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    assert!(o.status.success(), "failed: {}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(&stdout(o)).unwrap()
}

fn write_temp(dir: &tempfile::TempDir, name: &str, v: &Value) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, v.to_string()).unwrap();
    path.display().to_string()
}

const READING_WORD: &str = "3,2,2,2,4,2,4,2,3,3,4,1,1,1,1,4,5";

#[test]
fn tableau_of_reading_word() {
    let out = run(&["tableau-of-word", "--word", READING_WORD, "--alphabet", &data("odd-even.json")]);
    assert_eq!(stdout(&out), "1 1 1 1 4 5\n2 3 3 4\n2 4\n2 4\n2\n2\n3\n");
}

#[test]
fn rsk_of_worked_array() {
    let out = run(&["rsk", "--array", &data("example-array.json")]);
    assert_eq!(stdout(&out), "T:\n1 1 1 6\n2 4 5\n3\nU:\n1 2 2 6\n2 4 5\n3\n");
}

#[test]
fn empty_normal_form() {
    let out = run(&["normal-form", "--word", ""]);
    assert_eq!(stdout(&out), "\n");
    let out = run(&["normal-form", "--word", "", "--json"]);
    assert_eq!(json(&out)["word"], serde_json::json!([]));
}

#[test]
fn insertion_trace() {
    let args = [
        "insert",
        "--tableau",
        &data("insertion-tableau.json"),
        "--letters",
        "6,1",
        "--alphabet",
        &data("odd-even.json"),
    ];
    let text = stdout(&run(&args));
    assert!(text.starts_with("6 -> (1,7) via 6\n1 -> (7,1) via 1 2 2 2 2 2 3\n1 1 1 1 4 5 6\n"), "{text}");

    let mut js = args.to_vec();
    js.push("--json");
    let v = json(&run(&js));
    assert_eq!(v["trace"][1]["row"], 7);
    assert_eq!(v["tableau"]["shape"], serde_json::json!([7, 4, 2, 2, 1, 1, 1]));
}

#[test]
fn column_insert_then_delete() {
    let dir = tempfile::tempdir().unwrap();
    let a = data("odd-even.json");
    let v = json(&run(&["insert", "--mode", "col", "--letters", "2,2,1", "--alphabet", &a, "--json"]));
    let t = write_temp(&dir, "t.json", &v["tableau"]);
    assert_eq!(v["tableau"]["rows"], serde_json::json!([["1", "2"], ["2"]]));
    let col = v["trace"][2]["col"].as_u64().unwrap().to_string();
    let back = json(&run(&["delete", "--mode", "col", "--tableau", &t, "--index", &col, "--json"]));
    assert_eq!(back["letter"], "1");
    assert_eq!(back["tableau"]["rows"], serde_json::json!([["2"], ["2"]]));
}

#[test]
fn domain_errors_exit_one_with_name() {
    let dir = tempfile::tempdir().unwrap();
    let alpha = serde_json::json!({"letters": ["1", "2", "3"], "parity": [0, 0, 1]});
    let a = write_temp(&dir, "a.json", &alpha);
    let bad = write_temp(&dir, "bad.json", &serde_json::json!({"shape": [2], "rows": [["3", "3"]]}));
    let out = run(&["validate", "--tableau", &bad, "--alphabet", &a]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("RowConditionViolation"), "{}", stderr(&out));

    let out = run(&["tableau-of-word", "--word", "1,9", "--alphabet", &a]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("UnknownLetter"));

    let garbage = dir.path().join("garbage.json");
    std::fs::write(&garbage, "{not json").unwrap();
    let out = run(&["word-of-tableau", "--tableau", garbage.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("ParseError"));

    let out = run(&["pieri", "--shape", "1,2", "--p", "1", "--alphabet", &a]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("InvalidPartition"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(run(&["greene", "--word", "1,2"]).status.code(), Some(2));
    assert_eq!(run(&["pieri", "--shape", "1", "--p", "1"]).status.code(), Some(2));
    assert_eq!(run(&["validate"]).status.code(), Some(2));
}

#[test]
fn json_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let a = data("odd-even.json");
    let t = json(&run(&["tableau-of-word", "--word", READING_WORD, "--alphabet", &a, "--json"]));
    let t_path = write_temp(&dir, "t.json", &t);
    let w = json(&run(&["word-of-tableau", "--tableau", &t_path, "--json"]));
    let joined: Vec<&str> = w["word"].as_array().unwrap().iter().map(|s| s.as_str().unwrap()).collect();
    assert_eq!(joined.join(","), READING_WORD);
    let again = json(&run(&["tableau-of-word", "--word", &joined.join(","), "--alphabet", &a, "--json"]));
    assert_eq!(again, t);

    let pair = json(&run(&["rsk", "--array", &data("example-array.json"), "--json"]));
    let tp = write_temp(&dir, "tt.json", &pair["t"]);
    let up = write_temp(&dir, "uu.json", &pair["u"]);
    let s = json(&run(&["rsk-inverse", "--t", &tp, "--u", &up, "--json"]));
    let original: Value = serde_json::from_str(&std::fs::read_to_string(data("example-array.json")).unwrap()).unwrap();
    assert_eq!(s, original);
}

#[test]
fn outputs_are_deterministic() {
    let args = [
        "probe",
        "--alphabet-l",
        &data("mixed3.json"),
        "--alphabet-p",
        &data("mixed3.json"),
        "--max-cols",
        "3",
        "--json",
    ];
    let first = stdout(&run(&args));
    assert_eq!(first, stdout(&run(&args)));
    assert_eq!(first.lines().count(), 5);
    let summary: Value = serde_json::from_str(first.lines().next().unwrap()).unwrap();
    assert_eq!(summary["kind"], "summary");
}

#[test]
fn probe_writes_report_file() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("report.jsonl");
    let a = data("mixed3.json");
    let text = stdout(&run(&[
        "probe",
        "--alphabet-l",
        &a,
        "--alphabet-p",
        &a,
        "--max-cols",
        "2",
        "--out",
        out_path.to_str().unwrap(),
    ]));
    assert!(text.starts_with("arrays: "));
    let report = std::fs::read_to_string(out_path).unwrap();
    assert_eq!(report.lines().count(), 5);
}

#[test]
fn state_cap_comes_from_environment() {
    let out = run_env(&["class", "--word", "3,1,2,4,5"], "SUPERPLACTIC_MAX_STATES", "2");
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("BoundExceeded"));
    let ok = run_env(&["class", "--word", "3,1,2"], "SUPERPLACTIC_MAX_STATES", "100");
    assert!(stdout(&ok).starts_with("size: 2\n"));
}

#[test]
fn greene_and_pieri() {
    let dir = tempfile::tempdir().unwrap();
    let a = write_temp(&dir, "a.json", &serde_json::json!({"letters": ["1","2","3","4","5"], "parity": [0,0,1,0,1]}));
    let w = "1,2,3,3,4,5,5";
    assert_eq!(stdout(&run(&["greene", "--word", w, "--k", "1", "--alphabet", &a])), "5\n");
    assert_eq!(stdout(&run(&["greene", "--word", w, "--k", "3", "--mode", "col", "--alphabet", &a])), "5\n");
    assert_eq!(
        stdout(&run(&["greene", "--word", w, "--k", "2", "--mode", "shape", "--alphabet", &a])),
        "row: 7\ncol: 4\n"
    );

    let report = json(&run(&["pieri", "--shape", "2,1", "--p", "2", "--alphabet", &data("mixed3.json"), "--json"]));
    assert_eq!(report["holds"], true);
    assert_eq!(report["mode"], "row");
}

#[test]
fn symmetry_and_validation() {
    let v = json(&run(&["symmetry", "--array", &data("example-array.json"), "--json"]));
    assert_eq!(v["symmetric"], true);
    assert_eq!(v["hypothesis"], true);
    assert!(v["hypothesis_failure"].is_null());
    assert_eq!(v["swapped"]["top"].as_array().unwrap().len(), 8);

    let v = json(&run(&["validate", "--array", &data("example-array.json"), "--json"]));
    assert_eq!(v["columns"], 8);
    let v = json(&run(&["validate", "--word", "b,a,c", "--json"]));
    assert_eq!(v["length"], 3);
}

#[test]
fn reads_standard_input() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_superplactic"))
        .args(["word-of-tableau", "--tableau", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(br#"{"shape":[2,1],"rows":[["1","2"],["3"]]}"#).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(stdout(&out), "3,1,2\n");
}
