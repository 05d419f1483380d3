//! Black-box tests of the `covrough` binary: worked values on the JSON
//! interface, canonical output, the exit-code contract (0 success, 1 parse,
//! 2 semantic, 3 law failure), and the `COVROUGH_MAX_N` environment cap.

use std::path::PathBuf;
use std::process::{Command, Output};

use covrough::SpaceDoc;
use serde_json::{json, Value};
use tempfile::TempDir;

const PAIRS: &str =
    r#"{"universe":["a","b","c","d"],"covering":[["a","b"],["a","c"],["b","d"]]}"#;
const NESTED: &str = r#"{"universe":["x1","x2","x3","x4"],
    "covering":[["x1"],["x2"],["x1","x2"],["x1","x3"],["x1","x2","x3"],
                ["x1","x2","x4"],["x1","x3","x4"],["x2","x3","x4"]]}"#;
const PARTITION: &str = r#"{"universe":["a","b","c","d"],"covering":[["a","b"],["c"],["d"]]}"#;
const LEFT_JM: &str =
    r#"{"universe":["x1","x2","x3","x4"],"covering":[["x1","x2"],["x2","x4"],["x2","x3","x4"]]}"#;
const RIGHT_JM: &str =
    r#"{"universe":["x1","x2","x3","x4"],"covering":[["x1","x2","x3"],["x2","x3","x4"]]}"#;
const SOURCE5: &str = r#"{"universe":["x1","x2","x3","x4","x5"],
    "covering":[["x1","x2"],["x2","x3"],["x4","x5"]]}"#;
const TARGET4: &str =
    r#"{"universe":["y1","y2","y3","y4"],"covering":[["y1","y2"],["y3"],["y4"]]}"#;
const COLLAPSE: &str = r#"{"map":{"x1":"y1","x2":"y2","x3":"y1","x4":"y3","x5":"y4"}}"#;

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_covrough"));
    cmd.env_remove("COVROUGH_MAX_N");
    cmd
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).expect("temp files are writable");
    path
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("the binary exits normally")
}

fn stdout_str(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr_str(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("stderr is UTF-8")
}

fn stdout_json(output: &Output) -> Value {
    let text = stdout_str(output);
    serde_json::from_str(text.trim()).unwrap_or_else(|e| panic!("bad JSON {text:?}: {e}"))
}

fn run_ok(cmd: &mut Command) -> Output {
    let output = cmd.output().expect("the binary spawns");
    assert_eq!(
        exit_code(&output),
        0,
        "expected success, stderr: {}",
        stderr_str(&output)
    );
    output
}

// ---------------------------------------------------------------------------
// approx
// ---------------------------------------------------------------------------

#[test]
fn approx_reproduces_the_worked_space() {
    let dir = TempDir::new().unwrap();
    let space = write(&dir, "pairs.json", PAIRS);
    let out = run_ok(bin().args(["approx", "--space"]).arg(&space).args([
        "--set",
        "a,d",
        "--show",
        "lower,upper,neighborhoods",
    ]));
    let v = stdout_json(&out);
    assert_eq!(v["set"], json!(["a", "d"]));
    assert_eq!(v["lower"], json!([]));
    assert_eq!(v["upper"], json!(["a", "b", "d"]));
    assert_eq!(v["method"], json!("neigh"));
    assert_eq!(
        v["neighborhoods"],
        json!({"a": ["a"], "b": ["b"], "c": ["a", "c"], "d": ["b", "d"]})
    );
}

#[test]
fn approx_methods_agree_on_the_upper_approximation() {
    let dir = TempDir::new().unwrap();
    let space = write(&dir, "pairs.json", PAIRS);
    for method in ["def3", "neigh", "subcov"] {
        let out = run_ok(
            bin()
                .args(["approx", "--space"])
                .arg(&space)
                .args(["--set", "a,d", "--method", method]),
        );
        let v = stdout_json(&out);
        assert_eq!(v["upper"], json!(["a", "b", "d"]), "method {method}");
        assert_eq!(v["method"], json!(method));
    }
}

#[test]
fn approx_accepts_the_empty_set() {
    let dir = TempDir::new().unwrap();
    let space = write(&dir, "pairs.json", PAIRS);
    let out = run_ok(
        bin()
            .args(["approx", "--space"])
            .arg(&space)
            .args(["--set", ""]),
    );
    let v = stdout_json(&out);
    assert_eq!(v["set"], json!([]));
    assert_eq!(v["lower"], json!([]));
    assert_eq!(v["upper"], json!([]));
}

#[test]
fn approx_rejects_unknown_selections_and_labels() {
    let dir = TempDir::new().unwrap();
    let space = write(&dir, "pairs.json", PAIRS);
    let out = bin()
        .args(["approx", "--space"])
        .arg(&space)
        .args(["--set", "a", "--show", "lower,bogus"])
        .output()
        .unwrap();
    assert_eq!(exit_code(&out), 2);
    assert!(stderr_str(&out).contains("unknown --show selection"));

    let out = bin()
        .args(["approx", "--space"])
        .arg(&space)
        .args(["--set", "a,z"])
        .output()
        .unwrap();
    assert_eq!(exit_code(&out), 2);
    assert!(stderr_str(&out).starts_with("error:"), "{}", stderr_str(&out));
}

// ---------------------------------------------------------------------------
// op and combine
// ---------------------------------------------------------------------------

/// Parses a space document printed by the binary and checks it is canonical:
/// re-emitting the parsed covering reproduces the line byte for byte.
fn parse_canonical_space(line: &str) -> Value {
    let doc = SpaceDoc::parse(line.trim()).expect("the binary prints valid documents");
    let covering = doc.to_covering().expect("the binary prints valid coverings");
    assert_eq!(
        SpaceDoc::from_covering(&covering).to_json(),
        line.trim(),
        "printed documents must be canonical"
    );
    serde_json::from_str(line.trim()).unwrap()
}

#[test]
fn op_int_keeps_the_four_triples() {
    let dir = TempDir::new().unwrap();
    let space = write(&dir, "nested.json", NESTED);
    let out = run_ok(
        bin()
            .args(["op", "--space"])
            .arg(&space)
            .args(["--apply", "int"]),
    );
    let v = parse_canonical_space(&stdout_str(&out));
    assert_eq!(
        v["covering"],
        json!([
            ["x1", "x2", "x3"],
            ["x1", "x2", "x4"],
            ["x1", "x3", "x4"],
            ["x2", "x3", "x4"]
        ])
    );
}

#[test]
fn op_reduct_fixes_a_partition() {
    let dir = TempDir::new().unwrap();
    let space = write(&dir, "partition.json", PARTITION);
    let out = run_ok(
        bin()
            .args(["op", "--space"])
            .arg(&space)
            .args(["--apply", "reduct"]),
    );
    let v = parse_canonical_space(&stdout_str(&out));
    assert_eq!(v["covering"], json!([["a", "b"], ["c"], ["d"]]));
}

#[test]
fn op_nei_prints_the_neighborhood_family() {
    let dir = TempDir::new().unwrap();
    let space = write(&dir, "pairs.json", PAIRS);
    let out = run_ok(
        bin()
            .args(["op", "--space"])
            .arg(&space)
            .args(["--apply", "nei"]),
    );
    let v = parse_canonical_space(&stdout_str(&out));
    assert_eq!(
        v["covering"],
        json!([["a"], ["b"], ["a", "c"], ["b", "d"]])
    );
}

#[test]
fn op_closure_adjoins_the_six_definable_unions() {
    let dir = TempDir::new().unwrap();
    let space = write(&dir, "pairs.json", PAIRS);
    let out = run_ok(
        bin()
            .args(["op", "--space"])
            .arg(&space)
            .args(["--apply", "closure"]),
    );
    let v = parse_canonical_space(&stdout_str(&out));
    // The three members produce exactly six distinct nonempty unions.
    assert_eq!(
        v["covering"],
        json!([
            ["a", "b"],
            ["a", "c"],
            ["a", "b", "c"],
            ["b", "d"],
            ["a", "b", "d"],
            ["a", "b", "c", "d"]
        ])
    );
}

#[test]
fn combine_reproduces_the_worked_join_and_meet() {
    let dir = TempDir::new().unwrap();
    let left = write(&dir, "left.json", LEFT_JM);
    let right = write(&dir, "right.json", RIGHT_JM);
    let out = run_ok(
        bin()
            .args(["combine", "--left"])
            .arg(&left)
            .arg("--right")
            .arg(&right)
            .args(["--with", "join"]),
    );
    let v = parse_canonical_space(&stdout_str(&out));
    assert_eq!(
        v["covering"],
        json!([
            ["x1", "x2"],
            ["x1", "x2", "x3"],
            ["x2", "x4"],
            ["x2", "x3", "x4"]
        ])
    );

    let out = run_ok(
        bin()
            .args(["combine", "--left"])
            .arg(&left)
            .arg("--right")
            .arg(&right)
            .args(["--with", "meet"]),
    );
    let v = parse_canonical_space(&stdout_str(&out));
    // The meet is the literal family of pointwise neighborhood
    // intersections; the singleton {x2} is a genuine member.
    assert_eq!(
        v["covering"],
        json!([["x2"], ["x1", "x2"], ["x2", "x3"], ["x2", "x4"]])
    );
}

#[test]
fn op_output_feeds_back_into_the_binary() {
    let dir = TempDir::new().unwrap();
    let space = write(&dir, "nested.json", NESTED);
    let out = run_ok(
        bin()
            .args(["op", "--space"])
            .arg(&space)
            .args(["--apply", "int"]),
    );
    let pruned = write(&dir, "pruned.json", stdout_str(&out).trim());
    let out = run_ok(
        bin()
            .args(["approx", "--space"])
            .arg(&pruned)
            .args(["--set", "x1"]),
    );
    let v = stdout_json(&out);
    // Under the four triples the lower approximation of {x1} is empty.
    assert_eq!(v["lower"], json!([]));
    assert_eq!(v["upper"], json!(["x1"]));
}

// ---------------------------------------------------------------------------
// equiv
// ---------------------------------------------------------------------------

#[test]
fn equiv_certifies_the_shared_reduct() {
    let six_pairs = json!([
        ["x1", "x2"],
        ["x1", "x3"],
        ["x2", "x3"],
        ["x1", "x4"],
        ["x2", "x4"],
        ["x3", "x4"]
    ]);
    let left_doc = r#"{"universe":["x1","x2","x3","x4"],
        "covering":[["x1","x2"],["x1","x3"],["x1","x4"],["x2","x3"],["x2","x4"],
                    ["x3","x4"],["x1","x2","x3"],["x1","x2","x4"]]}"#;
    let right_doc = r#"{"universe":["x1","x2","x3","x4"],
        "covering":[["x1","x2"],["x1","x3"],["x1","x4"],["x2","x3"],["x2","x4"],
                    ["x3","x4"],["x1","x2","x3"],["x1","x3","x4"],["x2","x3","x4"]]}"#;
    let dir = TempDir::new().unwrap();
    let left = write(&dir, "left.json", left_doc);
    let right = write(&dir, "right.json", right_doc);
    let out = run_ok(
        bin()
            .args(["equiv", "--left"])
            .arg(&left)
            .arg("--right")
            .arg(&right),
    );
    let v = stdout_json(&out);
    assert_eq!(v["same_lower"], json!(true));
    assert_eq!(v["same_upper"], json!(true));
    assert_eq!(v["reduct_left"], six_pairs);
    assert_eq!(v["reduct_right"], six_pairs);
}

#[test]
fn equiv_of_a_covering_with_itself() {
    let dir = TempDir::new().unwrap();
    let space = write(&dir, "pairs.json", PAIRS);
    let out = run_ok(
        bin()
            .args(["equiv", "--left"])
            .arg(&space)
            .arg("--right")
            .arg(&space),
    );
    let v = stdout_json(&out);
    assert_eq!(v["same_lower"], json!(true));
    assert_eq!(v["same_upper"], json!(true));
}

#[test]
fn equiv_rejects_mismatched_universes() {
    let dir = TempDir::new().unwrap();
    let left = write(&dir, "pairs.json", PAIRS);
    let right = write(&dir, "nested.json", NESTED);
    let out = bin()
        .args(["equiv", "--left"])
        .arg(&left)
        .arg("--right")
        .arg(&right)
        .output()
        .unwrap();
    assert_eq!(exit_code(&out), 2);
    assert!(stderr_str(&out).starts_with("error:"));
}

// ---------------------------------------------------------------------------
// hom
// ---------------------------------------------------------------------------

#[test]
fn hom_reports_the_collapsing_map() {
    let dir = TempDir::new().unwrap();
    let source = write(&dir, "source.json", SOURCE5);
    let target = write(&dir, "target.json", TARGET4);
    let map = write(&dir, "map.json", COLLAPSE);
    let out = run_ok(
        bin()
            .args(["hom", "--source"])
            .arg(&source)
            .arg("--target")
            .arg(&target)
            .arg("--map")
            .arg(&map)
            .args(["--set", "x2,x4"]),
    );
    let v = stdout_json(&out);
    assert_eq!(v["mode"], json!("definable"));
    assert_eq!(v["hom"], json!(true));
    assert_eq!(v["iso"], json!(false));
    let p = &v["preservation"];
    assert_eq!(p["set"], json!(["x2", "x4"]));
    assert_eq!(p["f_lower_x"], json!([]));
    assert_eq!(p["lower_f_x"], json!(["y3"]));
    assert_eq!(p["f_upper_x"], json!(["y2", "y3", "y4"]));
    assert_eq!(p["upper_f_x"], json!(["y1", "y2", "y3"]));
    assert_eq!(p["lower_inclusion_holds"], json!(true));
    assert_eq!(p["lower_equal"], json!(false));
    assert_eq!(p["upper_equal"], json!(false));
    assert_eq!(p["neighborhood_transport"], Value::Null);
}

#[test]
fn hom_strict_mode_rejects_the_collapsing_map() {
    let dir = TempDir::new().unwrap();
    let source = write(&dir, "source.json", SOURCE5);
    let target = write(&dir, "target.json", TARGET4);
    let map = write(&dir, "map.json", COLLAPSE);
    let out = run_ok(
        bin()
            .args(["hom", "--source"])
            .arg(&source)
            .arg("--target")
            .arg(&target)
            .arg("--map")
            .arg(&map)
            .args(["--mode", "strict"]),
    );
    let v = stdout_json(&out);
    assert_eq!(v["mode"], json!("strict"));
    // {x4, x5} maps onto {y3, y4}, which is definable but not a member.
    assert_eq!(v["hom"], json!(false));
    assert_eq!(v["iso"], json!(false));
}

#[test]
fn hom_identity_is_an_isomorphism() {
    let dir = TempDir::new().unwrap();
    let space = write(&dir, "pairs.json", PAIRS);
    let map = write(
        &dir,
        "id.json",
        r#"{"map":{"a":"a","b":"b","c":"c","d":"d"}}"#,
    );
    let out = run_ok(
        bin()
            .args(["hom", "--source"])
            .arg(&space)
            .arg("--target")
            .arg(&space)
            .arg("--map")
            .arg(&map),
    );
    let v = stdout_json(&out);
    assert_eq!(v["hom"], json!(true));
    assert_eq!(v["iso"], json!(true));
}

#[test]
fn hom_rejects_an_incomplete_mapping() {
    let dir = TempDir::new().unwrap();
    let source = write(&dir, "source.json", SOURCE5);
    let target = write(&dir, "target.json", TARGET4);
    let map = write(&dir, "partial.json", r#"{"map":{"x1":"y1"}}"#);
    let out = bin()
        .args(["hom", "--source"])
        .arg(&source)
        .arg("--target")
        .arg(&target)
        .arg("--map")
        .arg(&map)
        .output()
        .unwrap();
    assert_eq!(exit_code(&out), 2);
}

// ---------------------------------------------------------------------------
// count-coverings and enumerate-coverings
// ---------------------------------------------------------------------------

#[test]
fn count_coverings_prints_the_exact_sequence() {
    for (n, expected) in [
        ("1", "1"),
        ("2", "5"),
        ("3", "109"),
        ("4", "32297"),
        ("5", "2147321017"),
        ("6", "9223372023970362989"),
    ] {
        let out = run_ok(bin().args(["count-coverings", "--n", n]));
        assert_eq!(stdout_str(&out).trim(), expected, "n = {n}");
    }
    for n in ["0", "7"] {
        let out = bin().args(["count-coverings", "--n", n]).output().unwrap();
        assert_eq!(exit_code(&out), 2, "n = {n} must be out of range");
    }
}

#[test]
fn enumerate_coverings_streams_canonical_lines() {
    for (n, expected) in [("1", 1usize), ("2", 5), ("3", 109)] {
        let out = run_ok(bin().args(["enumerate-coverings", "--n", n]));
        let text = stdout_str(&out);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), expected, "n = {n}");
        for line in lines {
            parse_canonical_space(line);
        }
    }
    let out = run_ok(bin().args(["enumerate-coverings", "--n", "1"]));
    assert_eq!(
        stdout_str(&out).trim(),
        r#"{"universe":["x1"],"covering":[["x1"]]}"#
    );
    for n in ["0", "5"] {
        let out = bin()
            .args(["enumerate-coverings", "--n", n])
            .output()
            .unwrap();
        assert_eq!(exit_code(&out), 2, "n = {n} must be rejected");
    }
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

#[test]
fn check_runs_a_single_law() {
    let out = run_ok(bin().args(["check", "--law", "COUNT_A003465"]));
    let text = stdout_str(&out);
    assert!(text.contains("PASS"), "{text}");
    assert!(text.contains("COUNT_A003465"), "{text}");
    assert!(text.contains("1 law(s) run, 1 passed, 0 failed"), "{text}");
}

#[test]
fn check_annotates_the_worked_meet() {
    let out = run_ok(bin().args(["check", "--law", "EX5"]));
    let text = stdout_str(&out);
    assert!(text.contains("PASS"), "{text}");
    assert!(text.contains("note:"), "{text}");
    assert!(text.contains("{x2}"), "{text}");
}

#[test]
fn check_emits_json_reports() {
    let out = run_ok(bin().args(["check", "--law", "THM1", "--max-n", "4", "--json"]));
    let text = stdout_str(&out);
    let v: Value = serde_json::from_str(text.trim()).unwrap();
    assert_eq!(v["law"], json!("THM1"));
    assert_eq!(v["outcome"], json!("pass"));
    assert_eq!(v["instances_checked"], json!(517_646));
    assert!(v["scope"].as_str().unwrap().contains("n ≤ 4"));
    assert!(v["elapsed_ms"].as_f64().unwrap() > 0.0);
}

#[test]
fn check_rejects_unknown_laws_and_oversized_scopes() {
    let out = bin().args(["check", "--law", "THM99"]).output().unwrap();
    assert_eq!(exit_code(&out), 2);
    assert!(stderr_str(&out).starts_with("error:"));

    let out = bin().args(["check", "--max-n", "9"]).output().unwrap();
    assert_eq!(exit_code(&out), 2);
    assert!(stderr_str(&out).contains("exceeds the supported limit"));
}

#[test]
fn check_honors_the_environment_cap() {
    let out = bin()
        .args(["check", "--law", "THM1", "--json"])
        .env("COVROUGH_MAX_N", "3")
        .output()
        .unwrap();
    assert_eq!(exit_code(&out), 0, "{}", stderr_str(&out));
    let v: Value = serde_json::from_str(stdout_str(&out).trim()).unwrap();
    assert_eq!(v["instances_checked"], json!(894));
    assert!(v["scope"].as_str().unwrap().contains("n ≤ 3"));

    let out = bin()
        .args(["check", "--law", "THM1"])
        .env("COVROUGH_MAX_N", "three")
        .output()
        .unwrap();
    assert_eq!(exit_code(&out), 2);
    assert!(stderr_str(&out).contains("COVROUGH_MAX_N"));
}

#[test]
fn check_exits_three_when_a_law_fails() {
    // Capped to one-point universes the converse search has no pairs to
    // inspect, so the expected counterexample cannot be found.
    let out = bin()
        .args(["check", "--law", "PROP1_CONVERSE_FAILS"])
        .env("COVROUGH_MAX_N", "1")
        .output()
        .unwrap();
    assert_eq!(exit_code(&out), 3);
    assert!(stdout_str(&out).contains("FAIL"));
    assert!(stderr_str(&out).contains("1 law(s) did not pass"));
}

// ---------------------------------------------------------------------------
// Exit-code contract for inputs and usage.
// ---------------------------------------------------------------------------

#[test]
fn unreadable_or_malformed_input_exits_one() {
    let dir = TempDir::new().unwrap();
    let missing = dir.path().join("missing.json");
    let out = bin()
        .args(["approx", "--space"])
        .arg(&missing)
        .args(["--set", "a"])
        .output()
        .unwrap();
    assert_eq!(exit_code(&out), 1);
    assert!(stderr_str(&out).starts_with("error (parse):"));

    let truncated = write(&dir, "truncated.json", r#"{"universe": ["#);
    let out = bin()
        .args(["approx", "--space"])
        .arg(&truncated)
        .args(["--set", "a"])
        .output()
        .unwrap();
    assert_eq!(exit_code(&out), 1);
    assert!(stderr_str(&out).starts_with("error (parse):"));
}

#[test]
fn semantically_invalid_input_exits_two() {
    let dir = TempDir::new().unwrap();
    // Well-formed JSON whose members do not cover the universe.
    let gap = write(
        &dir,
        "gap.json",
        r#"{"universe":["a","b"],"covering":[["a"]]}"#,
    );
    let out = bin()
        .args(["approx", "--space"])
        .arg(&gap)
        .args(["--set", "a"])
        .output()
        .unwrap();
    assert_eq!(exit_code(&out), 2);
    assert!(stderr_str(&out).starts_with("error:"));

    let dup = write(
        &dir,
        "dup.json",
        r#"{"universe":["a","a"],"covering":[["a"]]}"#,
    );
    let out = bin()
        .args(["op", "--space"])
        .arg(&dup)
        .args(["--apply", "reduct"])
        .output()
        .unwrap();
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn usage_errors_follow_clap_conventions() {
    let out = bin().arg("bogus-subcommand").output().unwrap();
    assert_eq!(exit_code(&out), 2);

    let out = bin().args(["approx", "--set", "a"]).output().unwrap();
    assert_eq!(exit_code(&out), 2, "required --space is missing");

    let dir = TempDir::new().unwrap();
    let left = write(&dir, "left.json", LEFT_JM);
    let right = write(&dir, "right.json", RIGHT_JM);
    let out = bin()
        .args(["combine", "--left"])
        .arg(&left)
        .arg("--right")
        .arg(&right)
        .args(["--with", "bogus"])
        .output()
        .unwrap();
    assert_eq!(exit_code(&out), 2, "invalid --with value");

    let out = run_ok(bin().arg("--version"));
    assert!(stdout_str(&out).contains("covrough"));
}
