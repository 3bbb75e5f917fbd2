use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

const TWIN: &str = r#"{"vertices": 5, "edges": [[1,2,3],[2,3,4],[1,3,4,5]], "one_based": true}"#;
const C1: &str = r#"{"kind": "clutter", "one_based": true, "vertices": 10,
    "edges": [[1,2,3,4,5],[5,6,7,8,9],[3,4,5,6,7],[1,9,10]]}"#;
const C2: &str = r#"{"kind": "clutter", "one_based": true, "vertices": 12,
    "edges": [[1,2,3,4,5],[5,6,7,8,9],[3,4,5,6,7],[1,10,11],[9,11,12]]}"#;
const EVEN_MEET: &str = r#"{"kind": "clutter", "one_based": true, "vertices": 8,
    "edges": [[1,2,3,6,7],[3,4,5,7,8],[1,2,3,4,5]]}"#;
const E2: &str = r#"{"vertices": 2, "edges": [[0,1]]}"#;
const D1: &str = r#"{"vertices": 1, "edges": []}"#;
const K3: &str = r#"{"vertices": 3, "edges": [[0,1],[1,2],[0,2]]}"#;

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_hyperhopf"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json_output(args: &[&str], stdin: &str) -> Value {
    let out = run(args, stdin);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let record: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(record["command"], args[0]);
    record["output"].clone()
}

fn text_output(args: &[&str], stdin: &str) -> String {
    let mut full = args.to_vec();
    full.extend(["--output", "text"]);
    let out = run(&full, stdin);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().trim_end().to_string()
}

fn exit_code(args: &[&str], stdin: &str) -> Option<i32> {
    run(args, stdin).status.code()
}

#[test]
fn psi_examples() {
    assert_eq!(
        text_output(&["psi", "--basis", "powersum"], TWIN),
        "p[1, 1, 1, 1, 1] - 2 p[3, 1, 1] + p[5]"
    );
    let out = json_output(&["psi", "--basis", "powersum"], TWIN);
    assert_eq!(out["basis"], "powersum");
    assert_eq!(out["terms"].as_array().unwrap().len(), 3);
    let out = json_output(&["psi"], D1);
    assert_eq!(out["terms"], json!([{"composition": [1], "coefficient": 1}]));
    let out = json_output(&["psi", "--basis", "monomial"], E2);
    assert_eq!(out["terms"], json!([{"composition": [1, 1], "coefficient": 2}]));
}

#[test]
fn zinv_examples() {
    let single = r#"{"vertices": 4, "edges": [[0,1,2,3]]}"#;
    let d3 = r#"{"vertices": 3, "edges": []}"#;
    for method in ["takeuchi-sum", "deletion-contraction", "antipode-then-zeta"] {
        for (input, expected) in [(single, 2), (d3, -1), (K3, -6)] {
            let out = json_output(&["zinv", "--method", method], input);
            assert_eq!(out["zeta_inverse"], expected, "{method} on {input}");
            assert_eq!(out["method"], method);
        }
    }
}

#[test]
fn chrompoly_of_triangle() {
    let out = json_output(&["chrompoly"], K3);
    assert_eq!(out["coefficients"], json!([0, 2, -3, 1]));
}

#[test]
fn classify_examples() {
    let c1 = json_output(&["classify"], C1);
    assert_eq!(c1["is_eulerian"], true);
    assert_eq!(c1["nerve_is_flag"], false);
    assert_eq!(c1["witnesses"]["nerve_is_flag"].as_array().unwrap().len(), 3);
    let c2 = json_output(&["classify"], C2);
    assert_eq!(c2["is_eulerian"], true);
    assert_eq!(c2["intersection_graph_chordal"], false);
    let e = json_output(&["classify"], EVEN_MEET);
    assert_eq!(e["is_eulerian"], true);
    assert_eq!(e["is_odd_clutter"], false);
    assert_eq!(e["witnesses"]["is_odd_clutter"], json!([[0, 1, 2, 5, 6], [2, 3, 4, 6, 7]]));
    for report in [&c1, &c2, &e] {
        assert!(report["implications"].as_object().unwrap().values().all(|v| v == true));
    }
}

#[test]
fn euler_reports_witness() {
    let out = json_output(&["euler"], TWIN);
    assert_eq!(out["eulerian"], false);
    assert_eq!(out["witness"], json!({"subset": [0, 1, 2, 3], "zeta_inverse": -2}));
    let boundary = r#"{"vertices": 3, "facets": [[0,1],[1,2],[0,2]]}"#;
    let out = json_output(&["euler"], boundary);
    assert_eq!(out["eulerian"], true);
}

#[test]
fn antipode_examples() {
    let out = json_output(&["antipode"], E2);
    let terms = out["terms"].as_array().unwrap();
    let mut found: Vec<(i64, usize)> = terms
        .iter()
        .map(|t| (t["coefficient"].as_i64().unwrap(), t["tensor"][0]["edges"].as_array().unwrap().len()))
        .collect();
    found.sort();
    assert_eq!(found, [(-1, 1), (2, 0)]);
    let out = json_output(&["antipode"], D1);
    assert_eq!(out["terms"], json!([{"coefficient": -1, "tensor": [{"vertices": 1, "edges": []}]}]));
    let path = r#"{"vertices": 5, "edges": [[0,1],[1,2],[2,3,4]]}"#;
    assert_eq!(
        json_output(&["antipode", "--method", "takeuchi"], path),
        json_output(&["antipode", "--method", "recursive"], path)
    );
}

#[test]
fn complex_commands_round_trip() {
    let clutter = r#"{"vertices": 4, "edges": [[0,1],[2,3]]}"#;
    let ind = json_output(&["ind"], clutter);
    assert_eq!(ind["facets"], json!([[0, 2], [0, 3], [1, 2], [1, 3]]));
    let complex = json!({"vertices": 4, "facets": ind["facets"]}).to_string();
    let back = json_output(&["nonfaces"], &complex);
    assert_eq!(back, json!({"vertices": 4, "edges": [[0, 1], [2, 3]]}));
    let nerve = json_output(&["nerve"], r#"{"vertices": 5, "edges": [[0,1,2],[2,3,4]]}"#);
    assert_eq!(nerve, json!({"vertices": 2, "facets": [[0, 1]]}));
    // psi of a complex is psi of its nonface clutter
    assert_eq!(json_output(&["psi"], &complex), json_output(&["psi"], clutter));
}

#[test]
fn enumerate_reports() {
    let out = json_output(&["enumerate", "--max-vertices", "3"], "");
    assert_eq!(out["violations"], json!([]));
    assert_eq!(out["mode"], "exhaustive");
    let out = json_output(&["enumerate", "--max-vertices", "5"], "");
    assert_eq!(out["violations"], json!([]));
    assert!(out["levels"][5]["gds_not_eulerian"].as_u64().unwrap() >= 1);
    let out = json_output(&["enumerate", "--max-vertices", "4", "--checks", "hc"], "");
    assert_eq!(out["checks"], json!(["hc"]));
    assert_eq!(out["hypergraphs_checked"], 1 + 1 + 2 + 16 + 2048);
    let out = json_output(&["enumerate", "--max-vertices", "6", "--samples", "20", "--seed", "3"], "");
    assert_eq!(out["mode"], "sampled");
    assert_eq!(out["violations"], json!([]));
}

#[test]
fn exit_codes() {
    assert_eq!(exit_code(&["zinv"], "not json"), Some(2));
    assert_eq!(exit_code(&["zinv"], r#"{"vertices": 2, "edges": [[0,5]]}"#), Some(2));
    assert_eq!(exit_code(&["zinv"], r#"{"vertices": 2, "edges": [[0,1]], "extra": 1}"#), Some(2));
    assert_eq!(exit_code(&["zinv", "--method", "guess"], E2), Some(2));
    assert_eq!(exit_code(&["zinv", "--one-based"], r#"{"vertices": 2, "edges": [[0,1]]}"#), Some(2));
    let nested = r#"{"vertices": 3, "edges": [[0,1],[0,1,2]]}"#;
    assert_eq!(exit_code(&["classify"], nested), Some(2));
    assert_eq!(exit_code(&["zinv", "--kind", "clutter"], nested), Some(2));
    assert_eq!(exit_code(&["nonfaces"], E2), Some(2));
    assert_eq!(exit_code(&["zinv"], r#"{"vertices": 13, "edges": []}"#), Some(3));
    assert_eq!(exit_code(&["antipode"], r#"{"vertices": 9, "edges": []}"#), Some(3));
    assert_eq!(exit_code(&["enumerate", "--max-vertices", "9"], ""), Some(3));
    assert_eq!(exit_code(&["enumerate", "--max-vertices", "3", "--checks", "nope"], ""), Some(2));
}

#[test]
fn output_is_deterministic_and_digested() {
    let cases: [(&[&str], &str); 3] = [
        (&["classify"], C1),
        (&["psi", "--basis", "powersum"], TWIN),
        (&["antipode"], E2),
    ];
    for (args, input) in cases {
        let a = run(args, input);
        let b = run(args, input);
        assert_eq!(a.stdout, b.stdout);
        let record: Value = serde_json::from_slice(&a.stdout).unwrap();
        assert_eq!(record["input_digest"], hex::encode(Sha256::digest(input.as_bytes())));
        let text = String::from_utf8(a.stdout).unwrap();
        let command = text.find("\"command\"").unwrap();
        let digest = text.find("\"input_digest\"").unwrap();
        let output = text.find("\"output\"").unwrap();
        assert!(command < digest && digest < output);
    }
    let a = run(&["enumerate", "--max-vertices", "7", "--samples", "10", "--seed", "1"], "");
    let b = run(&["enumerate", "--max-vertices", "7", "--samples", "10", "--seed", "1"], "");
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn input_file_flag() {
    let dir = std::env::temp_dir().join(format!("hyperhopf-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("k3.json");
    std::fs::write(&path, K3).unwrap();
    let out = json_output(&["zinv", "--input", path.to_str().unwrap()], "");
    assert_eq!(out["zeta_inverse"], -6);
    assert_eq!(exit_code(&["zinv", "--input", dir.join("missing.json").to_str().unwrap()], ""), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}
