use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn sandpile(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sandpile"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = sandpile(&full);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

const TRIANGLE: &str = "vertices 3\nedge 1 2 1\nedge 2 3 1\nedge 3 1 1\n";

#[test]
fn group_of_five_cycle() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = write(
        dir.path(),
        "c5.txt",
        "# five-cycle\nvertices 5\nedge 1 2 1\nedge 2 3 1\nedge 3 4 1\nedge 4 5 1\nedge 5 1 1\n",
    );
    let out = sandpile(&["group", &c5]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "C_5\norder: 5\n");

    let report = json(&["group", &c5, "--drop", "2"]);
    assert_eq!(report["command"], "group");
    assert_eq!(report["inputs"]["drop"], 2);
    assert_eq!(report["result"]["factors"], serde_json::json!(["5"]));
    assert_eq!(report["result"]["order"], "5");
}

#[test]
fn generated_chain_has_group_c373() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ch.txt");
    let path = path.to_str().unwrap();
    let report = json(&["gen", "ch-canonical", "--a", "3,6,4,6", "--out", path]);
    assert_eq!(report["result"]["vertices"], "13");
    assert_eq!(report["result"]["edges"], "16");
    assert!(report["result"].get("graph").is_none());

    let out = sandpile(&["group", path]);
    assert_eq!(stdout(&out), "C_373\norder: 373\n");

    let member = dir.path().join("member.txt");
    let member = member.to_str().unwrap();
    json(&["gen", "ch-member", "--a", "3,6,4,6", "--plan", "1,3,2", "--out", member]);
    assert_eq!(stdout(&sandpile(&["group", member])), "C_373\norder: 373\n");
}

#[test]
fn gen_without_out_prints_parseable_graph() {
    let out = sandpile(&["gen", "ch-canonical", "--a", "3,4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("vertices 5\n"), "{text}");

    let dir = tempfile::tempdir().unwrap();
    let c5 = dir.path().join("c5.txt");
    let c5 = c5.to_str().unwrap();
    json(&["gen", "ch-canonical", "--a", "5", "--out", c5]);
    assert_eq!(stdout(&sandpile(&["group", c5])), "C_5\norder: 5\n");

    let dot = stdout(&sandpile(&["gen", "ch-canonical", "--a", "3,4", "--dot"]));
    assert!(dot.contains("graph"), "{dot}");
}

#[test]
fn gen_h_matches_the_drawn_example() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "f.txt", TRIANGLE);
    let g = write(dir.path(), "g.txt", "vertices 2\nedge 1 2 1\n");
    let mut orders = Vec::new();
    for i in ["1", "2"] {
        let h = dir.path().join(format!("h{i}.txt"));
        let h = h.to_str().unwrap();
        let report = json(&[
            "gen",
            "h",
            "--n",
            "6",
            "--i",
            i,
            "--f-graph",
            &f,
            "--g-graph",
            &g,
            "--f1",
            "1,0,0",
            "--f2",
            "0,0,2",
            "--g1",
            "1,1",
            "--g2",
            "1,1",
            "--out",
            h,
        ]);
        assert_eq!(report["result"]["vertices"], "11");
        assert_eq!(report["result"]["edges"], "17");
        orders.push(json(&["group", h])["result"].clone());
    }
    assert_eq!(orders[0], orders[1]);
}

#[test]
fn formulas_agree() {
    for kind in ["f", "g"] {
        let out = sandpile(&["formula", kind, "--a", "3,6,4,6"]);
        assert_eq!(stdout(&out), "373\n");
    }
    assert_eq!(stdout(&sandpile(&["formula", "f", "--a", "7"])), "7\n");
    assert_eq!(stdout(&sandpile(&["formula", "g", "--a", "-2,5"])), "-11\n");

    let big = "123456789012345678901234567890";
    let report = json(&["formula", "f", "--a", big]);
    assert_eq!(report["result"]["value"], big);
    assert_eq!(report["inputs"]["a"], serde_json::json!([big]));
}

#[test]
fn verify_suites_pass() {
    for (theorem, trials, seed) in [
        ("t1", "50", "7"),
        ("t3", "1000", "1"),
        ("t4", "40", "5"),
        ("matrix-tree", "100", "3"),
    ] {
        let out = sandpile(&["verify", theorem, "--trials", trials, "--seed", seed]);
        assert!(out.status.success(), "{theorem}: {}", stdout(&out));
        assert_eq!(stdout(&out), format!("{theorem}: {trials}/{trials} passed\n"));
    }
    let report = json(&["verify", "t3", "--trials", "10", "--seed", "2", "--max-len", "4"]);
    assert_eq!(report["result"]["passed"], 10);
    assert_eq!(report["result"]["failed"], 0);
    assert_eq!(report["result"]["failure_seeds"], serde_json::json!([]));
    assert_eq!(report["inputs"]["max_len"], 4);
}

#[test]
fn json_output_is_deterministic() {
    let args = ["--json", "verify", "t1", "--trials", "20", "--seed", "11"];
    let first = sandpile(&args);
    let second = sandpile(&args);
    assert_eq!(first.stdout, second.stdout);
    let report: Value = serde_json::from_slice(&first.stdout).unwrap();
    assert!(report["command"].is_string());
    assert!(report["inputs"].is_object());
    assert!(report["result"]["passed"].is_u64());
    assert!(report["result"]["failed"].is_u64());
    assert!(report["result"]["failure_seeds"].is_array());
}

#[test]
fn laplacian_command() {
    let dir = tempfile::tempdir().unwrap();
    let t = write(dir.path(), "t.txt", TRIANGLE);
    assert_eq!(stdout(&sandpile(&["laplacian", &t])), "2 -1 -1\n-1 2 -1\n-1 -1 2\n");
    let report = json(&["laplacian", &t, "--reduced", "3"]);
    assert_eq!(
        report["result"]["matrix"],
        serde_json::json!([["2", "-1"], ["-1", "2"]])
    );
}

#[test]
fn errors_exit_with_status_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.txt", "vertices 2\nedge 1 1 1\n");
    let out = sandpile(&["group", &bad]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.starts_with("error: parse error"), "{err}");
    assert!(err.contains("self-loop"), "{err}");

    let split = write(dir.path(), "split.txt", "vertices 4\nedge 1 2 1\nedge 3 4 1\n");
    assert_eq!(sandpile(&["group", &split]).status.code(), Some(2));

    let missing = dir.path().join("missing.txt");
    assert_eq!(sandpile(&["group", missing.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(
        sandpile(&["gen", "ch-member", "--a", "3,4", "--plan", "5"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(sandpile(&["verify", "t9"]).status.code(), Some(2));
    assert_eq!(sandpile(&["formula", "f"]).status.code(), Some(2));
}
