use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn tropigraph(args: &[&str], stdin: &str, env_limit: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_tropigraph"));
    cmd.args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .env_remove("TROPIGRAPH_EXACT_LIMIT");
    if let Some(limit) = env_limit {
        cmd.env("TROPIGRAPH_EXACT_LIMIT", limit);
    }
    let mut child = cmd.spawn().unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn ok(args: &[&str], stdin: &str) -> String {
    let out = tropigraph(args, stdin, None);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn gen(family: &str, params: &str) -> String {
    ok(&["gen", "--family", family, "--params", params], "")
}

#[test]
fn repr_then_verify_round_trips() {
    let cases = [
        ("path", "6", "generic", "min"),
        ("path", "6", "generic", "max"),
        ("path", "7", "caterpillar", "min"),
        ("caterpillar", "3:1=2,3=1+2", "caterpillar", "min"),
        ("multipartite", "2,3,1", "multipartite", "min"),
        ("cycle", "7", "cycle3", "min"),
        ("cycle", "6", "cover", "max"),
        ("cycle", "6", "intersection", "min"),
        ("star", "5", "threshold", "max"),
        ("matching", "3", "extension", "min"),
    ];
    for (i, (family, params, method, algebra)) in cases.into_iter().enumerate() {
        let g6 = gen(family, params);
        let rep = ok(&["repr", "--method", method, "--algebra", algebra, "--t", "3/2"], &g6);
        let graph_file = scratch(&format!("rt{i}.g6"), &g6);
        let rep_file = scratch(&format!("rt{i}.json"), &rep);
        let report: Value = serde_json::from_str(&ok(
            &["verify", "--graph", graph_file.to_str().unwrap(), "--rep", rep_file.to_str().unwrap()],
            "",
        ))
        .unwrap();
        assert_eq!(report["valid"], true, "{family} {params} {method}");
    }
}

#[test]
fn verify_reports_violations_with_exit_1() {
    let rep = ok(&["repr", "--method", "cycle3"], &gen("cycle", "5"));
    let rep_file = scratch("bad.json", &rep);
    let graph_file = scratch("bad.g6", &gen("path", "5"));
    let out = tropigraph(
        &["verify", "--graph", graph_file.to_str().unwrap(), "--rep", rep_file.to_str().unwrap()],
        "",
        None,
    );
    assert_eq!(out.status.code(), Some(1));
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["valid"], false);
    assert_eq!(report["violations"][0]["expected"], "non-edge");
}

#[test]
fn dim_of_p6() {
    let doc: Value = serde_json::from_str(&ok(&["dim"], &gen("path", "6"))).unwrap();
    assert_eq!(doc["rho_min_plus"], 2);
    assert_eq!(doc["rho_max_plus"], 3);
    assert_eq!(doc["method"]["kind"], "exact");
    assert_eq!(doc["min_plus_witness"]["dim"], 2);
}

#[test]
fn dim_reads_edge_lists() {
    let edges = ok(&["gen", "--family", "cycle", "--params", "5", "--format", "edges"], "");
    let doc: Value = serde_json::from_str(&ok(&["dim"], &edges)).unwrap();
    assert_eq!((doc["rho_min_plus"].as_u64(), doc["rho_max_plus"].as_u64()), (Some(3), Some(3)));
}

#[test]
fn exact_limit_from_env_and_flag() {
    // Spider with three legs of length 2.
    let spider = "n 7\n0 1\n1 2\n0 3\n3 4\n0 5\n5 6\n";
    let out = tropigraph(&["dim"], spider, Some("4"));
    assert_eq!(out.status.code(), Some(0));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["method"]["kind"], "bounds_only");

    let doc: Value = serde_json::from_str(&ok(&["dim"], spider)).unwrap();
    assert_eq!(doc["method"]["kind"], "exact");

    let out = tropigraph(&["dim", "--exact-limit", "12"], spider, Some("4"));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["method"]["kind"], "exact");

    let out = tropigraph(&["dim"], spider, Some("nonsense"));
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn slices_recombine() {
    let rep = ok(&["repr", "--method", "cycle3"], &gen("cycle", "6"));
    let rep_file = scratch("slices.json", &rep);
    let doc: Value = serde_json::from_str(&ok(&["slices", "--rep", rep_file.to_str().unwrap()], "")).unwrap();
    assert_eq!(doc["slices"].as_array().unwrap().len(), 3);
    assert_eq!(doc["combine"], "intersection");
    assert_eq!(doc["combined_matches"], true);
}

#[test]
fn usage_errors_exit_2() {
    for args in [&["frobnicate"][..], &["repr", "--method", "nope"], &["gen"]] {
        let out = tropigraph(args, "", None);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
    let out = tropigraph(&["dim"], "not a graph\n", None);
    assert_eq!(out.status.code(), Some(2));
    let out = tropigraph(&["demo", "nobody"], "", None);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn demos_run() {
    let students = ok(&["demo", "students"], "");
    assert!(students.contains("edges: AC AF BE CD EF"), "{students}");
    assert!(ok(&["demo", "funds"], "").contains("maximal"));
}
