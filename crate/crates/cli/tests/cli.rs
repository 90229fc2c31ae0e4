use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_netorder"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let o = run(args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

fn edge_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn keys(v: &Value) -> Vec<&str> {
    let mut k: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    k.sort_unstable();
    k
}

#[test]
fn analyze_catalog_entry() {
    let v = json(&["analyze", "--catalog", "fig14_G"]);
    assert_eq!(v["nu"], 88);
    assert_eq!(v["delta"], serde_json::json!([4, 4, 3, 3, 3, 3]));
    assert_eq!(v["gamma"], serde_json::json!([17, 17, 14, 14, 13, 13]));
    assert_eq!(
        keys(&v),
        [
            "alpha",
            "connected",
            "delta",
            "density",
            "density_exact",
            "distance",
            "edges",
            "gamma",
            "is_tree",
            "measures",
            "nodes",
            "nu"
        ]
    );
    assert_eq!(
        keys(&v["measures"]),
        ["gini_generalized", "gini_standard", "power2", "theil"]
    );
}

#[test]
fn analyze_reproduces_every_catalog_entry() {
    let list = json(&["catalog", "list", "--format", "json"]);
    for entry in list.as_array().unwrap() {
        let id = entry["id"].as_str().unwrap();
        let v = json(&["analyze", "--catalog", id]);
        for field in ["delta", "alpha", "gamma", "nu"] {
            if let Some(want) = entry["expected"].get(field) {
                assert_eq!(&v[field], want, "{id} {field}");
            }
        }
    }
}

#[test]
fn analyze_family_member() {
    let v = json(&["analyze", "--family", "star", "--n", "6"]);
    assert_eq!(v["delta"], serde_json::json!([5, 1, 1, 1, 1, 1]));
    let v = json(&["analyze", "--family", "kite", "--m", "4"]);
    assert_eq!(v["nodes"], 7);
}

#[test]
fn analyze_disconnected_input() {
    let f = edge_file("a b\nc d\n");
    let v = json(&["analyze", "--input", f.path().to_str().unwrap()]);
    assert_eq!(v["connected"], false);
    assert_eq!(v["alpha"], Value::Null);
    assert_eq!(v["distance"], Value::Null);
}

#[test]
fn parse_errors_exit_2() {
    let f = edge_file("");
    let o = run(&["analyze", "--input", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let f = edge_file("a b\nc c\n");
    let o = run(&["analyze", "--input", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    assert_eq!(run(&["analyze"]).status.code(), Some(2));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn compare_statements() {
    let v = json(&["compare", "--catalog", "fig18_a", "--catalog", "fig18_b"]);
    let c = &v["comparison"];
    assert_eq!(c["delta_verdict"]["relation"], "less");
    assert_eq!(c["delta_verdict"]["strict"], true);
    assert_eq!(c["gamma_verdict"]["relation"], "incomparable");
    assert_eq!(c["statement"], "fig18_b is a smaller world than fig18_a");

    let v = json(&["compare", "--catalog", "fig19_a", "--catalog", "fig19_b"]);
    assert_eq!(v["comparison"]["gamma_verdict"]["relation"], "less");
    assert_eq!(v["comparison"]["delta_verdict"]["relation"], "incomparable");

    let v = json(&["compare", "--catalog", "fig4_G1", "--catalog", "fig4_G1"]);
    assert_eq!(v["comparison"]["delta_verdict"]["relation"], "equal");
    assert_eq!(v["comparison"]["gamma_verdict"]["relation"], "equal");
}

#[test]
fn compare_keeps_command_line_order() {
    let f = edge_file("0 1\n1 2\n2 3\n3 0\n");
    let path = f.path().to_str().unwrap();
    let v = json(&["compare", "--catalog", "fig19_a", "--input", path]);
    assert_eq!(v["first_name"], "fig19_a");
    assert_eq!(v["comparison"]["gamma_verdict"]["relation"], "less");
    let v = json(&["compare", "--input", path, "--catalog", "fig19_a"]);
    assert_eq!(v["second_name"], "fig19_a");
    assert_eq!(v["comparison"]["gamma_verdict"]["relation"], "greater");
}

#[test]
fn compare_unequal_sizes_is_a_structured_error() {
    let o = run(&["compare", "--catalog", "fig19_a", "--catalog", "fig14_G"]);
    assert_eq!(o.status.code(), Some(2));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["error"]["kind"], "node_count_mismatch");
    assert_eq!(v["error"]["first"]["nodes"], 4);
    assert_eq!(v["error"]["second"]["nodes"], 6);
}

#[test]
fn family_reports() {
    let v = json(&["family", "--family", "kite", "--m-grid", "10,20,50"]);
    let closed = &v["classification"]["closed_form"];
    assert_eq!(closed["degree"]["dswmd"]["value"], true);
    assert_eq!(closed["degree"]["dswmd"]["provenance"], "closed-form");
    assert_eq!(v["rows"].as_array().unwrap().len(), 3);

    let v = json(&["family", "--family", "chain", "--n-grid", "32..1024"]);
    assert_eq!(v["grid"], serde_json::json!([32, 64, 128, 256, 512, 1024]));
    for kind in ["closed_form", "empirical"] {
        let c = &v["classification"][kind];
        for flag in ["dswl", "dswa", "dswmd"] {
            assert_eq!(c["degree"][flag]["value"], false, "{kind} {flag}");
        }
        for flag in ["swd", "swa", "swmd"] {
            assert_eq!(c["distance"][flag]["value"], false, "{kind} {flag}");
        }
    }
    assert_eq!(
        v["classification"]["empirical"]["degree"]["dswl"]["provenance"],
        "empirical-trend"
    );

    let v = json(&["family", "--family", "spider", "--m-grid", "4,8,16"]);
    let d = &v["classification"]["closed_form"]["degree"];
    assert_eq!(d["dswa"]["value"], true);
    assert_eq!(d["dswmd"]["value"], false);
}

#[test]
fn family_unrealizable_grid() {
    let o = run(&["family", "--family", "spider", "--n-grid", "32..1024"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("divisible by 3"));
}

#[test]
fn family_csv() {
    let o = run(&[
        "family", "--family", "star", "--n-grid", "8,16", "--format", "csv",
    ]);
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].starts_with("n,size,max_degree"));
    assert!(lines[1].starts_with("8,8,7,"));
}

#[test]
fn lorenz_csv() {
    let f = edge_file("a b\nb c\nc d\n");
    let o = run(&["lorenz", "--input", f.path().to_str().unwrap()]);
    assert_eq!(stdout(&o), "j,cumulative\n0,0\n1,2\n2,4\n3,5\n4,6\n");
    let o = run(&["lorenz", "--family", "complete", "--n", "4"]);
    assert!(stdout(&o).ends_with("4,12\n"));
    let f = edge_file("x y\n");
    let o = run(&["lorenz", "--input", f.path().to_str().unwrap()]);
    assert_eq!(stdout(&o), "j,cumulative\n0,0\n1,1\n2,2\n");
    let o = run(&["lorenz", "--catalog", "fig19_a", "--array", "gamma"]);
    assert!(stdout(&o).ends_with("4,18\n"));
}

#[test]
fn verify_full_run() {
    let o = run(&["verify"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("0 failed, 3 flagged\n"));
}

#[test]
fn verify_single_groups() {
    let v = json(&["verify", "--only", "gini", "--format", "json"]);
    let computed: Vec<&str> = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["computed"].as_str().unwrap())
        .collect();
    assert_eq!(computed, ["17", "18", "24", "20", "27", "30"]);

    let v = json(&[
        "verify", "--only", "theorem6", "--n", "7", "--format", "json",
    ]);
    assert_eq!(v["summary"]["fail"], 0);
    assert_eq!(v["rows"].as_array().unwrap().len(), 4);

    assert_eq!(run(&["verify", "--only", "nosuch"]).status.code(), Some(2));
}

#[test]
fn verify_csv() {
    let o = run(&["verify", "--only", "discrepancies", "--format", "csv"]);
    let text = stdout(&o);
    assert!(text.starts_with("group,name,expected,computed,status\n"));
    assert_eq!(text.matches(",flagged\n").count(), 3);
}

#[test]
fn catalog_list_and_emit() {
    let text = stdout(&run(&["catalog", "list"]));
    let line = text.lines().find(|l| l.starts_with("fig15a")).unwrap();
    assert!(line.contains("[12, 12, 12, 12, 12, 12]"));
    assert!(text.lines().any(|l| l.starts_with("fig15b")));

    let o = run(&["catalog", "emit", "fig19_b"]);
    assert_eq!(stdout(&o), "0 1\n0 3\n1 2\n2 3\n");
    let o = run(&["catalog", "emit", "nosuch"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn emitted_edge_lists_parse_back() {
    let text = stdout(&run(&["catalog", "emit", "fig14_Gp"]));
    let f = edge_file(&text);
    let v = json(&["analyze", "--input", f.path().to_str().unwrap()]);
    assert_eq!(v["gamma"], serde_json::json!([16, 16, 14, 14, 14, 14]));
}
