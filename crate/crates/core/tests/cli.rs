use std::process::{Command, Output};
use std::sync::OnceLock;

use serde_json::{json, Value};

fn schubert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schubert"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn filter_json() -> &'static Value {
    static OUT: OnceLock<Value> = OnceLock::new();
    OUT.get_or_init(|| {
        let out = schubert(&["filter", "--format", "json"]);
        assert_eq!(out.status.code(), Some(0));
        serde_json::from_str(&stdout(&out)).unwrap()
    })
}

#[test]
fn scalar_commands() {
    let cases: [(&[&str], &str); 9] = [
        (&["intersect", "--k", "1", "--n", "4", "1;1;1;1;1;1"], "5"),
        (&["intersect", "--k", "1", "--n", "4", "3;3"], "1"),
        (&["intersect", "--k", "1", "--n", "4", "2,1;3"], "0"),
        (
            &["chi", "--e", "-1", "--a", "6", "--b", "6", "--twist", "5"],
            "-935",
        ),
        (
            &["chi", "--e", "0", "--a", "0", "--b", "0", "--twist", "0"],
            "2",
        ),
        (
            &["chi", "--e", "0", "--a", "0", "--b", "0", "--twist", "1"],
            "20",
        ),
        (&["chi-p3", "--e", "0", "--a", "-4", "--twist", "-1"], "4"),
        (&["chi-p3", "--e", "-1", "--a", "-2", "--twist", "-1"], "1"),
        (&["chi-p3", "--e", "0", "--a", "0", "--twist", "0"], "2"),
    ];
    for (args, expected) in cases {
        let out = schubert(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        assert_eq!(stdout(&out).trim(), expected, "{args:?}");
    }
}

#[test]
fn fractional_values_render_reduced() {
    let out = schubert(&["chi-p3", "--e", "1", "--a", "1", "--twist", "0"]);
    // (1 - 3)/6 + (1 - 2) + 11/6 + 2 = 5/2
    assert_eq!(stdout(&out).trim(), "5/2");
    let out = schubert(&["--format", "json", "chi-p3", "--e", "1", "--a", "1"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["result"][0]["value"], json!({"num": "5", "den": "2"}));
}

#[test]
fn splitting_types_command() {
    for (e, n, expected) in [
        ("0", "4", "(-2,2),(-1,1),(0,0)"),
        ("-1", "4", "(-2,1),(-1,0)"),
        ("0", "5", "(-2,2),(-1,1),(0,0)"),
    ] {
        let out = schubert(&["splitting-types", "--e", e, "--n", n]);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(stdout(&out).trim(), expected);
    }
    let out = schubert(&["splitting-types", "--e", "0", "--n", "4", "--format", "csv"]);
    assert_eq!(stdout(&out), "p,q\n-2,2\n-1,1\n0,0\n");
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| schubert(args).status.code();
    assert_eq!(
        code(&["intersect", "--k", "1", "--n", "4", "2;;x"]),
        Some(2)
    );
    assert_eq!(code(&["intersect", "--k", "1", "--n", "4", "1,2"]), Some(2));
    assert_eq!(code(&["intersect", "--k", "1", "--n", "4", "4"]), Some(3));
    assert_eq!(
        code(&["intersect", "--k", "1", "--n", "4", "1,1,1"]),
        Some(3)
    );
    assert_eq!(code(&["intersect", "--k", "5", "--n", "4", "1"]), Some(3));
    assert_eq!(code(&["chi", "--e", "0", "--a", "x", "--b", "0"]), Some(2));
    assert_eq!(code(&["chi-p3", "--e", "0.5", "--a", "0"]), Some(2));
    assert_eq!(code(&["splitting-types", "--e", "0", "--n", "1"]), Some(2));
    assert_eq!(code(&["frobnicate"]), Some(2));
    assert_eq!(
        code(&["--format", "yaml", "chi-p3", "--e", "0", "--a", "0"]),
        Some(2)
    );
    let out = schubert(&["intersect", "--k", "1", "--n", "4", "4"]);
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());
}

#[test]
fn filter_table_in_json() {
    let rows = filter_json()["candidates"].as_array().unwrap();
    assert_eq!(rows.len(), 10);
    let surviving = rows.iter().filter(|r| r["status"] == "surviving").count();
    assert_eq!(surviving, 9);
    let killed: Vec<_> = rows
        .iter()
        .filter(|r| r["status"] == "eliminated")
        .collect();
    assert_eq!(killed.len(), 1);
    assert_eq!(
        (
            killed[0]["e"].as_i64(),
            killed[0]["a"].as_i64(),
            killed[0]["b"].as_i64()
        ),
        (Some(-1), Some(6), Some(6))
    );
    assert_eq!(killed[0]["rule"], "griffiths");
    assert_eq!(killed[0]["chi_5"], json!({"num": "-935", "den": "1"}));
}

fn json_cell_text(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::Object(o) => {
            let (num, den) = (o["num"].as_str().unwrap(), o["den"].as_str().unwrap());
            if den == "1" {
                num.to_string()
            } else {
                format!("{num}/{den}")
            }
        }
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

#[test]
fn csv_and_json_carry_the_same_data() {
    let out = schubert(&["filter", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let mut reader = csv::Reader::from_reader(out.stdout.as_slice());
    let headers = reader.headers().unwrap().clone();
    let csv_rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    let json_rows = filter_json()["candidates"].as_array().unwrap();
    assert_eq!(csv_rows.len(), json_rows.len());
    for (c, j) in csv_rows.iter().zip(json_rows) {
        for (h, field) in headers.iter().zip(c.iter()) {
            assert_eq!(field, json_cell_text(&j[h]), "column {h}");
        }
    }

    let plain = stdout(&schubert(&["filter"]));
    let plain_rows: Vec<Vec<&str>> = plain
        .lines()
        .skip(1)
        .map(|l| l.split_whitespace().collect())
        .collect();
    assert_eq!(plain_rows.len(), csv_rows.len());
    for (p, c) in plain_rows.iter().zip(&csv_rows) {
        let c: Vec<&str> = c
            .iter()
            .map(|f| if f.is_empty() { "-" } else { f })
            .collect();
        assert_eq!(p, &c);
    }
}

#[test]
fn replay_report() {
    let out = schubert(&["replay", "--format", "json"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();

    let step3: Vec<String> = report["step3_table"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| json_cell_text(&r["chi_p3_minus_1"]))
        .collect();
    assert_eq!(step3, ["4", "1", "1", "1", "1"]);

    let final_list = report["final_list"].as_array().unwrap();
    assert_eq!(final_list.len(), 6);
    assert_eq!(
        final_list.iter().filter(|r| r["kind"] == "split").count(),
        5
    );
    let non_split: Vec<_> = final_list
        .iter()
        .filter(|r| r["kind"] == "non_split")
        .collect();
    assert_eq!(non_split.len(), 1);
    assert_eq!(
        (
            non_split[0]["e"].as_i64(),
            non_split[0]["a"].as_i64(),
            non_split[0]["b"].as_i64()
        ),
        (Some(-1), Some(0), Some(1))
    );
    let bundle = non_split[0]["bundle"].as_str().unwrap();
    assert!(bundle.contains("tautological") && bundle.contains("universal quotient"));

    let rules = report["rules"].as_array().unwrap();
    assert!(rules
        .iter()
        .any(|r| r["rule"] == "griffiths" && r["status"] == "cited, not verified"));
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        &["replay"][..],
        &["replay", "--format", "csv"],
        &["filter", "--all", "--format", "csv"],
    ] {
        let a = schubert(args);
        let b = schubert(args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}
