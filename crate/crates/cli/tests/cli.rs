use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_parabolic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json_records(args: &[&str]) -> Vec<Value> {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let o = run(&full);
    assert!(o.status.success(), "{}", stderr(&o));
    stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

fn schema() -> Value {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("schema/record.schema.json");
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

/// Checks the keywords used by the shipped schema: type, enum, pattern
/// prefix/suffix anchors are not interpreted, minimum, maximum, items,
/// required, properties and additionalProperties.
fn validate(schema: &Value, v: &Value, at: &str) -> Result<(), String> {
    if let Some(t) = schema.get("type") {
        let types: Vec<&str> = match t {
            Value::String(s) => vec![s.as_str()],
            Value::Array(a) => a.iter().filter_map(Value::as_str).collect(),
            _ => return Err(format!("{at}: bad schema type")),
        };
        let ok = types.iter().any(|t| match *t {
            "object" => v.is_object(),
            "array" => v.is_array(),
            "string" => v.is_string(),
            "integer" => v.is_u64() || v.is_i64(),
            "boolean" => v.is_boolean(),
            "null" => v.is_null(),
            _ => false,
        });
        if !ok {
            return Err(format!("{at}: {v} is not of type {types:?}"));
        }
    }
    if let Some(Value::Array(allowed)) = schema.get("enum") {
        if !allowed.contains(v) {
            return Err(format!("{at}: {v} not in enum"));
        }
    }
    if let (Some(min), Some(x)) = (schema.get("minimum").and_then(Value::as_i64), v.as_i64()) {
        if x < min {
            return Err(format!("{at}: {x} < {min}"));
        }
    }
    if let (Some(max), Some(x)) = (schema.get("maximum").and_then(Value::as_i64), v.as_i64()) {
        if x > max {
            return Err(format!("{at}: {x} > {max}"));
        }
    }
    if let (Some(items), Value::Array(a)) = (schema.get("items"), v) {
        for (i, item) in a.iter().enumerate() {
            validate(items, item, &format!("{at}[{i}]"))?;
        }
    }
    if let Value::Object(obj) = v {
        if let Some(Value::Array(req)) = schema.get("required") {
            for key in req.iter().filter_map(Value::as_str) {
                if !obj.contains_key(key) {
                    return Err(format!("{at}: missing {key}"));
                }
            }
        }
        let props = schema.get("properties").and_then(Value::as_object);
        for (key, val) in obj {
            match props.and_then(|p| p.get(key)) {
                Some(sub) => validate(sub, val, &format!("{at}.{key}"))?,
                None if schema.get("additionalProperties") == Some(&Value::Bool(false)) => {
                    return Err(format!("{at}: unexpected key {key}"));
                }
                None => {}
            }
        }
    }
    Ok(())
}

#[test]
fn classify_sp6_table() {
    let o = run(&[
        "classify",
        "--kind",
        "C3",
        "--blocks",
        "2",
        "--central",
        "2",
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    let header: Vec<&str> = text.lines().next().unwrap().split_whitespace().collect();
    assert_eq!(
        header[..5],
        ["kind", "coloring", "blocks", "central", "nice"]
    );
    let r = &json_records(&[
        "classify",
        "--kind",
        "C3",
        "--blocks",
        "2",
        "--central",
        "2",
    ])[0];
    assert_eq!(r["nice"], true);
    assert_eq!(r["birational"], true);
    assert_eq!(r["sl2"], true);
    assert_eq!(r["partition"], serde_json::json!([3, 3]));
}

#[test]
fn classify_e7_exception() {
    let r = &json_records(&["classify", "--kind", "E7", "--coloring", "1,1,0,0,0,0,1"])[0];
    assert_eq!(r["nice"], true);
    assert_eq!(r["birational"], false);
    assert_eq!(r["orbit_dim"], 106);
    assert_eq!(r["label"], "D_5(a_1)");
}

#[test]
fn classify_well_formed_but_not_nice() {
    let r = &json_records(&["classify", "--kind", "A4", "--blocks", "2,1,2"])[0];
    assert_eq!(r["nice"], false);
    assert_eq!(r["birational"], true);
}

#[test]
fn classify_by_coloring_keeps_given_coloring() {
    let r = &json_records(&["classify", "--kind", "D4", "--coloring", "0,0,1,1"])[0];
    assert_eq!(r["coloring"], serde_json::json!([0, 0, 1, 1]));
    assert_eq!(r["blocks"], serde_json::json!([3]));
    assert_eq!(r["central"], 2);
}

#[test]
fn invalid_descriptors_exit_two() {
    let o = run(&["classify", "--kind", "D4", "--blocks", "2,2,2,2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("first half"), "{}", stderr(&o));

    let o = run(&["classify", "--kind", "C3", "--coloring", "1,2,0"]);
    assert_eq!(o.status.code(), Some(2));

    let o = run(&["classify", "--kind", "X9", "--coloring", "1"]);
    assert_eq!(o.status.code(), Some(2));

    let o = run(&["classify", "--kind", "E7", "--blocks", "2"]);
    assert_eq!(o.status.code(), Some(2));

    let o = run(&[
        "classify",
        "--kind",
        "C3",
        "--blocks",
        "2",
        "--partition-method",
        "guess",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("closed-form"));

    let o = run(&["classify", "--kind", "C3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn strategies_selectable_by_name() {
    let args = [
        "classify",
        "--kind",
        "D5",
        "--blocks",
        "1,4",
        "--partition-method",
        "oracle",
        "--birational-method",
        "hesselink",
    ];
    let r = &json_records(&args)[0];
    assert_eq!(r["partition"], serde_json::json!([3, 3, 2, 2]));
    assert_eq!(r["birational"], true);
}

#[test]
fn enumerate_counts() {
    assert_eq!(
        json_records(&["enumerate", "--kind", "G2", "--birational"]).len(),
        3
    );
    assert_eq!(
        json_records(&["enumerate", "--kind", "E7", "--nice"]).len(),
        29
    );
    assert_eq!(
        json_records(&["enumerate", "--kind", "C", "--rank", "2", "--by-blocks"]).len(),
        4
    );
    for n in 1..=6 {
        let rank = n.to_string();
        assert_eq!(
            json_records(&["enumerate", "--kind", "A", "--rank", &rank]).len(),
            1 << n
        );
    }
    assert_eq!(
        json_records(&["enumerate", "--kind", "B", "--max-rank", "3"]).len(),
        4 + 8
    );
}

#[test]
fn enumerate_is_lexicographic_and_filtered() {
    let recs = json_records(&["enumerate", "--kind", "A3"]);
    let colorings: Vec<Vec<u64>> = recs
        .iter()
        .map(|r| {
            r["coloring"]
                .as_array()
                .unwrap()
                .iter()
                .map(|x| x.as_u64().unwrap())
                .collect()
        })
        .collect();
    let mut sorted = colorings.clone();
    sorted.sort();
    assert_eq!(colorings, sorted);

    let sl2 = json_records(&["enumerate", "--kind", "C", "--max-rank", "4", "--sl2"]);
    assert!(sl2
        .iter()
        .all(|r| r["sl2"] == true && r["birational"] == true));
    let normal = json_records(&["enumerate", "--kind", "D", "--rank", "5", "--normal"]);
    assert!(!normal.is_empty() && normal.iter().all(|r| r["normal"] == "normal"));
}

#[test]
fn enumerate_bad_combinations_exit_two() {
    assert_eq!(
        run(&["enumerate", "--kind", "E6", "--by-blocks"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["enumerate", "--kind", "E6", "--normal"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["enumerate", "--kind", "C3", "--rank", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["enumerate", "--kind", "C"]).status.code(), Some(2));
    assert_eq!(
        run(&["enumerate", "--kind", "C", "--rank", "2", "--max-rank", "3"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn json_output_matches_schema() {
    let schema = schema();
    let mut all = Vec::new();
    for args in [
        &["enumerate", "--kind", "A", "--max-rank", "4"][..],
        &["enumerate", "--kind", "B", "--max-rank", "3"],
        &["enumerate", "--kind", "C", "--max-rank", "3", "--by-blocks"],
        &["enumerate", "--kind", "D", "--max-rank", "4"],
        &["enumerate", "--kind", "F4"],
        &["enumerate", "--kind", "E7"],
    ] {
        all.extend(json_records(args));
    }
    for (i, r) in all.iter().enumerate() {
        validate(&schema, r, &format!("record {i}")).unwrap();
    }
    let bad = serde_json::json!({"kind": "C3"});
    assert!(validate(&schema, &bad, "bad").is_err());
}

#[test]
fn csv_has_header_and_constant_width() {
    for args in [
        &["enumerate", "--kind", "D", "--rank", "4", "--format", "csv"][..],
        &["enumerate", "--kind", "E6", "--format", "csv"],
    ] {
        let o = run(args);
        assert!(o.status.success());
        let mut rdr = csv::Reader::from_reader(o.stdout.as_slice());
        let header: Vec<String> = rdr.headers().unwrap().iter().map(String::from).collect();
        assert_eq!(
            header,
            [
                "kind",
                "coloring",
                "blocks",
                "central",
                "nice",
                "birational",
                "sl2",
                "normal",
                "partition",
                "orbit_dim",
                "covering_degree",
                "label"
            ]
        );
        let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
        assert!(!rows.is_empty());
        assert!(rows.iter().all(|r| r.len() == header.len()));
    }
}

#[test]
fn csv_and_json_agree() {
    let json = json_records(&["enumerate", "--kind", "C", "--rank", "3"]);
    let o = run(&["enumerate", "--kind", "C", "--rank", "3", "--format", "csv"]);
    let mut rdr = csv::Reader::from_reader(o.stdout.as_slice());
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), json.len());
    for (row, rec) in rows.iter().zip(&json) {
        assert_eq!(row[0], rec["kind"]);
        assert_eq!(row[4] == *"true", rec["nice"] == true);
        assert_eq!(row[9], rec["orbit_dim"].to_string());
    }
}

#[test]
fn verify_passes_and_is_deterministic() {
    let a = run(&[
        "verify", "--kind", "B", "--max-n", "7", "--trials", "1", "--seed", "7",
    ]);
    let b = run(&[
        "verify", "--kind", "B", "--max-N", "7", "--trials", "1", "--seed", "7",
    ]);
    assert!(a.status.success(), "{}", stdout(&a));
    assert_eq!(stdout(&a), stdout(&b));
    assert!(stdout(&a)
        .lines()
        .any(|l| l.starts_with("PASS partition B3")));
    assert!(stdout(&a).contains("0 failed"));
}

#[test]
fn verify_defaults_pass() {
    let o = run(&["verify", "--quiet"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let last = stdout(&o).lines().last().unwrap().to_string();
    assert!(last.contains(" 0 failed"), "{last}");
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn verify_rejects_exceptional() {
    assert_eq!(run(&["verify", "--kind", "E7"]).status.code(), Some(2));
}

#[test]
fn export_row_counts() {
    for (k, n) in [("G2", 3), ("F4", 8), ("E6", 30), ("E7", 26), ("E8", 28)] {
        let o = run(&["export", "--kind", k]);
        assert!(o.status.success());
        assert_eq!(stdout(&o).lines().count(), n, "{k}");
    }
    let o = run(&["export"]);
    assert_eq!(stdout(&o).lines().count(), 3 + 8 + 30 + 26 + 28);
}

#[test]
fn export_e8_row_eighteen() {
    let o = run(&["export", "--kind", "E8"]);
    let rows: Vec<Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    let r18 = rows.iter().find(|r| r["row"] == "18").unwrap();
    assert_eq!(r18["label"], "D_6");
    assert_eq!(r18["orbit_dim"], 216);
    assert_eq!(r18["stored_orbit_dim"], 216);
    assert_eq!(r18["mismatch"], false);
}

#[test]
fn export_e7_keeps_printed_row_numbers() {
    let o = run(&["export", "--kind", "E7", "--format", "csv"]);
    let mut rdr = csv::Reader::from_reader(o.stdout.as_slice());
    let rows: Vec<String> = rdr.records().map(|r| r.unwrap()[1].to_string()).collect();
    assert_eq!(rows.len(), 26);
    for skipped in ["5", "20", "25", "30"] {
        assert!(!rows.iter().any(|r| r == skipped));
    }
    assert_eq!(rows.last().unwrap(), "29");
}

#[test]
fn export_non_sl2_table_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("non_sl2.csv");
    let o = run(&[
        "export",
        "--table",
        "non-sl2",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let mut rdr = csv::Reader::from_path(&path).unwrap();
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    let dims: Vec<&str> = rows.iter().map(|r| &r[6]).collect();
    assert_eq!(dims, ["118", "106", "118", "104", "104", "216"]);
    assert!(rows.iter().all(|r| &r[9] == "false"));
}

#[test]
fn export_io_error_names_path() {
    let o = run(&["export", "--kind", "F4", "--out", "/nonexistent-dir/x.json"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("/nonexistent-dir/x.json"));
}

#[test]
fn export_rejects_classical_and_unknown_table() {
    assert_eq!(run(&["export", "--kind", "C3"]).status.code(), Some(2));
    assert_eq!(run(&["export", "--table", "bogus"]).status.code(), Some(2));
}
