use std::process::{Command, Output};

fn ramanujan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ramanujan"))
        .args(args)
        .output()
        .expect("spawn ramanujan")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn eval_odd_unit_scale() {
    let o = ramanujan(&["eval", "--n", "1", "--a", "1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "0.0265258238486492\n");
    let expected = 1.0 / (12.0 * std::f64::consts::PI);
    let got: f64 = stdout(&o).trim().parse().unwrap();
    assert!((got - expected).abs() < 1e-15);
}

#[test]
fn k_parity_alias_matches_full_index() {
    let a = ramanujan(&["eval", "--n", "5", "--a", "0.5"]);
    let b = ramanujan(&["eval", "--k", "2", "--parity", "odd", "--a", "0.5"]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn table_csv_round_trips() {
    for (id, rows) in [("1", 8), ("2", 16), ("3", 16)] {
        let o = ramanujan(&["table", "--id", id, "--format", "csv"]);
        assert!(o.status.success());
        let text = stdout(&o);
        assert!(text.starts_with("k,a,script_j,bound\n"));
        assert!(!text.contains('\r'));
        assert!(text.lines().all(|l| l == l.trim_end()));
        assert_eq!(text.lines().count(), rows + 1);

        let mut rdr = csv::Reader::from_reader(text.as_bytes());
        let mut rebuilt = String::from("k,a,script_j,bound\n");
        for rec in rdr.records() {
            let rec = rec.unwrap();
            let k: u32 = rec[0].parse().unwrap();
            let a: f64 = rec[1].parse().unwrap();
            let j: f64 = rec[2].parse().unwrap();
            let b: f64 = rec[3].parse().unwrap();
            assert!(j < b);
            rebuilt.push_str(&format!("{k},{a},{j:.6e},{b:.6e}\n"));
        }
        assert_eq!(rebuilt, text);
    }
}

#[test]
fn table_1_first_row() {
    let o = ramanujan(&["table", "--id", "1", "--format", "csv"]);
    let line = stdout(&o).lines().nth(1).unwrap().to_string();
    let fields: Vec<f64> = line.split(',').map(|f| f.parse().unwrap()).collect();
    assert_eq!(fields[0], 1.0);
    assert!((fields[2] / 1.250e-5 - 1.0).abs() < 2e-3);
    assert!((fields[3] / 1.253e-5 - 1.0).abs() < 2e-3);
}

#[test]
fn json_is_one_object() {
    let o = ramanujan(&["approx", "--n", "2", "--a", "1", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v.is_object());
    assert!(v["residual"].as_f64().unwrap().abs() < 1e-12);
    assert_eq!(v["params"]["n"], 2);

    let o = ramanujan(&["table", "--id", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 16);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t1.csv");
    let o = ramanujan(&[
        "table",
        "--id",
        "1",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let direct = ramanujan(&["table", "--id", "1", "--format", "csv"]);
    assert_eq!(std::fs::read(&path).unwrap(), direct.stdout);
}

#[test]
fn domain_error_exits_one() {
    let o = ramanujan(&["eval", "--a", "-1", "--n", "2"]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("domain error"));
    assert!(err.contains("usage"));
}

#[test]
fn parse_errors_exit_one() {
    for args in [
        &["eval", "--n", "2", "--a", "x"][..],
        &["eval", "--n", "2", "--a", "1", "--bogus"],
        &["eval", "--a", "1"],
        &[
            "eval", "--n", "2", "--k", "1", "--parity", "even", "--a", "1",
        ],
        &["table", "--id", "4"],
        &["bound", "--k", "1", "--a", "1"],
        &["eval", "--n", "2", "--a", "1", "--tol", "0"],
    ] {
        let o = ramanujan(args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn help_exits_zero() {
    assert!(ramanujan(&["--help"]).status.success());
    assert!(ramanujan(&["--version"]).status.success());
}

#[test]
fn bound_warns_outside_window() {
    let o = ramanujan(&["bound", "--n", "20", "--a", "0.1"]);
    assert!(o.status.success());
    assert!(String::from_utf8(o.stderr).unwrap().contains("warning"));
    let o = ramanujan(&["bound", "--n", "20", "--a", "1"]);
    assert!(o.stderr.is_empty());
    assert!(stdout(&o).starts_with("bound"));
}

#[test]
fn verify_exit_code_tracks_overall() {
    let o = ramanujan(&["verify", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["overall"], true);
    assert_eq!(o.status.code(), Some(0));

    let o = ramanujan(&["verify", "--tol", "1e-30", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["overall"], false);
    assert_eq!(o.status.code(), Some(2));
}
