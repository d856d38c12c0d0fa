use std::process::{Command, Output};

fn polyfam(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polyfam"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn value_of(args: &[&str]) -> serde_json::Value {
    let out = polyfam(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}");
    let record: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    record["value"].clone()
}

#[test]
fn number_examples() {
    assert_eq!(
        value_of(&[
            "number",
            "mp-cauchy-1",
            "--n",
            "2",
            "--k",
            "1",
            "--alpha",
            "0,1",
            "--lengths",
            "1"
        ]),
        "-1/6"
    );
    assert_eq!(
        value_of(&["number", "poly-bernoulli", "--n", "2", "--k", "1"]),
        "1/6"
    );
    assert_eq!(
        value_of(&[
            "number",
            "mp-cauchy-1",
            "--n",
            "0",
            "--k",
            "2",
            "--lengths",
            "1,1"
        ]),
        "1"
    );
    assert_eq!(value_of(&["number", "cauchy-2", "--n", "2"]), "5/6");
    assert_eq!(value_of(&["number", "mp-bernoulli", "--n", "2"]), "1/6");
}

#[test]
fn record_schema() {
    let out = polyfam(&["number", "mp-cauchy-1", "--n", "4", "--decimals", "3"]);
    let record: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(record["family"], "mp-cauchy-1");
    assert_eq!(record["mode"], "corrected");
    assert_eq!(record["params"]["alpha"], "0,1,2,3");
    assert_eq!(record["value"], "-19/30");
    assert_eq!(record["approx"], "-0.633");
}

#[test]
fn table_examples() {
    let rows = stdout(&polyfam(&["table", "stirling-1", "--n-max", "3"]));
    let last: serde_json::Value = serde_json::from_str(rows.lines().last().unwrap()).unwrap();
    assert_eq!(last["value"], serde_json::json!(["0", "2", "-3", "1"]));

    let rows = stdout(&polyfam(&["table", "lah", "--n-max", "2"]));
    let rows: Vec<serde_json::Value> = rows
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(rows[1]["value"], serde_json::json!(["0", "-1"]));
    assert_eq!(rows[2]["value"], serde_json::json!(["0", "2", "1"]));

    let rows = stdout(&polyfam(&[
        "table", "comtet-1", "--n-max", "2", "--alpha", "1,2",
    ]));
    let last: serde_json::Value = serde_json::from_str(rows.lines().last().unwrap()).unwrap();
    assert_eq!(last["value"], serde_json::json!(["2", "-3", "1"]));
}

#[test]
fn csv_has_header() {
    let text = stdout(&polyfam(&[
        "table",
        "stirling-2",
        "--n-max",
        "2",
        "--format",
        "csv",
    ]));
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "family,mode,n,value");
    assert_eq!(lines.len(), 4);
    let text = stdout(&polyfam(&[
        "verify", "--ids", "T2.1", "--n-max", "1", "--format", "csv",
    ]));
    assert!(text.starts_with("identity,point,verbatim,corrected"));
}

#[test]
fn polynomial_coefficients() {
    assert_eq!(
        value_of(&["poly", "mp-cauchy-2", "--n", "2", "--alpha", "0,1"]),
        serde_json::json!(["5/6", "-2", "1"])
    );
    assert_eq!(
        value_of(&["poly", "mp-bernoulli", "--n", "1"]),
        serde_json::json!(["1/2", "-1"])
    );
}

#[test]
fn verify_examples() {
    let out = polyfam(&["verify", "--ids", "T2.1", "--n-max", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 1);
    let report: serde_json::Value = serde_json::from_str(text.trim()).unwrap();
    assert_eq!(report["corrected"], "PASS");
    assert_eq!(report["verbatim"], "PASS");

    let out = polyfam(&["verify", "--ids", "GF-Lif", "--order", "6"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("\"corrected\":\"PASS\""));

    let out = polyfam(&["verify", "--ids", "", "--n-max", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).is_empty());
}

#[test]
fn errata_lists_printed_failures() {
    let out = polyfam(&["verify", "--ids", "T2.1,T4.1", "--errata"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 1);
    assert!(text.contains("\"identity\":\"T4.1\""));
}

#[test]
fn exit_codes() {
    assert_eq!(
        polyfam(&["number", "mp-cauchy-1", "--n", "x"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        polyfam(&["number", "no-such-family"]).status.code(),
        Some(2)
    );
    assert_eq!(
        polyfam(&["number", "mp-cauchy-1", "--alpha", "1/0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(polyfam(&["verify", "--ids", "T9.9"]).status.code(), Some(2));
    assert_eq!(
        polyfam(&["number", "q-poly-cauchy-1", "--n", "2"])
            .status
            .code(),
        Some(2)
    );

    let short_alpha = polyfam(&["number", "mp-cauchy-1", "--n", "3", "--alpha", "1"]);
    assert_eq!(short_alpha.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&short_alpha.stderr).contains("precondition"));
    assert_eq!(
        polyfam(&["number", "mp-cauchy-1", "--lengths", "0"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        polyfam(&["number", "mp-cauchy-1", "--k", "2", "--lengths", "1"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        polyfam(&["poly", "gen-cauchy-1", "--k", "2"]).status.code(),
        Some(3)
    );
}
