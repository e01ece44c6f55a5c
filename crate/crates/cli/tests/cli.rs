use std::process::{Command, Output};

use serde_json::Value;

fn lrcex(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lrcex"))
        .args(args)
        .env_remove("LRCEX_THREADS")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = lrcex(&all);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is one JSON document")
}

#[test]
fn lr_examples() {
    let v = json(&[
        "lr", "--outer", "4,2,1", "--inner1", "3,1", "--inner2", "2,1",
    ]);
    assert_eq!(v["result"]["value"], "2");
    assert_eq!(v["command"], "lr");
    let v = json(&[
        "lr", "--outer", "4,3,3,2", "--inner1", "3,2,1", "--inner2", "3,2,1",
    ]);
    assert_eq!(v["result"]["value"], "3");
    let v = json(&["lr", "--outer", "1", "--inner1", "1", "--inner2", ""]);
    assert_eq!(v["result"]["value"], "1");
}

#[test]
fn lr_exponent_syntax_and_oracle() {
    let v = json(&[
        "lr",
        "--outer",
        "4^2,3^4,2^2",
        "--inner1",
        "3^2,2^2,1^2",
        "--inner2",
        "3^2,2^2,1^2",
        "--oracle",
    ]);
    assert_eq!(v["result"]["value"], "6");
    assert_eq!(v["checks"][0]["pass"], true);
}

#[test]
fn lr_enumerate_lists_fillings() {
    let v = json(&[
        "lr",
        "--outer",
        "4,2,1",
        "--inner1",
        "3,1",
        "--inner2",
        "2,1",
        "--enumerate",
    ]);
    let fillings = v["result"]["fillings"].as_array().unwrap();
    assert_eq!(fillings.len(), 2);
    assert_eq!(fillings[0], ". . . 1\n. 1\n2\n");
}

#[test]
fn enumeration_guard() {
    let args = [
        "lr",
        "--outer",
        "4^20",
        "--inner1",
        "",
        "--inner2",
        "4^20",
        "--enumerate",
        "--timeout-boxes",
        "60",
    ];
    let out = lrcex(&args);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("--force"));
}

#[test]
fn parse_failure_exits_nonzero() {
    let out = lrcex(&["lr", "--outer", "1,2", "--inner1", "1", "--inner2", "1"]);
    assert!(!out.status.success());
    assert!(out.stdout.is_empty());
}

#[test]
fn counterexample_rows() {
    for family in ["okounkov", "kostka"] {
        let v = json(&[
            "counterexample",
            "--family",
            family,
            "--n",
            "21",
            "--N",
            "1",
        ]);
        let r = &v["result"]["records"][0];
        assert_eq!(r["holds"], false);
        assert_eq!(r["lhs"], "65780");
        assert_eq!(r["rhs"], "64009");
    }
    let v = json(&[
        "counterexample",
        "--family",
        "okounkov",
        "--n",
        "1",
        "--N",
        "1",
        "--verify-direct",
    ]);
    assert_eq!(v["result"]["records"][0]["holds"], true);
    assert!(v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["pass"] == true));
    assert!(v["checks"].as_array().unwrap().len() >= 3);
}

#[test]
fn counterexample_range_and_higher_stretch() {
    let v = json(&["counterexample", "--n", "20..22"]);
    let holds: Vec<bool> = v["result"]["records"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["holds"].as_bool().unwrap())
        .collect();
    assert_eq!(holds, [true, false, false]);
    let v = json(&[
        "counterexample",
        "--family",
        "kostka",
        "--n",
        "1..2",
        "--N",
        "2",
        "--verify-direct",
    ]);
    assert_eq!(
        v["result"]["records"][0]["values"],
        serde_json::json!(["3", "6", "10"])
    );
    assert!(v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["pass"] == true));
}

#[test]
fn quiver_subcommands() {
    assert_eq!(
        json(&["quiver", "si-dim", "--l", "3", "--n", "1", "--m", "1"])["result"]["value"],
        "3"
    );
    let v = json(&["quiver", "embed-check", "--n", "2", "--m", "1"]);
    assert_eq!(
        (v["result"]["si_dim"].clone(), v["result"]["agree"].clone()),
        ("6".into(), true.into())
    );
    assert_eq!(
        json(&["quiver", "euler", "--preset", "t434-pair"])["result"]["value"],
        -3
    );
    assert_eq!(
        json(&["quiver", "euler", "--preset", "k4star-pair"])["result"]["value"],
        -3
    );
    assert_eq!(
        json(&["quiver", "euler", "--l", "3", "--alpha", "1,2", "--beta", "1,2"])["result"]
            ["value"],
        -1
    );
    let v = json(&["quiver", "reciprocity", "--n", "2", "--m", "1"]);
    assert_eq!(v["result"]["left"], v["result"]["right"]);
}

#[test]
fn stretch_fits() {
    let v = json(&[
        "stretch", "--lambda", "4,3,3,2", "--mu", "3,2,1", "--nu", "3,2,1", "--n-max", "6",
    ]);
    assert_eq!(v["result"]["degree"], 2);
    assert_eq!(v["result"]["constant_term_is_one"], true);
    assert_eq!(
        v["result"]["coefficients"],
        serde_json::json!(["1", "3/2", "1/2"])
    );
    let v = json(&["stretch", "--lambda", "1", "--mu", "1", "--nu", ""]);
    assert_eq!(v["result"]["degree"], 0);
    let out = lrcex(&[
        "stretch", "--lambda", "4,3,3,2", "--mu", "3,2,1", "--nu", "3,2,1", "--n-max", "1",
    ]);
    assert!(String::from_utf8_lossy(&out.stdout).contains("cannot confirm degree"));
}

#[test]
fn horn_and_kostka() {
    assert_eq!(json(&["horn", "--n", "2"])["result"]["count"], "21");
    assert_eq!(
        json(&["horn", "--n", "1", "--list"])["result"]["triples"]
            .as_array()
            .unwrap()
            .len(),
        6
    );
    assert_eq!(json(&["kostka", "--family-n", "1"])["result"]["value"], "3");
    assert_eq!(
        json(&["kostka", "--family-n", "1", "--stretch", "2"])["result"]["value"],
        "6"
    );
    let v = json(&["kostka", "--lambda", "1", "--rect", "1^1"]);
    assert_eq!(v["result"]["value"], "1");
    let v = json(&[
        "multi-lr", "--outer", "2,2", "--factor", "1", "--factor", "1,1", "--factor", "1",
    ]);
    assert_eq!(v["result"]["value"], "1");
}

#[test]
fn csv_and_table_formats() {
    let out = lrcex(&["counterexample", "--n", "20..21", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,f(N-1),f(N),f(N+1),lhs,rhs,holds");
    assert_eq!(lines[2], "21,1,253,65780,65780,64009,false");
    let out = lrcex(&[
        "lr", "--outer", "4,2,1", "--inner1", "3,1", "--inner2", "2,1",
    ]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "value  2");
}

#[test]
fn threads_flag_and_env() {
    let out = Command::new(env!("CARGO_BIN_EXE_lrcex"))
        .args([
            "quiver", "si-dim", "--n", "3", "--m", "2", "--format", "json",
        ])
        .env("LRCEX_THREADS", "2")
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["result"]["value"], "56");
    assert!(lrcex(&["--threads", "1", "horn", "--n", "3"])
        .status
        .success());
}
