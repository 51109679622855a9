use std::process::{Command, Output};

fn w22(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_w22"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn delta_of_w_under_w_twist_in_latex() {
    let o = w22(&[
        "compute",
        "--expr",
        "Delta(W(2))",
        "--twist",
        "W",
        "--format",
        "latex",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).trim(),
        r"W_{2}\otimes(1-\mathcal{X}t)^{2}+1\otimes W_{2}"
    );
}

#[test]
fn antipode_text_is_deterministic() {
    let args = [
        "compute",
        "--expr",
        "S(L(2)) * W(-1)",
        "--twist",
        "L",
        "--n0",
        "2",
        "--order",
        "3",
    ];
    let a = w22(&args);
    let b = w22(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).ends_with("O(t^{4})\n"));
}

#[test]
fn json_output_parses_back() {
    let o = w22(&[
        "compute",
        "--expr",
        "D(1/2) * (L(1) ox W(-1))",
        "--format",
        "json",
        "--order",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["kind"], "tensor2");
    assert_eq!(v["order"], 2);
    let back = w22_cli::Value::from_json(&v).unwrap();
    assert_eq!(serde_json::to_value(back.to_json()).unwrap(), v);
}

#[test]
fn expand_prints_one_coefficient() {
    let o = w22(&["expand", "--expr", "U(0)", "--degree", "1", "--twist", "W"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).contains("t^"));
    let deep = w22(&["expand", "--expr", "t^6", "--degree", "6", "--order", "2"]);
    assert_eq!(stdout(&deep).trim(), "1");
}

#[test]
fn verify_single_suite() {
    let o = w22(&[
        "verify", "--suite", "2.4", "--twist", "W", "--n0", "1", "--order", "3",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let o = w22(&[
        "verify", "--suite", "2.2", "--n0", "-1", "--order", "2", "--report", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["suite"], "2.2");
    assert_eq!(report["status"], "pass");
}

#[test]
fn verify_all_at_order_zero() {
    let o = w22(&[
        "verify", "--suite", "all", "--order", "0", "--report", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let reports: Vec<serde_json::Value> = serde_json::from_slice(&o.stdout).unwrap();
    assert!(reports.iter().all(|r| r["status"] == "pass"));
}

#[test]
fn usage_and_parse_errors_exit_2() {
    for args in [
        vec!["compute", "--expr", "L("],
        vec!["compute", "--expr", "Delta(C(0))"],
        vec!["compute", "--expr", "L(1)", "--n0", "0"],
        vec!["verify", "--suite", "9.9"],
        vec!["verify", "--suite", "thm1.5", "--twist", "L"],
        vec!["frobnicate"],
    ] {
        let o = w22(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
    let o = w22(&["compute", "--expr", "L("]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("position 2"));
}
