use serde_json::Value;
use slc_invariants::cli::run_with_io;

fn run(args: &[&str], stdin: &str) -> (i32, String, String) {
    let argv: Vec<String> = std::iter::once("slcinv").chain(args.iter().copied()).map(String::from).collect();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run_with_io(&argv, &mut stdin.as_bytes(), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let (code, out, _) = run(&full, "");
    (code, serde_json::from_str(&out).expect("one JSON line"))
}

#[test]
fn self_dual_cycle() {
    let (code, out, _) = run(&["cusp", "dual", "2,4,2,2,5"], "");
    assert_eq!(code, 0);
    assert!(out.contains("2,4,2,2,5"));
}

#[test]
fn monodromy_json() {
    let (code, v) = json(&["cusp", "monodromy", "6,2,2,3,3,2,2,4"]);
    assert_eq!(code, 0);
    assert_eq!(v["ok"], true);
    assert_eq!(v["output"]["matrix"], serde_json::json!([[-40, -211], [131, 691]]));
}

#[test]
fn virtual_dimension() {
    let (code, v) = json(&["vd", "--k2", "24", "--chi", "11"]);
    assert_eq!(code, 0);
    assert_eq!(v["output"]["virtual_dimension"], 62);
}

#[test]
fn domain_error_exits_one() {
    let (code, v) = json(&["cusp", "dual", "2"]);
    assert_eq!(code, 1);
    assert_eq!(v["ok"], false);
    assert!(v["error"]["code"].is_string());
}

#[test]
fn usage_error_exits_two() {
    let (code, _, err) = run(&["cusp", "dual", "two"], "");
    assert_eq!(code, 2);
    assert!(err.starts_with("error:"));
    let (code, _, _) = run(&["no-such-command"], "");
    assert_eq!(code, 2);
}

#[test]
fn class_t_inverse_pair_reading() {
    let (code, v) = json(&["classt", "check", "9/2,5", "--inverse-pair"]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["output"]["is_wahl"], true);
}

#[test]
fn tautological_values_are_exact_strings() {
    let (code, v) = json(&["donaldson", "tautological"]);
    assert_eq!(code, 0);
    assert_eq!(v["output"]["ratio"], "1/48");
    assert_eq!(v["provenance"].as_array().unwrap().len(), 3);
}

#[test]
fn json_output_round_trips() {
    let (_, out, _) = run(&["--json", "qcusp", "order", "3,2,4"], "");
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(serde_json::to_string(&v).unwrap(), out.trim_end());
}

#[test]
fn batch_keeps_order() {
    let input = concat!(
        r#"{"op":"cusp.monodromy","input":{"cycle":[3,3]},"version":"1"}"#,
        "\n",
        r#"{"op":"pinkham.order","input":{"p":3,"q":3,"r":4},"version":"1"}"#,
        "\n",
        r#"{"op":"vd","input":{"k2":24,"chi":11},"version":"1"}"#,
        "\n"
    );
    let (code, out, _) = run(&["batch"], input);
    assert_eq!(code, 0);
    let lines: Vec<Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 3);
    assert!(lines.iter().all(|l| l["ok"] == true));
    assert_eq!(lines[1]["output"]["order"], 36 - 9 - 12 - 12);
}

#[test]
fn batch_reports_errors_in_place() {
    let input = concat!(
        r#"{"op":"vd","input":{"k2":1,"chi":1},"version":"1"}"#,
        "\n",
        r#"{"op":"cusp.dual","input":{"cycle":[1]},"version":"1"}"#,
        "\n",
        r#"{"op":"vd","input":{"k2":2,"chi":1},"version":"1"}"#,
        "\n"
    );
    let (_, out, _) = run(&["batch"], input);
    let oks: Vec<bool> = out.lines().map(|l| serde_json::from_str::<Value>(l).unwrap()["ok"] == true).collect();
    assert_eq!(oks, vec![true, false, true]);
}

#[test]
fn empty_batch() {
    let (code, out, _) = run(&["batch"], "");
    assert_eq!(code, 0);
    assert!(out.is_empty());
}

#[test]
fn version_flag() {
    let (code, out, _) = run(&["--version"], "");
    assert_eq!(code, 0);
    assert!(out.contains(env!("CARGO_PKG_VERSION")));
}
