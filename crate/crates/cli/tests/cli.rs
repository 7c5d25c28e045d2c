use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_schurtrails"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

fn last_trail_point(svg: &str) -> String {
    let line = svg.lines().find(|l| l.contains(r#"class="trail""#)).expect("trail polyline");
    let pts = line.split(r#"points=""#).nth(1).unwrap().split('"').next().unwrap();
    pts.split(' ').next_back().unwrap().to_string()
}

#[test]
fn general_report_is_json() {
    let o = run(&["verify", "general", "--lambda", "5,4,3,2", "--vars", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["equal"], true);
    assert_eq!(v["identity"], "general");
    assert_eq!(v["params"]["n"], 3);
}

#[test]
fn report_keys_follow_the_schema() {
    let schema: Value =
        serde_json::from_str(&std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../docs/identity-report.schema.json")).unwrap())
            .unwrap();
    let allowed: Vec<&str> = schema["properties"].as_object().unwrap().keys().map(String::as_str).collect();
    for args in [
        vec!["verify", "kleber", "--lambda", "2,1", "--k", "2"],
        vec!["verify", "ciucu", "--set", "1,3", "--k", "1"],
        vec!["verify", "dodgson", "--r", "2"],
    ] {
        let v: Value = serde_json::from_str(stdout(&run(&args)).trim()).unwrap();
        for key in schema["required"].as_array().unwrap() {
            assert!(v.get(key.as_str().unwrap()).is_some(), "{args:?} lacks {key}");
        }
        assert!(v.as_object().unwrap().keys().all(|k| allowed.contains(&k.as_str())), "{v}");
    }
}

#[test]
fn catalan_count() {
    let o = run(&["catalan", "--points", "8"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "14");
}

#[test]
fn usage_errors_exit_two() {
    let o = run(&["verify", "general", "--lambda", "3,4", "--vars", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("parts must be weakly decreasing"));
    assert_eq!(run(&["verify", "general", "--lambda", "2,1", "--colour", "red"]).status.code(), Some(2));
    assert_eq!(run(&["catalan", "--points", "3"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "kirillov", "--lambda", "2,1"]).status.code(), Some(2));
}

#[test]
fn sweeps_keep_input_order() {
    let o = bin()
        .env("SCHURTRAILS_THREADS", "3")
        .args(["verify", "kirillov", "--lambda", "1,1,1", "--sweep", "vars=1..5"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let ns: Vec<i64> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str::<Value>(l).unwrap()["params"]["n"].as_i64().unwrap())
        .collect();
    assert_eq!(ns, vec![1, 2, 3, 4, 5]);
    let o = run(&["verify", "kleber", "--lambda", "2,1", "--k", "1", "--sweep", "k=1..2", "--sweep", "vars=2..3"]);
    let lines: Vec<Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    let keys: Vec<(i64, i64)> =
        lines.iter().map(|v| (v["params"]["k"].as_i64().unwrap(), v["params"]["n"].as_i64().unwrap())).collect();
    assert_eq!(keys, vec![(1, 2), (1, 3), (2, 2), (2, 3)]);
    assert_eq!(run(&["verify", "general", "--lambda", "2,1", "--sweep", "q=1..2"]).status.code(), Some(2));
}

#[test]
fn audit_and_orbit() {
    let o = run(&["audit", "--lambda", "2,1", "--vars", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!((v["lhs_objects"].as_u64(), v["type_a"].as_u64(), v["type_b"].as_u64()), (Some(6), Some(2), Some(4)));
    let o = run(&["orbit", "--lambda", "2,1", "--sigma", "3,2", "--offset", "1", "--select", "1", "--vars", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["s1"].as_array().unwrap().len(), 2);
    assert_eq!(v["o0_size"], v["o1_size"]);
}

#[test]
fn pluecker_schur_form() {
    let o = run(&["verify", "pluecker", "--n", "2", "--rlist", "1", "--mode", "schur", "--lambda", "4,2", "--sigma", "3,1", "--vars", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(run(&["verify", "pluecker", "--n", "2", "--mode", "schur"]).status.code(), Some(2));
}

#[test]
fn render_figures() {
    let three = run(&["render", "--graph", &data("figure3.json"), "--trail-from", "4,5"]);
    assert_eq!(three.status.code(), Some(0));
    // (-1, 1) at N = 5
    assert_eq!(last_trail_point(&stdout(&three)), "-40,160");
    let four = run(&["render", "--graph", &data("figure4.json"), "--trail-from", "(4,5)"]);
    // (-2, 5)
    assert_eq!(last_trail_point(&stdout(&four)), "-80,0");
    let again = run(&["render", "--graph", &data("figure4.json"), "--trail-from", "(4,5)"]);
    assert_eq!(four.stdout, again.stdout);
}

#[test]
fn render_empty_graph_and_errors() {
    let o = run(&["render", "--graph", &data("empty.json")]);
    let svg = stdout(&o);
    assert!(svg.contains("<line") && !svg.contains("polyline") && !svg.contains("circle"));
    assert_eq!(run(&["render", "--graph", &data("missing.json")]).status.code(), Some(2));
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("schurtrails-cli-{}.svg", std::process::id()));
    let o = run(&["render", "--graph", &data("figure3.json"), "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert!(std::fs::read_to_string(&path).unwrap().starts_with("<svg"));
    let _ = std::fs::remove_file(path);
}
