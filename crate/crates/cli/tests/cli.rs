use std::process::{Command, Output};

use serde_json::Value;

use hopfwind_cli::report::Report;

const CORRUPTED: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures/oq-sl-2-corrupted.hopf");

fn hopfwind(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfwind")).args(args).output().expect("binary runs")
}

fn json_report(args: &[&str]) -> (Report, String, i32) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = hopfwind(&all);
    let text = String::from_utf8(out.stdout).unwrap();
    let r: Report = serde_json::from_str(&text).unwrap_or_else(|e| panic!("{e}: {text}"));
    (r, text, out.status.code().unwrap())
}

/// `[[name, value], …]` as pairs.
fn pairs(v: &Value) -> Vec<(String, String)> {
    v.as_array().unwrap().iter().map(|p| (p[0].as_str().unwrap().to_string(), p[1].as_str().unwrap().to_string())).collect()
}

fn pair_map(v: &Value) -> std::collections::HashMap<String, String> {
    pairs(v).into_iter().collect()
}

#[test]
fn catalog_lists_required_entries() {
    let out = hopfwind(&["catalog"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    for name in ["sweedler", "oq-sl-2", "klein-bottle-group"] {
        assert!(text.lines().any(|l| l.split_whitespace().next() == Some(name)), "{name} missing");
    }
    let json = hopfwind(&["catalog", "--json"]);
    let v: Value = serde_json::from_slice(&json.stdout).unwrap();
    assert!(v["catalog"].as_array().unwrap().iter().any(|e| e["name"] == "taft-3" && e["family"] == "fd"));
}

#[test]
fn axioms_pass_and_fail() {
    for name in ["oq-sl-2", "laurent-1"] {
        let (r, _, code) = json_report(&["axioms", name]);
        assert!(r.passed(), "{name}");
        assert_eq!(code, 0);
    }
    let (r, _, code) = json_report(&["axioms", CORRUPTED]);
    assert!(!r.passed());
    assert_eq!(code, 1);
    let v = &r.verdicts[0];
    assert!(v.location.as_deref().unwrap().contains("X11"), "{v:?}");
    assert!(v.detail.as_deref().unwrap().contains("antipode"));
}

#[test]
fn integral_examples() {
    let (r, _, code) = json_report(&["integral", "u-solvable-2", "--method", "homology"]);
    assert_eq!(code, 0);
    assert_eq!(pairs(&r.results["homology"]), vec![("x".into(), "0".into()), ("y".into(), "-1".into())]);

    let (r, _, code) = json_report(&["integral", "klein-bottle-group", "--method", "both"]);
    assert_eq!(code, 0);
    assert_eq!(r.results["descent"], r.results["homology"]);
    assert!(r.verdicts.iter().any(|v| v.check.contains("agree") && v.pass));

    let (r, _, _) = json_report(&["integral", "oq-sl-2"]);
    let m = pair_map(&r.results["descent"]);
    assert_eq!((m["X11"].as_str(), m["X12"].as_str(), m["X21"].as_str(), m["X22"].as_str()), ("q^2", "0", "0", "1/q^2"));
    assert_eq!(r.certificates["descent_trace"]["steps"].as_array().unwrap().len(), 2);
}

#[test]
fn nakayama_of_quantum_sl3() {
    let (r, _, code) = json_report(&["nakayama", "oq-sl-3"]);
    assert_eq!(code, 0);
    let nu = pair_map(&r.results["nu"]);
    for i in 1..=3i32 {
        for j in 1..=3i32 {
            let e = 2 * (4 - i - j);
            let coeff = match e {
                0 => String::new(),
                e if e > 0 => format!("q^{e}*"),
                e => format!("1/q^{}*", -e),
            };
            assert_eq!(nu[&format!("X{i}{j}")], format!("{coeff}X{i}{j}"));
        }
    }
}

#[test]
fn radford_and_fd_nakayama() {
    let (r, _, code) = json_report(&["radford", "sweedler"]);
    assert!(r.passed());
    assert_eq!(code, 0);
    let (r, _, code) = json_report(&["nakayama", "taft-3"]);
    assert_eq!(code, 0, "{:?}", r.verdicts);
    assert_eq!(r.results["integral_order"], 3);
}

#[test]
fn hochschild_top_degree_under_nakayama_twist() {
    let (r, _, code) = json_report(&["hochschild", "u-solvable-2", "--twist", "nakayama"]);
    assert_eq!(code, 0);
    let hom = &r.results["homology"];
    assert_eq!(hom["certified"][2], true);
    assert!(hom["dims"][2].as_array().unwrap().iter().all(|d| d == 1));
    let (r, _, _) = json_report(&["hochschild", "u-solvable-2", "--twist", "identity"]);
    assert!(r.results["homology"]["dims"][2].as_array().unwrap().iter().all(|d| d == 0));
}

#[test]
fn custom_twist_file() {
    let dir = std::env::temp_dir().join(format!("hopfwind-twist-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("nu.twist");
    std::fs::write(&path, "side right\ny -> y - 1\n").unwrap();
    let (r, _, code) = json_report(&["hochschild", "u-solvable-2", "--twist", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(r.results["homology"]["dims"][2].as_array().unwrap().iter().all(|d| d == 1));
    std::fs::write(&path, "side left\nw -> y\n").unwrap();
    assert_eq!(hopfwind(&["hochschild", "u-solvable-2", "--twist", path.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn json_round_trip_is_byte_identical() {
    for args in [&["integral", "oq-sl-2"][..], &["radford", "sweedler"], &["duality", "laurent-1"], &["axioms", CORRUPTED]] {
        let (r, text, _) = json_report(args);
        assert_eq!(format!("{}\n", r.to_json()), text);
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(format!("{}\n", serde_json::to_string_pretty(&v).unwrap()), text);
    }
}

#[test]
fn reports_embed_flags_and_are_deterministic() {
    let (r, a, _) = json_report(&["nakayama", "sweedler", "--seed", "7"]);
    assert_eq!(r.params.seed, 7);
    let (_, b, _) = json_report(&["nakayama", "sweedler", "--seed", "7"]);
    assert_eq!(a, b);
    let (r, _, _) = json_report(&["duality", "laurent-1", "--truncate", "5", "--window", "2"]);
    assert_eq!((r.params.truncate, r.params.window), (5, 2));
}

#[test]
fn errors_exit_with_two() {
    assert_eq!(hopfwind(&["axioms", "no-such-algebra"]).status.code(), Some(2));
    assert_eq!(hopfwind(&["radford", "oq-sl-2"]).status.code(), Some(2));
    assert_eq!(hopfwind(&["integral", "oq-sl-2", "--method", "homology"]).status.code(), Some(2));
    assert_eq!(hopfwind(&["integral", "sweedler", "--method", "homology"]).status.code(), Some(2));
}

#[test]
fn all_fans_out_in_catalog_order() {
    let one = hopfwind(&["radford", "all", "--json", "--jobs", "1"]);
    let four = hopfwind(&["radford", "all", "--json", "--jobs", "4"]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
    let names: Vec<String> = serde_json::Deserializer::from_slice(&one.stdout)
        .into_iter::<Report>()
        .map(|r| r.unwrap().algebra.name)
        .collect();
    let expected: Vec<String> = hopfwind_cli::applicable(&hopfwind_cli::commands::Command::Radford).into_iter().map(|e| e.name).collect();
    assert_eq!(names, expected);
}
