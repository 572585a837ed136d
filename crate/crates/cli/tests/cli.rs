use std::path::PathBuf;
use std::process::{Command, Output};

use gammahom::gamma_verify::check_strict_dominance;
use gammahom::rearrange::{RearrangeMode, Rearrangement, RearrangementSpec};
use gammahom::{ClassKind, ClassSpec, Digraph};
use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gammahom"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

#[test]
fn count_examples() {
    let out = run(&["count", &data("c2.json"), &data("c2.json")]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out), serde_json::json!({"hom": 3, "strict": 1}));
    let out = run(&["count", "a1", "c2", "--mode", "all"]);
    assert_eq!(json(&out), serde_json::json!({"hom": 2}));
}

#[test]
fn malformed_input_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"n\": 2, \"arcs\": [[0, 5]").unwrap();
    let out = run(&["count", bad.to_str().unwrap(), "c2"]);
    assert_eq!(code(&out), 2);
    let out_of_range = dir.path().join("range.json");
    std::fs::write(&out_of_range, "{\"n\": 2, \"arcs\": [[0, 5]]}").unwrap();
    assert_ne!(code(&run(&["count", out_of_range.to_str().unwrap(), "c2"])), 0);
    assert_eq!(code(&run(&["count", "no-such-digraph", "c2"])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
}

#[test]
fn cap_violation_exits_3() {
    let out = run(&["catalog", "digraphs", "9"]);
    assert_eq!(code(&out), 3);
    let out = run(&["verify", "c2", "c2", "--class", "posets", "--max-n", "12"]);
    assert_eq!(code(&out), 3);
}

#[test]
fn verify_examples() {
    let out = run(&["verify", &data("pentagon_R.json"), &data("pentagon_R.json")]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["verdict"], "holds");

    let out = run(&["verify", &data("c2.json"), &data("a2r.json")]);
    assert_eq!(code(&out), 4);
    let report = json(&out);
    assert_eq!(report["verdict"], "fails");
    let witness: Digraph = serde_json::from_value(report["witness"]["g"].clone()).unwrap();
    assert!(gammahom::catalog::is_isomorphic(&witness, &gammahom::known::c2()).unwrap());

    let args = [
        "verify",
        &data("pentagon_R.json"),
        &data("pentagon_T.json"),
        "--class",
        "digraphs",
        "--max-n",
        "4",
    ];
    let out = run(&args);
    assert_eq!(code(&out), 0);
    let lib = check_strict_dominance(
        &gammahom::known::pentagon_r(),
        &gammahom::known::pentagon_t(),
        &ClassSpec::new(ClassKind::Digraphs, 4),
    )
    .unwrap();
    assert_eq!(json(&out), serde_json::to_value(&lib).unwrap());
}

#[test]
fn verify_modes_agree_on_small_posets() {
    for mode in ["strict-dominance", "gamma-leq", "hom-dominance"] {
        let out = run(&["verify", "c2", "a2r", "--max-n", "3", "--mode", mode]);
        assert_eq!(code(&out), 4, "{mode}");
        let out = run(&["verify", "a2r", "a2r", "--max-n", "3", "--mode", mode, "--table"]);
        assert_eq!(code(&out), 0, "{mode}");
        assert_eq!(json(&out)["table"].as_array().unwrap().len(), 8);
    }
}

#[test]
fn rearrange_pentagon() {
    let out = run(&["rearrange", &data("pentagon_spec.json"), "--emit-T", "--verify-bound", "4"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let spec = RearrangementSpec::from_json(&std::fs::read_to_string(data("pentagon_spec.json")).unwrap()).unwrap();
    let rr = Rearrangement::new(spec, RearrangeMode::Poset).unwrap();
    assert_eq!(v["result"], serde_json::to_value(rr.result()).unwrap());
    let t: Digraph = serde_json::from_value(v["result"]["T"].clone()).unwrap();
    assert_eq!(t, gammahom::known::pentagon_t());
    let checks = v["verification"].as_array().unwrap();
    assert_eq!(checks.len(), 2);
    assert!(checks.iter().all(|c| c["verdict"] == "holds"));
    assert!(checks.iter().all(|c| c["class"]["max_vertices"] == 4));
}

#[test]
fn rearrange_errors() {
    let out = run(&["rearrange", &data("invalid_spec.json")]);
    assert_eq!(code(&out), 5);
    assert!(!json(&out)["violations"].as_array().unwrap().is_empty());

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cycle.json");
    // R is a 2-cycle with loops, so not a poset
    std::fs::write(
        &path,
        r#"{"R":{"n":3,"arcs":[[0,0],[0,1],[1,0],[1,1],[2,2]]},"X":[1],"Y":[2],"M":[0],"beta":[[1,2]]}"#,
    )
    .unwrap();
    assert_ne!(code(&run(&["rearrange", path.to_str().unwrap(), "--emit-T"])), 0);
    assert_eq!(code(&run(&["rearrange", &data("pentagon_spec.json"), "--undirected"])), 5);
}

#[test]
fn catalog_lovasz_quotient() {
    let out = run(&["catalog", "posets", "3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["count"], 8);
    assert_eq!(json(&out)["digraphs"].as_array().unwrap().len(), 8);

    for mode in ["all", "strict"] {
        let out = run(&["lovasz", "posets", "3", "posets", "3", "--mode", mode]);
        assert_eq!(code(&out), 0);
        assert_eq!(json(&out)["all_distinguished"], true);
    }

    let out = run(&["quotient", "c2", "a1", "--map", "0,0"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["blocks"].as_array().unwrap().len(), 1);
    assert_ne!(code(&run(&["quotient", "c2", "c2", "--map", "1,0"])), 0);
}

#[test]
fn theta_sizes_match_strict_counts() {
    let out = run(&["theta", "c2", "c2"]);
    assert_eq!(json(&out)["total"], 3);
    let out = run(&["theta", "c2", "c2", "--via", "a1", "--map", "0,0"]);
    let v = json(&out);
    assert_eq!(v["size"], v["strict_from_quotient"]);
    assert_eq!(v["size"], 2);
}

#[test]
fn output_is_independent_of_jobs() {
    let args = ["lovasz", "posets", "4", "posets", "3"];
    let one = run(&[&args[..], &["--jobs", "1"]].concat());
    let many = run(&[&args[..], &["--jobs", "8"]].concat());
    assert_eq!(one.stdout, many.stdout);
    let one = run(&["verify", "pentagon-r", "pentagon-t", "--class", "digraphs", "--table", "-j", "1"]);
    let many = run(&["verify", "pentagon-r", "pentagon-t", "--class", "digraphs", "--table", "-j", "8"]);
    assert_eq!(one.stdout, many.stdout);
}

#[test]
fn other_formats() {
    let out = run(&["count", "c2", "c2", "-f", "table"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "hom\t3\nstrict\t1\n");
    let out = run(&["catalog", "posets", "2", "-f", "dot"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.matches("digraph G").count(), 3);
    assert!(text.contains("rankdir=BT"));
    assert_eq!(code(&run(&["count", "c2", "c2", "-f", "dot"])), 2);
}
