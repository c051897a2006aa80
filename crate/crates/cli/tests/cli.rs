use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn tricut(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_tricut"))
        .args(args)
        .env_remove("TRICUT_JOBS")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

const PATH3: &str = r#"{"n":3,"C":[],"S":[[0,1],[1,2]]}"#;

#[test]
fn exact_expectation_of_a_path() {
    let out = tricut(&["cut", "--mode", "exact-e"], Some(PATH3));
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "{\"expected_bar_e\":\"0/1\",\"S\":2,\"bound\":\"9/4\",\"ok\":true}\n"
    );
}

#[test]
fn clebsch_distribution_through_a_pipe() {
    let g = tricut(&["gen", "--clebsch"], None);
    assert_eq!(g.status.code(), Some(0));
    let out = tricut(&["cut", "--mode", "distribution"], Some(&stdout(&g)));
    assert_eq!(stdout(&out), "{\"distribution\":{\"12\":\"1/1\"}}\n");
}

#[test]
fn labelled_sweep_at_four() {
    let out = tricut(&["sweep", "--n", "4"], None);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "{\"graphs_checked\":64,\"violations\":0,\"equality_cases\":4}\n"
    );
    let canonical = json_of(&tricut(&["sweep", "--n", "4", "--canonical"], None));
    assert_eq!(canonical["graphs_checked"], 11);
    assert_eq!(canonical["equality_cases"], 2);
}

#[test]
fn sweep_csv_has_fixed_columns() {
    let out = tricut(&["sweep", "--n", "2", "--format", "csv"], None);
    assert_eq!(
        stdout(&out),
        "graph6,n,alpha1,tau_b,slack_times_4,extremal\nA?,2,0,0,4/1,false\nA_,2,1,0,0/1,true\n"
    );
}

#[test]
fn output_does_not_depend_on_job_count() {
    let one = tricut(&["--jobs", "1", "sweep", "--n", "5", "--format", "csv"], None);
    let four = tricut(&["--jobs", "4", "sweep", "--n", "5", "--format", "csv"], None);
    assert_eq!(one.stdout, four.stdout);
    let t1 = tricut(
        &["--jobs", "1", "sweep", "--n", "4", "--trigraphs", "--format", "csv"],
        None,
    );
    let t3 = tricut(
        &["--jobs", "3", "sweep", "--n", "4", "--trigraphs", "--format", "csv"],
        None,
    );
    assert_eq!(t1.stdout, t3.stdout);
}

#[test]
fn seeds_are_reproducible() {
    let clebsch = stdout(&tricut(&["gen", "--clebsch"], None));
    let a = tricut(&["cut", "--seed", "7", "--trace"], Some(&clebsch));
    let b = tricut(&["cut", "--seed", "7", "--trace"], Some(&clebsch));
    assert_eq!(a.stdout, b.stdout);
    let v = json_of(&a);
    assert_eq!(v["seed"], 7);
    assert_eq!(v["bar_e"], 12);
    // --seed defaults to 0.
    let default = tricut(&["cut"], Some(&clebsch));
    let zero = tricut(&["cut", "--seed", "0"], Some(&clebsch));
    assert_eq!(default.stdout, zero.stdout);
}

#[test]
fn invalid_trigraph_reports_witness_with_exit_one() {
    let bad = r#"{"n":3,"C":[[0,2]],"S":[[0,1],[1,2]]}"#;
    let out = tricut(&["validate"], Some(bad));
    assert_eq!(out.status.code(), Some(1));
    let v = json_of(&out);
    assert_eq!(v["valid"], false);
    assert_eq!(v["violations"][0]["kind"], "triangle");
    assert_eq!(v["violations"][0]["vertices"], serde_json::json!([0, 1, 2]));
    // Other commands refuse it as input.
    assert_eq!(tricut(&["counts"], Some(bad)).status.code(), Some(2));
}

#[test]
fn input_errors_exit_two() {
    assert_eq!(tricut(&["counts"], Some("{\"n\":2,")).status.code(), Some(2));
    assert_eq!(tricut(&["oracle", "--what", "alpha1"], Some("")).status.code(), Some(2));
    assert_eq!(tricut(&["sweep", "--n", "7"], None).status.code(), Some(2));
    assert_eq!(
        tricut(&["sweep", "--n", "6", "--trigraphs"], None).status.code(),
        Some(2)
    );
    assert_eq!(tricut(&["no-such-command"], None).status.code(), Some(2));
    assert_eq!(tricut(&["gen", "--join", "1,0"], None).status.code(), Some(2));
    assert_eq!(tricut(&["gen"], None).status.code(), Some(2));
    assert_eq!(
        tricut(&["cut", "--mode", "random", "--format", "csv"], Some(PATH3))
            .status
            .code(),
        Some(2)
    );
    let missing = tricut(&["counts", "/nonexistent/file.json"], None);
    assert_eq!(missing.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&missing.stderr).starts_with("error:"));
}

#[test]
fn graph_inputs_need_a_split_when_they_have_triangles() {
    let k4 = "C~\n";
    assert_eq!(tricut(&["counts"], Some(k4)).status.code(), Some(2));
    let out = tricut(&["counts", "--split", "alpha1"], Some(k4));
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!((v["S"].as_u64(), v["C"].as_u64()), (Some(2), Some(4)));
    assert_eq!(v["F"], "32/1");
}

#[test]
fn oracles_on_edge_lists_and_graph6() {
    let k5_edges = "5 10\n0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n";
    let v = json_of(&tricut(&["oracle", "--what", "alpha1"], Some(k5_edges)));
    assert_eq!(v["value"], 2);
    assert_eq!(v["witness"]["edges"].as_array().unwrap().len(), 2);
    let v = json_of(&tricut(&["oracle", "--what", "taub"], Some(k5_edges)));
    assert_eq!(v["value"], 4);
    assert!(v["witness"]["partition"]["A"].is_array());
    let v = json_of(&tricut(&["oracle", "--what", "tau1"], Some("C~")));
    assert_eq!(v["value"], 2);
    let out = tricut(&["oracle", "--what", "tau2", "--format", "csv"], Some("C~"));
    assert_eq!(
        stdout(&out),
        "what,n,edges,value,via_identity,agree\ntau2,4,6,4,4,true\n"
    );
    let clebsch = stdout(&tricut(&["gen", "--clebsch"], None));
    assert_eq!(
        json_of(&tricut(&["oracle", "--what", "taub"], Some(&clebsch)))["value"],
        8
    );
}

#[test]
fn counts_match_frozen_values() {
    let v = json_of(&tricut(&["counts"], Some(PATH3)));
    assert_eq!(
        (
            v["P4"].as_u64(),
            v["C4"].as_u64(),
            v["K13"].as_u64(),
            v["D"].as_u64(),
            v["R"].as_u64()
        ),
        (Some(0), Some(8), Some(10), Some(0), Some(0))
    );
    assert_eq!(v["F"], "16/1");
    assert_eq!(v["bigsum_equal"], true);
    let csv = stdout(&tricut(&["counts", "--format", "csv"], Some(PATH3)));
    assert!(csv.starts_with("n,C,S,P4,C4,K13,D,R,"));
}

#[test]
fn generators_and_extremal_checks() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("join.g6");
    let out = tricut(&["gen", "--join", "2,1", "--out", file.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v = json_of(&tricut(&["check-extremal", file.to_str().unwrap()], None));
    assert_eq!((v["alpha1"].as_u64(), v["tau_b"].as_u64()), (Some(5), Some(4)));
    assert_eq!(v["extremal"], true);
    assert_eq!(v["join"], serde_json::json!([2, 1]));

    let cjoin = stdout(&tricut(&["gen", "--cjoin", "1,1"], None));
    assert_eq!(cjoin, "{\"n\":4,\"C\":[[0,2],[0,3],[1,2],[1,3]],\"S\":[[0,1],[2,3]]}\n");
    let v = json_of(&tricut(&["check-extremal"], Some(&cjoin)));
    assert_eq!(v["extremal"], true);
    assert_eq!(v["local_conditions"]["all"], true);

    let c5 = tricut(&["check-extremal"], Some("Dhc"));
    assert_eq!(c5.status.code(), Some(0));
    let v = json_of(&c5);
    assert_eq!(v["extremal"], false);
    assert!(v["join"].is_null());
}

#[test]
fn derandomized_cut_is_certified() {
    let out = tricut(&["cut", "--mode", "derandomized", "--trace"], Some(PATH3));
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["certified"], true);
    assert_eq!(v["levels_within_bound"], true);
    assert_eq!(v["levels"].as_array().unwrap().len(), 1);
}

#[test]
fn ctau_scan_reports_the_minimum() {
    let v = json_of(&tricut(&["scan-ctau", "--n", "5"], None));
    assert_eq!(v["min_ratio"], "2/1");
    assert_eq!(v["ok"], true);
    let csv = stdout(&tricut(&["scan-ctau", "--n", "3", "--format", "csv"], None));
    assert_eq!(csv, "n,graph6,edges,alpha1,tau1,tau2,ratio\n3,Bw,3,1,1,2,2/1\n");
}
