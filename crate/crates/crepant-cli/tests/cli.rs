//! End-to-end runs of the `crepant` binary.

use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_crepant"))
        .args(args)
        .env_remove("CREPANT_GUARD")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

#[test]
fn decide_two_parameter_branches() {
    let out = run(&[
        "decide", "--r", "4", "--l", "11", "--alpha", "3", "--beta", "6",
    ]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["verdict"], "resolvable");
    assert_eq!(v["paper_branch"], "CON2");
    assert_eq!(
        v["decision"]["char_numbers"]["lambda"],
        serde_json::json!([2, 5])
    );
    assert_eq!(v["decision"]["mu"], "2/1");

    let out = run(&[
        "decide", "--r", "4", "--l", "8", "--alpha", "2", "--beta", "4",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["paper_branch"], "CON1");
}

#[test]
fn decide_agrees_with_oracle() {
    let out = run(&[
        "decide", "--r", "4", "--l", "9", "--alpha", "2", "--beta", "5", "--oracle",
    ]);
    let v = json(&out);
    assert_eq!(v["oracle"]["agrees"], true);
    let resolvable = v["verdict"] == "resolvable";
    assert_eq!(v["oracle"]["hilbcon"], resolvable);
    assert_eq!(code(&out), if resolvable { 0 } else { 1 });
}

#[test]
fn decide_other_modes() {
    let out = run(&["decide", "--one-param", "--r", "4", "--l", "7"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        json(&out)["decision"]["dims"],
        serde_json::json!([1, 2, 2, 2])
    );

    let out = run(&["decide", "--one-param", "--r", "4", "--l", "8"]);
    assert_eq!(code(&out), 1);

    let out = run(&["decide", "--l", "39", "--weights", "1,5,8,25"]);
    assert_eq!(code(&out), 2);
    assert_eq!(json(&out)["verdict"], "necessary-only");

    let out = run(&["decide", "--l", "8", "--weights", "1,1,1,5"]);
    assert_eq!(code(&out), 1);
    assert_eq!(json(&out)["paper_branch"], "FAIL-hilbcon");
}

#[test]
fn decide_with_fan_and_cohomology() {
    let out = run(&[
        "decide",
        "--r",
        "4",
        "--l",
        "11",
        "--alpha",
        "3",
        "--fan",
        "--cohomology",
    ]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["cohomology"], serde_json::json!([1, 3, 4, 3]));
    assert_eq!(v["fan"]["verification"]["covering"], true);
}

#[test]
fn invalid_input_exits_above_two() {
    let out = run(&[
        "decide", "--r", "4", "--l", "9", "--alpha", "2", "--beta", "4",
    ]);
    assert_eq!(code(&out), 3);
    assert!(!out.stderr.is_empty());
    assert_eq!(
        code(&run(&["decide", "--r", "3", "--l", "9", "--alpha", "2"])),
        3
    );
    assert_eq!(code(&run(&["nonsense"])), 3);
    assert_eq!(code(&run(&["--help"])), 0);
}

#[test]
fn guard_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_crepant"))
        .args(["decide", "--l", "39", "--weights", "1,5,8,25"])
        .env("CREPANT_GUARD", "10")
        .output()
        .unwrap();
    assert_eq!(code(&out), 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("guard"));
}

#[test]
fn json_is_stable_under_reserialization() {
    let out = run(&[
        "decide",
        "--r",
        "5",
        "--l",
        "28",
        "--alpha",
        "4",
        "--beta",
        "21",
        "--oracle",
        "--cohomology",
    ]);
    let v = json(&out);
    assert_eq!(v["paper_branch"], "CON2-p0");
    let again: Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
    assert_eq!(v, again);
}

#[test]
fn scan_rows_and_columns() {
    let out = run(&["scan", "--r", "4", "--lmax", "20"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "r,l,alpha,beta,verdict,branch,q,p,kappa,mu,hilbcon,agrees"
    );
    let rows: Vec<&str> = lines.collect();
    // α ≤ β with α + β = l − 2: ⌈(l−3)/2⌉ rows per l.
    let expected: i64 = (4..=20).map(|l: i64| (l - 2) / 2).sum();
    assert_eq!(rows.len() as i64, expected);
    assert!(rows.contains(&"4,11,3,6,resolvable,CON2,11,5,2,2/1,,"));

    let all = run(&["scan", "--r", "4", "--lmax", "20", "--all-pairs"]);
    let n = String::from_utf8(all.stdout).unwrap().lines().count() - 1;
    assert_eq!(n as i64, (4..=20).map(|l: i64| l - 3).sum::<i64>());
}

#[test]
fn scan_with_oracle_has_no_disagreements() {
    let out = run(&["scan", "--r", "5", "--lmax", "40", "--oracle"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().skip(1).all(|row| row.ends_with(",true")));
}

#[test]
fn cfrac_and_cone() {
    let v = json(&run(&["cfrac", "12", "7"]));
    assert_eq!(v["regular"], serde_json::json!([1, 1, 2, 2]));
    assert_eq!(v["negreg"], serde_json::json!([2, 4, 2]));

    let v = json(&run(&["cone", "--p", "4", "--q", "7"]));
    assert_eq!(v["dual"], serde_json::json!({"p": 3, "q": 7}));
    assert_eq!(v["socius"], 2);

    let v = json(&run(&["cone", "--n1", "1,0", "--n2", "-4,7"]));
    assert_eq!((v["p"].as_i64(), v["q"].as_i64()), (Some(3), Some(7)));
    assert_eq!(code(&run(&["cone", "--p", "2", "--q", "4"])), 3);
}

#[test]
fn hilbert_basis_command() {
    let out = run(&["hilbert", "--l", "11", "--weights", "1,1,3,6"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["age_histogram"], serde_json::json!([1, 3, 4, 3]));
    assert_eq!(v["hilbert_basis"].as_array().unwrap().len(), 4 + 3);

    assert_eq!(
        code(&run(&["hilbert", "--l", "8", "--weights", "1,1,1,5"])),
        1
    );
}

#[test]
fn fan_command() {
    let out = run(&[
        "fan", "--r", "4", "--l", "8", "--alpha", "2", "--beta", "4", "--verify",
    ]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["maximal_cones"].as_array().unwrap().len(), 8);
    assert_eq!(v["scale"], 8);
    assert_eq!(v["verification"]["basic"], true);

    assert_eq!(
        code(&run(&["fan", "--r", "4", "--l", "5", "--alpha", "1"])),
        1
    );
}

#[test]
fn cohomology_command() {
    let v = json(&run(&["cohomology", "--r", "4", "--l", "7", "--one-param"]));
    assert_eq!(v["delta"], serde_json::json!([1, 2, 2, 2]));
    assert_eq!(v["ehrhart"][0], "1/1");

    let v = json(&run(&[
        "cohomology",
        "--r",
        "4",
        "--l",
        "11",
        "--alpha",
        "3",
        "--beta",
        "6",
    ]));
    assert_eq!(v["delta"], serde_json::json!([1, 3, 4, 3]));
    assert_eq!(v["ehrhart"][3], "11/6");
}
