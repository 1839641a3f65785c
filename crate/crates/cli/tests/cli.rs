use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_indforest"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "bad json ({e}): {}\nstderr: {}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        )
    })
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

const P4: &str = "forest 4\n0 1\n1 2\n2 3\n";
const STAR: &str = "forest 5\n0 1\n0 2\n0 3\n0 4\n";

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn super2_of_identical_trees_is_the_tree() {
    let dir = TempDir::new().unwrap();
    let a = write(dir.path(), "a.edges", STAR);
    let out = run(&["super2", "--input", s(&a), s(&a)]);
    assert!(out.status.success());
    let r = &json(&out)["instances"][0];
    assert_eq!(r["order"], 5);
    assert_eq!(r["verification"], "pass");
    assert_eq!(r["status"], "ok");
}

#[test]
fn mcs2_of_path_and_star() {
    let dir = TempDir::new().unwrap();
    let a = write(dir.path(), "a.edges", P4);
    let b = write(dir.path(), "b.edges", STAR);
    let out = run(&["mcs2", "--input", s(&a), s(&b)]);
    assert!(out.status.success());
    let r = &json(&out)["instances"][0];
    assert_eq!(r["order"], 3);
    assert_eq!(r["verification"], "pass");
}

#[test]
fn ptas_epsilon_one_on_p4() {
    let dir = TempDir::new().unwrap();
    let a = write(dir.path(), "a.edges", P4);
    let out = run(&["ptas", "--epsilon", "1.0", "--input", s(&a)]);
    assert!(out.status.success());
    let r = &json(&out)["instances"][0];
    assert_eq!(r["deltaUsed"], 2);
    assert_eq!(r["order"], 3);
    assert_eq!(r["verification"], "pass");
}

#[test]
fn ptas_requires_a_bound() {
    let dir = TempDir::new().unwrap();
    let a = write(dir.path(), "a.edges", P4);
    let out = run(&["ptas", "--input", s(&a)]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn ptas_delta_over_cap_is_a_budget_error_unless_clamped() {
    let dir = TempDir::new().unwrap();
    let a = write(dir.path(), "a.edges", P4);
    let out = run(&["ptas", "--delta", "9", "--input", s(&a)]);
    assert_eq!(out.status.code(), Some(4));
    let out = run(&["ptas", "--delta", "9", "--clamp-delta", "--input", s(&a)]);
    assert!(out.status.success());
    assert_eq!(json(&out)["instances"][0]["deltaUsed"], 6);
}

#[test]
fn ptas_vectors_csv() {
    let dir = TempDir::new().unwrap();
    let a = write(dir.path(), "a.edges", P4);
    let csv = dir.path().join("v.csv");
    let out = run(&[
        "ptas",
        "--delta",
        "2",
        "--input",
        s(&a),
        "--vectors-csv",
        s(&csv),
    ]);
    assert!(out.status.success());
    let text = fs::read_to_string(csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("instance,input,t1,t2,order"));
    assert!(lines.any(|l| l == "0,0,1,1,3"));
}

#[test]
fn exact3_three_paths() {
    let dir = TempDir::new().unwrap();
    let a = write(dir.path(), "a.edges", P4);
    let out = run(&["exact3", "--input", s(&a), s(&a), s(&a)]);
    assert!(out.status.success());
    let r = &json(&out)["instances"][0];
    assert_eq!(r["order"], 4);
    assert_eq!(r["verification"], "pass");
}

#[test]
fn oracles_agree_with_pairwise() {
    let dir = TempDir::new().unwrap();
    let a = write(dir.path(), "a.edges", P4);
    let b = write(dir.path(), "b.edges", STAR);
    let sup = json(&run(&["super2", "--input", s(&a), s(&b)]));
    let osup = json(&run(&["oracle-super", "--input", s(&a), s(&b)]));
    assert_eq!(sup["instances"][0]["order"], osup["instances"][0]["order"]);
    let osub = run(&["oracle-sub", "--input", s(&a), s(&b)]);
    assert!(osub.status.success());
    // The star and P4 share an induced P3 or three isolated leaves.
    assert_eq!(json(&osub)["instances"][0]["order"], 3);
}

#[test]
fn greedy_on_tightness_family_beats_the_ratio_floor() {
    let dir = TempDir::new().unwrap();
    let g = dir.path().join("g");
    let out = run(&[
        "gen", "tightness", "--a", "100", "--b", "2", "--c", "1", "--format", "edges", "--out",
        s(&g),
    ]);
    assert!(out.status.success());
    let t: Vec<PathBuf> = ["t1", "t2", "t3"]
        .iter()
        .map(|n| g.join(format!("{n}.edges")))
        .collect();
    let known = g.join("known.edges");
    let out = run(&[
        "greedy",
        "--input",
        s(&t[0]),
        s(&t[1]),
        s(&t[2]),
        "--known",
        s(&known),
    ]);
    assert!(out.status.success());
    let r = &json(&out)["instances"][0];
    assert_eq!(r["verification"], "pass");
    assert_eq!(r["knownVerified"], true);
    assert!(r["order"].as_u64().unwrap() >= 400);
    assert!(r["ratioLowerBound"].as_f64().unwrap() >= 1.25);
}

#[test]
fn output_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let a = write(dir.path(), "a.edges", P4);
    let b = write(dir.path(), "b.edges", STAR);
    let args = ["greedy", "--input", s(&a), s(&b), s(&a), "--seed", "7"];
    let first = run(&args);
    let second = run(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    let gen = ["--seed", "11", "gen", "random", "--order", "12", "--count", "3"];
    assert_eq!(run(&gen).stdout, run(&gen).stdout);
}

#[test]
fn corrupted_output_fails_verification() {
    let dir = TempDir::new().unwrap();
    let a = write(dir.path(), "a.edges", P4);
    let out = run(&["super2", "--corrupt-output", "--input", s(&a), s(&a)]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(json(&out)["instances"][0]["verification"], "fail");
}

#[test]
fn parse_error_exits_two() {
    let dir = TempDir::new().unwrap();
    let a = write(dir.path(), "a.edges", "forest 3\n0 1\n1 x\n");
    let out = run(&["mcs2", "--input", s(&a), s(&a)]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["mcs2", "--input", s(&dir.path().join("missing.edges"))]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn wrong_arity_is_invalid() {
    let dir = TempDir::new().unwrap();
    let a = write(dir.path(), "a.edges", P4);
    let out = run(&["exact3", "--input", s(&a), s(&a)]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["instances"][0]["status"], "invalid");
}

#[test]
fn budget_limit_exits_four() {
    let dir = TempDir::new().unwrap();
    let a = write(dir.path(), "a.edges", P4);
    let out = run(&["oracle-sub", "--max-subset-order", "2", "--input", s(&a), s(&a)]);
    assert_eq!(out.status.code(), Some(4));
    assert_eq!(json(&out)["instances"][0]["status"], "budget");
}

#[test]
fn batch_mode_reports_each_file() {
    let dir = TempDir::new().unwrap();
    let a = write(dir.path(), "a.edges", &format!("{P4}{STAR}"));
    let b = write(dir.path(), "b.edges", &format!("{STAR}{STAR}"));
    let out = run(&["super2", "--batch", "--jobs", "2", "--input", s(&a), s(&b)]);
    assert!(out.status.success());
    let v = json(&out);
    let inst = v["instances"].as_array().unwrap();
    assert_eq!(inst.len(), 2);
    assert_eq!(inst[0]["id"], 0);
    assert_eq!(inst[1]["order"], 5);
}

#[test]
fn out_dir_receives_report_and_results() {
    let dir = TempDir::new().unwrap();
    let a = write(dir.path(), "a.edges", P4);
    let out_dir = dir.path().join("out");
    let out = run(&[
        "super2", "--format", "dot", "--out", s(&out_dir), "--input", s(&a), s(&a),
    ]);
    assert!(out.status.success());
    assert!(out_dir.join("report.json").exists());
    let dot = fs::read_to_string(out_dir.join("instance-0.dot")).unwrap();
    assert!(dot.contains("graph"));
}

#[test]
fn gen_families_write_files() {
    let dir = TempDir::new().unwrap();
    let g = dir.path().join("g");
    let cases: [&[&str]; 3] = [
        &["gen", "prop1", "--values", "6,7,7,6,7,7"],
        &["gen", "thm1", "--q", "2", "--triples", "0,0,0;1,1,1", "--matching", "0,1"],
        &["gen", "caterpillar", "--counts", "1,2,3"],
    ];
    for args in cases {
        let mut full: Vec<&str> = args.to_vec();
        full.extend(["--format", "edges", "--out", s(&g)]);
        let out = run(&full);
        assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    }
    for f in ["t1.edges", "t2.edges", "tx.edges", "witness.edges", "caterpillar.edges"] {
        assert!(g.join(f).exists(), "{f} missing");
    }
    let meta: Value =
        serde_json::from_str(&fs::read_to_string(g.join("thm1.meta.json")).unwrap()).unwrap();
    assert_eq!(meta["meta"]["q"], 2);
}

#[test]
fn gen_rejects_bad_instances() {
    let out = run(&["gen", "prop1", "--values", "1,1,4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bench_ratio_csv() {
    let out = run(&["bench", "ratio", "--a", "25,50"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 2);
    for r in rows {
        let ratio: f64 = r[5].parse().unwrap();
        let floor: f64 = r[6].parse().unwrap();
        assert!(ratio >= floor);
        assert_eq!(&r[7], "true");
    }
}
