//! End-to-end tests of the command-line surface: file formats, inline
//! literals, JSON output shape and determinism, exit codes.

use std::io::Write;
use std::process::{Command, Output};

fn bergekit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bergekit"))
        .args(args)
        .output()
        .expect("spawn bergekit")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn contains_with_files_and_literals() {
    let dir = tempfile::tempdir().unwrap();
    let f_path = dir.path().join("f.txt");
    let a_path = dir.path().join("a.txt");
    std::fs::write(&f_path, "2 2\n10\n01\n").unwrap();
    std::fs::write(&a_path, "2 4\n0101\n0011\n").unwrap();
    let out = bergekit(&[
        "contains",
        "--mode",
        "berge",
        f_path.to_str().unwrap(),
        a_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("present"));
    let witness: serde_json::Value = serde_json::from_str(text.lines().nth(1).unwrap()).unwrap();
    assert_eq!(witness["schema"], "bergekit/1");
    assert_eq!(witness["row_map"].as_array().unwrap().len(), 2);

    // 1_2 has no home in I_2
    let out = bergekit(&["contains", "11", "10,01"]);
    assert_eq!(stdout(&out).trim(), "absent");

    let out = bergekit(&["contains", "--mode", "config", "10", "100,010,001"]);
    assert!(stdout(&out).starts_with("present"));
}

#[test]
fn shift_outputs_fixpoint_in_text_format() {
    // fixpoint of {{0},{1},{0,1}} is {empty,{0},{1}}
    let out = bergekit(&["shift", "10,01,11"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "2 3\n010\n001\n");
}

#[test]
fn construct_product_and_verify() {
    let out = bergekit(&["construct", "product", "--p", "2", "--m", "4"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().next().unwrap(), "4 4");

    // the 2-fold product avoids G_2
    let out = bergekit(&[
        "construct",
        "product",
        "--p",
        "2",
        "--m",
        "6",
        "--verify",
        "110,101,011",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("avoids 110,101,011: true"));

    // and contains I_2, so verification fails with a nonzero exit
    let out = bergekit(&[
        "construct",
        "product",
        "--p",
        "2",
        "--m",
        "6",
        "--verify",
        "10,01",
    ]);
    assert!(!out.status.success());
    assert!(stdout(&out).contains("avoids 10,01: false"));
}

#[test]
fn construct_h_and_extremal() {
    let out = bergekit(&["construct", "H", "--p", "1", "--k", "3", "--t", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().next().unwrap(), "3 6");

    // 4 product columns plus 14 distinct proper subcolumns
    let out = bergekit(&["construct", "generalH", "--parts", "1,2,2", "--t", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().next().unwrap(), "5 18");
    // the kebab-case alias also works
    let out = bergekit(&["construct", "general-h", "--parts", "2", "--t", "1"]);
    assert_eq!(stdout(&out).lines().next().unwrap(), "2 3");

    let out = bergekit(&["construct", "extremal", "--name", "g1", "--m", "6"]);
    assert_eq!(stdout(&out).lines().next().unwrap(), "6 10");

    let out = bergekit(&[
        "construct",
        "extremal",
        "--name",
        "ik",
        "--k",
        "3",
        "--m",
        "5",
    ]);
    assert_eq!(stdout(&out).lines().next().unwrap(), "5 4");
}

#[test]
fn bh_exact_json_is_deterministic() {
    let run = || stdout(&bergekit(&["bh-exact", "110,101", "--m", "5"]));
    let a = run();
    let b = run();
    assert_eq!(a, b, "identical configs must give byte-identical JSON");
    let v: serde_json::Value = serde_json::from_str(a.trim()).unwrap();
    assert_eq!(v["schema"], "bergekit/1");
    assert_eq!(v["value"], 8);
    assert_eq!(v["mode"], "downset");
    assert!(v["nodes"].as_u64().unwrap() > 0);
    // the witness is itself a parseable literal
    let w = v["witness"].as_str().unwrap();
    let m = bergekit::matrix::BitMatrix::parse_literal(w).unwrap();
    assert_eq!(m.ncols(), 8);
}

#[test]
fn forb_exact_over_family_dir() {
    let dir = tempfile::tempdir().unwrap();
    for (i, b) in bergekit::named::identity(2)
        .berge_family()
        .unwrap()
        .iter()
        .enumerate()
    {
        let mut fh = std::fs::File::create(dir.path().join(format!("b{i}.txt"))).unwrap();
        fh.write_all(b.to_text().as_bytes()).unwrap();
    }
    let out = bergekit(&[
        "forb-exact",
        "--family",
        dir.path().to_str().unwrap(),
        "--m",
        "3",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["value"], 2); // = Bh(3, I_2)
}

#[test]
fn f_rel_matches_known_value() {
    let p = bergekit::named::identity(3)
        .product(&bergekit::named::identity(3))
        .unwrap();
    let out = bergekit(&["f-rel", "1010,1001,0110,0101", &p.to_literal()]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["value"], 6);
    assert_eq!(v["mode"], "relative");
}

#[test]
fn classify_json_shape() {
    let out = bergekit(&["classify", "1010,1001,0110,0101", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["schema"], "bergekit/1");
    assert_eq!(v["theta"]["num"], 3);
    assert_eq!(v["theta"]["den"], 2);
    assert_eq!(v["conditional"], false);
    let rules = v["rules"].as_array().unwrap();
    assert!(rules
        .iter()
        .any(|r| r["name"] == "subquadratic-C4" && r["anchor"] == "classifyk=4"));
    assert!(v["witness"].as_str().unwrap().starts_with("product"));

    // byte-identical on a rerun
    let again = stdout(&bergekit(&["classify", "1010,1001,0110,0101", "--json"]));
    assert_eq!(stdout(&out), again);
}

#[test]
fn classify_treeforb_via_graph_literal() {
    let out = bergekit(&[
        "classify",
        "--treeforb",
        "--graph",
        "6;0-1,2-3,4-5",
        "--json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["theta"]["num"], 5);
    let out = bergekit(&["classify", "--treeforb", "--graph", "5;0-1,1-2", "--json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["theta"]["num"], 2);
    // cycles are rejected
    let out = bergekit(&["classify", "--treeforb", "--graph", "5;0-1,1-2,2-0"]);
    assert!(!out.status.success());
}

#[test]
fn classify_corpus_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = bergekit(&[
        "classify-corpus",
        "--k",
        "3",
        "--max-cols",
        "3",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["schema"], "bergekit/1");
    assert_eq!(v["all_witnesses_avoid"], true);
    assert_eq!(v["constant_cases_constant"], true);
    assert!(!v["entries"].as_array().unwrap().is_empty());
}

#[test]
fn catalog_lists_named_matrices() {
    let out = bergekit(&["catalog"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("G2\t3x3\t110,101,011"));
    assert!(text.contains("H8\t4x2\t"));
    for name in ["G1", "F7", "C4", "H10", "I3"] {
        assert!(
            text.lines().any(|l| l.starts_with(&format!("{name}\t"))),
            "{name} missing"
        );
    }
}

#[test]
fn verify_theorems_single_items() {
    let out = bergekit(&["verify-theorems", "--only", "g1", "--m", "5"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("Bh(5,G1)=8"));

    let out = bergekit(&["verify-theorems", "--only", "ik", "--k", "4", "--m", "6"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("Bh(6,I_4)=8"));

    let out = bergekit(&["verify-theorems", "--only", "nonsense"]);
    assert!(!out.status.success());
}

#[test]
fn bh_exact_refuses_large_m() {
    let out = bergekit(&["bh-exact", "10,01", "--m", "7"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("downset mode"));
}
