use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn cdt(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cdt")).args(args).current_dir(dir).output().unwrap()
}

fn json_of(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn header_counts(text: &str) -> (usize, usize) {
    let n = text.lines().find_map(|l| l.strip_prefix("n ")).unwrap().trim().parse().unwrap();
    (n, text.lines().filter(|l| l.starts_with("e ")).count())
}

#[test]
fn gen_counts() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    for (args, n, m) in [
        (vec!["gen", "hertz", "--p", "4", "--q", "3"], 18, 28),
        (vec!["gen", "s-graph", "--a", "1", "--b", "1", "--c", "1"], 10, 12),
        (vec!["gen", "m-graph", "--a", "1", "--b", "2", "--c", "3"], 10, 18),
        (vec!["gen", "erd", "--n", "2", "--r", "1,1,1,1,1,1,1"], 15, 28),
        (vec!["gen", "petersen"], 10, 15),
    ] {
        let out = cdt(d, &args);
        assert!(out.status.success());
        assert_eq!(header_counts(&String::from_utf8(out.stdout).unwrap()), (n, m), "{args:?}");
    }
    let list = String::from_utf8(cdt(d, &["gen", "--list"]).stdout).unwrap();
    assert!(list.contains("random-small-spread") && list.contains("tilde"));
}

#[test]
fn sidecar_selects_formula() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert!(cdt(d, &["gen", "s-graph", "--a", "2", "--b", "3", "--c", "1", "--out", "s.txt"]).status.success());
    let side: Value = serde_json::from_slice(&std::fs::read(d.join("s.txt.roles.json")).unwrap()).unwrap();
    assert_eq!(side["family"], "s-graph");
    let v = json_of(&cdt(d, &["color", "s.txt"]));
    assert_eq!(v["method"], "s-formula");
    assert_eq!(v["report"]["total"], 0);
    let b = json_of(&cdt(d, &["bounds", "s.txt"]));
    assert!(b["entries"].as_array().unwrap().iter().any(|e| e["tag"] == "trivial-upper-bound"));
}

#[test]
fn color_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    for (gen, delta) in [
        (vec!["gen", "random-bipartite", "--left", "9", "--right", "10", "--delta", "4", "--seed", "1", "--out", "g.txt"], 4),
        (vec!["gen", "random-bipartite", "--left", "9", "--right", "10", "--delta", "5", "--seed", "2", "--out", "g.txt"], 5),
        (vec!["gen", "random-bounded", "--n", "25", "--delta", "5", "--density", "0.3", "--seed", "3", "--out", "g.txt"], 0),
        (vec!["gen", "random-small-spread", "--n", "20", "--k", "5", "--seed", "4", "--out", "g.txt"], 0),
    ] {
        assert!(cdt(d, &gen).status.success());
        let n = header_counts(&std::fs::read_to_string(d.join("g.txt")).unwrap()).0 as u64;
        assert!(cdt(d, &["color", "g.txt", "--out", "c.json"]).status.success());
        let c: Value = serde_json::from_slice(&std::fs::read(d.join("c.json")).unwrap()).unwrap();
        let total = c["report"]["total"].as_u64().unwrap();
        match delta {
            4 => assert_eq!(total, 0),
            _ => assert!(total <= n),
        }
        let v = json_of(&cdt(d, &["verify", "g.txt", "c.json"]));
        assert_eq!(v["proper"], true);
        assert_eq!(v["claimed_total_matches"], true);
        assert_eq!(v["within_certified_bound"], true);
    }
}

#[test]
fn survey_counts() {
    let dir = tempfile::tempdir().unwrap();
    for (n, count) in [("4", 10), ("5", 31)] {
        let v = json_of(&cdt(dir.path(), &["survey", "--max-n", n]));
        assert_eq!(v["total_instances"], count);
        assert_eq!(v["all_colorable"], true);
    }
}

#[test]
fn exact_decide_and_wc() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert!(cdt(d, &["gen", "petersen", "--out", "p.txt"]).status.success());
    let v = json_of(&cdt(d, &["exact", "p.txt", "--decide", "4"]));
    assert_eq!(v["status"], "colorable");
    assert_eq!(v["witness"]["report"]["total"], 0);
    let v = json_of(&cdt(d, &["exact", "p.txt", "--decide", "3"]));
    assert!(v["witness"].is_null());
    assert!(cdt(d, &["gen", "path", "--n", "4", "--out", "t.txt"]).status.success());
    let w = json_of(&cdt(d, &["exact", "t.txt", "--wc-max", "--cap", "10"]));
    assert!(w.to_string().contains("\"wc_max\":3"), "{w}");
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    std::fs::write(d.join("junk.txt"), "n 3\ne 0 x\n").unwrap();
    assert_eq!(cdt(d, &["color", "junk.txt"]).status.code(), Some(2));
    assert_eq!(cdt(d, &["color", "missing.txt"]).status.code(), Some(2));

    assert!(cdt(d, &["gen", "cycle", "--n", "4", "--out", "c4.txt"]).status.success());
    let clash = r#"{"t":2,"edges":[{"u":0,"v":1,"color":1},{"u":1,"v":2,"color":1},{"u":2,"v":3,"color":2},{"u":3,"v":0,"color":2}]}"#;
    std::fs::write(d.join("clash.json"), clash).unwrap();
    assert_eq!(cdt(d, &["verify", "c4.txt", "clash.json"]).status.code(), Some(2));

    let wasteful = r#"{"t":5,"certified_bound":0,"edges":[{"u":0,"v":1,"color":1},{"u":1,"v":2,"color":3},{"u":2,"v":3,"color":1},{"u":3,"v":0,"color":3}]}"#;
    std::fs::write(d.join("w.json"), wasteful).unwrap();
    assert_eq!(cdt(d, &["verify", "c4.txt", "w.json"]).status.code(), Some(4));
    let lying = r#"{"t":5,"report":{"total":0},"edges":[{"u":0,"v":1,"color":1},{"u":1,"v":2,"color":3},{"u":2,"v":3,"color":1},{"u":3,"v":0,"color":3}]}"#;
    std::fs::write(d.join("l.json"), lying).unwrap();
    assert_eq!(cdt(d, &["verify", "c4.txt", "l.json"]).status.code(), Some(2));

    assert!(cdt(d, &["gen", "petersen", "--out", "p.txt"]).status.success());
    assert_eq!(cdt(d, &["exact", "p.txt", "--budget", "5"]).status.code(), Some(3));
    assert_eq!(cdt(d, &["bounds", "p.txt", "--certify", "--budget", "5"]).status.code(), Some(3));

    let claim = json_of(&cdt(d, &["bounds", "p.txt", "--claim-def-c", "1"]));
    assert_eq!(claim["claim"]["holds"], false);
}
