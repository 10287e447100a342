use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_weylcontact"));
    cmd.env_remove("WEYLCONTACT_THREADS");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

struct Work {
    dir: TempDir,
}

impl Work {
    fn new() -> Self {
        Work { dir: tempfile::tempdir().unwrap() }
    }

    fn path(&self, name: &str) -> PathBuf {
        self.dir.path().join(name)
    }

    fn file(&self, name: &str, contents: &str) -> String {
        let p = self.path(name);
        std::fs::write(&p, contents).unwrap();
        p.display().to_string()
    }

    fn so(&self, k: usize, n: usize) -> String {
        let p = self.path(&format!("so{k}{n}.json"));
        let out = run(&["algebra", "build", "--type", "so", "--k", &k.to_string(), "--n", &n.to_string(), "--out", s(&p)]);
        assert_eq!(code(&out), 0);
        p.display().to_string()
    }
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn check<'a>(report: &'a Value, label: &str) -> &'a Value {
    report["checks"].as_array().unwrap().iter().find(|c| c["label"] == label).unwrap_or_else(|| panic!("no check {label}"))
}

#[test]
fn build_writes_so_2_3() {
    let w = Work::new();
    let path = w.so(2, 1);
    let text = std::fs::read_to_string(&path).unwrap();
    let alg = weylcontact::io::algebra_from_json(&text).unwrap();
    assert_eq!(alg.dim(), 10);
    assert_eq!(weylcontact::io::algebra_to_json(&alg).unwrap(), text);
    let again = run(&["algebra", "build", "--type", "so", "--k", "2", "--n", "1"]);
    assert_eq!(String::from_utf8(again.stdout).unwrap(), text);
}

#[test]
fn load_reports_jacobi_witness() {
    let w = Work::new();
    let good = run(&["algebra", "load", &w.so(2, 1)]);
    assert_eq!(code(&good), 0);
    assert_eq!(json(&good)["data"]["dim"], 10);
    let bad = w.file(
        "bad.json",
        r#"{"dim":3,"basis":["e1","e2","e3"],"brackets":[
            {"i":0,"j":1,"out":[{"k":2,"num":"1","den":"1"}]},
            {"i":1,"j":2,"out":[{"k":0,"num":"1","den":"1"}]},
            {"i":0,"j":2,"out":[{"k":0,"num":"1","den":"1"}]}]}"#,
    );
    let out = run(&["algebra", "load", &bad]);
    assert_eq!(code(&out), 1, "{}", String::from_utf8_lossy(&out.stderr));
    let r = json(&out);
    assert_eq!(r["verdict"], false);
    assert!(check(&r, "Lie axioms")["detail"].as_str().unwrap().contains("(0, 1, 2)"));
}

#[test]
fn roots_of_abelian_is_empty() {
    let w = Work::new();
    let ab = w.file("ab.json", r#"{"dim":2,"basis":["a","b"],"brackets":[]}"#);
    let out = run(&["roots", &ab]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(json(&out)["data"]["roots"].as_array().unwrap().len(), 0);
}

#[test]
fn roots_of_so_2_3() {
    let w = Work::new();
    let out_path = w.path("roots.json");
    let out = run(&["roots", &w.so(2, 1), "--out", s(&out_path)]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let r: Value = serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(r["data"]["roots"].as_array().unwrap().len(), 8);
    assert_eq!(r["data"]["chambers"].as_array().unwrap().len(), 8);
}

#[test]
fn contact_verify_verdicts() {
    let w = Work::new();
    let alg = w.so(2, 1);
    let good = w.file("good.json", r#"{"rows":[["1","2"],["2","1"]]}"#);
    let bad = w.file("bad.json", r#"{"rows":[["1","1"],["2","1"]]}"#);
    let ok = run(&["contact", "verify", &alg, "--forms", &good]);
    assert_eq!(code(&ok), 0);
    let r = json(&ok);
    assert_eq!(r["data"]["reeb"]["coords"][0], serde_json::json!(["-1/3", "2/3"]));
    let fail = run(&["contact", "verify", &alg, "--forms", &bad]);
    assert_eq!(code(&fail), 1);
    let r = json(&fail);
    let pf = check(&r, "d alpha_1 nondegenerate on F");
    assert_eq!(pf["pass"], false);
    assert_eq!(pf["detail"], "Pf = 0");
}

#[test]
fn contact_search_round_trips_forms() {
    let w = Work::new();
    let alg = w.so(2, 2);
    let forms = w.path("found.json");
    let out = run(&["contact", "search", &alg, "--count", "2", "--forms-out", s(&forms)]);
    assert_eq!(code(&out), 0);
    let again = run(&["contact", "verify", &alg, "--forms", s(&forms)]);
    assert_eq!(code(&again), 0);
    assert_eq!(code(&run(&["contact", "search", &alg, "--count", "3"])), 2);
}

#[test]
fn anosov_check_and_adapt() {
    let w = Work::new();
    let alg = w.so(2, 1);
    let out = run(&["anosov", "check", &alg, "--element", "1,2"]);
    assert_eq!(code(&out), 0);
    let r = json(&out);
    assert_eq!(check(&r, "E^s + E^u = F")["detail"], "dim E^s = 4, dim E^u = 4");
    assert!(r["data"]["growth"]["pass"].as_bool().unwrap());
    let wall = run(&["anosov", "check", &alg, "--element", "1,1"]);
    assert_eq!(code(&wall), 1);
    assert_eq!(code(&run(&["anosov", "check", &alg, "--element", "1,2,3"])), 2);
    assert_eq!(code(&run(&["anosov", "check", &alg, "--element", "1,x"])), 2);
    assert_eq!(code(&run(&["anosov", "check", &alg, "--element", "-1/2,3"])), 0);

    let forms = w.file("f.json", r#"{"rows":[["1","2"],["2","1"]]}"#);
    let out = run(&["anosov", "adapt", &alg, "--forms", &forms]);
    assert_eq!(code(&out), 0);
    let chamber = json(&out)["data"]["adapted"]["chamber"].as_str().unwrap().to_string();
    assert_eq!(chamber.len(), 4);
}

#[test]
fn extensions() {
    let w = Work::new();
    let so23 = w.so(2, 1);
    let central = w.file("c.json", r#"{"kind":"central","l":1}"#);
    let out = run(&["extend", "central", &so23, "--spec", &central]);
    assert_eq!(code(&out), 0);
    let r = json(&out);
    assert_eq!((r["data"]["dim"].as_u64(), r["data"]["k"].as_u64()), (Some(11), Some(3)));

    let so24 = w.so(2, 2);
    let mut a_star = vec!["0"; 15];
    a_star[14] = "1";
    let spec = serde_json::json!({"kind": "modified", "l": 1, "a_star": [a_star]});
    let modified = w.file("m.json", &spec.to_string());
    let out = run(&["extend", "modified", &so24, "--spec", &modified]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stdout));
    assert_eq!(json(&out)["data"]["dim_f"], 12);

    let mut bad = vec!["0"; 15];
    bad[2] = "1";
    let spec = serde_json::json!({"kind": "modified", "l": 1, "a_star": [bad]});
    let out = run(&["extend", "modified", &so24, "--spec", &w.file("bad.json", &spec.to_string())]);
    assert_eq!(code(&out), 1);
    assert_eq!(code(&run(&["extend", "central", &so24, "--spec", &modified])), 2);
}

#[test]
fn kammeyer_template_and_corruption() {
    let w = Work::new();
    let table = w.path("sl3.json");
    assert_eq!(code(&run(&["kammeyer", "template", "--n", "3", "--out", s(&table)])), 0);
    let out = run(&["kammeyer", "verify", s(&table)]);
    assert_eq!(code(&out), 0);

    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(&table).unwrap()).unwrap();
    v["constants"]["d"][0]["value"] = Value::String("7/1".into());
    let out = run(&["kammeyer", "verify", &w.file("bad.json", &v.to_string())]);
    assert_eq!(code(&out), 1);
    let r = json(&out);
    let failed: Vec<&str> = r["data"]["relations"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|x| x["pass"] == false)
        .map(|x| x["name"].as_str().unwrap())
        .collect();
    assert!(failed.contains(&"R3"), "{failed:?}");
}

#[test]
fn usage_errors_exit_2() {
    let w = Work::new();
    let alg = w.so(2, 1);
    assert_eq!(code(&run(&["roots", &alg, "--frobnicate"])), 2);
    assert_eq!(code(&run(&["nonsense"])), 2);
    assert_eq!(code(&run(&["roots", &w.file("broken.json", "{")])), 2);
    assert_eq!(code(&run(&["roots", s(&w.path("missing.json"))])), 2);
    let unknown = w.file("u.json", r#"{"dim":1,"basis":["a"],"brackets":[],"extra":1}"#);
    assert_eq!(code(&run(&["algebra", "load", &unknown])), 2);
    let short = w.file("short.json", r#"{"rows":[["1"],["2"]]}"#);
    assert_eq!(code(&run(&["contact", "verify", &alg, "--forms", &short])), 2);
    assert_eq!(code(&run(&["algebra", "build", "--type", "sl", "--n", "1"])), 2);
    let threads = bin().args(["roots", &alg]).env("WEYLCONTACT_THREADS", "zero").output().unwrap();
    assert_eq!(code(&threads), 2);
}

#[test]
fn markdown_reports() {
    let w = Work::new();
    let alg = w.so(2, 1);
    let forms = w.file("f.json", r#"{"rows":[["1","2"],["2","1"]]}"#);
    let out = run(&["contact", "verify", &alg, "--forms", &forms, "--format", "md"]);
    assert_eq!(code(&out), 0);
    let md = String::from_utf8(out.stdout).unwrap();
    assert!(md.starts_with("# k-contact certificate"));
    assert!(md.contains("Verdict: **PASS**"));
    assert!(md.contains(&format!("weylcontact contact verify {alg} --forms {forms} --seed 0 --format md")));
    assert!(md.contains("| Reeb fields commute | pass |"));
}

#[test]
fn report_is_deterministic() {
    let a = bin().args(["report", "--seed", "7"]).env("WEYLCONTACT_THREADS", "2").output().unwrap();
    let b = bin().args(["report", "--seed", "7"]).env("WEYLCONTACT_THREADS", "2").output().unwrap();
    assert_eq!(code(&a), 0, "{}", String::from_utf8_lossy(&a.stdout));
    assert_eq!(a.stdout, b.stdout);
    let r = json(&a);
    assert_eq!(r["config"]["seed"], 7);
    assert_eq!(r["config"]["threads"], 2);
    assert!(r["checks"].as_array().unwrap().len() > 40);
}
