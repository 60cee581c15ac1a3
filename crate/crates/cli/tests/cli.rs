use std::path::PathBuf;
use std::process::{Command, Output};

use simploid::dga::matrix_algebra;
use simploid::nerve::json::nerve_from_value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_simploid")).args(args).env_remove("SIMPLOID_BUDGET_MS").output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("simploid-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn groupoid_checks_on_files_and_builtins() {
    let file = scratch("nerve_z2.sobj.json");
    let exported = run(&["export", "object", "z2", "--depth", "4"]);
    assert_eq!(code(&exported), 0);
    std::fs::write(&file, exported.stdout).unwrap();
    let out = run(&["check", "kgroupoid", "--input", file.to_str().unwrap(), "--k", "1", "--depth", "4"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    assert!(stdout(&out).contains("verdict: pass"));
    assert_eq!(code(&run(&["check", "kgroupoid", "--object", "idempotent", "--depth", "3"])), 1);
    assert_eq!(code(&run(&["check", "kcategory", "--object", "idempotent", "--depth", "3"])), 0);
}

#[test]
fn maps_from_files_match_builtins() {
    let file = scratch("quotient.omap.json");
    std::fs::write(&file, run(&["export", "map", "quotient:z4-z2", "--depth", "3"]).stdout).unwrap();
    let from_file = run(&["check", "fibration", "--input", file.to_str().unwrap(), "--format", "json"]);
    let builtin = run(&["check", "fibration", "--map", "quotient:z4-z2", "--format", "json"]);
    assert_eq!(code(&from_file), code(&builtin));
    let cases = |o: &Output| serde_json::from_slice::<serde_json::Value>(&o.stdout).unwrap()["cases"].clone();
    assert_eq!(cases(&from_file), cases(&builtin));
}

#[test]
fn filling_a_matrix_horn_composes() {
    let dga = scratch("m2.dga.json");
    std::fs::write(&dga, run(&["export", "dga", "m2"]).stdout).unwrap();
    let out = run(&["nerve", "fill", "--dga", dga.to_str().unwrap(), "--n", "2", "--i", "1", "--x", "0", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["lemma"], "inner-horn-filling");
    let a = matrix_algebra(2);
    let p = nerve_from_value(&a, &report["data"]).unwrap();
    assert_eq!(p.f(&a, 0, 2), a.mul(&p.f(&a, 0, 1), &p.f(&a, 1, 2)));
}

#[test]
fn reports_are_byte_stable() {
    let args = ["nerve", "identities", "--algebra", "end-zero", "--sample", "3", "--seed", "9", "--format", "json"];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let fill = |seed: &str| run(&["nerve", "fill", "--algebra", "m2", "--seed", seed, "--format", "json"]).stdout;
    assert_eq!(fill("1"), fill("1"));
    assert_ne!(fill("1"), fill("2"));
}

#[test]
fn output_file_holds_the_json_report() {
    let file = scratch("report.json");
    let out = run(&["suite", "set-model", "--output", file.to_str().unwrap(), "--format", "json"]);
    assert_eq!(code(&out), 0);
    assert_eq!(std::fs::read(&file).unwrap(), out.stdout);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["config"]["params"]["name"], "set-model");
}

#[test]
fn failures_have_distinct_exit_codes() {
    assert_eq!(code(&run(&["check", "we", "--map", "quotient:z4-z2", "--via", "direct"])), 1);
    assert_eq!(code(&run(&["check", "kgroupoid"])), 6);
    assert_eq!(code(&run(&["frobnicate"])), 2);
    let bad = scratch("bad.json");
    std::fs::write(&bad, "{ not json").unwrap();
    assert_eq!(code(&run(&["check", "kgroupoid", "--input", bad.to_str().unwrap()])), 3);
    let point = scratch("point.sobj.json");
    std::fs::write(&point, r#"{"format":"sobj.v1","depth":0,"coskeletal_from":null,"levels":[{"labels":["a"]}]}"#).unwrap();
    assert_eq!(code(&run(&["check", "kgroupoid", "--input", point.to_str().unwrap()])), 4);
    assert_eq!(code(&run(&["suite", "expansions", "--budget-ms", "0"])), 5);
    let timed = Command::new(env!("CARGO_BIN_EXE_simploid"))
        .args(["suite", "expansions"])
        .env("SIMPLOID_BUDGET_MS", "0")
        .output()
        .unwrap();
    assert_eq!(code(&timed), 5);
}

#[test]
fn suites_pass() {
    for name in ["expansions", "set-model", "nerve"] {
        let out = run(&["suite", name, "--sample", "3"]);
        assert_eq!(code(&out), 0, "{}", stdout(&out));
    }
}
