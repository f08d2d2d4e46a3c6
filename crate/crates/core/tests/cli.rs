use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn symdeg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symdeg"))
        .args(args)
        .env_remove("SYMDEG_BUDGET")
        .output()
        .expect("spawn symdeg")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn degree_command() {
    let out = symdeg(&["degree", "--property", "ed", "--n", "2", "--m", "2", "--eps", "1/3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["degree"], 2);
    assert_eq!(v["table"][1]["eps_min"], "1/2");

    let out = symdeg(&["degree", "--property", "always-one", "--n", "3", "--m", "3", "--eps", "1/3", "--json"]);
    assert_eq!(json(&out)["degree"], 0);

    let out = symdeg(&["degree", "--property", "ed", "--n", "2", "--m", "1", "--eps", "1/3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = symdeg(&["degree", "--property", "ed", "--n", "2", "--m", "2", "--eps", "0.3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = symdeg(&["degree", "--property", "nope", "--n", "2", "--m", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = symdeg(&["degree", "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));

    let out = symdeg(&["degree", "--property", "ed", "--n", "3", "--m", "3", "--human"]);
    assert!(String::from_utf8_lossy(&out.stdout).contains("d* = 3"));
}

#[test]
fn sweep_command() {
    let out = symdeg(&["sweep", "--property", "ed", "--n", "3", "--m", "3..6", "--assert-flat"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 4);
    let degrees: Vec<&str> = rows.iter().map(|r| r.split(',').nth(1).unwrap()).collect();
    assert!(degrees.iter().all(|d| *d == degrees[0]));

    let out = symdeg(&["sweep", "--property", "collision", "--n", "4", "--m", "4..6"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 4);

    let out = symdeg(&["sweep", "--property", "collision", "--n", "4", "--m", "6..4"]);
    assert_eq!(out.status.code(), Some(2));

    let out = symdeg(&["sweep", "--property", "ed", "--n", "2", "--m", "2..3", "--json"]);
    assert_eq!(json(&out).as_array().unwrap().len(), 2);
}

#[test]
fn assert_flat_fails_when_degree_varies() {
    // heavy-vs-spread classes only become distinguishable once m >= 4
    let dir = tempdir();
    let prop = write(
        &dir,
        "prop.json",
        r#"{"n":4,"classes":[{"partition":[1,1,1,1],"label":"Zero"},{"partition":[4],"label":"One"},
            {"partition":[3,1],"label":"One"},{"partition":[2,2],"label":"One"},{"partition":[2,1,1],"label":"One"}]}"#,
    );
    let out = symdeg(&["sweep", "--property-file", &prop, "--n", "4", "--m", "3..4", "--assert-flat"]);
    assert_eq!(out.status.code(), Some(1));
    let out = symdeg(&["sweep", "--property-file", &prop, "--n", "4", "--m", "4..5", "--assert-flat"]);
    assert_eq!(out.status.code(), Some(0));
}

fn tempdir() -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("symdeg-cli-{}-{:?}", std::process::id(), std::thread::current().id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn transform_commands_chain() {
    let dir = tempdir();
    let y = write(
        &dir,
        "y.json",
        r#"{"namespace":"y","n":2,"m":2,"terms":[{"vars":[[1,1],[2,2]],"coeff":"1"},{"vars":[[1,2],[2,1]],"coeff":"1"}]}"#,
    );
    let z = dir.join("z.json").to_string_lossy().into_owned();
    let out = symdeg(&["symmetrize", "--input", &y, "--output", &z]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let zv: Value = serde_json::from_str(&std::fs::read_to_string(&z).unwrap()).unwrap();
    assert_eq!(zv["namespace"], "z");
    assert_eq!(zv["terms"][0]["partition"], serde_json::json!([1, 1]));
    assert_eq!(zv["terms"][0]["coeff"], "1/1");

    let wide = dir.join("wide.json").to_string_lossy().into_owned();
    assert!(symdeg(&["extend", "--input", &z, "--m", "4", "--output", &wide]).status.success());
    let out = symdeg(&["verify", "--input", &wide, "--property", "ed", "--n", "2", "--eps", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["pass"], true);

    let out = symdeg(&["restrict", "--input", &wide, "--m", "2"]);
    let back: Value = json(&out);
    assert_eq!(back, zv);

    let out = symdeg(&["verify", "--input", &y, "--property", "ed", "--eps", "1/3"]);
    assert_eq!(json(&out)["pass"], true);
    let out = symdeg(&["verify", "--input", &y, "--property", "always-one", "--eps", "1/3"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["pass"], false);

    let out = symdeg(&["verify", "--input", &wide, "--property", "ed"]);
    assert_eq!(out.status.code(), Some(2));
    let out = symdeg(&["extend", "--input", &y, "--m", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn andor_commands() {
    let dir = tempdir();
    let x = write(
        &dir,
        "x.json",
        r#"{"namespace":"x","n":2,"terms":[{"vars":[1,4],"coeff":"1"},{"vars":[1,3],"coeff":"5"},{"vars":[2],"coeff":"-1/2"}]}"#,
    );
    let out = symdeg(&["andor-reduce", "--input", &x, "--n", "2"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["namespace"], "y");
    // x1*x4 -> y11*y22, x1*x3 vanishes, x2 -> y21
    assert_eq!(v["terms"].as_array().unwrap().len(), 2);
    let out = symdeg(&["andor-reduce", "--input", &x, "--n", "3"]);
    assert_eq!(out.status.code(), Some(2));

    let out = symdeg(&["andor-chain", "--n", "3"]);
    assert_eq!(json(&out)["andor_degree_lower_bound"], 3);
}

#[test]
fn budget_exceeded_exit_code() {
    let dir = tempdir();
    let y = write(&dir, "y3.json", r#"{"namespace":"y","n":3,"m":3,"terms":[]}"#);
    let out = Command::new(env!("CARGO_BIN_EXE_symdeg"))
        .args(["verify", "--input", &y, "--property", "ed"])
        .env("SYMDEG_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("27"));
}
