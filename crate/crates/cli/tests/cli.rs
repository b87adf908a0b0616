use std::io::Write as _;
use std::process::{Command, Output};

use ncolour::table::{table_to_file, TableFile};
use ncolour_core::colour::builtin_delta_gamma;
use ncolour_core::Variant;

fn ncolour(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ncolour")).args(args).env_remove("NCOLOUR_ORDER").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn enumerate_counts() {
    // |P_2| by weight: 1, 4, 9
    let o = ncolour(&["enumerate", "--family", "pn", "--n", "2", "--max-weight", "2"]);
    assert!(o.status.success());
    let lines: Vec<_> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines.len(), 14);
    assert_eq!(lines[0], "0");
    assert!(lines.contains(&"1[a0b1]+1[a1b0]".to_string()));
    assert!(!lines.contains(&"1[a1b0]+1[a0b1]".to_string()));

    let o = ncolour(&["enumerate", "--family", "p0", "--max-weight", "5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["count"], 1 + 1 + 2 + 3 + 5 + 7);
}

#[test]
fn enumerate_frobenius_json() {
    let o = ncolour(&["enumerate", "--family", "fn", "--n", "1", "--max-weight", "4", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    // 1-coloured Frobenius partitions are ordinary partitions
    assert_eq!(v["count"], 1 + 1 + 2 + 3 + 5);
}

#[test]
fn verify_exit_codes() {
    let o = ncolour(&["verify", "primc", "--n", "2", "--order", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS primc"));

    let o = ncolour(&["verify", "primc", "--n", "2", "--order", "6", "--inject-corruption"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("FAIL primc"));
}

#[test]
fn verify_json_report() {
    let o = ncolour(&["verify", "main2", "--n", "2", "--order", "5", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["claim"], "main2");
    assert_eq!(v["status"], "pass");
    assert_eq!(v["parameters"]["order"], 5);

    let o = ncolour(&["verify", "main2", "--n", "2", "--order", "5", "--format", "json", "--inject-corruption"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["status"], "fail");
    assert!(v["mismatch"].is_object());
}

#[test]
fn order_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_ncolour"))
        .args(["verify", "primc", "--n", "2", "--format", "json"])
        .env("NCOLOUR_ORDER", "4")
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["parameters"]["order"], 4);
}

#[test]
fn budget_refusal() {
    let o = ncolour(&["verify", "primc", "--n", "2", "--order", "10", "--budget", "10"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--force"));
    let o = ncolour(&["verify", "primc", "--n", "2", "--order", "10", "--budget", "10", "--force"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn biject_worked_example() {
    let lambda = "8[a1b1]+6[a0b2]+6[a2b2]+5[a0b1]+5[a1b0]+4[a0b0]+4[a0b0]+3[a0b2]+3[a1b1]+3[a1b1]+3[a1b0]\
                  +2[a2b2]+2[a2b2]+2[a2b2]+2[a2b0]+1[a0b0]";
    let o = ncolour(&["biject", lambda, "--n", "3"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("mu = 8[a1b1]+6[a0b2]+5[a0b1]+5[a1b0]+3[a0b2]+3[a1b0]+2[a2b0]"));
    assert!(out.contains("nu = 6[a0b0]+4[a0b0]+4[a0b0]+3[a0b0]+3[a0b0]+2[a0b0]+2[a0b0]+2[a0b0]+1[a0b0]"));

    let pair = "8[a1b1]+6[a0b2]+5[a0b1]+5[a1b0]+3[a0b2]+3[a1b0]+2[a2b0] | \
                6[a0b0]+4[a0b0]+4[a0b0]+3[a0b0]+3[a0b0]+2[a0b0]+2[a0b0]+2[a0b0]+1[a0b0]";
    let o = ncolour(&["biject", pair, "--n", "3", "--inverse"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains(&format!("lambda = {lambda}")));
}

#[test]
fn biject_empty_and_rejections() {
    let o = ncolour(&["biject", "0", "--n", "2"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("mu = 0"));

    let o = ncolour(&["biject", "2[a1b0]+2[a0b1]", "--n", "3"]);
    assert_eq!(o.status.code(), Some(1));

    let o = ncolour(&["biject", "2[a1b0", "--n", "3"]);
    assert_eq!(o.status.code(), Some(2));

    let o = ncolour(&["biject", "2[a3b0]", "--n", "3"]);
    assert_eq!(o.status.code(), Some(2));
}

fn write_json(dir: &tempfile::TempDir, name: &str, body: &str) -> String {
    let path = dir.path().join(name);
    std::fs::File::create(&path).unwrap().write_all(body.as_bytes()).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn table_files() {
    let dir = tempfile::tempdir().unwrap();
    let t = builtin_delta_gamma(Variant::Alt, 2).unwrap();
    let good = write_json(&dir, "alt2.json", &serde_json::to_string(&table_to_file(&t)).unwrap());
    let o = ncolour(&["verify", "capparelli", "--n", "2", "--order", "6", "--table", &good]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let builtin = ncolour(&["enumerate", "--family", "cn", "--n", "2", "--max-weight", "6", "--table", "alt"]);
    let from_file = ncolour(&["enumerate", "--family", "cn", "--n", "2", "--max-weight", "6", "--table", &good]);
    assert_eq!(stdout(&builtin), stdout(&from_file));

    // n mismatch
    let o = ncolour(&["verify", "capparelli", "--n", "3", "--order", "4", "--table", &good]);
    assert_eq!(o.status.code(), Some(2));

    let bad = write_json(&dir, "bad.json", "{\"n\": 2, \"delta\": ");
    let o = ncolour(&["verify", "capparelli", "--n", "2", "--order", "4", "--table", &bad]);
    assert_eq!(o.status.code(), Some(2));

    let mut f: TableFile = table_to_file(&t);
    let key = f.delta.keys().next().unwrap().clone();
    f.delta.insert(key, 0);
    let out_of_range = write_json(&dir, "range.json", &serde_json::to_string(&f).unwrap());
    let o = ncolour(&["verify", "capparelli", "--n", "2", "--order", "4", "--table", &out_of_range]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!stderr(&o).is_empty());

    let o = ncolour(&["verify", "capparelli", "--n", "2", "--table", "/nonexistent/table.json"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn series_kinds_agree() {
    let outs: Vec<String> = ["constant-term", "jacobi", "product", "pn"]
        .iter()
        .map(|k| stdout(&ncolour(&["series", k, "--n", "2", "--order", "6"])))
        .collect();
    assert!(outs.windows(2).all(|w| w[0] == w[1]), "{outs:?}");
    assert!(outs[0].starts_with("q^0: 1\n"));
}
