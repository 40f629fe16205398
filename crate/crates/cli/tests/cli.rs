use std::path::PathBuf;
use std::process::{Command, Output};

fn qaut(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qaut")).args(args).output().expect("qaut runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("bad json ({e}): {}", stdout(o)))
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("qaut-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn group_info_reports_basic_facts() {
    let o = qaut(&["--format", "json", "group", "info", "--group", "S3"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["order"], 6);
    assert_eq!(v["center_size"], 1);
    assert_eq!(v["exponent"], 6);
    assert_eq!(v["aut_count"], 6);
    assert_eq!(v["abelian"], false);
}

#[test]
fn dihedral_quandle_automorphisms() {
    let o = qaut(&["--format", "json", "aut", "--quandle", "dihedral:n=5", "--oracle"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["count"], 20);
    assert_eq!(v["oracle_agrees"], true);

    let o = qaut(&["aut", "--anti", "--quandle", "dihedral:n=4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("antiautomorphisms of R4: 0"), "{}", stdout(&o));
}

#[test]
fn core_of_an_odd_cyclic_group() {
    let o = qaut(&["--format", "json", "quandle", "info", "--quandle", "core", "--group", "Z5"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["involutory"], true);
    assert_eq!(v["inn_size"], 10);

    let o = qaut(&["aut", "--quandle", "core", "--group", "Z5"]);
    assert!(stdout(&o).contains(": 20"), "{}", stdout(&o));
}

#[test]
fn verify_exit_codes() {
    let o = qaut(&["verify", "core", "--group", "heisenberg3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).starts_with("HOLDS core"));

    let o = qaut(&["--format", "json", "verify", "dihedral-no-anti", "--n", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["holds"], true);

    // the converse for Alexander quandles fails on Z2 with the identity map
    let o = qaut(&["verify", "alex", "--group", "Z2", "--map", "0"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAILS"), "{}", stdout(&o));

    let o = qaut(&["verify", "nope"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn incompatible_map_names_the_witness_pair() {
    let o = qaut(&["quandle", "build", "--quandle", "q3:psi=aaut1", "--group", "S3"]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("compatibility") && err.contains("x=2, y=1"), "{err}");

    let o = qaut(&["quandle", "build", "--quandle", "q3:psi=eps", "--group", "S3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
}

#[test]
fn wrong_map_kind_is_a_usage_error() {
    let o = qaut(&["quandle", "build", "--quandle", "q3:psi=id", "--group", "S3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("antiautomorphism law"), "{}", stderr(&o));
}

#[test]
fn malformed_table_reports_the_line() {
    let path = scratch("bad.txt", "# broken\n3\n0 2 1\n2 1 x\n1 0 2\n");
    let o = qaut(&["quandle", "check", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 4"), "{}", stderr(&o));
}

#[test]
fn table_failing_the_axioms_exits_one() {
    // the multiplication table of Z3 is not idempotent
    let path = scratch("nonquandle.txt", "3\n0 1 2\n1 2 0\n2 0 1\n");
    let o = qaut(&["quandle", "check", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1), "{}{}", stdout(&o), stderr(&o));
}

#[test]
fn exported_tables_read_back() {
    let o = qaut(&["group", "export", "--group", "D4"]);
    assert_eq!(o.status.code(), Some(0));
    let path = scratch("d4.txt", &stdout(&o));
    let o = qaut(&["--format", "json", "group", "info", "--group", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v = json(&o);
    assert_eq!(v["order"], 8);
    assert_eq!(v["center_size"], 2);
    assert_eq!(v["aut_count"], 8);

    let o = qaut(&["quandle", "build", "--quandle", "dihedral:n=3"]);
    let table: String = stdout(&o).lines().skip_while(|l| !l.starts_with('#')).map(|l| format!("{l}\n")).collect();
    let path = scratch("r3.txt", &table);
    let o = qaut(&["quandle", "check", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}{}", stdout(&o), stderr(&o));
    let o = qaut(&["aut", "--quandle-file", path.to_str().unwrap()]);
    assert!(stdout(&o).contains(": 6"), "{}", stdout(&o));
}

#[test]
fn small_census_writes_json_report() {
    let path = std::env::temp_dir().join(format!("qaut-census-{}.json", std::process::id()));
    let o = qaut(&["--format", "json", "--output", path.to_str().unwrap(), "census", "--groups", "Z5,S3", "--dihedral", "3,5"]);
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let summary = &report["summary"];
    assert!(summary["total"].as_u64().unwrap() > 0);
    let failed = summary["failed"].as_u64().unwrap();
    assert_eq!(o.status.code(), Some(if failed == 0 { 0 } else { 1 }));
    assert_eq!(report["version"], 1);
}

#[test]
fn bad_group_name_is_a_usage_error() {
    let o = qaut(&["group", "info", "--group", "Z0"]);
    assert_eq!(o.status.code(), Some(2));
    let o = qaut(&["--max-order", "0", "group", "info", "--group", "Z3"]);
    assert_eq!(o.status.code(), Some(2));
}
