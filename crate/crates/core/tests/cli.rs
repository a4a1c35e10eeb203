use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cubical-forms"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn dims_table_rows() {
    let o = run(&["dims", "--n", "1", "--rmax", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let rows: Vec<Vec<String>> = stdout(&o)
        .lines()
        .skip(2)
        .map(|l| l.split_whitespace().skip(1).map(String::from).collect())
        .collect();
    assert_eq!(rows, vec![vec!["2", "3", "4"], vec!["2", "3", "4"]]);
}

#[test]
fn dims_constructive_json() {
    let o = run(&["dims", "--n", "2", "--rmax", "4", "--constructive", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let cells: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let cells = cells.as_array().unwrap();
    assert_eq!(cells.len(), 12);
    assert!(cells.iter().all(|c| c["formula"] == c["constructive"]));
}

#[test]
fn verify_exit_codes() {
    assert_eq!(run(&["verify", "--suite", "unisolvence", "--n", "2", "--rmax", "3"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "--suite", "commute", "--n", "2", "--r", "2", "--seed", "7"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "--suite", "nope", "--n", "2"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "all", "--n", "5"]).status.code(), Some(2));
    assert_eq!(run(&["dims", "--rmax", "0"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn verify_json_report() {
    let o = run(&["verify", "--suite", "koszul,trace", "--n", "2", "--rmax", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let rep: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let cells = rep["cells"].as_array().unwrap();
    assert!(cells.iter().all(|c| c["pass"] == true));
    assert!(cells.iter().any(|c| c["suite"] == "trace"));
}

#[test]
fn basis_and_dofs_are_deterministic() {
    let dir = std::env::temp_dir();
    let a = dir.join("cubical_forms_cli_a.json");
    let b = dir.join("cubical_forms_cli_b.json");
    for p in [&a, &b] {
        let o = run(&["basis", "--n", "3", "--k", "2", "--r", "1", "--out", p.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
    }
    let bytes = std::fs::read(&a).unwrap();
    assert_eq!(bytes, std::fs::read(&b).unwrap());
    let basis: serde_json::Value = serde_json::from_slice(&bytes).unwrap();
    assert_eq!(basis["forms"].as_array().unwrap().len(), 18);

    let o = run(&["dofs", "--n", "2", "--k", "1", "--r", "2"]);
    let dofs: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(dofs["count"], 14);
    assert_eq!(stdout(&o), stdout(&run(&["dofs", "--n", "2", "--k", "1", "--r", "2"])));
}

#[test]
fn unwritable_output_is_io_error() {
    let o = run(&["basis", "--n", "2", "--k", "1", "--r", "1", "--out", "/nonexistent-dir/x.json"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn complex_on_grids() {
    for (mesh, r, defects) in [("grid:1x1x1", "3", "1,0,0,0"), ("grid:2x1x1", "3", "1,0,0,0"), ("grid:2x2", "2", "1,0,0")] {
        let o = run(&["complex", "--mesh", mesh, "--r", r]);
        assert_eq!(o.status.code(), Some(0), "{mesh}");
        let text = stdout(&o);
        assert!(text.lines().any(|l| l.starts_with("defects") && l.ends_with(defects)), "{text}");
        assert!(text.lines().any(|l| l.starts_with("continuity") && !l.contains("FAIL")));
    }
}
