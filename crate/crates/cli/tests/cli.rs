use std::path::PathBuf;
use std::process::{Command, Output};

fn scx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_scx")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("scx-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn spectrum_of_hollow_triangle() {
    let o = scx(&["spectrum", "builtin:hollow-triangle", "--dim", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!((v["mu"].as_f64().unwrap() - 3.0).abs() < 1e-9);
    assert_eq!(v["kernel_dim"], 0);
    assert_eq!(v["eigenvalues"].as_array().unwrap().len(), 3);
}

#[test]
fn betti_from_file_and_builtin() {
    let path = temp_file("circle.json", r#"{"n": 4, "facets": [[0,1],[1,2],[2,3],[0,3]]}"#);
    let o = scx(&["betti", path.to_str().unwrap(), "--dim", "1"]);
    assert_eq!(stdout(&o).trim(), "1");
    let o = scx(&["betti", "builtin:ag23", "--dim", "2"]);
    assert_eq!(stdout(&o).trim(), "1");
}

#[test]
fn matroid_commands() {
    let v: serde_json::Value = serde_json::from_slice(&scx(&["matroid", "phi", "--matroid", "builtin:AG23"]).stdout).unwrap();
    assert_eq!(v["phi"], 4);
    let v: serde_json::Value =
        serde_json::from_slice(&scx(&["matroid", "phistar", "--matroid", "uniform:2,4"]).stdout).unwrap();
    assert_eq!(v["phi_star"], "4");
    let o = scx(&["matroid", "hall", "--matroid", "builtin:AG23", "--partition", "3-parallel-lines"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn exit_codes() {
    assert_eq!(scx(&["betti", "/nonexistent/x.json", "--dim", "0"]).status.code(), Some(2));
    let bad = temp_file("bad.json", r#"{"n": 3, "facets": [[0,1]], "missing_faces": [[0,2]]}"#);
    assert_eq!(scx(&["betti", bad.to_str().unwrap(), "--dim", "0"]).status.code(), Some(2));
    assert_eq!(scx(&["verify", "fp", "--n-max", "40"]).status.code(), Some(4));
    assert_eq!(scx(&["reproduce", "pg33", "--stretch"]).status.code(), Some(4));
    assert_eq!(scx(&["verify", "no-such-suite"]).status.code(), Some(2));
}

#[test]
fn verify_is_byte_identical() {
    let args = ["verify", "hall", "--seed", "7", "--trials", "30"];
    let a = scx(&args);
    let b = scx(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["seed"], 7);
    assert_eq!(v["pass"], true);
}

#[test]
fn reproduce_examples() {
    for name in ["rpartite", "ag23", "pg33", "ag23-sharpness"] {
        let o = scx(&["reproduce", name]);
        assert_eq!(o.status.code(), Some(0), "{name}: {}", stdout(&o));
    }
}
