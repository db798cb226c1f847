use std::process::{Command, Output};

fn cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polarsample")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn sample_circle_identity() {
    let o = cli(&["sample", "--poly", "x1^2+x2^2-1", "--coords", "identity"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], "CompatibleCompactSmooth");
    assert_eq!(v["points"][1]["exact"], serde_json::json!(["0/1", "1/1"]));
    assert_eq!(v["representation"]["q"], serde_json::json!(["-1/1", "0/1", "1/1"]));
}

#[test]
fn exit_codes() {
    assert_eq!(cli(&["sample", "--poly", "x1^2+x2^2+1"]).status.code(), Some(3));
    assert_eq!(cli(&["sample", "--poly", "x1*x2-1", "--coords", "identity"]).status.code(), Some(3));
    let torus = "(x1^2+x2^2+x3^2+3)^2-16*(x1^2+x2^2)";
    assert_eq!(cli(&["sample", "--poly", torus, "--coords", "identity"]).status.code(), Some(2));
    assert_eq!(cli(&["sample", "--poly", "5", "--nvars", "2"]).status.code(), Some(1));
    assert_eq!(cli(&["sample", "--poly", "x1 + y"]).status.code(), Some(1));
}

#[test]
fn reports_are_byte_identical() {
    let args = ["sample", "--poly", "x1^2+2*x2^2+3*x3^2-1", "--seed", "9"];
    assert_eq!(stdout(&cli(&args)), stdout(&cli(&args)));
}

#[test]
fn other_subcommands() {
    let o = cli(&["realdegree", "--eliminant", "(x1^2-2)*(x1^2+1)", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("real degree = 2"));
    assert_eq!(cli(&["realdegree", "--eliminant", "x1^2+1"]).status.code(), Some(3));

    let o = cli(&["degrees", "--poly", "((x1-2)^2+x2^2-1)*((x1+2)^2+x2^2-1)", "--indices", "1"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["polar"][0]["degree"], 4);
    assert_eq!(v["bezout_bound"], 12);

    let o = cli(&["verify", "--poly", "x1^2+x2^2-1", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("passed true"));

    let o = cli(&["expand", "--poly", "(x1+1)^2", "--format", "text"]);
    assert!(stdout(&o).starts_with("x1^2 + 2*x1 + 1"));
}

#[test]
fn reads_infile() {
    let path = std::env::temp_dir().join(format!("polarsample-cli-{}.txt", std::process::id()));
    std::fs::write(&path, "x1^2+x2^2-1\n").unwrap();
    let o = cli(&["sample", "--infile", path.to_str().unwrap(), "--format", "text"]);
    let _ = std::fs::remove_file(&path);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("CompatibleCompactSmooth"));
}
