use std::process::{Command, Output};

fn braidforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidforge"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = braidforge(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn count_examples() {
    assert_eq!(
        stdout(&["count", "--family", "s", "--n", "5"]),
        "n,i,value\n5,0,1\n5,1,4\n5,2,9\n5,3,12\n5,4,8\n"
    );
    assert_eq!(
        stdout(&["count", "--family", "b", "--n", "3", "--k", "4"]),
        "n,i,value\n3,4,12\n"
    );
    assert_eq!(
        stdout(&["count", "--family", "fib", "--k", "11"]),
        "k,value\n11,89\n"
    );
    assert_eq!(
        stdout(&["count", "--family", "d", "--n", "4", "--k", "3"]),
        "n,i,value\n4,3,6\n"
    );
    assert_eq!(
        stdout(&["count", "--family", "c", "--n", "6"]),
        "n,i,value\n6,0,1\n6,1,1\n6,2,2\n6,3,3\n6,4,3\n6,5,1\n"
    );
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["count", "--family", "bplus", "--format", "json"])).unwrap();
    let values: Vec<u64> = json
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["value"].as_u64().unwrap())
        .collect();
    assert_eq!(values, [1, 2, 4, 6, 10, 16, 26, 42, 68]);
}

#[test]
fn enumerate_examples() {
    assert_eq!(
        stdout(&["enumerate", "simple", "--n", "3"]).lines().count(),
        1 + 5
    );
    assert_eq!(
        stdout(&["enumerate", "divisors", "--n", "2"]),
        "word,length\ne,0\n1,1\n"
    );
    let classes = stdout(&["enumerate", "classes", "--n", "4"]);
    let parts: Vec<String> = csv::Reader::from_reader(classes.as_bytes())
        .records()
        .map(|r| r.unwrap()[0].to_string())
        .collect();
    assert_eq!(parts, ["()", "(2)", "(3)", "(2,2)", "(4)"]);
    assert_eq!(
        stdout(&["enumerate", "words", "--n", "3", "--k", "2"])
            .lines()
            .count(),
        1 + 4
    );
}

#[test]
fn divisors_and_simple_json() {
    let d: serde_json::Value = serde_json::from_str(&stdout(&["divisors", "--n", "3"])).unwrap();
    assert_eq!(d.as_array().unwrap().len(), 6);
    assert!(d
        .as_array()
        .unwrap()
        .iter()
        .any(|r| r["word"] == "1,2,1" && r["length"] == 3));
    let s: serde_json::Value = serde_json::from_str(&stdout(&["simple", "--n", "4"])).unwrap();
    assert_eq!(s.as_array().unwrap().len(), 13);
    let c: serde_json::Value =
        serde_json::from_str(&stdout(&["simple", "--n", "5", "--classes"])).unwrap();
    assert_eq!(c.as_array().unwrap().len(), 7);
}

#[test]
fn canon_command() {
    assert_eq!(stdout(&["canon", "2,1,2"]), "1,2,1\n");
    assert_eq!(stdout(&["canon", "e", "--n", "3"]), "e\n");
    assert_eq!(stdout(&["canon", "3,1", "--n", "4"]), "1,3\n");
    let out = braidforge(&["canon", "1,2,1,2,1,2,1,2,1,2,1,2", "--max-class-size", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn graph_exports_and_checks() {
    assert!(stdout(&["graph", "--n", "2"]).contains("\"e\" -- \"1\";"));
    let dot = stdout(&["graph", "--n", "4", "--format", "dot"]);
    assert_eq!(dot.matches("rank=same").count(), 4);
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["graph", "--n", "3", "--format", "json"])).unwrap();
    assert_eq!(json["vertices"].as_array().unwrap().len(), 5);
    assert_eq!(json["edges"].as_array().unwrap().len(), 4);

    let dir = std::env::temp_dir().join(format!("braidforge-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("g7.dot");
    let report: serde_json::Value = serde_json::from_str(&stdout(&[
        "graph",
        "--n",
        "7",
        "--check",
        "planarity",
        "--out",
        file.to_str().unwrap(),
    ]))
    .unwrap();
    assert_eq!(report["claimed"], false);
    assert_eq!(report["computed"], false);
    assert_eq!(report["certificate_valid"], true);
    assert!(std::fs::read_to_string(&file)
        .unwrap()
        .starts_with("graph simple_braids_7 {"));
    std::fs::remove_dir_all(&dir).unwrap();

    for check in ["partite", "connected"] {
        let r: serde_json::Value =
            serde_json::from_str(&stdout(&["graph", "--n", "5", "--check", check])).unwrap();
        assert_eq!(r["computed"], true);
    }
    let k33: serde_json::Value =
        serde_json::from_str(&stdout(&["graph", "--n", "7", "--check", "k33"])).unwrap();
    assert_eq!(k33["witness"]["paths"].as_array().unwrap().len(), 9);
    assert_eq!(
        braidforge(&["graph", "--n", "6", "--check", "k33"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn verify_scopes() {
    let r: serde_json::Value = serde_json::from_str(&stdout(&[
        "verify", "--scope", "counting", "--nmax", "8", "--kmax", "8",
    ]))
    .unwrap();
    assert_eq!(r["summary"]["fail"], 0);
    assert_eq!(r["summary"]["erratum_confirmed"], 2);
    let r: serde_json::Value =
        serde_json::from_str(&stdout(&["verify", "--scope", "graph", "--nmax", "7"])).unwrap();
    let planarity = r["entries"]
        .as_array()
        .unwrap()
        .iter()
        .find(|e| e["id"] == "graph-planarity")
        .unwrap();
    assert_eq!(planarity["status"], "pass");
    let r: serde_json::Value =
        serde_json::from_str(&stdout(&["verify", "--scope", "garside", "--nmax", "4"])).unwrap();
    assert_eq!(r["summary"]["fail"], 0);
}

#[test]
fn invalid_arguments_exit_2() {
    assert_eq!(
        braidforge(&["count", "--family", "zz"]).status.code(),
        Some(2)
    );
    assert_eq!(
        braidforge(&["count", "--family", "b", "--n", "4"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        braidforge(&["canon", "1,9", "--n", "3"]).status.code(),
        Some(2)
    );
    assert_eq!(
        braidforge(&["count", "--family", "s", "--n", "5", "--format", "xml"])
            .status
            .code(),
        Some(2)
    );
}
