use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_idealgraph"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn ring_summary() {
    let o = run(&["ring", "Z_16"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("order: 16"));
    assert!(s.contains("local: yes"));
    assert!(s.contains("zero-divisors: 8"));

    let s = stdout(&run(&["ring", "Z_2xZ_2xZ_2"]));
    assert!(s.contains("order: 8"));
    assert!(s.contains("local: no"));
}

#[test]
fn ring_from_spec_file() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("z6.json");
    std::fs::write(&good, idealgraph::ring::RingSpec::zmod(6).to_json()).unwrap();
    let o = run(&["ring", good.to_str().unwrap(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["order"], 6);

    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{ not json").unwrap();
    assert_eq!(run(&["ring", bad.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn ideal_listing() {
    let rows = |ring: &str| {
        stdout(&run(&["ideals", ring, "--format", "csv"]))
            .lines()
            .count()
            - 1
    };
    assert_eq!(rows("Z_6"), 4);
    assert_eq!(rows("F_4"), 2);
    assert_eq!(rows("Z_16"), 5);
    let s = stdout(&run(&["ideals", "Z_16", "--format", "csv"]));
    let sizes: Vec<&str> = s
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap())
        .collect();
    assert_eq!(sizes, ["1", "2", "4", "8", "16"]);
}

#[test]
fn graph_export() {
    let o = run(&["graph", "Z_6xZ_2", "factor:2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["summary"]["vertices"], 6);
    assert_eq!(v["summary"]["edges"], 8);

    let dot = stdout(&run(&["graph", "Z_8", "#1"]));
    assert!(dot.starts_with("// ring Z_8, |I| = 2"));
    assert!(dot.contains("graph G {"));

    let o = run(&["graph", "Z_8", "#2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("prime"));
}

#[test]
fn genus_with_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("cert.json");
    let o = run(&[
        "genus",
        "Z_9xZ_3",
        "factor:2",
        "--output",
        cert.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("genus: 1"));
    let c: idealgraph::genus::EmbeddingCertificate =
        serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    assert_eq!(c.genus, 1);

    let o = run(&["genus", "Z_4xZ_8", "factor:2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["lower"].as_u64().unwrap() >= 2);
}

#[test]
fn genus_of_graph_file() {
    let dir = tempfile::tempdir().unwrap();
    let tree = dir.path().join("tree.json");
    std::fs::write(
        &tree,
        r#"{"vertices": ["a", "b", "c", "d"], "edges": [[0, 1], [0, 2], [0, 3]]}"#,
    )
    .unwrap();
    let o = run(&["genus", "--graph", tree.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("genus: 0"));
}

#[test]
fn verify_exit_codes() {
    let o = run(&["verify", "Diameter3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0 disagreements, 0 inconclusive"));
    assert_eq!(run(&["verify", "NoSuchTheorem"]).status.code(), Some(2));
    // The ω = 3 list leaves out quotients whose graph equals that of Z_16.
    assert_eq!(run(&["verify", "GenusOneClique3"]).status.code(), Some(1));
}

#[test]
fn usage_errors() {
    assert_eq!(
        run(&["--budget", "10", "ring", "Z_4"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["ring", "Q_7"]).status.code(), Some(2));
    assert_eq!(run(&["graph", "Z_8", "#7"]).status.code(), Some(2));
    assert_eq!(
        run(&["ring", "Z_4", "--format", "dot"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&[]).status.code(), Some(2));
}

#[test]
fn atlas_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for p in [&a, &b] {
        let o = run(&[
            "atlas",
            "--max-order",
            "16",
            "--output",
            p.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0));
    }
    let text = std::fs::read_to_string(&a).unwrap();
    assert_eq!(text, std::fs::read_to_string(&b).unwrap());
    assert!(text.starts_with("# idealgraph atlas, format version 1\nring,order,"));
    assert_eq!(text.lines().count(), 222);

    let empty = stdout(&run(&["atlas", "--filter", "no ring has this name"]));
    assert_eq!(empty.lines().count(), 2);
}
