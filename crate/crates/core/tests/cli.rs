use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coreindex")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compute_lollipop() {
    let g6 = {
        let o = run(&["gen", "lollipop:n=6,g=3"]);
        stdout(&o).trim().to_string()
    };
    let o = run(&["compute", "--g6", &g6]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("F: 37"), "{text}");
    assert!(text.contains("wiener:"));
}

#[test]
fn compute_from_edge_list_file() {
    let dir = std::env::temp_dir().join(format!("coreindex-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("p4.txt");
    std::fs::write(&path, "4 3\n0 1\n1 2\n2 3\n").unwrap();
    let o = run(&["compute", "--edges", path.to_str().unwrap(), "--what", "core"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("core: 1 2"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn parse_error_reports_offset() {
    let o = run(&["compute", "--g6", "D?{!!"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("byte"));
}

#[test]
fn gen_expect_f() {
    let o = run(&["gen", "lollipop:n=9,g=4", "pineapple:n=5,g=3", "--expect-F"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.matches(", match").count(), 2, "{text}");
    assert!(text.contains("computed 33"));
}

#[test]
fn scan_trees_both() {
    let o = run(&["scan", "--class", "trees", "--n", "7", "--mode", "both", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["sides"][0]["value"], "28");
    assert_eq!(v["sides"][1]["value"], "70");
    assert_eq!(v["schema_version"], 1);
}

#[test]
fn scan_pendant_free_csv() {
    let o = run(&["scan", "--class", "pendant-free", "--n", "6", "--mode", "min", "--format", "csv"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("class,n,side,role,value,graph6,edges,family"));
    assert_eq!(text.lines().count(), 2);
    assert!(text.contains(",37,"));
}

#[test]
fn worker_count_does_not_change_output() {
    let one = Command::new(env!("CARGO_BIN_EXE_coreindex"))
        .args(["scan", "--class", "unicyclic", "--n", "7", "--format", "json"])
        .env("CORE_INDEX_WORKERS", "1")
        .output()
        .unwrap();
    let three = run(&["scan", "--class", "unicyclic", "--n", "7", "--format", "json", "--workers", "3"]);
    assert_eq!(one.stdout, three.stdout);
}

#[test]
fn verify_crossover() {
    let o = run(&["verify", "lemma-3cycles", "--n", "6..20", "--format", "text"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("[n=16] cycle 257, two triangles 264: the cycle is smaller"), "{text}");
    assert!(text.contains("[n=17] cycle 290, two triangles 289: the cycle is larger"));
}

#[test]
fn verify_list_and_unknown() {
    let o = run(&["verify", "--list"]);
    assert!(o.status.success());
    assert!(stdout(&o).lines().count() >= 40);
    assert_eq!(run(&["verify", "bogus"]).status.code(), Some(2));
}

#[test]
fn unsafe_size_prints_estimate() {
    let o = run(&["--unsafe-size", "scan", "--class", "trees", "--n", "6"]);
    assert!(o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("estimate:"));
    assert_eq!(run(&["scan", "--class", "unicyclic", "--n", "10"]).status.code(), Some(3));
}

#[test]
fn correlate_trees() {
    let o = run(&["correlate", "--class", "trees", "--n", "7", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["spearman"].as_f64().unwrap().is_finite());
}
