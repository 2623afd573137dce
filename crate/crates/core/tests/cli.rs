use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: Option<&[u8]>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_resilat"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or_default()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn check_reads_stdin() {
    let l3 = run(&["examples", "lukasiewicz-3"], None);
    let o = run(&["check", "-", "--as", "basic-algebra"], Some(&l3.stdout));
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn mo2_pipeline_classifies_the_groupoid() {
    let mo2 = run(&["examples", "mo2"], None);
    let g = run(
        &["transform", "-", "--to", "rrl-groupoid"],
        Some(&mo2.stdout),
    );
    assert_eq!(code(&g), 0);
    let o = run(&["classify", "-", "--json"], Some(&g.stdout));
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let props = &v["report"]["properties"];
    assert_eq!(props["lukasiewicz_type"]["status"], "holds");
    assert_eq!(props["commutative"]["status"], "fails");
    assert_eq!(
        props["commutative"]["witness"],
        serde_json::json!(["a", "b"])
    );
}

#[test]
fn transform_records_provenance() {
    let o = run(
        &["transform", "lukasiewicz-3", "--to", "implication-reduct"],
        None,
    );
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["kind"], "implication-reduct");
    assert_eq!(v["provenance"]["source_kind"], "basic-algebra");
    assert_eq!(v["provenance"]["steps"].as_array().unwrap().len(), 1);
}

#[test]
fn godel_chain_has_no_basic_algebra() {
    let o = run(&["transform", "godel-3", "--to", "basic-algebra"], None);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("not of Łukasiewicz type"));
}

#[test]
fn invalid_file_reports_a_witness() {
    let text =
        stdout(&run(&["examples", "c2"], None)).replacen(r#"["1", "1"]"#, r#"["0", "0"]"#, 1);
    let o = run(&["check", "-"], Some(text.as_bytes()));
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("invalid"));
}

#[test]
fn usage_and_io_exit_codes() {
    assert_eq!(code(&run(&["transform", "c2", "--to", "nelson"], None)), 2);
    assert_eq!(code(&run(&["roundtrip", "o6"], None)), 2);
    assert_eq!(code(&run(&["check", "-"], Some(b"{not json"))), 2);
    assert_eq!(code(&run(&["frobnicate"], None)), 2);
    assert_eq!(code(&run(&["classify", "/nonexistent/file.json"], None)), 3);
}

#[test]
fn roundtrips_on_the_corpus() {
    for name in [
        "c2",
        "lukasiewicz-3",
        "lukasiewicz-4",
        "boolean-4",
        "n5-involution",
        "mo2",
    ] {
        let o = run(&["roundtrip", name], None);
        assert_eq!(code(&o), 0, "{name}: {}", stdout(&o));
    }
    assert_ne!(code(&run(&["roundtrip", "godel-3"], None)), 0);
}

#[test]
fn enumerate_counts() {
    let o = run(
        &[
            "enumerate",
            "--kind",
            "lattice",
            "--size",
            "1..5",
            "--count-only",
        ],
        None,
    );
    let counts: Vec<String> = stdout(&o)
        .lines()
        .map(|l| l.rsplit(' ').next().unwrap().to_string())
        .collect();
    assert_eq!(counts, ["1", "1", "1", "2", "5"]);
    let o = run(
        &[
            "enumerate",
            "--kind",
            "basic-algebra",
            "--size",
            "3",
            "--count-only",
        ],
        None,
    );
    assert_eq!(stdout(&o), "basic-algebra 3 1\n");
}

#[test]
fn size_cap_comes_from_the_environment() {
    let over = Command::new(env!("CARGO_BIN_EXE_resilat"))
        .args([
            "enumerate",
            "--kind",
            "lattice",
            "--size",
            "4",
            "--count-only",
        ])
        .env("RESILAT_SIZE_CAP", "3")
        .output()
        .unwrap();
    assert_eq!(code(&over), 2);
}

#[test]
fn census_is_csv() {
    let o = run(
        &[
            "enumerate",
            "--kind",
            "rrl-groupoid",
            "--size",
            "3",
            "--census",
        ],
        None,
    );
    let text = stdout(&o);
    assert!(text.starts_with("kind,size,flag,count\nrrl-groupoid,3,total,6\n"));
}

#[test]
fn congruence_report_of_the_three_chain() {
    let o = run(
        &[
            "congruence",
            "lukasiewicz-3",
            "--report",
            "permutability",
            "--json",
        ],
        None,
    );
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["congruences"].as_array().unwrap().len(), 2);
    assert_eq!(v["permutable"], true);
    assert!(v.get("regularity").is_none());
}

#[test]
fn examples_lists_every_built_in() {
    let o = run(&["examples"], None);
    assert_eq!(stdout(&o).lines().count(), 9);
    assert_eq!(code(&run(&["examples", "nope"], None)), 2);
}

#[test]
fn json_is_stable_across_thread_counts() {
    let a = run(
        &[
            "--jobs",
            "1",
            "enumerate",
            "--kind",
            "rrl-groupoid",
            "--size",
            "4",
            "--census",
            "--json",
        ],
        None,
    );
    let b = run(
        &[
            "--jobs",
            "4",
            "enumerate",
            "--kind",
            "rrl-groupoid",
            "--size",
            "4",
            "--census",
            "--json",
        ],
        None,
    );
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}
