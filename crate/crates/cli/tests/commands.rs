use std::io::Write;
use std::process::{Command, Output, Stdio};

use altermatic_cli::formats::{parse_coloring, parse_hypergraph};
use altermatic_core::{complete_uniform, kneser_graph, Coloring};
use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_altermatic"))
}

fn run_with_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    // usage errors exit before reading stdin
    let _ = child.stdin.take().unwrap().write_all(stdin.as_bytes());
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_of(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

fn gen(args: &[&str]) -> String {
    let o = bin().arg("gen").args(args).output().unwrap();
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

fn write_temp(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn petersen_pipeline_gives_three() {
    let h = gen(&["kneser", "-m", "5", "-r", "2"]);
    let o = run_with_stdin(&["chromatic", "-H", "-"], &h);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l == "chi: 3"), "{}", stdout(&o));

    let o = run_with_stdin(&["--json", "chromatic", "-H", "-"], &h);
    let v = json_of(&o);
    assert_eq!(v["results"]["chi"], 3);
    let colors: Vec<usize> = v["results"]["coloring"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_u64().unwrap() as usize)
        .collect();
    let g = kneser_graph(&complete_uniform(5, 2).unwrap());
    assert!(altermatic_core::is_proper(&g, &Coloring::from_assignment(colors).unwrap()).unwrap());
}

#[test]
fn chromatic_writes_coloring_file() {
    let dir = tempfile::tempdir().unwrap();
    let hp = write_temp(&dir, "h.txt", &gen(&["schrijver", "-m", "6", "-r", "2"]));
    let cp = dir.path().join("c.txt");
    let o = bin().args(["chromatic", "-H", &hp, "-o", cp.to_str().unwrap()]).output().unwrap();
    assert!(o.status.success());
    let h = parse_hypergraph(&std::fs::read_to_string(&hp).unwrap(), "h", 63).unwrap();
    let c = parse_coloring(&std::fs::read_to_string(&cp).unwrap(), "c", h.edge_count()).unwrap();
    assert_eq!(c.palette(), 4);
    assert!(altermatic_core::is_proper(&kneser_graph(&h), &c).unwrap());
}

#[test]
fn altbound_petersen_exhaustive() {
    let h = gen(&["kneser", "-m", "5", "-r", "2"]);
    let v = json_of(&run_with_stdin(&["altbound", "-H", "-", "-k", "1", "--exhaustive", "--json"], &h));
    assert_eq!(v["results"]["alt"], 2);
    assert_eq!(v["results"]["lower_bound"], 3);
    assert_eq!(v["results"]["sigma_mode"], "exhaustive");
}

#[test]
fn altbound_sampled_is_seeded_and_flagged() {
    let h = gen(&["random", "-n", "10", "-e", "14", "--sizes", "2..4", "--seed", "3"]);
    let args = ["--json", "altbound", "-H", "-", "-k", "2", "--samples", "5", "--seed", "9"];
    let a = json_of(&run_with_stdin(&args, &h));
    let b = json_of(&run_with_stdin(&args, &h));
    assert_eq!(a["results"], b["results"]);
    assert_eq!(a["seed"], 9);
    assert_eq!(a["results"]["sigma_mode"], "sampled");
    assert_eq!(a["results"]["orderings_searched"], 6);
}

#[test]
fn altsigma_with_explicit_order() {
    let h = gen(&["kneser", "-m", "6", "-r", "2"]);
    let v = json_of(&run_with_stdin(&["--json", "altsigma", "-H", "-", "-k", "1", "--sigma", "6 2 4 1 5 3"], &h));
    assert_eq!(v["results"]["alt"], 2);
    assert_eq!(v["results"]["bound"], 4);
    assert_eq!(v["results"]["sigma"], serde_json::json!([6, 2, 4, 1, 5, 3]));
    assert_eq!(v["results"]["sigma_mode"], "single");

    let o = run_with_stdin(&["altsigma", "-H", "-", "-k", "1", "--sigma", "1 2 3"], &h);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_exit_code_reflects_holds() {
    let h = gen(&["kneser", "-m", "6", "-r", "2"]);
    let o = run_with_stdin(&["--json", "verify", "-H", "-", "-k", "1"], &h);
    assert_eq!(o.status.code(), Some(0));
    let v = json_of(&o);
    assert_eq!(v["results"]["holds"], true);
    assert_eq!(v["results"]["tight"], true);
    assert_eq!(v["results"]["chi"], 4);
    assert_eq!(v["results"]["repro"], Value::Null);
}

#[test]
fn audit_all_ones_on_kg42_finds_complementary_pair() {
    let dir = tempfile::tempdir().unwrap();
    let hp = write_temp(&dir, "h.txt", &gen(&["kneser", "-m", "4", "-r", "2"]));
    let cp = write_temp(&dir, "c.txt", "1\n1\n1\n1\n1\n1\n");
    let o = bin().args(["--json", "audit", "-H", &hp, "-k", "1", "-c", &cp]).output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    let v = json_of(&o);
    let r = &v["results"]["result"];
    assert_eq!(r["outcome"], "witness");
    assert_eq!(r["verified"], true);
    let mut all: Vec<u64> = ["edge_a", "edge_b"]
        .iter()
        .flat_map(|k| r[k]["vertices"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()))
        .collect();
    all.sort();
    assert_eq!(all, vec![1, 2, 3, 4]);
    assert_eq!(v["inputs"].as_array().unwrap().len(), 2);
}

#[test]
fn audit_accepts_optimal_coloring() {
    let dir = tempfile::tempdir().unwrap();
    let hp = write_temp(&dir, "h.txt", &gen(&["kneser", "-m", "5", "-r", "2"]));
    let cp = dir.path().join("c.txt");
    assert!(bin().args(["chromatic", "-H", &hp, "-o", cp.to_str().unwrap()]).output().unwrap().status.success());
    let o = bin()
        .args(["audit", "-H", &hp, "-k", "2", "-c", cp.to_str().unwrap(), "--sigma", "5 4 3 2 1"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("result.outcome: proper_within_bound"));
}

#[test]
fn reports_are_reproducible_modulo_timing() {
    let h = gen(&["random", "-n", "7", "-e", "10", "--sizes", "1..3", "--seed", "42"]);
    assert_eq!(h, gen(&["random", "-n", "7", "-e", "10", "--sizes", "1..3", "--seed", "42"]));
    let strip = |o: Output| -> String {
        stdout(&o).lines().filter(|l| !l.starts_with("elapsed_ms")).collect::<Vec<_>>().join("\n")
    };
    let a = strip(run_with_stdin(&["verify", "-H", "-", "-k", "2"], &h));
    let b = strip(run_with_stdin(&["verify", "-H", "-", "-k", "2"], &h));
    assert_eq!(a, b);
    let c = strip(run_with_stdin(&["--sequential", "verify", "-H", "-", "-k", "2"], &h));
    assert_eq!(a.replace("--sequential ", ""), c.replace("--sequential ", ""));
}

#[test]
fn usage_errors_exit_two() {
    let h = gen(&["kneser", "-m", "4", "-r", "2"]);
    for args in [
        vec!["altbound", "-H", "-", "-k", "1", "--exhaustive", "--samples", "4"],
        vec!["altbound", "-H", "-", "-k", "1", "--seed", "4"],
        vec!["chromatic", "-H", "-", "--bogus"],
        vec!["frobnicate"],
        vec!["altsigma", "-H", "-", "-k", "0"],
        vec!["audit", "-H", "-", "-k", "1", "-c", "-"],
    ] {
        let o = run_with_stdin(&args, &h);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
    let o = bin().args(["gen", "random", "-n", "4", "-e", "2", "--sizes", "3..2", "--seed", "1"]).output().unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn parse_errors_exit_two_with_line_numbers() {
    let cases = [
        ("n 3\n1 2\n2 1\n", ":3:"),
        ("1 2\n", ":1:"),
        ("n 3\n\n1 4\n", ":3:"),
        ("# c\nn 3\n1\n{}\n", ":4:"),
    ];
    for (text, needle) in cases {
        let o = run_with_stdin(&["chromatic", "-H", "-"], text);
        assert_eq!(o.status.code(), Some(2), "{text:?}");
        let err = String::from_utf8_lossy(&o.stderr);
        assert!(err.contains(needle), "{text:?}: {err}");
    }
    let dir = tempfile::tempdir().unwrap();
    let hp = write_temp(&dir, "h.txt", "n 4\n1 2\n3 4\n2 3\n");
    for bad in ["1\n1\n", "0\n1\n1\n", "1\nx\n1\n"] {
        let cp = write_temp(&dir, "c.txt", bad);
        let o = bin().args(["audit", "-H", &hp, "-k", "1", "-c", &cp]).output().unwrap();
        assert_eq!(o.status.code(), Some(2), "{bad:?}");
    }
    let o = bin().args(["chromatic", "-H", "/nonexistent/h.txt"]).output().unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn resource_caps_exit_three() {
    let h = gen(&["random", "-n", "9", "-e", "6", "--sizes", "1..2", "--seed", "1"]);
    let o = run_with_stdin(&["altbound", "-H", "-", "-k", "1", "--exhaustive"], &h);
    assert_eq!(o.status.code(), Some(3));

    let mut child = bin()
        .env("ALTERMATIC_N_CAP", "5")
        .args(["chromatic", "-H", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let _ = child.stdin.take().unwrap().write_all(h.as_bytes());
    assert_eq!(child.wait_with_output().unwrap().status.code(), Some(3));

    let dir = tempfile::tempdir().unwrap();
    let hp = write_temp(&dir, "h.txt", &gen(&["kneser", "-m", "6", "-r", "2"]));
    let cp = write_temp(&dir, "c.txt", &"1\n".repeat(15));
    let o = bin().args(["audit", "-H", &hp, "-k", "1", "-c", &cp, "--step-cap", "2"]).output().unwrap();
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn selftest_passes() {
    let o = bin().args(["--json", "selftest"]).output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json_of(&o)["results"]["failed"], 0);
}

#[test]
fn in_process_run_matches_binary() {
    let h = gen(&["kneser", "-m", "5", "-r", "2"]);
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = altermatic_cli::run(["altermatic", "chromatic", "-H", "-"], &mut h.as_bytes(), &mut out, &mut err);
    assert_eq!(code, 0);
    assert!(String::from_utf8(out).unwrap().contains("chi: 3\n"));
}
