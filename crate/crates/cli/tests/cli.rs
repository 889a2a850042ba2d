use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use tempfile::TempDir;

fn l21(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_l21"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn key<'a>(out: &'a str, k: &str) -> Option<&'a str> {
    out.lines()
        .find_map(|l| l.strip_prefix("k ")?.strip_prefix(k)?.strip_prefix(' '))
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p: PathBuf = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn generated(dir: &TempDir, name: &str, family: &[&str]) -> String {
    let mut args = vec!["generate"];
    args.extend_from_slice(family);
    let o = l21(&args);
    assert!(o.status.success());
    write(dir, name, &stdout(&o))
}

#[test]
fn petersen_with_ten_labels() {
    let dir = TempDir::new().unwrap();
    let g = generated(&dir, "p.txt", &["petersen"]);
    let o = l21(&["label", &g, "--span-budget", "10"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(key(&out, "span"), Some("9"));
    assert_eq!(key(&out, "valid"), Some("true"));
    assert_eq!(key(&out, "method"), Some("budget"));
    assert_eq!(key(&out, "L"), Some("10"));
    assert_eq!(out.lines().filter(|l| l.starts_with("l ")).count(), 10);

    // the emitted labeling passes verify, including its span record
    let labels = write(&dir, "f.txt", &out);
    let o = l21(&["verify", &g, &labels]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(key(&stdout(&o), "span_record"), Some("ok"));
}

#[test]
fn single_edge_fails_the_order_condition() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "k2.txt", "p edge 2 1\ne 1 2\n");
    let o = l21(&["label", &g, "--span-budget", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(key(&stdout(&o), "precondition"), Some("order"));
}

#[test]
fn bad_labeling_lists_violations() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "p3.txt", "p edge 3 2\ne 1 2\ne 2 3\n");
    let f = write(&dir, "f.txt", "l 1 0\nl 2 1\nl 3 0\n");
    let o = l21(&["verify", &g, &f]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert_eq!(key(&out, "valid"), Some("false"));
    let v: Vec<&str> = out.lines().filter(|l| l.starts_with("v ")).collect();
    assert_eq!(
        v,
        [
            "v 1 2 adjacent 2 1",
            "v 1 3 distance-two 1 0",
            "v 2 3 adjacent 2 1"
        ]
    );
}

#[test]
fn span_record_is_cross_checked() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "k2.txt", "p edge 2 1\ne 1 2\n");
    let f = write(&dir, "f.txt", "l 1 5\nl 2 7\ns 3\n");
    let o = l21(&["verify", &g, &f]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(key(&stdout(&o), "span_record"), Some("mismatch"));
}

#[test]
fn weighted_instances() {
    let dir = TempDir::new().unwrap();
    let inst = write(&dir, "i.txt", "p ghedge 3 3\ne 1 2 2\ne 2 3 2\ne 1 3 1\n");
    let o = l21(&["exact", &inst, "--gh"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(key(&stdout(&o), "span"), Some("3"));
    let f = write(&dir, "f.txt", "l 1 0\nl 2 2\nl 3 1\n");
    let o = l21(&["verify", &inst, &f, "--gh"]);
    assert_eq!(key(&stdout(&o), "valid"), Some("false"));
    assert!(stdout(&o).contains("v 2 3 weight-2 2 1"));
}

#[test]
fn exact_budget() {
    let dir = TempDir::new().unwrap();
    let c7 = generated(&dir, "c7.txt", &["cycle", "7"]);
    let o = l21(&["exact", &c7, "--budget", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(key(&stdout(&o), "result"), Some("infeasible"));
    let o = l21(&["exact", &c7, "--budget", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(key(&stdout(&o), "span"), Some("4"));
}

#[test]
fn auto_budget_and_bounds() {
    let dir = TempDir::new().unwrap();
    let g = generated(&dir, "p.txt", &["petersen"]);
    let o = l21(&["label", &g, "--auto"]);
    assert_eq!(key(&stdout(&o), "L"), Some("10"));
    let o = l21(&["bounds", &g]);
    let out = stdout(&o);
    assert_eq!(key(&out, "least_admissible_L"), Some("10"));
    assert!(out.contains("b 10 13 true"));
    assert!(out.contains("b 12 17 true"));
}

#[test]
fn baselines_and_injective() {
    let dir = TempDir::new().unwrap();
    let g = generated(&dir, "k3.txt", &["complete", "3"]);
    for m in ["first-fit", "chang-kuo"] {
        let o = l21(&["baseline", &g, "--method", m]);
        let out = stdout(&o);
        assert_eq!(key(&out, "method"), Some(m));
        assert_eq!(key(&out, "span"), Some("4"));
    }
    let p = generated(&dir, "p.txt", &["petersen"]);
    let o = l21(&["injective", &p]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(key(&stdout(&o), "span"), Some("9"));
}

#[test]
fn info_and_transforms() {
    let dir = TempDir::new().unwrap();
    let g = generated(&dir, "e.txt", &["erdos", "2"]);
    let out = stdout(&l21(&["info", &g]));
    assert_eq!(key(&out, "n"), Some("8"));
    assert_eq!(key(&out, "max_degree"), Some("3"));
    assert_eq!(key(&out, "diameter"), Some("2"));
    let p3 = write(&dir, "p3.txt", "p edge 3 2\ne 1 2\ne 2 3\n");
    assert_eq!(
        stdout(&l21(&["square", &p3])),
        "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n"
    );
    assert_eq!(stdout(&l21(&["complement", &p3])), "p edge 3 1\ne 1 3\n");
}

#[test]
fn seeded_generation_is_reproducible() {
    let a = stdout(&l21(&["generate", "random-tree", "12", "--seed", "7"]));
    let b = stdout(&l21(&["generate", "random-tree", "12", "--seed", "7"]));
    assert_eq!(a, b);
    assert!(a.starts_with("p edge 12 11\n"));
}

#[test]
fn input_errors_exit_two() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "loop.txt", "p edge 2 1\ne 1 1\n");
    let o = l21(&["info", &g]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    let o = l21(&["info", "/nonexistent/graph"]);
    assert_eq!(o.status.code(), Some(2));
    let k2 = write(&dir, "k2.txt", "p edge 2 1\ne 1 2\n");
    let partial = write(&dir, "f.txt", "l 1 0\n");
    assert_eq!(l21(&["verify", &k2, &partial]).status.code(), Some(2));
    assert_eq!(l21(&["generate", "polarity", "6"]).status.code(), Some(2));
}
