use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use tempfile::TempDir;

const K3: &str = r#"{"n":3,"edges":[[0,1],[0,2],[1,2]]}"#;
const K4: &str = r#"{"n":4,"edges":[[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]}"#;
const K5: &str =
    r#"{"n":5,"edges":[[0,1],[0,2],[0,3],[0,4],[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]]}"#;

struct Workspace {
    dir: TempDir,
}

impl Workspace {
    fn new() -> Self {
        Workspace { dir: tempfile::tempdir().unwrap() }
    }

    fn file(&self, name: &str, contents: &str) -> PathBuf {
        let path = self.dir.path().join(name);
        std::fs::write(&path, contents).unwrap();
        path
    }
}

fn cutpoly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cutpoly")).args(args).output().unwrap()
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

fn report(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn check_normal_on_k4() {
    let w = Workspace::new();
    let g = w.file("k4.json", K4);
    let r = report(&cutpoly(&["check-normal", "--graph", p(&g), "--kmax", "3"]));
    assert_eq!(r["command"], "check-normal");
    assert_eq!(r["result"], json!({"verdict": "normal_up_to", "k": 3}));
}

#[test]
fn decompose_all_twos_on_a_triangle() {
    let w = Workspace::new();
    let g = w.file("k3.json", K3);
    let pt = w.file("p222.json", r#"{"k":3,"x":[2,2,2]}"#);
    let r = report(&cutpoly(&["decompose", "--graph", p(&g), "--point", p(&pt), "--k", "3"]));
    let cuts = r["result"]["cuts"].as_array().unwrap();
    assert_eq!(cuts.len(), 3);
    let mut total = [0i64; 3];
    for (u, v, e) in [(0usize, 1usize, 0usize), (0, 2, 1), (1, 2, 2)] {
        for c in cuts {
            let side: Vec<u64> = c.as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect();
            let has = |x: usize| side.contains(&(x as u64));
            total[e] += i64::from(has(u) != has(v));
        }
    }
    assert_eq!(total, [2, 2, 2]);
}

#[test]
fn odd_triangle_point_is_rejected() {
    let w = Workspace::new();
    let g = w.file("k3.json", K3);
    let pt = w.file("p111.json", r#"{"k":3,"x":[1,1,1]}"#);
    let out = cutpoly(&["decompose", "--graph", p(&g), "--point", p(&pt), "--k", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not in lattice"));
    assert!(out.stdout.is_empty());
}

#[test]
fn invalid_inputs_exit_with_two() {
    let w = Workspace::new();
    let g = w.file("k3.json", K3);
    let looped = w.file("loop.json", r#"{"n":2,"edges":[[0,0]]}"#);
    let short = w.file("short.json", r#"{"k":2,"x":[2,2]}"#);
    let k5 = w.file("k5.json", K5);
    let zero = w.file("zero.json", r#"{"k":1,"x":[0,0,0,0,0,0,0,0,0,0]}"#);
    for args in [
        vec!["cuts", "--graph", p(&looped)],
        vec!["lattice", "--graph", p(&g), "--point", p(&short)],
        vec!["decompose", "--graph", p(&k5), "--point", p(&zero)],
        vec!["cuts", "--graph", "/nonexistent/graph.json"],
        vec!["cuts", "--graph", p(&g), "--no-such-flag"],
        vec!["frobnicate"],
    ] {
        assert_eq!(cutpoly(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn resource_limits_exit_with_three() {
    let w = Workspace::new();
    let g = w.file("k4.json", K4);
    let out = cutpoly(&["cuts", "--graph", p(&g), "--limit-vertices", "3"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn negative_verdicts_exit_zero_unless_requested() {
    let w = Workspace::new();
    let g = w.file("k5.json", K5);
    let args = ["minor-k5", "--graph", p(&g)];
    let r = report(&cutpoly(&args));
    assert_eq!(r["result"]["verdict"], "minor_found");
    let out = cutpoly(&[&args[..], &["--fail-on", "minor_found"]].concat());
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn reports_embed_input_digests() {
    let w = Workspace::new();
    let g = w.file("k3.json", K3);
    let pt = w.file("p.json", r#"{"k":2,"x":[2,2,0]}"#);
    let r = report(&cutpoly(&["lattice", "--graph", p(&g), "--point", p(&pt)]));
    let hex = |s: &str| hex::encode(Sha256::digest(s.as_bytes()));
    assert_eq!(r["inputs"]["graph_sha256"], hex(K3));
    assert_eq!(r["inputs"]["point_sha256"], hex(r#"{"k":2,"x":[2,2,0]}"#));
    assert_eq!(r["result"]["membership"]["in_lattice"], true);
}

#[test]
fn text_graph_format_is_accepted() {
    let w = Workspace::new();
    let g = w.file("k3.txt", "c triangle\np cut 3 3\ne 0 1\ne 0 2\ne 1 2\n");
    let r = report(&cutpoly(&["cuts", "--graph", p(&g)]));
    assert_eq!(r["result"]["count"], 4);
    assert_eq!(r["result"]["cuts"][1]["vector"], json!([1, 0, 1]));
}

#[test]
fn small_scans_find_no_gaps() {
    let r = report(&cutpoly(&["conjecture-scan", "--max-n", "4", "--kmax", "3"]));
    let t = &r["result"]["table"];
    assert_eq!(t["no_minor_without_gap"], r["result"]["graphs"]);
    assert_eq!(t["minor_with_gap"], 0);

    let r = report(&cutpoly(&["conjecture-scan", "--max-n", "5", "--kmax", "2"]));
    let rows = r["result"]["rows"].as_array().unwrap();
    let k5 = rows.iter().find(|row| row["edges"].as_array().unwrap().len() == 10).unwrap();
    assert_eq!(k5["k5_minor"], true);
}

#[test]
fn planar_scan_has_no_gaps() {
    let r = report(&cutpoly(&["conjecture-scan", "--max-n", "5", "--planar-only"]));
    let t = &r["result"]["table"];
    assert_eq!(t["no_minor_with_gap"], 0);
    assert_eq!(t["minor_with_gap"], 0);
    assert_eq!(t["skipped"], 0);
}

#[test]
fn output_is_identical_across_runs_and_worker_counts() {
    let w = Workspace::new();
    let g = w.file("k5.json", K5);
    let args = ["gaps", "--graph", p(&g), "--kmax", "4"];
    let runs: Vec<Vec<u8>> = ["1", "4", "1", "0"]
        .iter()
        .map(|n| {
            let out = cutpoly(&[&args[..], &["--workers", n]].concat());
            assert!(out.status.success());
            out.stdout
        })
        .collect();
    assert!(runs.windows(2).all(|w| w[0] == w[1]));
    let sampled = |workers: &str| {
        cutpoly(&["conjecture-scan", "--max-n", "6", "--kmax", "2", "--sample", "8", "--seed", "3", "--workers", workers]).stdout
    };
    assert_eq!(sampled("1"), sampled("3"));
}
