use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use freepart::formats::write_graph6;
use freepart::{Graph, LabelledPartition};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_freepart"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn text(b: &[u8]) -> String {
    String::from_utf8(b.to_vec()).unwrap()
}

fn corpus() -> Vec<PathBuf> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data");
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    files
}

#[test]
fn detect_on_p4() {
    let p4 = write_graph6(&Graph::path(4));
    let out = run(&["detect", "--pattern", "2K2"], &p4);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(text(&out.stdout), "free\n");

    let out = run(&["detect", "--pattern", "G2(2,1)"], &p4);
    assert_eq!(out.status.code(), Some(0));
    let w: serde_json::Value = serde_json::from_str(&text(&out.stdout)).unwrap();
    assert_eq!(w["witness"].as_array().unwrap().len(), 4);
}

#[test]
fn bip_matching_on_corpus() {
    for f in corpus() {
        let input = std::fs::read_to_string(&f).unwrap();
        let a: usize = input.split_whitespace().nth(1).unwrap().parse().unwrap();
        let out = run(&["partition", "--mode", "bip-matching", "--params", "3,3"], &input);
        assert_eq!(out.status.code(), Some(0), "{f:?}: {}", text(&out.stderr));
        let p = LabelledPartition::from_json(&text(&out.stdout)).unwrap();
        let tops = p.blocks.iter().filter(|b| b.vertices.iter().all(|&v| v < a)).count();
        assert!(tops <= 8 && p.blocks.len() - tops <= 8);
    }
}

#[test]
fn encode_decode_is_byte_identical() {
    for f in corpus() {
        let input = std::fs::read_to_string(&f).unwrap();
        let code = run(&["encode", "--s", "1"], &input);
        assert_eq!(code.status.code(), Some(0), "{f:?}");
        let back = run(&["decode", "--s", "1"], &text(&code.stdout));
        assert_eq!(text(&back.stdout), input, "{f:?}");
    }
    let wrong_s = run(&["decode", "--s", "2"], "code 1 1 1\n0 : 0\n");
    assert_eq!(wrong_s.status.code(), Some(2));
}

#[test]
fn exit_codes() {
    // 2K2 as a bipartite graph is not 2Λ_1-free.
    let m2 = "bip 2 2\n0 0\n1 1\n";
    let out = run(&["encode", "--s", "1"], m2);
    assert_eq!(out.status.code(), Some(1));
    let err: serde_json::Value = serde_json::from_str(text(&out.stderr).trim()).unwrap();
    assert_eq!(err["contains"], "lambda(2,1)");

    assert_eq!(run(&["detect", "--pattern", "nosuch"], "Ch\n").status.code(), Some(2));
    assert_eq!(run(&["detect", "--pattern", "2K2"], "not graph6 \u{1}\n").status.code(), Some(2));
    assert_eq!(run(&["frobnicate"], "").status.code(), Some(2));
    assert_eq!(run(&["enumerate", "--free", "nK2(2)", "--n", "9"], "").status.code(), Some(3));
    assert_eq!(run(&["detect", "--pattern", "nK2(25)"], "Ch\n").status.code(), Some(3));
    assert_eq!(run(&["detect", "--pattern", "nK2(25)", "--max-nk", "30"], "Ch\n").status.code(), Some(0));
}

#[test]
fn partition_is_fail_closed_on_class_violation() {
    // C5 contains P4, which lies in F_{2,1}.
    let out = run(&["partition", "--mode", "matching", "--params", "2"], &write_graph6(&Graph::cycle(5)));
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
}

#[test]
fn verify_and_files() {
    let dir = std::env::temp_dir().join(format!("freepart-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let graph = dir.join("k4.g6");
    std::fs::write(&graph, write_graph6(&Graph::complete(4))).unwrap();
    let good = dir.join("good.json");
    std::fs::write(&good, r#"{"blocks":[{"kind":"clique","vertices":[0,1,2,3]}],"guarantees":[]}"#).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, r#"{"blocks":[{"kind":"independent","vertices":[0,1,2,3]}],"guarantees":[]}"#).unwrap();
    let report = dir.join("report.json");

    let g = graph.to_str().unwrap();
    let out = run(&["verify", "--k", "1", "--partition", good.to_str().unwrap(), "--in", g, "--out", report.to_str().unwrap()], "");
    assert_eq!(out.status.code(), Some(0));
    let r: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(r["verdict"], true);

    let out = run(&["verify", "--partition", bad.to_str().unwrap(), "--in", g], "");
    assert_eq!(out.status.code(), Some(1));
    let r: serde_json::Value = serde_json::from_str(text(&out.stderr).trim()).unwrap();
    assert_eq!(r["block_failures"][0]["i"], 0);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn enumerate_and_generate_are_deterministic() {
    let out = run(&["enumerate", "--free", "nK2(1)", "--n", "3", "--jobs", "2"], "");
    assert_eq!(text(&out.stdout), "n,count\n1,1\n2,1\n3,1\n");
    let class = "G1(2,1);G2(2,1);G3(2,1);G4(2,1);H1(2,1);H2(2,1);H3(2,1);H4(2,1);nKl(2,2);co-nKl(2,2)";
    let args = ["generate", "--seed", "9", "--free", class, "--n", "9"];
    let first = run(&args, "");
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, run(&args, "").stdout);
    let out = run(&["partition", "--mode", "main", "--params", "2,1,2"], &text(&first.stdout));
    assert_eq!(out.status.code(), Some(0), "{}", text(&out.stderr));
}

#[test]
fn templates() {
    let chain = "bip 3 3\n0 0\n1 0\n1 1\n2 0\n2 1\n2 2\n";
    let out = run(&["template", "--kind", "chain"], chain);
    assert_eq!(out.status.code(), Some(0));
    let t: serde_json::Value = serde_json::from_str(&text(&out.stdout)).unwrap();
    assert!(t["bags_a"].is_array());
    let out = run(&["template", "--kind", "d", "--params", "3,1", "--refine"], chain);
    assert_eq!(out.status.code(), Some(0), "{}", text(&out.stderr));
    let t: serde_json::Value = serde_json::from_str(&text(&out.stdout)).unwrap();
    assert!(t["bags_b"].is_array());
    assert_eq!(run(&["template", "--kind", "d"], chain).status.code(), Some(2));
}
