//! CLI-level acceptance: the worked examples through the real binary, and
//! byte-identical output across consecutive runs (criterion 10).

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_modlink"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

fn temp_file(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("modlink-test-{}-{name}", std::process::id()));
    p
}

#[test]
fn criterion_01_cli_reproduces_worked_examples() {
    let xy = stdout(&["xy", "--slope", "5/2"]);
    assert!(xy.contains("word: YXXYXXX"), "{xy}");
    assert!(xy.contains("admissible: true"));
    assert!(xy.contains("k: 2"));

    let lr = stdout(&["lr-from-xy", "YXXYXXYXYXX", "--case", "same"]);
    assert!(lr.contains("word: LLRRLLRRLRLLRR"), "{lr}");

    let bounds = stdout(&["bounds", "L^10R^2L^10R^2L^10R^6", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&bounds).expect("valid json");
    let out = &v["output"];
    assert_eq!(out["distinct_l_exponents"].as_array().unwrap().len(), 1);
    assert_eq!(out["distinct_r_exponents"].as_array().unwrap().len(), 2);
    assert_eq!(out["labelled_l_exponents"].as_array().unwrap().len(), 3);
    assert_eq!(out["labelled_r_exponents"].as_array().unwrap().len(), 3);
    assert_eq!(out["max_l_exponent_set"], serde_json::json!([10]));
    assert_eq!(out["max_r_exponent_set"], serde_json::json!([6]));
    assert_eq!(out["lower_thm"]["coefficient"], "1/6");

    println!("criterion 1 (CLI worked examples): PASS");
}

#[test]
fn criterion_10_byte_identical_runs() {
    let links = temp_file("links.txt");
    std::fs::write(
        &links,
        "# sample\nL^10R^2L^10R^2L^10R^6\nL^20R^3L^20R^3L^20R^9\nLR,L^7RLR\n",
    )
    .unwrap();
    let links_arg = links.to_str().unwrap().to_string();

    let golden: Vec<Vec<String>> = vec![
        vec!["parse".into(), "RL".into()],
        vec![
            "parse".into(),
            "L^10R^2L^10R^2L^10R^6".into(),
            "--json".into(),
        ],
        vec!["bounds".into(), "L^10R^2L^10R^2L^10R^6".into()],
        vec!["bounds".into(), "L^13RL^7RLR".into(), "--json".into()],
        vec!["xy".into(), "--slope".into(), "5/2".into()],
        vec!["xy".into(), "--slope".into(), "7/4".into(), "--json".into()],
        vec![
            "lr-from-xy".into(),
            "YXXYXXYXYXX".into(),
            "--case".into(),
            "same".into(),
        ],
        vec!["linear".into(), "LLRRLLRRLRLLRR".into()],
        vec![
            "linear".into(),
            "LR^7L".into(),
            "--bound".into(),
            "21".into(),
            "--json".into(),
        ],
        vec![
            "winding".into(),
            "L^10R^2L^10R^2L^10R^6".into(),
            "--json".into(),
        ],
        vec![
            "walk".into(),
            "LR^7L".into(),
            "--center".into(),
            "1,1".into(),
        ],
        vec![
            "walk".into(),
            "R^6".into(),
            "--center".into(),
            "1,0".into(),
            "--json".into(),
        ],
        vec!["annulus".into(), "bBaaBb".into()],
        vec!["annulus".into(), "aBaBaBaba".into(), "--json".into()],
        vec!["classify".into(), "--file".into(), links_arg.clone()],
        vec![
            "classify".into(),
            "--file".into(),
            links_arg.clone(),
            "--json".into(),
        ],
    ];

    for args in &golden {
        let argv: Vec<&str> = args.iter().map(String::as_str).collect();
        let first = run(&argv);
        let second = run(&argv);
        assert!(
            first.status.success(),
            "{argv:?}: {}",
            String::from_utf8_lossy(&first.stderr)
        );
        assert_eq!(first.stdout, second.stdout, "stdout differs for {argv:?}");
        assert_eq!(first.stderr, second.stderr, "stderr differs for {argv:?}");
    }

    // SVG files from consecutive runs are byte-identical.
    let svg_a = temp_file("a.svg");
    let svg_b = temp_file("b.svg");
    stdout(&["walk", "LR^7L", "--svg", svg_a.to_str().unwrap()]);
    stdout(&["walk", "LR^7L", "--svg", svg_b.to_str().unwrap()]);
    let a = std::fs::read(&svg_a).unwrap();
    let b = std::fs::read(&svg_b).unwrap();
    assert!(!a.is_empty());
    assert_eq!(a, b, "SVG output differs between runs");

    for p in [links, svg_a, svg_b] {
        let _ = std::fs::remove_file(p);
    }
    println!(
        "criterion 10 (byte-identical runs, {} commands): PASS",
        golden.len()
    );
}

#[test]
fn json_round_trips_through_generic_parser() {
    for args in [
        vec!["parse", "RRLL", "--json"],
        vec!["bounds", "LR,L^7RLR", "--json"],
        vec!["walk", "LLRR", "--json"],
        vec!["linear", "LR", "--json"],
    ] {
        let text = stdout(&args);
        let v: serde_json::Value = serde_json::from_str(&text).expect("valid json");
        assert!(v["command"].is_string());
        assert!(v["version"].is_string());
        assert!(v["output"].is_object());
    }
}

#[test]
fn exit_codes_follow_contract() {
    // Domain error: exit 1 with the error name on stderr.
    let out = run(&["parse", "LRLR"]);
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("NonPrimitiveWord"), "{stderr}");

    let out = run(&["parse", "LLL"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("SingleLetterWord"));

    let out = run(&["xy", "--slope", "4/2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("NotCoprime"));

    // Usage error: exit 2.
    let out = run(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["parse"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn walk_reports_windings_and_translations() {
    let text = stdout(&["walk", "R^6", "--center", "1,0"]);
    assert!(text.contains("winding(1,0): -1"), "{text}");
    assert!(text.contains("deck-translation: (0,0)"), "{text}");
    assert!(text.contains("closed: true"), "{text}");

    let text = stdout(&["walk", "LR"]);
    assert!(text.contains("deck-translation: (0,1)"), "{text}");

    let text = stdout(&["walk", "LR^7L", "--center", "1,1"]);
    assert!(text.contains("winding(1,1): -1"), "{text}");
    assert!(text.contains("deck-translation: undefined"), "{text}");
}
