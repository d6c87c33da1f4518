use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use laxcat::classifier::{classifier, classifier_mnd_iso_check};
use laxcat::presentation::io::{parse_presentation, presentation_to_json};
use laxcat::Presentation;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn laxcat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_laxcat")).args(args).env_remove("LAXCAT_MAX_REWRITE_STEPS").output().expect("binary runs")
}

fn run(args: &[&str]) -> (i32, String) {
    let out = laxcat(args);
    (out.status.code().expect("exited"), String::from_utf8(out.stdout).expect("utf-8"))
}

fn path(p: &Path) -> &str {
    p.to_str().expect("utf-8 path")
}

#[test]
fn every_bundled_fixture_checks() {
    let mut seen = 0;
    for entry in std::fs::read_dir(fixture("")).unwrap() {
        let p = entry.unwrap().path();
        if p.extension().is_some_and(|e| e == "json") {
            let (code, out) = run(&["check", path(&p)]);
            assert_eq!(code, 0, "{}:\n{out}", p.display());
            seen += 1;
        }
    }
    assert!(seen >= 8);
}

#[test]
fn broken_composition_table_names_the_triple() {
    let (code, out) = run(&["check", path(&fixture("broken/bad_composite.json"))]);
    assert_eq!(code, 1);
    assert!(out.contains("composite g . f is `f`"), "{out}");
}

#[test]
fn unreadable_input_exits_2() {
    assert_eq!(run(&["check", path(&fixture("broken/not_json.json"))]).0, 2);
    assert_eq!(run(&["check", path(&fixture("missing.json"))]).0, 2);
    assert_eq!(run(&["eq", path(&fixture("mnd.json")), "[nope]", "id(t)"]).0, 2);
}

#[test]
fn failing_law_exits_1() {
    let (code, out) = run(&["beck", "--law", path(&fixture("broken/empty_point.json"))]);
    assert_eq!(code, 1);
    assert!(out.contains("branch verdicts: axioms false, lax false, colax false, composite false"), "{out}");
}

#[test]
fn unit_law_pair_is_equal() {
    let (code, out) = run(&["eq", path(&fixture("mnd.json")), "t [eta] ; [mu]", "id(t)"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("lhs = rhs  equal"));
}

#[test]
fn identical_terms_take_no_steps() {
    let (code, out) = run(&["eq", path(&fixture("mnd.json")), "[mu]", "[mu]"]);
    assert_eq!(code, 0);
    assert!(out.contains("note: steps: 0"), "{out}");
}

#[test]
fn deep_adjunction_word_runs_out_of_budget() {
    let snake = "[eta] f ; f [eps] ; [eta] f ; f [eps] ; [eta] f ; f [eps]";
    let adj = fixture("adj.json");
    let (code, out) = run(&["eq", "--max-steps", "2", path(&adj), snake, "id(f)"]);
    assert_eq!(code, 1);
    assert!(out.contains("unknown"), "{out}");
    let env = Command::new(env!("CARGO_BIN_EXE_laxcat")).args(["eq", path(&adj), snake, "id(f)"]).env("LAXCAT_MAX_REWRITE_STEPS", "2").output().unwrap();
    assert_eq!(env.status.code(), Some(1));
    assert_eq!(run(&["eq", path(&adj), snake, "id(f)"]).0, 0);
}

#[test]
fn tensor_of_two_arrows_matches_the_golden_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("ab.json");
    let dot = dir.path().join("ab.dot");
    let arrow = fixture("arrow.json");
    let (code, _) = run(&["tensor", path(&arrow), path(&arrow), "-o", out.to_str().unwrap(), "--emit-dot", dot.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(std::fs::read(&out).unwrap(), std::fs::read(fixture("tensor_2_2.json")).unwrap());
    let dot = std::fs::read_to_string(dot).unwrap();
    assert_eq!(dot.lines().filter(|l| l.contains("->")).count(), 4);
    assert!(dot.contains("// γ[u;u]"));
}

#[test]
fn classifier_of_the_terminal_category_is_mnd() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("one.json");
    let (code, _) = run(&["classify", path(&fixture("terminal.json")), "-o", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(&out).unwrap();
    let cl = classifier(&Presentation::terminal()).unwrap();
    assert_eq!(text, presentation_to_json(&cl.result));
    assert_eq!(parse_presentation(&text).unwrap().computad.one.len(), 1);
    assert!(classifier_mnd_iso_check(4).unwrap().passed());
}

#[test]
fn compose_with_bundled_laws_passes() {
    for law in ["chain_law.json", "maybe_powerset.json"] {
        let (code, out) = run(&["compose", "--gamma", path(&fixture(law))]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("H is the composite monad  "), "{out}");
    }
    let (code, _) = run(&["compose", "--gamma", path(&fixture("chain_law.json")), "--host", path(&fixture("chain2.json"))]);
    assert_eq!(code, 0);
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    let arrow = fixture("arrow.json");
    let a = laxcat(&["tensor", path(&arrow), path(&arrow)]);
    let b = laxcat(&["tensor", path(&arrow), path(&arrow)]);
    assert_eq!(a.stdout, b.stdout);
    let law = fixture("maybe_powerset.json");
    assert_eq!(laxcat(&["--json", "beck", "--law", path(&law)]).stdout, laxcat(&["--json", "beck", "--law", path(&law)]).stdout);
}

#[test]
fn json_and_text_reports_agree() {
    let law = fixture("chain_law.json");
    let text = String::from_utf8(laxcat(&["beck", "--law", path(&law)]).stdout).unwrap();
    let json: serde_json::Value = serde_json::from_slice(&laxcat(&["beck", "--law", path(&law), "--json"]).stdout).unwrap();
    let entries = json["entries"].as_array().unwrap();
    assert!(!entries.is_empty());
    for e in entries {
        let line = text.lines().find(|l| l.starts_with(e["law"].as_str().unwrap())).expect("law listed in text");
        assert!(line.contains(e["verdict"].as_str().unwrap()));
    }
    assert_eq!(json["passed"], true);
}
