use std::process::{Command, Output};

use garside::disks::{self, Strategy};
use garside::reversing::{self, SearchOptions};
use garside::valuation;
use garside::{GarsideContext, Word};

const FIGURE2: &str = "ABBCABBACBBCBBBAAccbbbabbacbbcabbc";

fn garside(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_garside")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn w(s: &str) -> Word {
    s.parse().unwrap()
}

fn json_lines(text: &str) -> Vec<serde_json::Value> {
    text.lines().map(|l| serde_json::from_str(l).expect("valid JSON line")).collect()
}

#[test]
fn bell_and_val() {
    let o = garside(&["bell", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "13\n");
    let o = garside(&["val", "--group", "braid:3", "Ab"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "(-1, 0) [1<2]\n");
}

#[test]
fn figure2_has_no_pairs() {
    let o = garside(&["pairs", "--group", "braid:4", FIGURE2]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "[]\n");
}

#[test]
fn pairs_match_the_library() {
    let ctx = GarsideContext::braid(3).unwrap();
    let word = "abaBAB";
    let o = garside(&["pairs", "--group", "braid:3", word]);
    let got: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    let expected = serde_json::to_value(disks::find_removable_pairs(&ctx, &w(word)).unwrap()).unwrap();
    assert_eq!(got, expected);
    assert!(!got.as_array().unwrap().is_empty());
}

#[test]
fn equiv_exit_codes() {
    assert_eq!(garside(&["equiv", "--group", "braid:3", "aba", "bab"]).status.code(), Some(0));
    let o = garside(&["equiv", "--group", "braid:3", "ab", "ba"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "false\n");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(garside(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(garside(&["bell", "--bogus", "3"]).status.code(), Some(2));
    assert_eq!(garside(&["val", "Ab"]).status.code(), Some(2));
    assert_eq!(garside(&["val", "--group", "braid:3", "a?"]).status.code(), Some(2));
    assert_eq!(garside(&["val", "--group", "cube:3", "a"]).status.code(), Some(2));
    assert_eq!(garside(&["render", "--group", "dihedral:3", "a"]).status.code(), Some(2));
}

#[test]
fn unbraid_success_and_stuck() {
    let ctx = GarsideContext::braid(3).unwrap();
    let o = garside(&["unbraid", "--group", "braid:3", "abABBaab"]);
    let lines = json_lines(&stdout(&o));
    let lib = disks::unbraid(&ctx, &w("abABBaab"), Strategy::Leftmost).unwrap();
    assert_eq!(lines.len(), lib.steps() + 1);
    let last = lines.last().unwrap();
    assert_eq!(last["success"], serde_json::json!(lib.success()));
    assert_eq!(o.status.code(), Some(if lib.success() { 0 } else { 1 }));

    let o = garside(&["unbraid", "--group", "braid:4", FIGURE2]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json_lines(&stdout(&o))[0]["residual"], FIGURE2);
}

#[test]
fn trivial_word_unbraids_completely() {
    let o = garside(&["unbraid", "--group", "braid:3", "--strategy", "innermost", "abaBAB"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let lines = json_lines(&stdout(&o));
    assert_eq!(lines.last().unwrap()["residual"], "");
}

#[test]
fn seed_word_and_reverse() {
    let o = garside(&["seed-word", "--group", "braid:4", "aabbb", "ccbbb"]);
    assert_eq!(stdout(&o), format!("{FIGURE2}\n"));
    let ctx = GarsideContext::braid(3).unwrap();
    let o = garside(&["reverse", "--group", "braid:3", "ab", "ba"]);
    let v = &json_lines(&stdout(&o))[0];
    let r = reversing::reverse(&ctx, &w("ab"), &w("ba")).unwrap();
    assert_eq!(v["u_prime"], r.u_prime.to_string());
    assert_eq!(v["v_prime"], r.v_prime.to_string());
    assert_eq!(v["lcm"], ctx.format_positive(&r.lcm));
}

#[test]
fn numeric_syntax() {
    let o = garside(&["--numeric", "seed-word", "--group", "braid:3", "1", "2"]);
    let ctx = GarsideContext::braid(3).unwrap();
    let lib = reversing::seed_word(&ctx, &w("a"), &w("b")).unwrap();
    assert_eq!(stdout(&o).trim(), lib.format(garside::Syntax::Numeric));
    let o = garside(&["val", "--numeric", "--group", "braid:3", "-1 2"]);
    assert_eq!(stdout(&o), "(-1, 0) [1<2]\n");
}

#[test]
fn finders() {
    let o = garside(&["simple-pair", "--group", "braid:3", "aba", "bab"]);
    let v = &json_lines(&stdout(&o))[0];
    assert_eq!((v["i"].as_u64(), v["j"].as_u64(), v["verified"].as_bool()), (Some(2), Some(5), Some(true)));
    let o = garside(&["dihedral-pair", "--group", "dihedral:5", "AbaB"]);
    assert_eq!(o.status.code(), Some(2));
    let o = garside(&["dihedral-pair", "--group", "dihedral:3", "ABAbab"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json_lines(&stdout(&o))[0]["verified"], true);
}

#[test]
fn search_matches_the_library() {
    let o = garside(&["search", "--strands", "3", "--length", "3", "--jobs", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let lib = reversing::search_counterexamples(3, 3, &SearchOptions::default()).unwrap();
    assert_eq!(stdout(&o), lib.to_json_lines());
    let lines = json_lines(&stdout(&o));
    assert_eq!(lines.last().unwrap()["pairs_examined"], 28);

    let o = garside(&["search", "--strands", "3", "--length", "2", "--verbose"]);
    assert_eq!(json_lines(&stdout(&o)).len(), 6 + 1);
    assert_eq!(garside(&["search", "--strands", "4", "--length", "9"]).status.code(), Some(2));
}

#[test]
fn types_and_graph() {
    let o = garside(&["types", "3"]);
    let names: Vec<String> = valuation::enumerate_order_types(3).unwrap().iter().map(|t| t.to_string()).collect();
    assert_eq!(stdout(&o).lines().collect::<Vec<_>>(), names);
    let dot = stdout(&garside(&["types", "3", "--graph"]));
    assert_eq!(dot, valuation::neighbour_graph(3).unwrap().to_dot());
    assert!(dot.starts_with("graph types {"));
}

#[test]
fn random_trivial_is_trivial() {
    let ctx = GarsideContext::dihedral(3).unwrap();
    let o = garside(&["random-trivial", "--group", "dihedral:3", "--ops", "20", "--seed", "42"]);
    let word = w(stdout(&o).trim());
    assert_eq!(word, reversing::random_trivial_word(&ctx, 20, 42));
    assert!(ctx.is_trivial(&word).unwrap());
}

#[test]
fn render_rows_follow_letters() {
    let o = garside(&["render", "--group", "braid:3", "aA"]);
    assert_eq!(stdout(&o), "    | | |\n  0  /  |\n  1  \\  |\n    | | |\n");
    let o = garside(&["render", "--group", "braid:4", ""]);
    assert_eq!(stdout(&o), "    | | | |\n    | | | |\n");
    let o = garside(&["render", "--group", "braid:4", FIGURE2]);
    assert_eq!(stdout(&o).lines().count(), 34 + 2);
    let o = garside(&["render", "--group", "braid:3", "ab", "--highlight", "0,7"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn figure2_svg_golden() {
    let o = garside(&["render", "--group", "braid:4", "--format", "svg", "--highlight", "0,33", FIGURE2]);
    assert_eq!(o.status.code(), Some(0));
    let plain = stdout(&garside(&["render", "--group", "braid:4", "--format", "svg", FIGURE2]));
    assert_eq!(plain, include_str!("golden/figure2.svg"));
    assert_eq!(stdout(&o).matches("<rect").count(), 2);
}
