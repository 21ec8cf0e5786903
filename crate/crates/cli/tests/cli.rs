use std::process::{Command, Output};

use acmcalc::analyze_case;
use acmcalc_cli::render::{CaseReportJson, CatalogEntryJson, ExtensionCaseJson};

fn acmcalc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_acmcalc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = acmcalc(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn table_tsv() {
    let out = stdout(&["table", "--format", "tsv"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "case\tF\tE\tm\tchi\td_min\tG_c1\tG_c2\tG_c3");
    assert_eq!(lines.len(), 8);
    let chis: Vec<i64> = lines[1..]
        .iter()
        .map(|l| l.split('\t').nth(4).unwrap().parse().unwrap())
        .collect();
    assert_eq!(chis, vec![-14, -6, -8, -10, -1, -2, -3]);
}

#[test]
fn table_json_schema() {
    let rows: Vec<ExtensionCaseJson> =
        serde_json::from_str(&stdout(&["table", "--format", "json"])).unwrap();
    assert_eq!(rows.len(), 7);
    assert_eq!(rows[0].g, [5, 58, 62]);
    let raw: serde_json::Value =
        serde_json::from_str(&stdout(&["table", "--format", "json"])).unwrap();
    for key in ["case", "F", "E", "m", "chi", "d_min", "G"] {
        assert!(raw[0].get(key).is_some(), "missing {key}");
    }
}

#[test]
fn analyze_case_four_has_no_survivors() {
    let out = stdout(&["analyze", "--case", "4"]);
    assert!(out.contains("none match the Chern classes"));
    assert!(out.contains("conclusion: indecomposable-by-paper-filters"));
}

#[test]
fn analyze_json_round_trips() {
    let text = stdout(&["analyze", "--case", "1", "--format", "json"]);
    let raw: serde_json::Value = serde_json::from_str(&text).unwrap();
    for key in ["case", "rank1_hypothesis_ok", "verdicts", "conclusion"] {
        assert!(raw.get(key).is_some(), "missing {key}");
    }
    let parsed: CaseReportJson = serde_json::from_str(&text).unwrap();
    assert_eq!(parsed, CaseReportJson::from(&analyze_case(1).unwrap()));
    assert_eq!(parsed.verdicts.len(), 1);
    assert_eq!(parsed.verdicts[0].pair, [[1, 8], [4, 30]]);
    assert_eq!(parsed.verdicts[0].filter, "trivial-split");
}

#[test]
fn analyze_all_json() {
    let reports: Vec<CaseReportJson> =
        serde_json::from_str(&stdout(&["analyze", "--all", "--format", "json"])).unwrap();
    assert_eq!(reports.len(), 7);
    assert!(reports
        .iter()
        .all(|r| r.conclusion == "indecomposable-by-paper-filters"));
}

#[test]
fn verbose_lists_rejected_pairs() {
    let reports: Vec<CaseReportJson> =
        serde_json::from_str(&stdout(&["analyze", "--verbose", "--format", "json"])).unwrap();
    assert!(reports.iter().all(|r| r.verdicts.len() == 105));
    let case1 = &reports[0];
    let rejected = case1
        .verdicts
        .iter()
        .filter(|v| v.pair[1] == [3, 20] && v.pair[0][0] == 2)
        .filter(|v| v.filter == "chern-mismatch")
        .count();
    assert_eq!(rejected, 4);
}

#[test]
fn outputs_are_deterministic() {
    for args in [
        &["table"][..],
        &["analyze", "--all"][..],
        &["analyze", "--all", "--format", "json"][..],
        &["analyze", "--all", "--format", "tsv"][..],
    ] {
        assert_eq!(acmcalc(args).stdout, acmcalc(args).stdout, "{args:?}");
    }
}

#[test]
fn eval_queries() {
    assert_eq!(
        stdout(&["eval", "chi", "bundle(2,4,30)(-1) * dual(bundle(2,0,3))"]),
        "-6\n"
    );
    assert_eq!(
        stdout(&["eval", "chern", "bundle(2,4,30) ++ bundle(2,1,8)"]),
        "rank 4, c1 = 5, c2 = 58, c3 = 62\n"
    );
    assert_eq!(stdout(&["eval", "chi", "o(0)"]), "0\n");
    assert_eq!(stdout(&["eval", "rank", "o(1) ++ o(0)"]), "2\n");
    let ch: serde_json::Value =
        serde_json::from_str(&stdout(&["eval", "ch", "cat(1,8)", "--format", "json"])).unwrap();
    assert_eq!(ch["ch"], serde_json::json!([2, 1, "-11/2", "-19/6"]));
    // χ(O_{X_4}) = 1 on the quartic
    assert_eq!(stdout(&["eval", "chi", "o(0)", "--degree", "4"]), "1\n");
}

#[test]
fn catalog_formats() {
    let entries: Vec<CatalogEntryJson> =
        serde_json::from_str(&stdout(&["catalog", "--format", "json"])).unwrap();
    assert_eq!(entries.len(), 14);
    assert_eq!(entries.iter().filter(|e| e.family == "A").count(), 9);
    let tsv = stdout(&["catalog", "--format", "tsv"]);
    assert_eq!(tsv.lines().count(), 15);
    assert!(tsv.starts_with("c1\tc2\tfamily\texists_on_general\tchi\th0\tstable\n"));
}

#[test]
fn exit_codes() {
    let out = acmcalc(&["eval", "chi", "bundle(2,1,8,7)"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("rank-2 requires c3 = 0"));
    assert!(out.stdout.is_empty());

    assert_eq!(
        acmcalc(&["eval", "chi", "o(1) + o(2)"]).status.code(),
        Some(2)
    );
    assert_eq!(acmcalc(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(acmcalc(&["table", "--degree", "4"]).status.code(), Some(1));
    assert_eq!(acmcalc(&["analyze", "--case", "8"]).status.code(), Some(1));
    // odd c1·c2: not a bundle class, χ is a half-integer
    assert_eq!(
        acmcalc(&["eval", "chi", "bundle(2,1,3)"]).status.code(),
        Some(1)
    );
}
