//! Serialized forms of catalog entries, extension rows and case reports.
//!
//! Integers are JSON numbers. Non-integral rationals are strings `"p/q"` in
//! lowest terms.

use std::fmt::Write as _;

use acmcalc::analysis::SplitDetails;
use acmcalc::{CaseReport, CatalogEntry, ExtensionCase, Rational, SplitVerdict, H0};
use serde::{Deserialize, Serialize};
use serde_json::Value as Json;

use crate::expr::Value;

pub fn rational_json(q: &Rational) -> Json {
    if q.is_integer() {
        Json::from(*q.numer() as i64)
    } else {
        Json::String(format!("{}/{}", q.numer(), q.denom()))
    }
}

pub fn parse_rational_json(v: &Json) -> Option<Rational> {
    match v {
        Json::Number(n) => n.as_i64().map(|n| Rational::from_integer(n as i128)),
        Json::String(s) => {
            let (p, q) = s.split_once('/')?;
            let (p, q): (i128, i128) = (p.parse().ok()?, q.parse().ok()?);
            if q <= 0 {
                return None;
            }
            let r = Rational::new(p, q);
            // only canonical spellings
            (*r.numer() == p && *r.denom() == q && !r.is_integer()).then_some(r)
        }
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntryJson {
    pub c1: i64,
    pub c2: i64,
    pub family: String,
    pub exists_on_general: bool,
    pub chi: i64,
    /// `null` where the numerics leave `h^0` undetermined.
    pub h0: Option<u64>,
    pub stable: bool,
}

impl From<&CatalogEntry> for CatalogEntryJson {
    fn from(e: &CatalogEntry) -> Self {
        Self {
            c1: e.c1,
            c2: e.c2,
            family: e.family.to_string(),
            exists_on_general: e.exists_on_general,
            chi: e.chi,
            h0: e.h0.known(),
            stable: e.stable,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionCaseJson {
    pub case: usize,
    #[serde(rename = "F")]
    pub f: [i64; 2],
    #[serde(rename = "E")]
    pub e: [i64; 2],
    pub m: i64,
    pub chi: i64,
    pub d_min: u64,
    #[serde(rename = "G")]
    pub g: [i64; 3],
}

impl From<&ExtensionCase> for ExtensionCaseJson {
    fn from(c: &ExtensionCase) -> Self {
        Self {
            case: c.index,
            f: [c.f.c1, c.f.c2],
            e: [c.e.c1, c.e.c2],
            m: c.m,
            chi: c.chi_tensor,
            d_min: c.d_lower,
            g: [c.g_chern.0, c.g_chern.1, c.g_chern.2],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DetailsJson {
    pub target: [i64; 3],
    pub c3_agrees: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h0_extension: Option<[Option<u64>; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h0_candidate: Option<[Option<u64>; 2]>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub h0_convention_used: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

fn h0_pair(v: [H0; 2]) -> [Option<u64>; 2] {
    [v[0].known(), v[1].known()]
}

impl From<&SplitDetails> for DetailsJson {
    fn from(d: &SplitDetails) -> Self {
        Self {
            target: [d.target_chern.0, d.target_chern.1, d.target_chern.2],
            c3_agrees: d.c3_agrees,
            h0_extension: d.h0_extension.map(h0_pair),
            h0_candidate: d.h0_candidate.map(h0_pair),
            h0_convention_used: d.h0_convention_used,
            reason: d.reason.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitVerdictJson {
    pub pair: [[i64; 2]; 2],
    pub sum_chern: [i64; 3],
    pub filter: String,
    pub details: DetailsJson,
}

impl From<&SplitVerdict> for SplitVerdictJson {
    fn from(v: &SplitVerdict) -> Self {
        let (a, b) = v.pair_key();
        Self {
            pair: [[a.0, a.1], [b.0, b.1]],
            sum_chern: [v.sum_chern.0, v.sum_chern.1, v.sum_chern.2],
            filter: v.filter.to_string(),
            details: (&v.details).into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseReportJson {
    pub case: usize,
    pub extension: ExtensionCaseJson,
    pub h3_vanishing: bool,
    pub rank1_hypothesis_ok: bool,
    pub ext1_lower_bound: Option<u64>,
    pub verdicts: Vec<SplitVerdictJson>,
    pub conclusion: String,
}

impl From<&CaseReport> for CaseReportJson {
    fn from(r: &CaseReport) -> Self {
        Self {
            case: r.case.index,
            extension: (&r.case).into(),
            h3_vanishing: r.lemma.h3_zero,
            rank1_hypothesis_ok: r.rank1_hypothesis_ok,
            ext1_lower_bound: r.ext1_bound,
            verdicts: r.verdicts.iter().map(Into::into).collect(),
            conclusion: r.conclusion.to_string(),
        }
    }
}

pub fn value_json(v: &Value) -> Json {
    match v {
        Value::Chi(n) => serde_json::json!({ "chi": n }),
        Value::Rank(n) => serde_json::json!({ "rank": n }),
        Value::Chern(d) => serde_json::json!({
            "rank": d.rank(),
            "c1": d.c1(),
            "c2": d.c2(),
            "c3": d.c3(),
        }),
        Value::Ch(ch) => {
            let parts: Vec<Json> = (0..4).map(|k| rational_json(&ch.ch(k))).collect();
            serde_json::json!({ "ch": parts })
        }
    }
}

pub fn value_text(v: &Value) -> String {
    match v {
        Value::Chi(n) => n.to_string(),
        Value::Rank(n) => n.to_string(),
        Value::Chern(d) => format!(
            "rank {}, c1 = {}, c2 = {}, c3 = {}",
            d.rank(),
            d.c1(),
            d.c2(),
            d.c3()
        ),
        Value::Ch(ch) => format!("({}, {}, {}, {})", ch.ch(0), ch.ch(1), ch.ch(2), ch.ch(3)),
    }
}

pub fn value_tsv(v: &Value) -> String {
    match v {
        Value::Chi(n) => format!("chi\n{n}\n"),
        Value::Rank(n) => format!("rank\n{n}\n"),
        Value::Chern(d) => format!(
            "rank\tc1\tc2\tc3\n{}\t{}\t{}\t{}\n",
            d.rank(),
            d.c1(),
            d.c2(),
            d.c3()
        ),
        Value::Ch(ch) => format!(
            "ch0\tch1\tch2\tch3\n{}\t{}\t{}\t{}\n",
            ch.ch(0),
            ch.ch(1),
            ch.ch(2),
            ch.ch(3)
        ),
    }
}

fn pair(c1: i64, c2: i64) -> String {
    format!("({c1},{c2})")
}

fn triple((a, b, c): (i64, i64, i64)) -> String {
    format!("({a},{b},{c})")
}

pub fn table_text(cases: &[ExtensionCase]) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{:<6}{:<16}{:<16}{:<18}{:<5}{:<7}(c1,c2,c3)(G)",
        "Case", "(c1(F),c2(F))", "(c1(E),c2(E))", "chi(F(m) x E^v)", "m", "d"
    );
    for c in cases {
        let _ = writeln!(
            s,
            "{:<6}{:<16}{:<16}{:<18}{:<5}{:<7}{}",
            format!("({})", c.index),
            pair(c.f.c1, c.f.c2),
            pair(c.e.c1, c.e.c2),
            c.chi_tensor,
            c.m,
            format!(">= {}", c.d_lower),
            triple(c.g_chern),
        );
    }
    s.push_str("d: lower bound -chi for dim Ext^1(E,F(m)); strict when h^0 + h^2 of F(m) x E^v is positive\n");
    s
}

pub fn table_tsv(cases: &[ExtensionCase]) -> String {
    let mut s = String::from("case\tF\tE\tm\tchi\td_min\tG_c1\tG_c2\tG_c3\n");
    for c in cases {
        let _ = writeln!(
            s,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            c.index,
            pair(c.f.c1, c.f.c2),
            pair(c.e.c1, c.e.c2),
            c.m,
            c.chi_tensor,
            c.d_lower,
            c.g_chern.0,
            c.g_chern.1,
            c.g_chern.2
        );
    }
    s
}

fn h0_text(v: Option<[H0; 2]>) -> String {
    match v {
        Some([a, b]) => format!("{a}+{b}"),
        None => "-".into(),
    }
}

pub fn report_text(r: &CaseReport) -> String {
    let c = &r.case;
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    let mut s = String::new();
    let _ = writeln!(
        s,
        "Case ({}): F = {}, E = {}, m = {}",
        c.index,
        pair(c.f.c1, c.f.c2),
        pair(c.e.c1, c.e.c2),
        c.m
    );
    let bound = r
        .ext1_bound
        .map_or_else(|| "not justified".to_string(), |d| format!(">= {d}"));
    let _ = writeln!(
        s,
        "  chi(F(m) x E^v) = {}, dim Ext^1 {}",
        c.chi_tensor, bound
    );
    let _ = writeln!(s, "  G classes (c1,c2,c3) = {}", triple(c.g_chern));
    let _ = writeln!(
        s,
        "  h^3 vanishing (c1(F)+m > 0): {}",
        yes_no(r.lemma.h3_zero)
    );
    let _ = writeln!(
        s,
        "  line-bundle summand excluded: {}",
        yes_no(r.rank1_hypothesis_ok)
    );
    if r.verdicts.is_empty() {
        s.push_str("  rank-2 splittings: none match the Chern classes of G\n");
    } else {
        s.push_str("  rank-2 splittings:\n");
        for v in &r.verdicts {
            let (a, b) = v.pair_key();
            let mut line = format!(
                "    {:<18}sum {:<14}{}",
                format!("{} + {}", pair(a.0, a.1), pair(b.0, b.1)),
                triple(v.sum_chern),
                v.filter
            );
            if v.details.h0_candidate.is_some() {
                let _ = write!(
                    line,
                    "  h0 {} vs {}",
                    h0_text(v.details.h0_extension),
                    h0_text(v.details.h0_candidate)
                );
            }
            if v.details.h0_convention_used {
                line.push_str("  [h0 = 1 for c1 = 0]");
            }
            if let Some(reason) = &v.details.reason {
                let _ = write!(line, "  ({reason})");
            }
            s.push_str(line.trim_end());
            s.push('\n');
        }
    }
    let _ = writeln!(s, "  conclusion: {}", r.conclusion);
    s
}

pub fn reports_tsv(reports: &[CaseReport]) -> String {
    let mut s = String::from(
        "case\tG1\tG2\tsum_c1\tsum_c2\tsum_c3\tfilter\th0_extension\th0_candidate\tconclusion\n",
    );
    for r in reports {
        for v in &r.verdicts {
            let (a, b) = v.pair_key();
            let _ = writeln!(
                s,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                r.case.index,
                pair(a.0, a.1),
                pair(b.0, b.1),
                v.sum_chern.0,
                v.sum_chern.1,
                v.sum_chern.2,
                v.filter,
                h0_text(v.details.h0_extension),
                h0_text(v.details.h0_candidate),
                r.conclusion
            );
        }
    }
    s
}

pub fn catalog_text(entries: &[CatalogEntry]) -> String {
    let mut s = format!(
        "{:<10}{:<8}{:<18}{:<6}{:<5}{}\n",
        "(c1,c2)", "family", "exists_on_general", "chi", "h0", "stability"
    );
    for e in entries {
        let stability = if e.stable {
            "stable"
        } else if e.semistable {
            "semistable"
        } else {
            "unstable"
        };
        let exists = if e.exists_on_general {
            "yes"
        } else {
            "conditional"
        };
        let _ = writeln!(
            s,
            "{:<10}{:<8}{:<18}{:<6}{:<5}{}",
            pair(e.c1, e.c2),
            e.family.to_string(),
            exists,
            e.chi,
            e.h0.to_string(),
            stability
        );
    }
    s
}

pub fn catalog_tsv(entries: &[CatalogEntry]) -> String {
    let mut s = String::from("c1\tc2\tfamily\texists_on_general\tchi\th0\tstable\n");
    for e in entries {
        let h0 =
            e.h0.known()
                .map_or_else(|| "?".to_string(), |v| v.to_string());
        let _ = writeln!(
            s,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}",
            e.c1, e.c2, e.family, e.exists_on_general, e.chi, h0, e.stable
        );
    }
    s
}
