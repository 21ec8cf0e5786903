//! Rank-4 extensions `0 → F(m) → G → E → 0` of catalog bundles on the
//! quintic, the vanishing hypotheses that bound `dim Ext^1(E, F(m))` from
//! below, and the numeric filters that rule out `G ≅ G_1 ⊕ G_2`.

use std::fmt;

use crate::bundles::BundleDescriptor;
use crate::catalog::{catalog, lookup, CatalogEntry, H0};
use crate::chowring::Hypersurface;
use crate::error::{Error, Result};

type ChernPair = (i64, i64);

/// `(F, E, m)` for the seven extension rows.
const CASES: [(ChernPair, ChernPair, i64); 7] = [
    ((4, 30), (1, 8), 0),
    ((4, 30), (0, 3), -1),
    ((4, 30), (0, 4), -1),
    ((4, 30), (0, 5), -1),
    ((1, 8), (0, 3), 0),
    ((1, 8), (0, 4), 0),
    ((1, 8), (0, 5), 0),
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionCase {
    pub index: usize,
    pub f: CatalogEntry,
    pub e: CatalogEntry,
    pub m: i64,
    /// `χ(F(m) ⊗ E^∨)`.
    pub chi_tensor: i64,
    /// `max(0, -χ)`.
    pub d_lower: u64,
    pub g_chern: (i64, i64, i64),
}

impl ExtensionCase {
    /// Builds a row for arbitrary catalog bundles. Only `m ≤ 0` keeps the
    /// extension normalized.
    pub fn new(index: usize, f: CatalogEntry, e: CatalogEntry, m: i64) -> Result<Self> {
        if m > 0 {
            return Err(Error::Precondition(format!(
                "twist m = {m} must be non-positive"
            )));
        }
        let x = Hypersurface::quintic();
        let fm = f.descriptor().twist(m, &x);
        let ed = e.descriptor();
        let chi_tensor = fm.tensor(&ed.dual(), &x)?.chi_hrr(&x)?;
        let g = fm.direct_sum(&ed, &x);
        Ok(Self {
            index,
            f,
            e,
            m,
            chi_tensor,
            d_lower: (-chi_tensor).max(0) as u64,
            g_chern: g.chern(),
        })
    }

    pub fn f_twisted(&self) -> BundleDescriptor {
        self.f.descriptor().twist(self.m, &Hypersurface::quintic())
    }

    /// The split bundle `F(m) ⊕ E`, which shares all Chern classes with `G`.
    pub fn extension(&self) -> BundleDescriptor {
        self.f_twisted()
            .direct_sum(&self.e.descriptor(), &Hypersurface::quintic())
    }
}

/// The seven rows, with `χ` computed by Riemann–Roch.
pub fn extension_cases(x: &Hypersurface) -> Result<Vec<ExtensionCase>> {
    if x.degree() != 5 {
        return Err(Error::Unsupported(format!(
            "extension table is defined on the quintic, got degree {}",
            x.degree()
        )));
    }
    CASES
        .iter()
        .enumerate()
        .map(|(i, &((fc1, fc2), (ec1, ec2), m))| {
            let f = lookup(fc1, fc2).expect("table bundles are in the catalog");
            let e = lookup(ec1, ec2).expect("table bundles are in the catalog");
            ExtensionCase::new(i + 1, f, e, m)
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LemmaCheck {
    /// `c1(F) + m > 0`, which forces `h^0(F^∨(-m)) = 0` and hence
    /// `h^3(F(m) ⊗ E^∨) = 0`.
    pub h3_zero: bool,
    /// `c1(E) - c1(F) - m < 0`.
    pub part1: bool,
}

pub fn lemma_vanishing(f: &CatalogEntry, e: &CatalogEntry, m: i64) -> LemmaCheck {
    LemmaCheck {
        h3_zero: f.c1 + m > 0,
        part1: e.c1 - f.c1 - m < 0,
    }
}

/// Lower bound for `h^1(F(m) ⊗ E^∨) = h^0 + h^2 - χ` once `h^3` vanishes.
pub fn ext1_lower_bound(case: &ExtensionCase) -> Result<u64> {
    if !lemma_vanishing(&case.f, &case.e, case.m).h3_zero {
        return Err(Error::BoundNotJustified);
    }
    Ok((-case.chi_tensor).max(0) as u64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SplitFilter {
    ChernMismatch,
    TrivialSplit,
    H0Mismatch,
    Undecided,
}

impl SplitFilter {
    pub fn as_str(self) -> &'static str {
        match self {
            SplitFilter::ChernMismatch => "chern-mismatch",
            SplitFilter::TrivialSplit => "trivial-split",
            SplitFilter::H0Mismatch => "h0-mismatch",
            SplitFilter::Undecided => "undecided",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [
            SplitFilter::ChernMismatch,
            SplitFilter::TrivialSplit,
            SplitFilter::H0Mismatch,
            SplitFilter::Undecided,
        ]
        .into_iter()
        .find(|f| f.as_str() == s)
    }
}

impl fmt::Display for SplitFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The numbers a verdict was decided on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitDetails {
    pub target_chern: (i64, i64, i64),
    pub c3_agrees: bool,
    /// `[h^0(F(m)), h^0(E)]`, filled once the Chern filter is passed.
    pub h0_extension: Option<[H0; 2]>,
    /// `[h^0(G_1), h^0(G_2)]`.
    pub h0_candidate: Option<[H0; 2]>,
    /// Some `h^0` above is the conventional value 1 for a `c1 = 0` bundle.
    pub h0_convention_used: bool,
    pub reason: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitVerdict {
    pub pair: (CatalogEntry, CatalogEntry),
    pub sum_chern: (i64, i64, i64),
    pub filter: SplitFilter,
    pub details: SplitDetails,
}

impl SplitVerdict {
    pub fn pair_key(&self) -> ((i64, i64), (i64, i64)) {
        let a = self.pair.0.chern_pair();
        let b = self.pair.1.chern_pair();
        if a <= b {
            (a, b)
        } else {
            (b, a)
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SplitOptions {
    /// Keep pairs rejected by the Chern filter in the output.
    pub include_rejected: bool,
    /// Also require `c3` of the candidate to match `c3(G)` in the Chern filter.
    pub c3_filter: bool,
}

fn sum_h0(values: [H0; 2]) -> Option<u64> {
    Some(values[0].known()? + values[1].known()?)
}

fn judge(
    case: &ExtensionCase,
    a: &CatalogEntry,
    b: &CatalogEntry,
    opts: SplitOptions,
) -> SplitVerdict {
    let x = Hypersurface::quintic();
    let (da, db) = (a.descriptor(), b.descriptor());
    let sum = da.direct_sum(&db, &x);
    let (c1, c2, c3) = sum.chern();
    let target = case.g_chern;
    let mut details = SplitDetails {
        target_chern: target,
        c3_agrees: c3 == target.2,
        h0_extension: None,
        h0_candidate: None,
        h0_convention_used: false,
        reason: None,
    };
    let verdict = |filter, details| SplitVerdict {
        pair: (a.clone(), b.clone()),
        sum_chern: (c1, c2, c3),
        filter,
        details,
    };

    let chern_ok = (c1, c2) == (target.0, target.1) && (!opts.c3_filter || details.c3_agrees);
    if !chern_ok {
        return verdict(SplitFilter::ChernMismatch, details);
    }

    let fm = case.f_twisted();
    let e = case.e.descriptor();
    let trivial = (da.same_classes(&fm) && db.same_classes(&e))
        || (da.same_classes(&e) && db.same_classes(&fm));
    if trivial {
        return verdict(SplitFilter::TrivialSplit, details);
    }

    let ext = [case.f.h0_twist(case.m), case.e.h0];
    let cand = [a.h0, b.h0];
    details.h0_extension = Some(ext);
    details.h0_candidate = Some(cand);
    details.h0_convention_used =
        (case.m == 0 && case.f.c1 == 0) || [&case.e, a, b].iter().any(|entry| entry.c1 == 0);
    match (sum_h0(ext), sum_h0(cand)) {
        (Some(l), Some(r)) if l != r => verdict(SplitFilter::H0Mismatch, details),
        (Some(_), Some(_)) => {
            details.reason = Some("h0 counts agree".into());
            verdict(SplitFilter::Undecided, details)
        }
        _ => {
            details.reason = Some("h0 undetermined".into());
            verdict(SplitFilter::Undecided, details)
        }
    }
}

fn all_verdicts(case: &ExtensionCase, opts: SplitOptions) -> Vec<SplitVerdict> {
    let entries = catalog();
    let mut out = Vec::with_capacity(entries.len() * (entries.len() + 1) / 2);
    for (i, a) in entries.iter().enumerate() {
        for b in &entries[i..] {
            out.push(judge(case, a, b, opts));
        }
    }
    out
}

/// Judges every unordered pair of catalog bundles (repetition allowed) as a
/// candidate splitting `G ≅ G_1 ⊕ G_2`. Pairs failing the Chern filter are
/// dropped unless `opts.include_rejected` is set.
pub fn enumerate_split_candidates(case: &ExtensionCase, opts: SplitOptions) -> Vec<SplitVerdict> {
    let mut v = all_verdicts(case, opts);
    if !opts.include_rejected {
        v.retain(|v| v.filter != SplitFilter::ChernMismatch);
    }
    v
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Conclusion {
    IndecomposableByFilters,
    Inconclusive,
}

impl Conclusion {
    pub fn as_str(self) -> &'static str {
        match self {
            Conclusion::IndecomposableByFilters => "indecomposable-by-paper-filters",
            Conclusion::Inconclusive => "inconclusive",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "indecomposable-by-paper-filters" => Some(Conclusion::IndecomposableByFilters),
            "inconclusive" => Some(Conclusion::Inconclusive),
            _ => None,
        }
    }
}

impl fmt::Display for Conclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseReport {
    pub case: ExtensionCase,
    pub lemma: LemmaCheck,
    /// `c1(F) + m > 0`: excludes a line-bundle summand `O_X(a) ⊕ G_1`.
    pub rank1_hypothesis_ok: bool,
    pub ext1_bound: Option<u64>,
    pub verdicts: Vec<SplitVerdict>,
    pub conclusion: Conclusion,
}

impl CaseReport {
    pub fn count(&self, filter: SplitFilter) -> usize {
        self.verdicts.iter().filter(|v| v.filter == filter).count()
    }
}

pub fn analyze(case: &ExtensionCase, opts: SplitOptions) -> CaseReport {
    let lemma = lemma_vanishing(&case.f, &case.e, case.m);
    let rank1_hypothesis_ok = case.f.c1 + case.m > 0;
    let all = all_verdicts(case, opts);
    let undecided = all.iter().any(|v| v.filter == SplitFilter::Undecided);
    let conclusion = if rank1_hypothesis_ok && !undecided {
        Conclusion::IndecomposableByFilters
    } else {
        Conclusion::Inconclusive
    };
    let verdicts = if opts.include_rejected {
        all
    } else {
        all.into_iter()
            .filter(|v| v.filter != SplitFilter::ChernMismatch)
            .collect()
    };
    CaseReport {
        case: case.clone(),
        lemma,
        rank1_hypothesis_ok,
        ext1_bound: ext1_lower_bound(case).ok(),
        verdicts,
        conclusion,
    }
}

/// Report for table row `index` (1..=7) with default options.
pub fn analyze_case(index: usize) -> Result<CaseReport> {
    if !(1..=7).contains(&index) {
        return Err(Error::UnknownCase(index));
    }
    let cases = extension_cases(&Hypersurface::quintic())?;
    Ok(analyze(&cases[index - 1], SplitOptions::default()))
}
