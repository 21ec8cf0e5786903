//! Exact Chern-class and Riemann–Roch calculus on hypersurface threefolds in
//! `P^4`, with the catalog of rank-2 ACM bundles on the quintic and the
//! splitting analysis for rank-4 extensions built from them.

pub mod analysis;
pub mod bundles;
pub mod catalog;
pub mod chowring;
pub mod error;

/// Exact rational used for every Chow-ring coefficient.
pub type Rational = num_rational::Ratio<i128>;

pub use analysis::{
    analyze, analyze_case, enumerate_split_candidates, ext1_lower_bound, extension_cases,
    lemma_vanishing, CaseReport, Conclusion, ExtensionCase, LemmaCheck, SplitFilter, SplitOptions,
    SplitVerdict,
};
pub use bundles::{chi_rank2, BundleDescriptor, ChernCharacter};
pub use catalog::{catalog, h0_acm_twist, lookup, CatalogEntry, Family, H0};
pub use chowring::{ChowClass, Hypersurface};
pub use error::{Error, Result};
