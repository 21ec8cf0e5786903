//! Chern classes of normalized indecomposable rank-2 ACM bundles on a smooth
//! quintic threefold.
//!
//! Family `A` is realized on a general quintic. Family `B` is admissible
//! numerically but its existence is not asserted, so those entries carry
//! `exists_on_general = false`.

use std::fmt;

use crate::bundles::{chi_rank2, BundleDescriptor};
use crate::chowring::Hypersurface;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::A => "A",
            Family::B => "B",
        })
    }
}

const ENTRIES: [(i64, i64, Family); 14] = [
    (-2, 1, Family::A),
    (-1, 2, Family::A),
    (0, 3, Family::A),
    (0, 4, Family::A),
    (0, 5, Family::A),
    (1, 4, Family::A),
    (1, 6, Family::A),
    (1, 8, Family::A),
    (4, 30, Family::A),
    (2, 11, Family::B),
    (2, 12, Family::B),
    (2, 13, Family::B),
    (2, 14, Family::B),
    (3, 20, Family::B),
];

/// Number of global sections, when the numerics determine it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum H0 {
    Known(u64),
    Undetermined,
}

impl H0 {
    pub fn known(self) -> Option<u64> {
        match self {
            H0::Known(v) => Some(v),
            H0::Undetermined => None,
        }
    }
}

impl fmt::Display for H0 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            H0::Known(v) => write!(f, "{v}"),
            H0::Undetermined => f.write_str("?"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CatalogEntry {
    pub c1: i64,
    pub c2: i64,
    pub family: Family,
    pub exists_on_general: bool,
    pub chi: i64,
    pub h0: H0,
    pub stable: bool,
    pub semistable: bool,
}

impl CatalogEntry {
    fn build(c1: i64, c2: i64, family: Family) -> Self {
        let desc = Self::normalized_descriptor(c1, c2);
        let chi = chi_rank2(c1, c2);
        debug_assert!(chi.is_integer());
        Self {
            c1,
            c2,
            family,
            exists_on_general: family == Family::A,
            chi: chi.to_integer() as i64,
            h0: h0_acm_twist(&desc, 0).expect("catalog entries are normalized"),
            stable: desc.is_stable().expect("b is set"),
            semistable: desc.is_semistable().expect("b is set"),
        }
    }

    fn normalized_descriptor(c1: i64, c2: i64) -> BundleDescriptor {
        BundleDescriptor::rank2(c1, c2).with_b(0).with_acm(true)
    }

    /// Rank-2 descriptor with `b = 0` and the ACM flag set.
    pub fn descriptor(&self) -> BundleDescriptor {
        Self::normalized_descriptor(self.c1, self.c2)
    }

    pub fn chern_pair(&self) -> (i64, i64) {
        (self.c1, self.c2)
    }

    /// `h^0(E(n))`, see [`h0_acm_twist`].
    pub fn h0_twist(&self, n: i64) -> H0 {
        h0_acm_twist(&self.descriptor(), n).expect("catalog entries are normalized")
    }
}

impl fmt::Display for CatalogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.c1, self.c2)
    }
}

/// The fourteen entries, family `A` first, in a fixed order.
pub fn catalog() -> Vec<CatalogEntry> {
    ENTRIES
        .iter()
        .map(|&(c1, c2, family)| CatalogEntry::build(c1, c2, family))
        .collect()
}

pub fn lookup(c1: i64, c2: i64) -> Option<CatalogEntry> {
    ENTRIES
        .iter()
        .find(|&&(a, b, _)| (a, b) == (c1, c2))
        .map(|&(c1, c2, family)| CatalogEntry::build(c1, c2, family))
}

/// `h^0(E(n))` for a normalized rank-2 ACM bundle on the quintic.
///
/// * `n < 0`: zero, since `E` is normalized.
/// * `c1 + n > 0`: `h^1 = h^2 = 0` by ACM and `h^3(E(n)) = h^0(E(-c1-n)) = 0`,
///   so `h^0 = χ(E(n))`.
/// * `n = 0, c1 = 0`: one, the section whose zero locus defines `E`.
/// * anything else needs an actual section count and is left undetermined.
pub fn h0_acm_twist(e: &BundleDescriptor, n: i64) -> Result<H0> {
    if e.rank() != 2 {
        return Err(Error::Precondition(format!(
            "expected rank 2, got rank {}",
            e.rank()
        )));
    }
    match e.b() {
        Some(0) => {}
        Some(b) => {
            return Err(Error::Precondition(format!(
                "bundle is not normalized (b = {b})"
            )))
        }
        None => return Err(Error::NormalizationUnknown),
    }
    if !e.is_acm() {
        return Err(Error::Precondition("bundle is not flagged ACM".into()));
    }

    if n < 0 {
        return Ok(H0::Known(0));
    }
    if e.c1() + n > 0 {
        let t = e.twist(n, &Hypersurface::quintic());
        let chi = chi_rank2(t.c1(), t.c2());
        debug_assert!(chi.is_integer() && chi >= 0.into());
        return Ok(H0::Known(chi.to_integer() as u64));
    }
    if n == 0 && e.c1() == 0 {
        return Ok(H0::Known(1));
    }
    Ok(H0::Undetermined)
}
