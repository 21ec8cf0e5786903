//! Numerical bundle descriptors and their calculus.
//!
//! A [`BundleDescriptor`] records rank and Chern classes in the units of
//! [`ChowClass`]: `c1` in `H`, `c2` in `ℓ` (so `c2 = deg c2(E)`), `c3` in `pt`.
//! Operations go through the Chern character, where sums are additive and
//! tensor products multiplicative.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::chowring::{ChowClass, Hypersurface};
use crate::error::{Error, Result};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BundleDescriptor {
    rank: u32,
    c1: i64,
    c2: i64,
    c3: i64,
    b: Option<i64>,
    acm: bool,
}

impl BundleDescriptor {
    pub fn new(rank: u32, c1: i64, c2: i64, c3: i64) -> Result<Self> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        if rank < 2 && c2 != 0 {
            return Err(Error::ChernAboveRank { rank, index: 2 });
        }
        if rank < 3 && c3 != 0 {
            return Err(Error::ChernAboveRank { rank, index: 3 });
        }
        Ok(Self {
            rank,
            c1,
            c2,
            c3,
            b: None,
            acm: false,
        })
    }

    pub fn rank2(c1: i64, c2: i64) -> Self {
        Self::new(2, c1, c2, 0).expect("rank 2 with c3 = 0 is valid")
    }

    /// The line bundle `O_X(n)`. Line bundles are ACM and have `b = n`.
    pub fn line(n: i64) -> Self {
        Self {
            rank: 1,
            c1: n,
            c2: 0,
            c3: 0,
            b: Some(n),
            acm: true,
        }
    }

    pub fn trivial(rank: u32) -> Result<Self> {
        let mut e = Self::new(rank, 0, 0, 0)?;
        e.b = Some(0);
        e.acm = true;
        Ok(e)
    }

    pub fn with_b(mut self, b: i64) -> Self {
        self.b = Some(b);
        self
    }

    pub fn with_acm(mut self, acm: bool) -> Self {
        self.acm = acm;
        self
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn c1(&self) -> i64 {
        self.c1
    }

    pub fn c2(&self) -> i64 {
        self.c2
    }

    pub fn c3(&self) -> i64 {
        self.c3
    }

    pub fn b(&self) -> Option<i64> {
        self.b
    }

    pub fn is_acm(&self) -> bool {
        self.acm
    }

    pub fn is_normalized(&self) -> bool {
        self.b == Some(0)
    }

    /// `(c1, c2, c3)`.
    pub fn chern(&self) -> (i64, i64, i64) {
        (self.c1, self.c2, self.c3)
    }

    /// Equality of rank and Chern classes, ignoring `b` and the ACM flag.
    pub fn same_classes(&self, other: &Self) -> bool {
        self.rank == other.rank && self.chern() == other.chern()
    }

    pub fn total_chern(&self) -> ChowClass {
        ChowClass::from_ints(1, self.c1, self.c2, self.c3)
    }

    pub fn to_ch(&self, x: &Hypersurface) -> ChernCharacter {
        let c1 = ChowClass::from_ints(0, self.c1, 0, 0);
        let c2 = ChowClass::from_ints(0, 0, self.c2, 0);
        let c3 = ChowClass::from_ints(0, 0, 0, self.c3);
        let c1_sq = x.mul(&c1, &c1);
        let c1_cu = x.mul(&c1_sq, &c1);
        let c1c2 = x.mul(&c1, &c2);

        let q = |n: i128| Rational::from_integer(n);
        let ch2 = (c1_sq - c2.scale(q(2))).scale(Rational::new(1, 2));
        let ch3 = (c1_cu - c1c2.scale(q(3)) + c3.scale(q(3))).scale(Rational::new(1, 6));
        ChernCharacter(ChowClass::from_ints(self.rank as i64, 0, 0, 0) + c1 + ch2 + ch3)
    }

    /// Dual bundle: `c_i ↦ (-1)^i c_i`.
    pub fn dual(&self) -> Self {
        Self {
            rank: self.rank,
            c1: -self.c1,
            c2: self.c2,
            c3: -self.c3,
            b: None,
            acm: self.acm,
        }
    }

    /// `E(n) = E ⊗ O_X(n)`.
    pub fn twist(&self, n: i64, x: &Hypersurface) -> Self {
        let ch = x.mul(self.to_ch(x).as_class(), &x.exp_h(n));
        let mut out = ChernCharacter(ch)
            .to_descriptor(x)
            .expect("twist of an integral class is integral");
        out.b = self.b.map(|b| b + n);
        out.acm = self.acm;
        out
    }

    pub fn tensor(&self, other: &Self, x: &Hypersurface) -> Result<Self> {
        let ch = x.mul(self.to_ch(x).as_class(), other.to_ch(x).as_class());
        let mut out = ChernCharacter(ch).to_descriptor(x)?;
        if self.rank == 1 && self.acm {
            out.acm = other.acm;
        } else if other.rank == 1 && other.acm {
            out.acm = self.acm;
        }
        Ok(out)
    }

    /// Whitney sum: ranks add, total Chern classes multiply.
    pub fn direct_sum(&self, other: &Self, x: &Hypersurface) -> Self {
        let total = x.mul(&self.total_chern(), &other.total_chern());
        let int = |k: usize| {
            let c = total.coeff(k);
            debug_assert!(c.is_integer());
            c.to_integer() as i64
        };
        Self {
            rank: self.rank + other.rank,
            c1: int(1),
            c2: int(2),
            c3: int(3),
            b: self.b.zip(other.b).map(|(a, b)| a.max(b)),
            acm: self.acm && other.acm,
        }
    }

    /// `∫ ch(E)·td(X)` as an exact rational.
    pub fn euler_characteristic(&self, x: &Hypersurface) -> Rational {
        x.mul(self.to_ch(x).as_class(), &x.todd()).integrate()
    }

    /// Hirzebruch–Riemann–Roch Euler characteristic.
    ///
    /// Classes that do not come from a bundle (for instance odd `c3 - c1·c2`
    /// on the quintic) give a non-integral value, reported as an error.
    pub fn chi_hrr(&self, x: &Hypersurface) -> Result<i64> {
        let chi = self.euler_characteristic(x);
        if chi.is_integer() {
            Ok(chi.to_integer() as i64)
        } else {
            Err(Error::NonIntegralEuler(chi))
        }
    }

    /// `2b - c1 ≤ 0`.
    pub fn is_semistable(&self) -> Result<bool> {
        let b = self.b.ok_or(Error::NormalizationUnknown)?;
        Ok(2 * b - self.c1 <= 0)
    }

    /// `2b - c1 < 0`.
    pub fn is_stable(&self) -> Result<bool> {
        let b = self.b.ok_or(Error::NormalizationUnknown)?;
        Ok(2 * b - self.c1 < 0)
    }
}

impl fmt::Display for BundleDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "rank {} ({}, {}, {})",
            self.rank, self.c1, self.c2, self.c3
        )
    }
}

/// Closed-form Riemann–Roch for a rank-2 bundle on the quintic threefold:
/// `χ = 5/6·c1³ − 1/2·c1·c2 + 25/6·c1`.
///
/// Only meaningful for `r = 5`; other degrees go through
/// [`BundleDescriptor::chi_hrr`].
pub fn chi_rank2(c1: i64, c2: i64) -> Rational {
    let c1 = Rational::from_integer(c1 as i128);
    let c2 = Rational::from_integer(c2 as i128);
    Rational::new(5, 6) * c1 * c1 * c1 - Rational::new(1, 2) * c1 * c2 + Rational::new(25, 6) * c1
}

/// Chern character `(ch0, ch1, ch2, ch3)` in `(1, H, ℓ, pt)` units.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChernCharacter(ChowClass);

impl ChernCharacter {
    pub fn new(class: ChowClass) -> Self {
        Self(class)
    }

    pub fn as_class(&self) -> &ChowClass {
        &self.0
    }

    pub fn ch(&self, k: usize) -> Rational {
        self.0.coeff(k)
    }

    /// Inverse Newton identities:
    /// `c2 = c1²/2 − ch2`, `c3 = 2·ch3 − c1³/3 + c1·c2`.
    pub fn to_descriptor(&self, x: &Hypersurface) -> Result<BundleDescriptor> {
        let rank = self.ch(0);
        if !rank.is_integer() || rank <= Rational::zero() {
            return Err(Error::NotBundleClass(format!(
                "rank {rank} is not a positive integer"
            )));
        }
        let c1 = self.0.part(1);
        let c1_sq = x.mul(&c1, &c1);
        let c2 = c1_sq.scale(Rational::new(1, 2)) - self.0.part(2);
        let c1_cu = x.mul(&c1_sq, &c1);
        let c3 = self.0.part(3).scale(Rational::from_integer(2)) - c1_cu.scale(Rational::new(1, 3))
            + x.mul(&c1, &c2);

        let integral = |name: &str, v: Rational| -> Result<i64> {
            if v.is_integer() {
                Ok(v.to_integer() as i64)
            } else {
                Err(Error::NotBundleClass(format!(
                    "{name} = {v} is not integral"
                )))
            }
        };
        let rank = integral("rank", rank)?;
        let rank = u32::try_from(rank)
            .map_err(|_| Error::NotBundleClass(format!("rank {rank} out of range")))?;
        let c1 = integral("c1", self.ch(1))?;
        let c2 = integral("c2", c2.coeff(2))?;
        let c3 = integral("c3", c3.coeff(3))?;
        BundleDescriptor::new(rank, c1, c2, c3).map_err(|e| Error::NotBundleClass(e.to_string()))
    }
}

impl fmt::Display for ChernCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Polynomial binomial coefficient `C(x, k)`, valid for negative `x`.
pub fn binomial_poly(x: i64, k: u32) -> Rational {
    let mut acc = Rational::one();
    for i in 0..k as i64 {
        acc *= Rational::from_integer((x - i) as i128);
    }
    let fact: i128 = (1..=k as i128).product();
    acc / Rational::from_integer(fact)
}

/// `c3 ≡ c1·c2 (mod 2)`, the condition for an integral χ on the quintic.
pub fn parity_ok(c1: i64, c2: i64, c3: i64) -> bool {
    (c3 - c1 * c2).is_even()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i128, d: i128) -> Rational {
        Rational::new(n, d)
    }

    const X5: Hypersurface = Hypersurface::quintic();

    #[test]
    fn chern_character_examples() {
        let ch = BundleDescriptor::rank2(0, 0).to_ch(&X5);
        assert_eq!(ch.as_class(), &ChowClass::from_ints(2, 0, 0, 0));

        let ch = BundleDescriptor::rank2(4, 30).to_ch(&X5);
        assert_eq!(
            ch.as_class(),
            &ChowClass::new(q(2, 1), q(4, 1), q(10, 1), q(-20, 3))
        );

        let ch = BundleDescriptor::rank2(1, 8).to_ch(&X5);
        assert_eq!(
            ch.as_class(),
            &ChowClass::new(q(2, 1), q(1, 1), q(-11, 2), q(-19, 6))
        );
    }

    #[test]
    fn from_ch_examples() {
        let e = ChernCharacter::new(ChowClass::from_ints(2, 0, 0, 0))
            .to_descriptor(&X5)
            .unwrap();
        assert_eq!(e, BundleDescriptor::rank2(0, 0));

        let f = BundleDescriptor::rank2(4, 30);
        assert_eq!(f.to_ch(&X5).to_descriptor(&X5).unwrap(), f);

        let prod = X5.mul(
            f.to_ch(&X5).as_class(),
            BundleDescriptor::rank2(1, 8).dual().to_ch(&X5).as_class(),
        );
        let t = ChernCharacter::new(prod).to_descriptor(&X5).unwrap();
        assert_eq!(t.rank(), 4);
        assert_eq!(t.c1(), 6);
    }

    #[test]
    fn from_ch_rejects_fractional_classes() {
        let half = ChernCharacter::new(ChowClass::new(q(1, 1), q(1, 2), q(0, 1), q(0, 1)));
        assert!(matches!(
            half.to_descriptor(&X5),
            Err(Error::NotBundleClass(_))
        ));
        let zero_rank = ChernCharacter::new(ChowClass::zero());
        assert!(matches!(
            zero_rank.to_descriptor(&X5),
            Err(Error::NotBundleClass(_))
        ));
        // rank 1 with a codimension-2 class left over
        let bad = ChernCharacter::new(ChowClass::from_ints(1, 0, 3, 0));
        assert!(matches!(
            bad.to_descriptor(&X5),
            Err(Error::NotBundleClass(_))
        ));
    }

    #[test]
    fn descriptor_invariants() {
        assert_eq!(BundleDescriptor::new(0, 0, 0, 0), Err(Error::ZeroRank));
        assert_eq!(
            BundleDescriptor::new(1, 1, 2, 0),
            Err(Error::ChernAboveRank { rank: 1, index: 2 })
        );
        assert_eq!(
            BundleDescriptor::new(2, 1, 8, 7),
            Err(Error::ChernAboveRank { rank: 2, index: 3 })
        );
    }

    #[test]
    fn dual_examples() {
        assert_eq!(
            BundleDescriptor::rank2(1, 8).dual(),
            BundleDescriptor::rank2(-1, 8)
        );
        assert_eq!(
            BundleDescriptor::rank2(0, 3).dual(),
            BundleDescriptor::rank2(0, 3)
        );
    }

    #[test]
    fn twist_examples() {
        let f = BundleDescriptor::rank2(4, 30).with_b(0);
        let t = f.twist(-1, &X5);
        assert_eq!(t.chern(), (2, 15, 0));
        assert_eq!(t.b(), Some(-1));
        assert_eq!(f.twist(0, &X5), f);
        assert_eq!(
            BundleDescriptor::rank2(1, 8).twist(1, &X5).chern(),
            (3, 18, 0)
        );
    }

    #[test]
    fn tensor_examples() {
        let e = BundleDescriptor::rank2(4, 30);
        assert!(e
            .tensor(&BundleDescriptor::line(0), &X5)
            .unwrap()
            .same_classes(&e));

        let t = e
            .tensor(&BundleDescriptor::rank2(1, 8).dual(), &X5)
            .unwrap();
        assert_eq!(t.rank(), 4);
        assert_eq!(t.chi_hrr(&X5), Ok(-14));

        let t = BundleDescriptor::rank2(1, 8)
            .tensor(&BundleDescriptor::rank2(0, 5).dual(), &X5)
            .unwrap();
        assert_eq!(t.chi_hrr(&X5), Ok(-3));
    }

    #[test]
    fn direct_sum_examples() {
        let g = BundleDescriptor::rank2(4, 30).direct_sum(&BundleDescriptor::rank2(1, 8), &X5);
        assert_eq!((g.rank(), g.chern()), (4, (5, 58, 62)));

        let g = BundleDescriptor::rank2(2, 15).direct_sum(&BundleDescriptor::rank2(0, 3), &X5);
        assert_eq!((g.rank(), g.chern()), (4, (2, 18, 6)));

        let o = BundleDescriptor::line(0);
        let g = o.direct_sum(&o, &X5);
        assert_eq!((g.rank(), g.chern()), (2, (0, 0, 0)));
    }

    #[test]
    fn direct_sum_tracks_normalization() {
        let a = BundleDescriptor::rank2(4, 30).with_b(-1);
        let b = BundleDescriptor::rank2(1, 8).with_b(0);
        assert_eq!(a.direct_sum(&b, &X5).b(), Some(0));
        assert_eq!(a.direct_sum(&BundleDescriptor::rank2(0, 3), &X5).b(), None);
    }

    #[test]
    fn line_bundle_chi() {
        let chi = |n| BundleDescriptor::line(n).chi_hrr(&X5).unwrap();
        assert_eq!(chi(0), 0);
        assert_eq!(chi(1), 5);
        assert_eq!(chi(5), 125);
        for n in -10..=10 {
            let oracle = binomial_poly(n + 4, 4) - binomial_poly(n - 1, 4);
            assert_eq!(Rational::from_integer(chi(n) as i128), oracle, "n = {n}");
        }
    }

    #[test]
    fn case_two_tensor_chi() {
        let t = BundleDescriptor::rank2(4, 30)
            .twist(-1, &X5)
            .tensor(&BundleDescriptor::rank2(0, 3).dual(), &X5)
            .unwrap();
        assert_eq!(t.chi_hrr(&X5), Ok(-6));
    }

    #[test]
    fn non_integral_chi_is_reported() {
        let e = BundleDescriptor::new(3, 0, 0, 1).unwrap();
        assert_eq!(e.chi_hrr(&X5), Err(Error::NonIntegralEuler(q(1, 2))));
        assert!(!parity_ok(0, 0, 1));
    }

    #[test]
    fn closed_form_values() {
        for c2 in -5..=50 {
            assert_eq!(chi_rank2(0, c2), q(0, 1));
        }
        assert_eq!(chi_rank2(4, 30), q(10, 1));
        assert_eq!(chi_rank2(2, 14), q(1, 1));
    }

    #[test]
    fn stability_predicates() {
        let e = BundleDescriptor::rank2(1, 8).with_b(0);
        assert_eq!(e.is_stable(), Ok(true));

        let e = BundleDescriptor::rank2(0, 3).with_b(0);
        assert_eq!(e.is_semistable(), Ok(true));
        assert_eq!(e.is_stable(), Ok(false));

        let f = BundleDescriptor::rank2(4, 30).with_b(0).twist(-1, &X5);
        assert_eq!((f.b(), f.c1()), (Some(-1), 2));
        assert_eq!(f.is_stable(), Ok(true));

        assert_eq!(
            BundleDescriptor::rank2(1, 8).is_semistable(),
            Err(Error::NormalizationUnknown)
        );
    }

    fn descriptor() -> impl Strategy<Value = BundleDescriptor> {
        (1u32..=4, -10i64..=10, -100i64..=100, -100i64..=100).prop_map(|(rank, c1, c2, c3)| {
            let c2 = if rank >= 2 { c2 } else { 0 };
            let c3 = if rank >= 3 { c3 } else { 0 };
            BundleDescriptor::new(rank, c1, c2, c3).unwrap()
        })
    }

    proptest! {
        #[test]
        fn closed_form_is_hrr(c1 in -20i64..=20, c2 in -200i64..=200) {
            let e = BundleDescriptor::rank2(c1, c2);
            prop_assert_eq!(e.euler_characteristic(&X5), chi_rank2(c1, c2));
        }

        #[test]
        fn round_trip(e in descriptor(), r in 1i64..=6) {
            let x = Hypersurface::new(r).unwrap();
            prop_assert_eq!(e.to_ch(&x).to_descriptor(&x).unwrap(), e);
        }

        #[test]
        fn twist_composes(e in descriptor(), n in -5i64..=5, m in -5i64..=5, r in 1i64..=6) {
            let x = Hypersurface::new(r).unwrap();
            prop_assert_eq!(e.twist(n, &x).twist(m, &x), e.twist(n + m, &x));
            prop_assert_eq!(e.twist(n, &x).dual(), e.dual().twist(-n, &x));
        }

        #[test]
        fn whitney_agrees_with_character(e in descriptor(), f in descriptor(), r in 1i64..=6) {
            let x = Hypersurface::new(r).unwrap();
            let sum = e.direct_sum(&f, &x);
            let via_ch = ChernCharacter::new(
                e.to_ch(&x).as_class().clone() + f.to_ch(&x).as_class().clone(),
            )
            .to_descriptor(&x)
            .unwrap();
            prop_assert!(sum.same_classes(&via_ch));
        }

        #[test]
        fn serre_duality(e in descriptor(), r in 1i64..=6) {
            let x = Hypersurface::new(r).unwrap();
            let dual_k = e.dual().twist(r - 5, &x);
            prop_assert_eq!(dual_k.euler_characteristic(&x), -e.euler_characteristic(&x));
        }
    }
}
