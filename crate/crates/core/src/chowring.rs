//! Numerical Chow ring of a smooth hypersurface threefold `X_r ⊂ P^4`.
//!
//! Classes are written in the basis `(1, H, ℓ, pt)` where `H` is the
//! hyperplane class, `ℓ` the class of a line-degree curve (`ℓ·H = pt`) and
//! `pt` the class of a point. The multiplication table is
//!
//! ```text
//! H·H = r·ℓ     H·ℓ = pt     (codimension > 3 vanishes)
//! ```
//!
//! With this basis the integer `deg c2(E) = c2(E)·H` is literally the
//! `ℓ`-coordinate of `c2(E)`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::Rational;

/// A smooth hypersurface of degree `r` in `P^4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Hypersurface {
    degree: i64,
}

impl Hypersurface {
    pub fn new(degree: i64) -> Result<Self> {
        if degree < 1 {
            return Err(Error::InvalidDegree(degree));
        }
        Ok(Self { degree })
    }

    /// The quintic threefold.
    pub const fn quintic() -> Self {
        Self { degree: 5 }
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    fn r(&self) -> Rational {
        Rational::from_integer(self.degree as i128)
    }

    /// Truncated graded product.
    pub fn mul(&self, x: &ChowClass, y: &ChowClass) -> ChowClass {
        let [a0, a1, a2, a3] = x.coeffs;
        let [b0, b1, b2, b3] = y.coeffs;
        ChowClass::new(
            a0 * b0,
            a0 * b1 + a1 * b0,
            a0 * b2 + a2 * b0 + self.r() * a1 * b1,
            a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1,
        )
    }

    pub fn pow(&self, x: &ChowClass, exp: u32) -> ChowClass {
        (0..exp).fold(ChowClass::one(), |acc, _| self.mul(&acc, x))
    }

    /// Inverse of a class with invertible degree-0 part.
    ///
    /// Writes `x = a0·(1 + n)` with `n` nilpotent and sums `1 - n + n² - n³`.
    pub fn inverse(&self, x: &ChowClass) -> Option<ChowClass> {
        let a0 = x.coeffs[0];
        if a0.is_zero() {
            return None;
        }
        let inv0 = a0.recip();
        let n = x.scale(inv0) - ChowClass::one();
        let n2 = self.mul(&n, &n);
        let n3 = self.mul(&n2, &n);
        Some((ChowClass::one() - n + n2 - n3).scale(inv0))
    }

    /// Chern character of `O_X(n)`: `(1, n, r·n²/2, r·n³/6)`.
    pub fn exp_h(&self, n: i64) -> ChowClass {
        let n = Rational::from_integer(n as i128);
        let r = self.r();
        ChowClass::new(
            Rational::one(),
            n,
            r * n * n / Rational::from_integer(2),
            r * n * n * n / Rational::from_integer(6),
        )
    }

    /// Total Chern class of the tangent bundle, `(1+H)^5 / (1+rH)`.
    pub fn tangent_chern(&self) -> ChowClass {
        let h = ChowClass::hyperplane();
        let ambient = self.pow(&(ChowClass::one() + h.clone()), 5);
        let normal = ChowClass::one() + h.scale(self.r());
        let normal_inv = self
            .inverse(&normal)
            .expect("1 + rH has unit constant term");
        self.mul(&ambient, &normal_inv)
    }

    /// Todd class of the tangent bundle.
    pub fn todd(&self) -> ChowClass {
        let c = self.tangent_chern();
        let c1 = c.part(1);
        let c2 = c.part(2);
        let half = Rational::new(1, 2);
        let twelfth = Rational::new(1, 12);
        let td2 = (self.mul(&c1, &c1) + c2.clone()).scale(twelfth);
        let td3 = self.mul(&c1, &c2).scale(Rational::new(1, 24));
        ChowClass::one() + c1.scale(half) + td2 + td3
    }
}

impl Default for Hypersurface {
    fn default() -> Self {
        Self::quintic()
    }
}

/// A class `a0 + a1·H + a2·ℓ + a3·pt` with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ChowClass {
    coeffs: [Rational; 4],
}

impl ChowClass {
    pub fn new(a0: Rational, a1: Rational, a2: Rational, a3: Rational) -> Self {
        Self {
            coeffs: [a0, a1, a2, a3],
        }
    }

    pub fn from_ints(a0: i64, a1: i64, a2: i64, a3: i64) -> Self {
        let q = |v: i64| Rational::from_integer(v as i128);
        Self::new(q(a0), q(a1), q(a2), q(a3))
    }

    pub fn one() -> Self {
        Self::from_ints(1, 0, 0, 0)
    }

    pub fn hyperplane() -> Self {
        Self::from_ints(0, 1, 0, 0)
    }

    pub fn coeffs(&self) -> &[Rational; 4] {
        &self.coeffs
    }

    /// Coefficient in codimension `k` (0..=3).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs[k]
    }

    /// The homogeneous codimension-`k` component as a class.
    pub fn part(&self, k: usize) -> Self {
        let mut coeffs = [Rational::zero(); 4];
        coeffs[k] = self.coeffs[k];
        Self { coeffs }
    }

    pub fn scale(&self, s: Rational) -> Self {
        Self {
            coeffs: self.coeffs.map(|c| c * s),
        }
    }

    /// Degree map: the `pt` coefficient.
    pub fn integrate(&self) -> Rational {
        self.coeffs[3]
    }
}

impl Zero for ChowClass {
    fn zero() -> Self {
        Self::default()
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

impl Add for ChowClass {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

impl AddAssign for ChowClass {
    fn add_assign(&mut self, rhs: Self) {
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs) {
            *a += b;
        }
    }
}

impl Sub for ChowClass {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for ChowClass {
    type Output = Self;

    fn neg(self) -> Self {
        Self {
            coeffs: self.coeffs.map(|c| -c),
        }
    }
}

impl Mul<Rational> for ChowClass {
    type Output = Self;

    fn mul(self, rhs: Rational) -> Self {
        self.scale(rhs)
    }
}

impl fmt::Display for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a0, a1, a2, a3] = &self.coeffs;
        write!(f, "{a0} + {a1}·H + {a2}·ℓ + {a3}·pt")
    }
}
