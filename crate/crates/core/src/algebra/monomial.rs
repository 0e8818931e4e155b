//! Monomials as packed exponent vectors.
//!
//! Exponents of `x_1 … x_16` live in the bytes of a `u128`, `x_i` in byte
//! `i − 1`. Exponents stay below 128, so lane-wise comparisons can be done with
//! borrow-free word arithmetic, and integer comparison of the packed words is
//! exactly the lexicographic order with `x_n ≻ x_{n−1} ≻ ⋯ ≻ x_1`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

pub const MAX_VARS: usize = 16;
pub const MAX_EXPONENT: u32 = 127;

const HIGH_BITS: u128 = 0x8080_8080_8080_8080_8080_8080_8080_8080;
const LOW_BITS: u128 = 0x0101_0101_0101_0101_0101_0101_0101_0101;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    packed: u128,
    degree: u16,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { packed: 0, degree: 0 };

    pub fn one() -> Self {
        Self::ONE
    }

    /// `x_i` for a 0-based index `i`.
    pub fn var(i: usize) -> Self {
        assert!(i < MAX_VARS, "variable index {i} out of range");
        Monomial { packed: 1u128 << (8 * i), degree: 1 }
    }

    pub fn var_pow(i: usize, e: u32) -> Result<Self> {
        if i >= MAX_VARS {
            return Err(Error::TooManyVariables(i + 1));
        }
        if e > MAX_EXPONENT {
            return Err(Error::ExponentOverflow);
        }
        Ok(Monomial { packed: (e as u128) << (8 * i), degree: e as u16 })
    }

    pub fn from_exponents(exps: &[u32]) -> Result<Self> {
        if exps.len() > MAX_VARS {
            return Err(Error::TooManyVariables(exps.len()));
        }
        let mut packed = 0u128;
        let mut degree = 0u16;
        for (i, &e) in exps.iter().enumerate() {
            if e > MAX_EXPONENT {
                return Err(Error::ExponentOverflow);
            }
            packed |= (e as u128) << (8 * i);
            degree += e as u16;
        }
        Ok(Monomial { packed, degree })
    }

    /// `x^F`: the squarefree monomial on a set of 0-based indices.
    pub fn squarefree(indices: impl IntoIterator<Item = usize>) -> Self {
        let mut m = Monomial::ONE;
        for i in indices {
            let v = Monomial::var(i);
            assert!(!v.divides(&m), "repeated index {i}");
            m = m.mul(&v).expect("squarefree monomial fits");
        }
        m
    }

    #[inline]
    pub fn packed(&self) -> u128 {
        self.packed
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree as u32
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u32 {
        ((self.packed >> (8 * i)) & 0xff) as u32
    }

    pub fn exponents(&self, nvars: usize) -> Vec<u32> {
        (0..nvars).map(|i| self.exponent(i)).collect()
    }

    pub fn is_one(&self) -> bool {
        self.packed == 0
    }

    /// Number of variables with a nonzero exponent.
    pub fn support_len(&self) -> usize {
        (0..MAX_VARS).filter(|&i| self.exponent(i) > 0).count()
    }

    /// 0-based indices of variables with nonzero exponent, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..MAX_VARS).filter(|&i| self.exponent(i) > 0).collect()
    }

    /// Variables with exponent at least 2.
    pub fn deep_support(&self) -> Vec<usize> {
        (0..MAX_VARS).filter(|&i| self.exponent(i) >= 2).collect()
    }

    /// One past the largest variable index in use.
    pub fn span(&self) -> usize {
        if self.packed == 0 {
            0
        } else {
            16 - (self.packed.leading_zeros() as usize / 8)
        }
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        ((other.packed | HIGH_BITS).wrapping_sub(self.packed) & HIGH_BITS) == HIGH_BITS
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        let packed = self.packed + other.packed;
        if packed & HIGH_BITS != 0 {
            return Err(Error::ExponentOverflow);
        }
        Ok(Monomial { packed, degree: self.degree + other.degree })
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if other.divides(self) {
            Some(Monomial { packed: self.packed - other.packed, degree: self.degree - other.degree })
        } else {
            None
        }
    }

    #[inline]
    fn ge_mask(a: u128, b: u128) -> u128 {
        let m = ((a | HIGH_BITS).wrapping_sub(b) & HIGH_BITS) >> 7;
        m * 0xff
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mask = Self::ge_mask(self.packed, other.packed);
        let packed = (self.packed & mask) | (other.packed & !mask);
        Monomial { packed, degree: lane_sum(packed) }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mask = Self::ge_mask(self.packed, other.packed);
        let packed = (other.packed & mask) | (self.packed & !mask);
        Monomial { packed, degree: lane_sum(packed) }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.gcd(other).is_one()
    }

    /// Squarefree part: every nonzero exponent replaced by 1.
    pub fn radical(&self) -> Monomial {
        let mut nonzero = self.packed | (self.packed >> 1);
        nonzero |= nonzero >> 2;
        nonzero |= nonzero >> 4;
        let packed = nonzero & LOW_BITS;
        Monomial { packed, degree: lane_sum(packed) }
    }

    /// Drops variable `i` (sets its exponent to zero).
    pub fn without_var(&self, i: usize) -> Monomial {
        let e = self.exponent(i);
        Monomial { packed: self.packed & !(0xffu128 << (8 * i)), degree: self.degree - e as u16 }
    }

    pub fn cmp_lex(&self, other: &Monomial) -> Ordering {
        self.packed.cmp(&other.packed)
    }

    pub fn display(&self) -> MonomialDisplay<'_> {
        MonomialDisplay(self)
    }
}

#[inline]
fn lane_sum(packed: u128) -> u16 {
    packed.to_le_bytes().iter().map(|&b| b as u16).sum()
}

pub struct MonomialDisplay<'a>(&'a Monomial);

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.0;
        if m.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for i in 0..MAX_VARS {
            let e = m.exponent(i);
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display())
    }
}

/// Total monomial orders. Both use the variable priority
/// `x_n ≻ x_{n−1} ≻ ⋯ ≻ x_1`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Pure lexicographic order; the order used throughout the crate.
    #[default]
    Lex,
    /// Degree first, ties broken by reverse lexicographic order on the
    /// lowest-priority variable. Kept as an extension point; elimination
    /// routines always work in [`MonomialOrder::Lex`].
    DegRevLex,
}

impl MonomialOrder {
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.packed.cmp(&b.packed),
            MonomialOrder::DegRevLex => match a.degree.cmp(&b.degree) {
                Ordering::Equal => {
                    let diff = a.packed ^ b.packed;
                    if diff == 0 {
                        return Ordering::Equal;
                    }
                    let lane = diff.trailing_zeros() as usize / 8;
                    b.exponent(lane).cmp(&a.exponent(lane))
                }
                o => o,
            },
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::Lex => "lex",
            MonomialOrder::DegRevLex => "degrevlex",
        }
    }
}
