//! Prime field arithmetic for the algebraic half of the coloring.
//!
//! Elements carry their modulus so that mixing two fields is caught at the
//! call site instead of silently producing garbage residues. Moduli are small
//! (the exhaustive verifier tops out at q = 13), so everything is `u32` and
//! products fit in `u64` without any reduction tricks.

use std::fmt;

use crate::error::{Error, Result};

/// Largest modulus accepted by [`FieldSpec::new`].
pub const MAX_MODULUS: u32 = 1 << 16;

/// An odd prime field `F_q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    q: u32,
}

impl FieldSpec {
    /// Validates that `q` is an odd prime below [`MAX_MODULUS`].
    pub fn new(q: u32) -> Result<Self> {
        if !(3..MAX_MODULUS).contains(&q) || q.is_multiple_of(2) || !is_prime(q) {
            return Err(Error::InvalidModulus(q));
        }
        Ok(FieldSpec { q })
    }

    #[inline]
    pub fn modulus(&self) -> u32 {
        self.q
    }

    /// The residue `value mod q` as a field element.
    #[inline]
    pub fn elem(&self, value: u64) -> FieldElement {
        FieldElement {
            value: (value % self.q as u64) as u32,
            q: self.q,
        }
    }

    /// Maps a signed integer into the field (so `-3` becomes `q - 3`).
    pub fn elem_signed(&self, value: i64) -> FieldElement {
        let q = self.q as i64;
        self.elem(value.rem_euclid(q) as u64)
    }

    #[inline]
    pub fn zero(&self) -> FieldElement {
        self.elem(0)
    }

    #[inline]
    pub fn one(&self) -> FieldElement {
        self.elem(1)
    }

    /// All elements in ascending rank order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q).map(move |v| FieldElement {
            value: v,
            q: self.q,
        })
    }

    /// Bits needed to write any rank, i.e. `ceil(log2 q)`.
    pub fn rank_bits(&self) -> u32 {
        u32::BITS - (self.q - 1).leading_zeros()
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.q)
    }
}

/// Deterministic trial division; fine for the moduli we accept.
pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u32;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// A residue in `[0, q)` tagged with its modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u32,
    q: u32,
}

/// Sign selector for [`FieldElement::add_sub`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl FieldElement {
    #[inline]
    pub fn value(&self) -> u32 {
        self.value
    }

    #[inline]
    pub fn modulus(&self) -> u32 {
        self.q
    }

    #[inline]
    fn check(&self, other: &FieldElement) -> Result<()> {
        if self.q != other.q {
            return Err(Error::FieldMismatch {
                left: self.q,
                right: other.q,
            });
        }
        Ok(())
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        let v = (self.value as u64 * other.value as u64) % self.q as u64;
        Ok(FieldElement {
            value: v as u32,
            q: self.q,
        })
    }

    pub fn add_sub(&self, other: &FieldElement, sign: Sign) -> Result<FieldElement> {
        self.check(other)?;
        let v = match sign {
            Sign::Plus => (self.value + other.value) % self.q,
            Sign::Minus => (self.value + self.q - other.value) % self.q,
        };
        Ok(FieldElement {
            value: v,
            q: self.q,
        })
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.add_sub(other, Sign::Plus)
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.add_sub(other, Sign::Minus)
    }

    /// Position in the field's linear order. The order is the natural residue
    /// order, so this is the residue itself.
    #[inline]
    pub fn rank(&self) -> u32 {
        self.value
    }

    /// The reflection `2 * center - self`.
    pub fn reflect_about(&self, center: &FieldElement) -> Result<FieldElement> {
        self.check(center)?;
        let twice = (2 * center.value as u64) % self.q as u64;
        let v = (twice + self.q as u64 - self.value as u64) % self.q as u64;
        Ok(FieldElement {
            value: v as u32,
            q: self.q,
        })
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}
