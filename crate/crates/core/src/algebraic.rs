//! The S/T-refined algebraic coloring on `F_q²`.
//!
//! The base color of `xy` is `(x1·y1 − x2 − y2, [x1 ≠ y1])`. The refinement
//! uses, for every `α`, a split of `F_q ∖ {α}` into halves `S_α`, `T_α` that
//! separates each pair `{β, 2α − β}`; the edge `x < y` gets the labels
//! `(f_{x1}(y1), f_{y1}(x1))`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};

/// A point of `F_q²`. Ordered lexicographically by the ranks of its
/// coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Vector2 {
    pub x1: FieldElement,
    pub x2: FieldElement,
}

impl Vector2 {
    pub fn new(x1: FieldElement, x2: FieldElement) -> Result<Self> {
        if x1.modulus() != x2.modulus() {
            return Err(Error::FieldMismatch {
                left: x1.modulus(),
                right: x2.modulus(),
            });
        }
        Ok(Vector2 { x1, x2 })
    }

    pub fn from_values(field: &FieldSpec, x1: u64, x2: u64) -> Self {
        Vector2 {
            x1: field.elem(x1),
            x2: field.elem(x2),
        }
    }

    /// All `q²` vectors in increasing order.
    pub fn all(field: &FieldSpec) -> Vec<Vector2> {
        field
            .elements()
            .flat_map(|x1| field.elements().map(move |x2| Vector2 { x1, x2 }))
            .collect()
    }
}

impl PartialOrd for Vector2 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Vector2 {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.x1.rank(), self.x2.rank()).cmp(&(other.x1.rank(), other.x2.rank()))
    }
}

impl fmt::Display for Vector2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x1, self.x2)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgBaseColor {
    pub value: u32,
    /// 0 when the first coordinates agree, 1 otherwise.
    pub eq_flag: u8,
}

/// Side of the matching split. `E` marks `f_α(α)`, which the split leaves
/// undefined; it shows up exactly on edges whose first coordinates agree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StLabel {
    S,
    T,
    E,
}

impl fmt::Display for StLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StLabel::S => "S",
            StLabel::T => "T",
            StLabel::E => "E",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgModColor(pub StLabel, pub StLabel);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgColor {
    pub base: AlgBaseColor,
    pub modifier: AlgModColor,
}

impl fmt::Display for AlgColor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(({},{}),({},{}))",
            self.base.value, self.base.eq_flag, self.modifier.0, self.modifier.1
        )
    }
}

fn check_pair(x: &Vector2, y: &Vector2) -> Result<()> {
    if x.x1.modulus() != y.x1.modulus() {
        return Err(Error::FieldMismatch {
            left: x.x1.modulus(),
            right: y.x1.modulus(),
        });
    }
    if x == y {
        return Err(Error::LoopEdge);
    }
    Ok(())
}

pub fn chi1(x: &Vector2, y: &Vector2) -> Result<AlgBaseColor> {
    check_pair(x, y)?;
    let value = x.x1.mul(&y.x1)?.sub(&x.x2)?.sub(&y.x2)?;
    Ok(AlgBaseColor {
        value: value.value(),
        eq_flag: (x.x1 != y.x1) as u8,
    })
}

/// `f_α(β)`: `S` when `β` has the smaller rank of its matching pair
/// `{β, 2α − β}`, `T` otherwise, `E` when `β = α`.
pub fn f_alpha(alpha: &FieldElement, beta: &FieldElement) -> Result<StLabel> {
    if alpha == beta {
        return Ok(StLabel::E);
    }
    let partner = beta.reflect_about(alpha)?;
    Ok(if beta.rank() < partner.rank() {
        StLabel::S
    } else {
        StLabel::T
    })
}

/// `(S_α, T_α)`, each sorted by rank.
pub fn st_partition(alpha: &FieldElement) -> (Vec<FieldElement>, Vec<FieldElement>) {
    let field = FieldSpec::new(alpha.modulus()).expect("element of a validated field");
    let mut s = Vec::new();
    let mut t = Vec::new();
    for beta in field.elements() {
        match f_alpha(alpha, &beta).expect("same field") {
            StLabel::S => s.push(beta),
            StLabel::T => t.push(beta),
            StLabel::E => {}
        }
    }
    (s, t)
}

pub fn chi2(x: &Vector2, y: &Vector2) -> Result<AlgModColor> {
    check_pair(x, y)?;
    let (lo, hi) = if x < y { (x, y) } else { (y, x) };
    Ok(AlgModColor(
        f_alpha(&lo.x1, &hi.x1)?,
        f_alpha(&hi.x1, &lo.x1)?,
    ))
}

pub fn chi(x: &Vector2, y: &Vector2) -> Result<AlgColor> {
    Ok(AlgColor {
        base: chi1(x, y)?,
        modifier: chi2(x, y)?,
    })
}

/// Precomputed `f_α(β)` for every pair, built once per coloring.
#[derive(Clone, Debug)]
pub struct StTable {
    q: usize,
    labels: Vec<StLabel>,
}

impl StTable {
    pub fn new(field: &FieldSpec) -> Self {
        let q = field.modulus() as usize;
        let mut labels = Vec::with_capacity(q * q);
        for alpha in field.elements() {
            for beta in field.elements() {
                labels.push(f_alpha(&alpha, &beta).expect("same field"));
            }
        }
        StTable { q, labels }
    }

    #[inline]
    pub fn label(&self, alpha: u32, beta: u32) -> StLabel {
        self.labels[alpha as usize * self.q + beta as usize]
    }
}
