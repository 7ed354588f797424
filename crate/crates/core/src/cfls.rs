//! The sign-refined CFLS coloring on β²-bit strings.
//!
//! A vertex is a string of β² bits read as β blocks of β bits each. Blocks and
//! bit positions inside a block are 1-indexed, with position 1 the most
//! significant bit, so "first index of difference" reads literally.
//!
//! The base color of an edge records the first block where the endpoints
//! differ together with the unordered pair of blocks found there, and for
//! every block the first bit position where the endpoints disagree (0 when the
//! blocks agree). The sign vector compares the blocks of the smaller endpoint
//! with those of the larger one.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported block size (β² bits must fit a `u64`).
pub const MAX_BETA: usize = 8;

/// A β²-bit vertex. Bit 0 of the string is the most significant bit of
/// `value`, so integer order on `value` is the vertex order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BitVertex {
    beta: u8,
    value: u64,
}

impl BitVertex {
    pub fn new(beta: usize, value: u64) -> Result<Self> {
        if beta == 0 || beta > MAX_BETA {
            return Err(Error::InvalidParameter(format!(
                "block size {beta} outside 1..={MAX_BETA}"
            )));
        }
        let len = beta * beta;
        if len < 64 && value >> len != 0 {
            return Err(Error::InvalidParameter(format!(
                "value {value} does not fit in {len} bits"
            )));
        }
        Ok(BitVertex {
            beta: beta as u8,
            value,
        })
    }

    /// Parses a string of `0`/`1` characters; `|` and spaces are ignored so
    /// block-separated literals like `001|010|000` work.
    pub fn parse(beta: usize, bits: &str) -> Result<Self> {
        let mut value = 0u64;
        let mut len = 0usize;
        for ch in bits.chars() {
            match ch {
                '0' | '1' => {
                    value = (value << 1) | (ch == '1') as u64;
                    len += 1;
                }
                '|' | ' ' | '_' => {}
                _ => {
                    return Err(Error::InvalidParameter(format!(
                        "unexpected character {ch:?} in bit string"
                    )))
                }
            }
        }
        if len != beta * beta {
            return Err(Error::BadLength {
                len,
                expected: beta * beta,
            });
        }
        BitVertex::new(beta, value)
    }

    #[inline]
    pub fn beta(&self) -> usize {
        self.beta as usize
    }

    #[inline]
    pub fn value(&self) -> u64 {
        self.value
    }

    /// The `k`-th block (1-indexed) as a β-bit integer.
    pub fn block(&self, k: usize) -> Result<u32> {
        let beta = self.beta();
        if k == 0 || k > beta {
            return Err(Error::BlockOutOfRange { index: k, beta });
        }
        Ok(self.block_unchecked(k))
    }

    #[inline]
    fn block_unchecked(&self, k: usize) -> u32 {
        let beta = self.beta();
        let shift = beta * beta - k * beta;
        ((self.value >> shift) & ((1u64 << beta) - 1)) as u32
    }

    /// All 2^{β²} vertices in increasing order.
    pub fn all(beta: usize) -> Result<Vec<BitVertex>> {
        if beta * beta > 20 {
            return Err(Error::InvalidParameter(format!(
                "refusing to list 2^{} vertices",
                beta * beta
            )));
        }
        (0..1u64 << (beta * beta))
            .map(|v| BitVertex::new(beta, v))
            .collect()
    }
}

impl PartialOrd for BitVertex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BitVertex {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.beta, self.value).cmp(&(other.beta, other.value))
    }
}

impl fmt::Display for BitVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let beta = self.beta();
        for k in 1..=beta {
            if k > 1 && f.alternate() {
                f.write_str("|")?;
            }
            write!(f, "{:0width$b}", self.block_unchecked(k), width = beta)?;
        }
        Ok(())
    }
}

/// `(i, {u, v})`: first differing block and the unordered pair of blocks
/// there. The pair is stored with the smaller block first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlockHead {
    pub index: u8,
    pub low: u32,
    pub high: u32,
}

impl BlockHead {
    pub fn contains(&self, block: u32) -> bool {
        self.low == block || self.high == block
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CflsBaseColor {
    pub head: BlockHead,
    /// `diffs[k-1]` is the first differing bit position in block `k`, or 0.
    pub diffs: Vec<u8>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignVector {
    /// Each entry is `+1` or `-1`.
    pub deltas: Vec<i8>,
}

/// Full CFLS edge color `(base, signs)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CflsColor {
    pub base: CflsBaseColor,
    pub signs: SignVector,
}

fn check_pair(x: &BitVertex, y: &BitVertex) -> Result<()> {
    if x.beta != y.beta {
        return Err(Error::BetaMismatch {
            left: x.beta(),
            right: y.beta(),
        });
    }
    if x.value == y.value {
        return Err(Error::LoopEdge);
    }
    Ok(())
}

/// 1-indexed position of the first differing bit of two β-bit blocks, or 0.
#[inline]
fn first_diff(beta: usize, u: u32, v: u32) -> u8 {
    let x = u ^ v;
    if x == 0 {
        0
    } else {
        (beta as u32 - (u32::BITS - x.leading_zeros()) + 1) as u8
    }
}

pub fn phi1(x: &BitVertex, y: &BitVertex) -> Result<CflsBaseColor> {
    check_pair(x, y)?;
    let beta = x.beta();
    let mut head = None;
    let diffs = (1..=beta)
        .map(|k| {
            let (u, v) = (x.block_unchecked(k), y.block_unchecked(k));
            if u != v && head.is_none() {
                head = Some(BlockHead {
                    index: k as u8,
                    low: u.min(v),
                    high: u.max(v),
                });
            }
            first_diff(beta, u, v)
        })
        .collect();
    Ok(CflsBaseColor {
        head: head.expect("distinct vertices differ in some block"),
        diffs,
    })
}

pub fn phi2(x: &BitVertex, y: &BitVertex) -> Result<SignVector> {
    check_pair(x, y)?;
    let (lo, hi) = if x < y { (x, y) } else { (y, x) };
    let deltas = (1..=x.beta())
        .map(|k| {
            if lo.block_unchecked(k) <= hi.block_unchecked(k) {
                1
            } else {
                -1
            }
        })
        .collect();
    Ok(SignVector { deltas })
}

pub fn phi(x: &BitVertex, y: &BitVertex) -> Result<CflsColor> {
    Ok(CflsColor {
        base: phi1(x, y)?,
        signs: phi2(x, y)?,
    })
}

/// `β^{β+1} · 2^{3β}`, the number of colors the refined coloring can use.
pub fn color_bound(beta: usize) -> u128 {
    (beta as u128).pow(beta as u32 + 1) * (1u128 << (3 * beta))
}

impl fmt::Display for CflsColor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let beta = self.base.diffs.len();
        let h = &self.base.head;
        write!(
            f,
            "(({},{{{:0w$b},{:0w$b}}}),(",
            h.index,
            h.low,
            h.high,
            w = beta
        )?;
        for (k, d) in self.base.diffs.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str("),(")?;
        for (k, s) in self.signs.deltas.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            f.write_str(if *s > 0 { "+" } else { "-" })?;
        }
        f.write_str("))")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{HashMap, HashSet};

    fn v(bits: &str) -> BitVertex {
        BitVertex::parse(3, bits).unwrap()
    }

    #[test]
    fn block_examples() {
        assert_eq!(v("001010000").block(1).unwrap(), 0b001);
        assert_eq!(v("001010000").block(3).unwrap(), 0b000);
        assert_eq!(v("011010000").block(2).unwrap(), 0b010);
        assert!(matches!(
            v("011010000").block(4),
            Err(Error::BlockOutOfRange { index: 4, beta: 3 })
        ));
        assert!(v("011010000").block(0).is_err());
    }

    #[test]
    fn phi1_examples() {
        let c = phi1(&v("001|010|000"), &v("011|010|000")).unwrap();
        assert_eq!(
            c.head,
            BlockHead {
                index: 1,
                low: 0b001,
                high: 0b011
            }
        );
        assert_eq!(c.diffs, vec![2, 0, 0]);

        let c = phi1(&v("001|010|000"), &v("001|011|000")).unwrap();
        assert_eq!(
            c.head,
            BlockHead {
                index: 2,
                low: 0b010,
                high: 0b011
            }
        );
        assert_eq!(c.diffs, vec![0, 3, 0]);

        let c = phi1(&v("101|110|010"), &v("101|110|011")).unwrap();
        assert_eq!(c.head.index, 3);
        assert_eq!(c.diffs, vec![0, 0, 3]);
    }

    #[test]
    fn phi2_examples() {
        let s = phi2(&v("001|100|000"), &v("011|010|000")).unwrap();
        assert_eq!(s.deltas, vec![1, -1, 1]);
        let s = phi2(&v("001|010|000"), &v("011|010|000")).unwrap();
        assert_eq!(s.deltas, vec![1, 1, 1]);
        let s = phi2(&v("000|000|001"), &v("000|000|100")).unwrap();
        assert_eq!(s.deltas, vec![1, 1, 1]);
    }

    #[test]
    fn equal_or_mismatched_vertices_have_no_color() {
        let x = v("001010000");
        assert!(matches!(phi(&x, &x), Err(Error::LoopEdge)));
        let y = BitVertex::new(2, 3).unwrap();
        assert!(matches!(phi1(&x, &y), Err(Error::BetaMismatch { .. })));
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(BitVertex::parse(3, "0010").is_err());
        assert!(BitVertex::parse(3, "00101000x").is_err());
        assert!(BitVertex::new(2, 16).is_err());
    }

    #[test]
    fn display_round_trip() {
        let x = v("001010000");
        assert_eq!(x.to_string(), "001010000");
        assert_eq!(format!("{x:#}"), "001|010|000");
        assert_eq!(BitVertex::parse(3, &x.to_string()).unwrap(), x);
    }

    fn all_pairs(beta: usize) -> (Vec<BitVertex>, HashMap<(usize, usize), CflsColor>) {
        let vs = BitVertex::all(beta).unwrap();
        let mut m = HashMap::new();
        for i in 0..vs.len() {
            for j in 0..vs.len() {
                if i != j {
                    m.insert((i, j), phi(&vs[i], &vs[j]).unwrap());
                }
            }
        }
        (vs, m)
    }

    #[test]
    fn symmetric_at_beta_2() {
        let (vs, m) = all_pairs(2);
        for i in 0..vs.len() {
            for j in 0..vs.len() {
                if i != j {
                    assert_eq!(m[&(i, j)], m[&(j, i)]);
                }
            }
        }
    }

    #[test]
    fn base_color_classes_are_bipartite_at_beta_2() {
        let vs = BitVertex::all(2).unwrap();
        for a in &vs {
            for b in vs.iter().filter(|b| *b != a) {
                let c = phi1(a, b).unwrap();
                let k = c.head.index as usize;
                let (ba, bb) = (a.block(k).unwrap(), b.block(k).unwrap());
                assert!(ba != bb && c.head.contains(ba) && c.head.contains(bb));
            }
        }
    }

    #[test]
    fn order_lemma_exhaustive_beta_2() {
        let (vs, m) = all_pairs(2);
        for a in 0..vs.len() {
            for b in a + 1..vs.len() {
                for c in b + 1..vs.len() {
                    assert_ne!(m[&(a, b)], m[&(b, c)], "{a} {b} {c}");
                }
            }
        }
    }

    #[test]
    fn striped_k4_and_forbidden_quadruple_absent_at_beta_2() {
        let (vs, m) = all_pairs(2);
        let n = vs.len();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        let set: HashSet<_> = [a, b, c, d].into_iter().collect();
                        if set.len() < 4 {
                            continue;
                        }
                        let striped = m[&(a, b)] == m[&(c, d)]
                            && m[&(a, c)] == m[&(b, d)]
                            && m[&(a, d)] == m[&(b, c)];
                        assert!(!striped);
                        let forbidden = m[&(a, b)].base == m[&(c, d)].base
                            && m[&(a, c)].base == m[&(a, d)].base;
                        assert!(!forbidden);
                    }
                }
            }
        }
    }

    #[test]
    fn color_count_within_bound() {
        for beta in [2usize, 3] {
            let vs = BitVertex::all(beta).unwrap();
            let mut seen = HashSet::new();
            for i in 0..vs.len() {
                for j in i + 1..vs.len() {
                    seen.insert(phi(&vs[i], &vs[j]).unwrap());
                }
            }
            assert!(seen.len() as u128 <= color_bound(beta), "beta={beta}");
        }
    }

    #[test]
    fn color_bound_values() {
        assert_eq!(color_bound(2), 8 * 64);
        assert_eq!(color_bound(3), 81 * 512);
    }
}
