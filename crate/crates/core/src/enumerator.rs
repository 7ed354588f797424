//! Enumeration of small edge-colorings up to color-isomorphism.
//!
//! Colorings of `K_k` are grown one vertex at a time: every representative
//! on `k − 1` vertices is extended by every coloring of the new vertex's
//! edges, extensions that contain a forbidden configuration are dropped, and
//! survivors are deduplicated by canonical key.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use rayon::prelude::*;

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::patterns::PatternSet;

pub const MAX_ENUM_VERTICES: usize = 5;

/// A coloring of `K_k`, `k ≤ 5`, stored in lexicographic edge order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SmallColoring {
    k: usize,
    colors: Vec<u8>,
}

/// Colors in edge order after canonical relabelling; equal keys mean
/// isomorphic colorings.
pub type CanonicalKey = Vec<u8>;

#[inline]
fn edge_index(k: usize, u: usize, v: usize) -> usize {
    let (u, v) = if u < v { (u, v) } else { (v, u) };
    u * (2 * k - u - 1) / 2 + (v - u - 1)
}

impl SmallColoring {
    pub fn new(k: usize, colors: Vec<u8>) -> Result<Self> {
        if !(1..=MAX_ENUM_VERTICES).contains(&k) {
            return Err(Error::InvalidParameter(format!("k = {k} outside 1..=5")));
        }
        if colors.len() != k * (k - 1) / 2 {
            return Err(Error::InvalidParameter(format!(
                "{} colors for K_{k}",
                colors.len()
            )));
        }
        Ok(SmallColoring { k, colors })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    pub fn get(&self, u: usize, v: usize) -> u8 {
        self.colors[edge_index(self.k, u, v)]
    }

    pub fn to_edge_coloring(&self) -> EdgeColoring {
        EdgeColoring::from_fn(self.k, |u, v| self.get(u, v) as u32)
    }

    /// Adds vertex `k` with edge `(i, k)` colored `new_edges[i]`.
    pub fn extend(&self, new_edges: &[u8]) -> SmallColoring {
        assert_eq!(new_edges.len(), self.k);
        let k = self.k + 1;
        let mut colors = vec![0; k * (k - 1) / 2];
        for u in 0..k {
            for v in u + 1..k {
                colors[edge_index(k, u, v)] = if v == self.k {
                    new_edges[u]
                } else {
                    self.get(u, v)
                };
            }
        }
        SmallColoring { k, colors }
    }

    /// Number of distinct colors used.
    pub fn color_count(&self) -> usize {
        let mut c = self.colors.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    }

    pub fn from_key(k: usize, key: &CanonicalKey) -> SmallColoring {
        SmallColoring {
            k,
            colors: key.clone(),
        }
    }
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(k), &mut vec![false; k], &mut out);
    out
}

/// Lexicographically least relabelled edge sequence over all vertex
/// permutations, colors renumbered `1, 2, …` by first occurrence.
pub fn canonical_key(c: &SmallColoring) -> CanonicalKey {
    let k = c.k;
    let edges: Vec<(usize, usize)> = (0..k)
        .flat_map(|u| (u + 1..k).map(move |v| (u, v)))
        .collect();
    let mut best: Option<Vec<u8>> = None;
    let mut candidate = vec![0u8; edges.len()];
    // color id -> relabelled id; ids are u8
    let mut relabel = [0u8; 256];
    for perm in permutations(k) {
        relabel.iter_mut().for_each(|r| *r = 0);
        let mut next = 1u8;
        let mut cmp = std::cmp::Ordering::Equal;
        for (slot, &(u, v)) in edges.iter().enumerate() {
            let raw = c.get(perm[u], perm[v]) as usize;
            if relabel[raw] == 0 {
                relabel[raw] = next;
                next += 1;
            }
            let val = relabel[raw];
            candidate[slot] = val;
            if cmp == std::cmp::Ordering::Equal {
                if let Some(b) = &best {
                    cmp = val.cmp(&b[slot]);
                    if cmp == std::cmp::Ordering::Greater {
                        break;
                    }
                }
            }
        }
        if best.is_none() || cmp == std::cmp::Ordering::Less {
            best = Some(candidate.clone());
        }
    }
    best.unwrap_or_default()
}

/// Every way to color the `k − 1` new edges from `[m]`, in odometer order.
fn edge_functions(len: usize, m: u8) -> Vec<Vec<u8>> {
    let total = (m as usize).pow(len as u32);
    let mut out = Vec::with_capacity(total);
    let mut cur = vec![1u8; len];
    for _ in 0..total {
        out.push(cur.clone());
        for slot in cur.iter_mut().rev() {
            if *slot < m {
                *slot += 1;
                break;
            }
            *slot = 1;
        }
    }
    out
}

/// All colorings of `K_n` with at most `m` colors that contain no pattern
/// from `forbidden`, one per isomorphism class, sorted by canonical key.
pub fn enumerate(n: usize, m: usize, forbidden: &PatternSet) -> Result<Vec<SmallColoring>> {
    if !(2..=MAX_ENUM_VERTICES).contains(&n) {
        return Err(Error::InvalidParameter(format!("n = {n} outside 2..=5")));
    }
    if m == 0 || m > 200 {
        return Err(Error::InvalidParameter(format!("m = {m} outside 1..=200")));
    }
    let mut level: Vec<SmallColoring> = vec![SmallColoring::new(2, vec![1])?];
    for k in 3..=n {
        let functions = edge_functions(k - 1, m as u8);
        let keys: BTreeSet<CanonicalKey> = level
            .par_iter()
            .flat_map_iter(|h| {
                functions.iter().filter_map(move |f| {
                    let g = h.extend(f);
                    if forbidden.scan(&g.to_edge_coloring()).is_some() {
                        None
                    } else {
                        Some(canonical_key(&g))
                    }
                })
            })
            .collect();
        level = keys
            .iter()
            .map(|key| SmallColoring::from_key(k, key))
            .collect();
    }
    Ok(level)
}

/// An enumerated coloring with the names of the annotation patterns it
/// contains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnotatedColoring {
    pub coloring: SmallColoring,
    pub contains: Vec<String>,
}

pub fn annotate(colorings: &[SmallColoring], residual: &PatternSet) -> Vec<AnnotatedColoring> {
    colorings
        .iter()
        .map(|c| AnnotatedColoring {
            coloring: c.clone(),
            contains: residual
                .all_firing(&c.to_edge_coloring())
                .into_iter()
                .map(String::from)
                .collect(),
        })
        .collect()
}

/// Text listing: a header, then `key<TAB>annotations` per coloring.
pub fn render_listing(n: usize, m: usize, forbidden: usize, rows: &[AnnotatedColoring]) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "# n={n} m={m} forbidden={forbidden} colorings={}",
        rows.len()
    )
    .unwrap();
    for row in rows {
        let key: Vec<String> = row
            .coloring
            .colors()
            .iter()
            .map(|c| c.to_string())
            .collect();
        let ann = if row.contains.is_empty() {
            "-".to_string()
        } else {
            row.contains.join(",")
        };
        writeln!(out, "{}\t{}", key.join(" "), ann).unwrap();
    }
    out
}
