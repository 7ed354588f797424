//! Brute-force isomorphism-class counting, independent of the enumerator.

#![allow(dead_code)]

use std::collections::HashMap;

use ramsey56::EdgeColoring;

pub fn edges(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

/// Colors renumbered 1, 2, ... by first occurrence.
pub fn normalize(seq: &[u8]) -> Vec<u8> {
    let mut map = HashMap::new();
    seq.iter()
        .map(|c| {
            let next = map.len() as u8 + 1;
            *map.entry(*c).or_insert(next)
        })
        .collect()
}

/// Restricted growth strings of length `len` using at most `m` symbols.
pub fn growth_strings(len: usize, m: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn go(len: usize, m: usize, max: u8, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        let top = (max + 1).min(m as u8);
        for c in 1..=top {
            cur.push(c);
            go(len, m, max.max(c), cur, out);
            cur.pop();
        }
    }
    go(len, m, 0, &mut cur, &mut out);
    out
}

pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for k in 0..n {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=k).map(move |pos| {
                    let mut q = p.clone();
                    q.insert(pos, k);
                    q
                })
            })
            .collect();
    }
    out
}

/// Image of `seq` under the vertex map `u -> perm[u]`.
pub fn permute(n: usize, seq: &[u8], perm: &[usize]) -> Vec<u8> {
    let es = edges(n);
    let index: HashMap<(usize, usize), usize> =
        es.iter().enumerate().map(|(i, e)| (*e, i)).collect();
    let mut out = vec![0; seq.len()];
    for (i, &(u, v)) in es.iter().enumerate() {
        let (a, b) = (perm[u].min(perm[v]), perm[u].max(perm[v]));
        out[index[&(a, b)]] = seq[i];
    }
    out
}

pub fn to_coloring(n: usize, seq: &[u8]) -> EdgeColoring {
    let colors: Vec<u32> = seq.iter().map(|&c| c as u32).collect();
    EdgeColoring::from_edge_list(n, &colors).unwrap()
}

/// Orbit id of every normalized coloring of K_n with at most `m` colors that
/// `keep` accepts, plus the number of orbits.
pub struct Orbits {
    pub id: HashMap<Vec<u8>, usize>,
    pub count: usize,
}

pub fn orbits(n: usize, m: usize, mut keep: impl FnMut(&[u8]) -> bool) -> Orbits {
    let perms = all_permutations(n);
    let mut id = HashMap::new();
    let mut count = 0;
    for s in growth_strings(n * (n - 1) / 2, m) {
        if id.contains_key(&s) || !keep(&s) {
            continue;
        }
        for p in &perms {
            id.insert(normalize(&permute(n, &s, p)), count);
        }
        count += 1;
    }
    Orbits { id, count }
}
