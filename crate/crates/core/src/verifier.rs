//! Exhaustive `(p, q)`-coloring checks and the `f(n, 5, 6)` bound helpers.
//!
//! Subsets are visited in lexicographic order. Work is split by the leading
//! pair of each subset, and partial results are merged so that witnesses are
//! always the lexicographically first subset with the relevant property,
//! whatever the thread schedule.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};

/// Largest clique size the verifier accepts.
pub const MAX_P: usize = 12;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub n: usize,
    pub p: usize,
    pub q_min: usize,
    pub cliques_checked: u64,
    pub min_colors_seen: usize,
    /// First subset (lex order) attaining `min_colors_seen`.
    pub witness: Option<Vec<usize>>,
    /// First subset (lex order) spanning fewer than `q_min` colors.
    pub first_violation: Option<Vec<usize>>,
    pub violations: u64,
    pub distinct_colors_total: usize,
    #[serde(skip)]
    pub elapsed: f64,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.min_colors_seen >= self.q_min
    }

    /// Equality ignoring wall-clock time.
    pub fn same_outcome(&self, other: &VerifyReport) -> bool {
        VerifyReport {
            elapsed: 0.0,
            ..self.clone()
        } == VerifyReport {
            elapsed: 0.0,
            ..other.clone()
        }
    }

    pub fn render(&self) -> String {
        let fmt_set = |s: &Option<Vec<usize>>| match s {
            Some(v) => v
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(","),
            None => "-".into(),
        };
        format!(
            "n={} p={} q_min={}\ncliques_checked={}\nmin_colors_seen={}\nwitness={}\nviolations={}\nfirst_violation={}\ndistinct_colors_total={}\nresult={}\n",
            self.n,
            self.p,
            self.q_min,
            self.cliques_checked,
            self.min_colors_seen,
            fmt_set(&self.witness),
            self.violations,
            fmt_set(&self.first_violation),
            self.distinct_colors_total,
            if self.passed() { "PASS" } else { "FAIL" },
        )
    }
}

/// `C(n, k)` as `u128`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

#[derive(Clone, Debug)]
struct Partial {
    count: u64,
    min: usize,
    min_witness: Option<Vec<usize>>,
    violations: u64,
    first_violation: Option<Vec<usize>>,
}

impl Partial {
    fn empty() -> Self {
        Partial {
            count: 0,
            min: usize::MAX,
            min_witness: None,
            violations: 0,
            first_violation: None,
        }
    }

    // Associative; witnesses compare lexicographically so the merge order
    // does not matter.
    fn merge(mut self, other: Partial) -> Partial {
        self.count += other.count;
        self.violations += other.violations;
        match other.min.cmp(&self.min) {
            std::cmp::Ordering::Less => {
                self.min = other.min;
                self.min_witness = other.min_witness;
            }
            std::cmp::Ordering::Equal => {
                self.min_witness = lex_min(self.min_witness, other.min_witness);
            }
            std::cmp::Ordering::Greater => {}
        }
        self.first_violation = lex_min(self.first_violation, other.first_violation);
        self
    }
}

fn lex_min(a: Option<Vec<usize>>, b: Option<Vec<usize>>) -> Option<Vec<usize>> {
    match (a, b) {
        (Some(x), Some(y)) => Some(if x <= y { x } else { y }),
        (x, None) => x,
        (None, y) => y,
    }
}

struct Scan<'a> {
    c: &'a EdgeColoring,
    p: usize,
    q_min: usize,
    chosen: [usize; MAX_P],
    // distinct colors so far, with the count valid at each depth
    seen: [u32; MAX_P * (MAX_P - 1) / 2],
    seen_len: [usize; MAX_P + 1],
    out: Partial,
}

impl<'a> Scan<'a> {
    fn push(&mut self, depth: usize, v: usize) {
        self.chosen[depth] = v;
        let row = self.c.row(v);
        let mut len = self.seen_len[depth];
        for i in 0..depth {
            let color = row[self.chosen[i]];
            if !self.seen[..len].contains(&color) {
                self.seen[len] = color;
                len += 1;
            }
        }
        self.seen_len[depth + 1] = len;
    }

    fn descend(&mut self, depth: usize, start: usize) {
        let n = self.c.n();
        if depth == self.p {
            self.record();
            return;
        }
        let remaining = self.p - depth;
        for v in start..=n - remaining {
            self.push(depth, v);
            self.descend(depth + 1, v + 1);
        }
    }

    #[inline]
    fn record(&mut self) {
        let colors = self.seen_len[self.p];
        self.out.count += 1;
        if colors < self.out.min {
            self.out.min = colors;
            self.out.min_witness = Some(self.chosen[..self.p].to_vec());
        }
        if colors < self.q_min {
            self.out.violations += 1;
            if self.out.first_violation.is_none() {
                self.out.first_violation = Some(self.chosen[..self.p].to_vec());
            }
        }
    }
}

fn scan_from_pair(c: &EdgeColoring, p: usize, q_min: usize, a: usize, b: usize) -> Partial {
    let mut s = Scan {
        c,
        p,
        q_min,
        chosen: [0; MAX_P],
        seen: [0; MAX_P * (MAX_P - 1) / 2],
        seen_len: [0; MAX_P + 1],
        out: Partial::empty(),
    };
    s.push(0, a);
    s.push(1, b);
    s.descend(2, b + 1);
    s.out
}

/// Options for [`verify_with`].
#[derive(Clone, Copy, Debug, Default)]
pub struct VerifyOptions {
    /// `Some(1)` runs serially; `None` uses the global rayon pool.
    pub threads: Option<usize>,
}

pub fn verify(coloring: &EdgeColoring, p: usize, q_min: usize) -> Result<VerifyReport> {
    verify_with(coloring, p, q_min, VerifyOptions::default())
}

pub fn verify_with(
    coloring: &EdgeColoring,
    p: usize,
    q_min: usize,
    opts: VerifyOptions,
) -> Result<VerifyReport> {
    let n = coloring.n();
    if p > n {
        return Err(Error::CliqueTooLarge { p, n });
    }
    if p > MAX_P {
        return Err(Error::InvalidParameter(format!("p = {p} above {MAX_P}")));
    }
    let started = Instant::now();
    let partial = if p < 2 {
        // one color-free subset per choice of at most one vertex
        let count = binomial(n as u64, p as u64) as u64;
        Partial {
            count,
            min: 0,
            min_witness: if count > 0 {
                Some((0..p).collect())
            } else {
                None
            },
            violations: if q_min > 0 { count } else { 0 },
            first_violation: if q_min > 0 && count > 0 {
                Some((0..p).collect())
            } else {
                None
            },
        }
    } else {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .filter(|&(_, b)| n - b >= p - 1)
            .collect();
        let run = || {
            pairs
                .par_iter()
                .map(|&(a, b)| scan_from_pair(coloring, p, q_min, a, b))
                .reduce(Partial::empty, Partial::merge)
        };
        match opts.threads {
            Some(1) => pairs
                .iter()
                .map(|&(a, b)| scan_from_pair(coloring, p, q_min, a, b))
                .fold(Partial::empty(), Partial::merge),
            Some(t) => rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build()
                .map_err(|e| Error::InvalidParameter(e.to_string()))?
                .install(run),
            None => run(),
        }
    };
    let expected = binomial(n as u64, p as u64);
    assert_eq!(
        partial.count as u128, expected,
        "subset walk must cover C(n, p) subsets"
    );
    Ok(VerifyReport {
        n,
        p,
        q_min,
        cliques_checked: partial.count,
        min_colors_seen: if partial.count == 0 { 0 } else { partial.min },
        witness: partial.min_witness,
        first_violation: partial.first_violation,
        violations: partial.violations,
        distinct_colors_total: coloring.distinct_colors(),
        elapsed: started.elapsed().as_secs_f64(),
    })
}

/// `sqrt(5n/6 − 95/144)` and its ceiling. The ceiling is computed in exact
/// integer arithmetic as the least `k` with `144·k² ≥ 120·n − 95`.
pub fn lower_bound_56(n: u64) -> Result<(f64, u64)> {
    if n < 5 {
        return Err(Error::Domain(n));
    }
    let real = (5.0 * n as f64 / 6.0 - 95.0 / 144.0).sqrt();
    let target = 120u128 * n as u128 - 95;
    let mut k = real.floor() as u128;
    while k > 0 && 144 * (k - 1) * (k - 1) >= target {
        k -= 1;
    }
    while 144 * k * k < target {
        k += 1;
    }
    Ok((real, k as u64))
}

/// `ceil((n − 1) / t)`: the size of the forced monochromatic neighborhood in
/// a `t`-coloring, on which a `(p − 1, q − 1)`-coloring must live.
pub fn recursion_bound(n: u64, t: u64) -> Result<u64> {
    if t == 0 {
        return Err(Error::InvalidParameter("t must be positive".into()));
    }
    Ok(n.saturating_sub(1).div_ceil(t))
}
