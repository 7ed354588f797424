//! Dense symmetric edge colorings of `K_n` with opaque integer color ids.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::io::{BufRead, Write};

use crate::error::{Error, Result};

const NO_COLOR: u32 = u32::MAX;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    n: usize,
    table: Vec<u32>,
}

impl EdgeColoring {
    /// Every edge starts with color 0.
    pub fn new(n: usize) -> Self {
        let mut table = vec![0; n * n];
        for v in 0..n {
            table[v * n + v] = NO_COLOR;
        }
        EdgeColoring { n, table }
    }

    pub fn from_fn(n: usize, mut color: impl FnMut(usize, usize) -> u32) -> Self {
        let mut c = EdgeColoring::new(n);
        for u in 0..n {
            for v in u + 1..n {
                c.set(u, v, color(u, v));
            }
        }
        c
    }

    /// Builds a coloring from colors listed in lexicographic edge order
    /// `(0,1), (0,2), …, (n-2,n-1)`.
    pub fn from_edge_list(n: usize, colors: &[u32]) -> Result<Self> {
        if colors.len() != n * n.saturating_sub(1) / 2 {
            return Err(Error::InvalidParameter(format!(
                "{} colors given for K_{n}",
                colors.len()
            )));
        }
        let mut it = colors.iter();
        Ok(EdgeColoring::from_fn(n, |_, _| *it.next().unwrap()))
    }

    pub fn rainbow(n: usize) -> Self {
        let mut next = 0;
        EdgeColoring::from_fn(n, |_, _| {
            next += 1;
            next
        })
    }

    pub fn monochromatic(n: usize) -> Self {
        EdgeColoring::from_fn(n, |_, _| 1)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        debug_assert!(u != v);
        self.table[u * self.n + v]
    }

    #[inline]
    pub fn row(&self, u: usize) -> &[u32] {
        &self.table[u * self.n..(u + 1) * self.n]
    }

    pub fn set(&mut self, u: usize, v: usize, color: u32) {
        assert!(u != v, "loops carry no color");
        self.table[u * self.n + v] = color;
        self.table[v * self.n + u] = color;
    }

    /// Colors in lexicographic edge order.
    pub fn edge_colors(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.n * self.n.saturating_sub(1) / 2);
        for u in 0..self.n {
            for v in u + 1..self.n {
                out.push(self.get(u, v));
            }
        }
        out
    }

    /// The coloring induced on `vertices`, relabelled `0..k` in the given order.
    pub fn restrict(&self, vertices: &[usize]) -> EdgeColoring {
        let k = vertices.len();
        EdgeColoring::from_fn(k, |i, j| self.get(vertices[i], vertices[j]))
    }

    pub fn distinct_colors(&self) -> usize {
        let mut cs = self.edge_colors();
        cs.sort_unstable();
        cs.dedup();
        cs.len()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n)
            .all(|u| (0..self.n).all(|v| self.table[u * self.n + v] == self.table[v * self.n + u]))
    }

    /// Writes the `u v color` export with the given header line.
    pub fn write_export<W: Write>(&self, header: &str, mut w: W) -> Result<()> {
        let mut buf = String::new();
        writeln!(buf, "{header}").unwrap();
        for u in 0..self.n {
            for v in u + 1..self.n {
                writeln!(buf, "{u} {v} {}", self.get(u, v)).unwrap();
            }
        }
        w.write_all(buf.as_bytes())?;
        Ok(())
    }

    /// Reads an export. Lines starting with `#` are ignored except that an
    /// `n=<count>` token in a header fixes the vertex count; otherwise it is
    /// inferred from the largest index. Every edge must appear exactly once.
    pub fn read_export<R: BufRead>(r: R) -> Result<EdgeColoring> {
        let mut declared_n = None;
        let mut edges = Vec::new();
        for (idx, line) in r.lines().enumerate() {
            let line = line?;
            let line_no = idx + 1;
            let trimmed = line.trim();
            if trimmed.is_empty() {
                continue;
            }
            if let Some(rest) = trimmed.strip_prefix('#') {
                for tok in rest.split_whitespace() {
                    if let Some(v) = tok.strip_prefix("n=") {
                        declared_n = Some(v.parse::<usize>().map_err(|e| Error::Parse {
                            line: line_no,
                            reason: e.to_string(),
                        })?);
                    }
                }
                continue;
            }
            let fields: Vec<&str> = trimmed.split_whitespace().collect();
            if fields.len() != 3 {
                return Err(Error::Parse {
                    line: line_no,
                    reason: format!("expected `u v color`, got {trimmed:?}"),
                });
            }
            let parse = |s: &str| {
                s.parse::<u64>().map_err(|e| Error::Parse {
                    line: line_no,
                    reason: e.to_string(),
                })
            };
            let (u, v, c) = (parse(fields[0])?, parse(fields[1])?, parse(fields[2])?);
            if u == v || c >= NO_COLOR as u64 {
                return Err(Error::Parse {
                    line: line_no,
                    reason: "loop edge or color id out of range".into(),
                });
            }
            edges.push((u as usize, v as usize, c as u32, line_no));
        }
        let n = declared_n.unwrap_or_else(|| {
            edges
                .iter()
                .map(|&(u, v, _, _)| u.max(v) + 1)
                .max()
                .unwrap_or(0)
        });
        let mut coloring = EdgeColoring::new(n);
        let mut seen = vec![false; n * n];
        for (u, v, c, line) in edges {
            if u >= n || v >= n {
                return Err(Error::Parse {
                    line,
                    reason: format!("vertex index out of range for n={n}"),
                });
            }
            let (a, b) = (u.min(v), u.max(v));
            if std::mem::replace(&mut seen[a * n + b], true) {
                return Err(Error::Parse {
                    line,
                    reason: format!("edge {a} {b} listed twice"),
                });
            }
            coloring.set(a, b, c);
        }
        let listed = seen.iter().filter(|s| **s).count();
        if listed != n * n.saturating_sub(1) / 2 {
            return Err(Error::Parse {
                line: 0,
                reason: format!(
                    "only {listed} of {} edges listed",
                    n * n.saturating_sub(1) / 2
                ),
            });
        }
        Ok(coloring)
    }
}

/// Assigns dense ids to arbitrary hashable colors in first-seen order.
#[derive(Clone, Debug)]
pub struct Interner<T> {
    ids: HashMap<T, u32>,
    values: Vec<T>,
}

impl<T: std::hash::Hash + Eq + Clone> Interner<T> {
    pub fn new() -> Self {
        Interner {
            ids: HashMap::new(),
            values: Vec::new(),
        }
    }

    pub fn intern(&mut self, value: T) -> u32 {
        if let Some(id) = self.ids.get(&value) {
            return *id;
        }
        let id = self.values.len() as u32;
        self.ids.insert(value.clone(), id);
        self.values.push(value);
        id
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn into_values(self) -> Vec<T> {
        self.values
    }
}

impl<T: std::hash::Hash + Eq + Clone> Default for Interner<T> {
    fn default() -> Self {
        Self::new()
    }
}
