//! Forbidden colored configurations on at most five vertices.
//!
//! Three kinds of detector exist:
//!
//! * class patterns: a labelled template whose edges are grouped into
//!   classes; it matches when some injective placement of the template makes
//!   every class monochromatic. Classes are free to share a color unless a
//!   pair is listed in `distinct_classes`.
//! * monochromatic odd cycles: some color class is not bipartite.
//! * color cycles: the auxiliary digraph on colors (an arc `C → C'` for every
//!   monochromatic `C`-path on `k ≥ 3` distinct vertices closed by a
//!   `C'`-edge, tagged with the parity of `k`) has a directed cycle through
//!   an odd arc.
//!
//! Every pattern also names the projection of the product coloring it is
//! known to be absent from, which is what the soundness checks scan.

use std::collections::HashMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::coloring::EdgeColoring;
use crate::combined::Projection;
use crate::error::{Error, Result};

/// Upper limit on template size.
pub const MAX_PATTERN_VERTICES: usize = 5;

const DEFAULT_PATTERNS: &str = include_str!("../patterns/default.json");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PatternKind {
    ClassPattern,
    MonoOddCycle,
    ColorCycle,
}

/// On-disk form of a pattern. Edges are two-letter strings over `a, b, …`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternSpec {
    pub name: String,
    pub kind: PatternKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub projection: Projection,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub classes: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub distinct_classes: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct PatternFile {
    patterns: Vec<PatternSpec>,
}

type Edge = (usize, usize);

/// A validated pattern ready for matching.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForbiddenPattern {
    spec: PatternSpec,
    k: usize,
    classes: Vec<Vec<(usize, usize)>>,
    // Per template vertex `i`: edges `(j, i)` with `j < i`, each paired with
    // the reference edge of its class that is already placed when `i` is.
    checks: Vec<Vec<(Edge, Edge)>>,
    // Reference edges of class pairs that must differ.
    distinct: Vec<(Edge, Edge)>,
}

fn malformed(name: &str, reason: impl Into<String>) -> Error {
    Error::MalformedPattern {
        name: name.to_string(),
        reason: reason.into(),
    }
}

fn parse_edge(name: &str, k: usize, s: &str) -> Result<(usize, usize)> {
    let bytes = s.as_bytes();
    if bytes.len() != 2 || !bytes.iter().all(|b| b.is_ascii_lowercase()) {
        return Err(malformed(name, format!("bad edge {s:?}")));
    }
    let (u, v) = ((bytes[0] - b'a') as usize, (bytes[1] - b'a') as usize);
    if u == v {
        return Err(malformed(name, format!("loop {s:?}")));
    }
    if u >= k || v >= k {
        return Err(malformed(name, format!("edge {s:?} outside {k} vertices")));
    }
    Ok((u.min(v), u.max(v)))
}

impl ForbiddenPattern {
    pub fn from_spec(spec: PatternSpec) -> Result<Self> {
        let name = spec.name.clone();
        if name.is_empty() {
            return Err(malformed(&name, "empty name"));
        }
        match spec.kind {
            PatternKind::MonoOddCycle | PatternKind::ColorCycle => {
                if !spec.classes.is_empty() || !spec.distinct_classes.is_empty() {
                    return Err(malformed(&name, "structural detectors take no classes"));
                }
                return Ok(ForbiddenPattern {
                    k: spec.k.unwrap_or(0),
                    spec,
                    classes: Vec::new(),
                    checks: Vec::new(),
                    distinct: Vec::new(),
                });
            }
            PatternKind::ClassPattern => {}
        }
        let k = spec
            .k
            .ok_or_else(|| malformed(&name, "class pattern needs k"))?;
        if !(2..=MAX_PATTERN_VERTICES).contains(&k) {
            return Err(malformed(&name, format!("k = {k} outside 2..=5")));
        }
        if spec.classes.is_empty() {
            return Err(malformed(&name, "no classes"));
        }
        let mut classes = Vec::with_capacity(spec.classes.len());
        let mut owner: HashMap<(usize, usize), usize> = HashMap::new();
        for (ci, class) in spec.classes.iter().enumerate() {
            if class.is_empty() {
                return Err(malformed(&name, format!("class {ci} is empty")));
            }
            let mut edges = Vec::with_capacity(class.len());
            for e in class {
                let edge = parse_edge(&name, k, e)?;
                if owner.insert(edge, ci).is_some() {
                    return Err(malformed(&name, format!("edge {e:?} listed twice")));
                }
                edges.push(edge);
            }
            // placement order is by the larger endpoint
            edges.sort_by_key(|&(u, v)| (v, u));
            classes.push(edges);
        }
        let mut checks = vec![Vec::new(); k];
        for edges in &classes {
            let reference = edges[0];
            for &e in &edges[1..] {
                checks[e.1].push((e, reference));
            }
        }
        let mut distinct = Vec::new();
        for &[x, y] in &spec.distinct_classes {
            if x >= classes.len() || y >= classes.len() || x == y {
                return Err(malformed(&name, format!("bad distinct pair [{x}, {y}]")));
            }
            distinct.push((classes[x][0], classes[y][0]));
        }
        Ok(ForbiddenPattern {
            spec,
            k,
            classes,
            checks,
            distinct,
        })
    }

    pub fn name(&self) -> &str {
        &self.spec.name
    }

    pub fn kind(&self) -> PatternKind {
        self.spec.kind
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn projection(&self) -> Projection {
        self.spec.projection
    }

    pub fn group(&self) -> Option<&str> {
        self.spec.group.as_deref()
    }

    pub fn spec(&self) -> &PatternSpec {
        &self.spec
    }

    pub fn classes(&self) -> &[Vec<(usize, usize)>] {
        &self.classes
    }

    /// The template as a coloring of `K_k`: class `i` gets color `i`, and
    /// every unlisted edge gets its own fresh color.
    pub fn instantiate(&self) -> Option<EdgeColoring> {
        if self.kind() != PatternKind::ClassPattern {
            return None;
        }
        let mut c = EdgeColoring::new(self.k);
        let mut next = self.classes.len() as u32;
        for u in 0..self.k {
            for v in u + 1..self.k {
                c.set(u, v, next);
                next += 1;
            }
        }
        for (ci, edges) in self.classes.iter().enumerate() {
            for &(u, v) in edges {
                c.set(u, v, ci as u32);
            }
        }
        Some(c)
    }

    /// Whether the detector fires on `coloring`.
    pub fn fires(&self, coloring: &EdgeColoring) -> bool {
        match self.kind() {
            PatternKind::ClassPattern => self.find_match(coloring).is_some(),
            PatternKind::MonoOddCycle => mono_odd_cycle(coloring),
            PatternKind::ColorCycle => color_cycle(coloring),
        }
    }

    /// An injective placement `template vertex -> coloring vertex` under
    /// which every class is monochromatic, if any. The first placement in
    /// lexicographic order is returned.
    pub fn find_match(&self, coloring: &EdgeColoring) -> Option<Vec<usize>> {
        if self.kind() != PatternKind::ClassPattern || coloring.n() < self.k {
            return None;
        }
        let mut placed = Vec::with_capacity(self.k);
        let mut used = vec![false; coloring.n()];
        if self.extend(coloring, &mut placed, &mut used) {
            Some(placed)
        } else {
            None
        }
    }

    fn extend(&self, c: &EdgeColoring, placed: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let i = placed.len();
        if i == self.k {
            return self.distinct.iter().all(|&((a, b), (x, y))| {
                c.get(placed[a], placed[b]) != c.get(placed[x], placed[y])
            });
        }
        for w in 0..c.n() {
            if used[w] {
                continue;
            }
            placed.push(w);
            let ok = self.checks[i].iter().all(|&((u, v), (ru, rv))| {
                c.get(placed[u], placed[v]) == c.get(placed[ru], placed[rv])
            });
            if ok {
                used[w] = true;
                let found = self.extend(c, placed, used);
                used[w] = false;
                if found {
                    return true;
                }
            }
            placed.pop();
        }
        false
    }
}

/// Class-pattern matching as a free function.
pub fn match_pattern(
    coloring: &EdgeColoring,
    pattern: &ForbiddenPattern,
) -> Result<Option<Vec<usize>>> {
    if pattern.kind() != PatternKind::ClassPattern {
        return Err(malformed(pattern.name(), "not a class pattern"));
    }
    Ok(pattern.find_match(coloring))
}

/// True iff some color class contains an odd cycle.
pub fn mono_odd_cycle(coloring: &EdgeColoring) -> bool {
    let n = coloring.n();
    let mut colors = coloring.edge_colors();
    colors.sort_unstable();
    colors.dedup();
    let mut side = vec![0i8; n];
    let mut stack = Vec::with_capacity(n);
    for &color in &colors {
        side.iter_mut().for_each(|s| *s = 0);
        for start in 0..n {
            if side[start] != 0 {
                continue;
            }
            side[start] = 1;
            stack.push(start);
            while let Some(u) = stack.pop() {
                for v in 0..n {
                    if v == u || coloring.get(u, v) != color {
                        continue;
                    }
                    if side[v] == 0 {
                        side[v] = -side[u];
                        stack.push(v);
                    } else if side[v] == side[u] {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Parity of the vertex count of the sequence that produced an arc.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Odd,
    Even,
}

/// The auxiliary color digraph of a small clique.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuxColorDigraph {
    /// Colors present, ascending; arcs refer to indices into this list.
    pub nodes: Vec<u32>,
    /// `(from, to, parity)`, sorted and deduplicated.
    pub arcs: Vec<(usize, usize, Parity)>,
}

impl AuxColorDigraph {
    pub fn build(coloring: &EdgeColoring) -> Self {
        let n = coloring.n();
        let mut nodes = coloring.edge_colors();
        nodes.sort_unstable();
        nodes.dedup();
        let index: HashMap<u32, usize> = nodes.iter().enumerate().map(|(i, c)| (*c, i)).collect();
        let mut arcs = Vec::new();
        let mut path = Vec::with_capacity(n);
        let mut on_path = vec![false; n];
        for v1 in 0..n {
            for v2 in 0..n {
                if v2 == v1 {
                    continue;
                }
                let color = coloring.get(v1, v2);
                path.clear();
                path.extend([v1, v2]);
                on_path.iter_mut().for_each(|b| *b = false);
                on_path[v1] = true;
                on_path[v2] = true;
                walk(coloring, color, &index, &mut path, &mut on_path, &mut arcs);
            }
        }
        arcs.sort_unstable();
        arcs.dedup();
        AuxColorDigraph { nodes, arcs }
    }

    /// Whether some directed cycle (self-loops included) uses an odd arc.
    pub fn has_odd_cycle(&self) -> bool {
        let m = self.nodes.len();
        let mut reach = vec![false; m * m];
        for &(a, b, _) in &self.arcs {
            reach[a * m + b] = true;
        }
        for via in 0..m {
            for a in 0..m {
                if reach[a * m + via] {
                    for b in 0..m {
                        if reach[via * m + b] {
                            reach[a * m + b] = true;
                        }
                    }
                }
            }
        }
        self.arcs
            .iter()
            .any(|&(a, b, p)| p == Parity::Odd && (a == b || reach[b * m + a]))
    }
}

fn walk(
    c: &EdgeColoring,
    color: u32,
    index: &HashMap<u32, usize>,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    arcs: &mut Vec<(usize, usize, Parity)>,
) {
    let last = *path.last().unwrap();
    for next in 0..c.n() {
        if on_path[next] || c.get(last, next) != color {
            continue;
        }
        path.push(next);
        on_path[next] = true;
        let k = path.len();
        let parity = if k % 2 == 1 {
            Parity::Odd
        } else {
            Parity::Even
        };
        arcs.push((index[&color], index[&c.get(next, path[0])], parity));
        walk(c, color, index, path, on_path, arcs);
        on_path[next] = false;
        path.pop();
    }
}

pub fn color_cycle(coloring: &EdgeColoring) -> bool {
    AuxColorDigraph::build(coloring).has_odd_cycle()
}

/// Name of the first pattern in `patterns` that fires on `coloring`.
pub fn scan<'a>(coloring: &EdgeColoring, patterns: &'a [ForbiddenPattern]) -> Option<&'a str> {
    patterns
        .iter()
        .find(|p| p.fires(coloring))
        .map(|p| p.name())
}

/// An ordered, name-unique list of patterns.
#[derive(Clone, Debug, Default)]
pub struct PatternSet {
    patterns: Vec<ForbiddenPattern>,
}

impl PatternSet {
    pub fn from_specs(specs: Vec<PatternSpec>) -> Result<Self> {
        let mut patterns = Vec::with_capacity(specs.len());
        for spec in specs {
            if patterns
                .iter()
                .any(|p: &ForbiddenPattern| p.name() == spec.name)
            {
                return Err(malformed(&spec.name, "duplicate name"));
            }
            patterns.push(ForbiddenPattern::from_spec(spec)?);
        }
        Ok(PatternSet { patterns })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: PatternFile = serde_json::from_str(text)?;
        PatternSet::from_specs(file.patterns)
    }

    pub fn load(path: &Path) -> Result<Self> {
        PatternSet::from_json(&std::fs::read_to_string(path)?)
    }

    /// The shipped set.
    pub fn default_set() -> Self {
        PatternSet::from_json(DEFAULT_PATTERNS).expect("shipped pattern file is valid")
    }

    pub fn default_json() -> &'static str {
        DEFAULT_PATTERNS
    }

    pub fn to_json(&self) -> Result<String> {
        let file = PatternFile {
            patterns: self.patterns.iter().map(|p| p.spec.clone()).collect(),
        };
        Ok(serde_json::to_string_pretty(&file)?)
    }

    pub fn patterns(&self) -> &[ForbiddenPattern] {
        &self.patterns
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&ForbiddenPattern> {
        self.patterns.iter().find(|p| p.name() == name)
    }

    /// Splits into (kept, removed), failing on unknown names.
    pub fn partition_names(&self, names: &[String]) -> Result<(PatternSet, PatternSet)> {
        for n in names {
            if self.get(n).is_none() {
                return Err(Error::UnknownPattern(n.clone()));
            }
        }
        let (removed, kept): (Vec<_>, Vec<_>) = self
            .patterns
            .iter()
            .cloned()
            .partition(|p| names.iter().any(|n| n == p.name()));
        Ok((
            PatternSet { patterns: kept },
            PatternSet { patterns: removed },
        ))
    }

    pub fn filter(&self, mut keep: impl FnMut(&ForbiddenPattern) -> bool) -> PatternSet {
        PatternSet {
            patterns: self.patterns.iter().filter(|p| keep(p)).cloned().collect(),
        }
    }

    pub fn scan(&self, coloring: &EdgeColoring) -> Option<&str> {
        scan(coloring, &self.patterns)
    }

    /// Names of every pattern that fires, in list order.
    pub fn all_firing(&self, coloring: &EdgeColoring) -> Vec<&str> {
        self.patterns
            .iter()
            .filter(|p| p.fires(coloring))
            .map(|p| p.name())
            .collect()
    }
}
