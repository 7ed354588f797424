//! Checks that no shipped pattern occurs in the projection of a built
//! construction it is supposed to be absent from.

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::coloring::EdgeColoring;
use crate::combined::{Construction, Projection};
use crate::patterns::{ForbiddenPattern, PatternSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Firing {
    pub pattern: String,
    pub projection: Projection,
    pub subset: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SoundnessReport {
    pub q: u32,
    pub subsets_checked: u64,
    pub patterns_checked: usize,
    pub firings: Vec<Firing>,
}

impl SoundnessReport {
    pub fn passed(&self) -> bool {
        self.firings.is_empty()
    }
}

/// The three views of a construction, indexed by [`Projection`].
pub struct Views {
    phi: EdgeColoring,
    chi: EdgeColoring,
    product: EdgeColoring,
}

impl Views {
    pub fn new(c: &Construction) -> Self {
        Views {
            phi: c.projection(Projection::Phi),
            chi: c.projection(Projection::Chi),
            product: c.coloring().clone(),
        }
    }

    pub fn get(&self, p: Projection) -> &EdgeColoring {
        match p {
            Projection::Phi => &self.phi,
            Projection::Chi => &self.chi,
            Projection::Product => &self.product,
        }
    }
}

fn check_subset(
    views: &Views,
    patterns: &[ForbiddenPattern],
    subset: &[usize],
    firings: &mut Vec<Firing>,
) {
    let restricted = [Projection::Phi, Projection::Chi, Projection::Product]
        .map(|p| (p, views.get(p).restrict(subset)));
    for pat in patterns {
        let view = &restricted
            .iter()
            .find(|(p, _)| *p == pat.projection())
            .expect("every projection restricted")
            .1;
        if pat.fires(view) {
            firings.push(Firing {
                pattern: pat.name().to_string(),
                projection: pat.projection(),
                subset: subset.to_vec(),
            });
        }
    }
}

/// Scans `samples` uniformly random 5-subsets drawn from a seeded stream.
pub fn sampled(
    c: &Construction,
    patterns: &PatternSet,
    samples: u64,
    seed: u64,
) -> SoundnessReport {
    let views = Views::new(c);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut firings = Vec::new();
    let size = 5.min(c.n());
    for _ in 0..samples {
        let mut subset = sample(&mut rng, c.n(), size).into_vec();
        subset.sort_unstable();
        check_subset(&views, patterns.patterns(), &subset, &mut firings);
    }
    SoundnessReport {
        q: c.q(),
        subsets_checked: samples,
        patterns_checked: patterns.len(),
        firings,
    }
}

/// Scans every 5-subset. Only sensible for small `n`.
pub fn exhaustive(c: &Construction, patterns: &PatternSet) -> SoundnessReport {
    let views = Views::new(c);
    let n = c.n();
    let mut firings = Vec::new();
    let mut count = 0u64;
    for a in 0..n {
        for b in a + 1..n {
            for d in b + 1..n {
                for e in d + 1..n {
                    for f in e + 1..n {
                        count += 1;
                        check_subset(&views, patterns.patterns(), &[a, b, d, e, f], &mut firings);
                    }
                }
            }
        }
    }
    SoundnessReport {
        q: c.q(),
        subsets_checked: count,
        patterns_checked: patterns.len(),
        firings,
    }
}
