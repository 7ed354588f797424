use ramsey56::algebraic::{chi, Vector2};
use ramsey56::cfls::{phi, BitVertex};
use ramsey56::coloring::Interner;
use ramsey56::combined::Projection;
use ramsey56::field::FieldSpec;
use ramsey56::patterns::ForbiddenPattern;
use ramsey56::soundness;
use ramsey56::{Construction, EdgeColoring, PatternSet};
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn full_phi(beta: usize) -> EdgeColoring {
    let vs = BitVertex::all(beta).unwrap();
    let mut ids = Interner::new();
    EdgeColoring::from_fn(vs.len(), |u, v| ids.intern(phi(&vs[u], &vs[v]).unwrap()))
}

fn full_chi(q: u32) -> EdgeColoring {
    let vs = Vector2::all(&FieldSpec::new(q).unwrap());
    let mut ids = Interner::new();
    EdgeColoring::from_fn(vs.len(), |u, v| ids.intern(chi(&vs[u], &vs[v]).unwrap()))
}

fn on(projection: Projection) -> Vec<ForbiddenPattern> {
    PatternSet::default_set()
        .filter(|p| p.projection() == projection)
        .patterns()
        .to_vec()
}

fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    let mut s: Vec<usize> = (0..k).collect();
    loop {
        f(&s);
        let Some(i) = (0..k).rev().find(|&i| s[i] < n - k + i) else {
            return;
        };
        s[i] += 1;
        for j in i + 1..k {
            s[j] = s[j - 1] + 1;
        }
    }
}

fn assert_silent(c: &EdgeColoring, patterns: &[ForbiddenPattern], subset: &[usize]) {
    let sub = c.restrict(subset);
    for p in patterns {
        assert!(!p.fires(&sub), "{} fires on {:?}", p.name(), subset);
    }
}

#[test]
fn phi_patterns_absent_from_every_beta_2_subset() {
    let c = full_phi(2);
    let pats = on(Projection::Phi);
    for k in [4, 5] {
        for_each_subset(c.n(), k, |s| assert_silent(&c, &pats, s));
    }
}

#[test]
fn phi_patterns_absent_from_sampled_beta_3_subsets() {
    let c = full_phi(3);
    let pats = on(Projection::Phi);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..20_000 {
        let mut s = sample(&mut rng, c.n(), 5).into_vec();
        s.sort_unstable();
        assert_silent(&c, &pats, &s);
    }
}

#[test]
fn chi_patterns_absent_from_every_q_3_and_q_5_subset() {
    let pats = on(Projection::Chi);
    for q in [3, 5] {
        let c = full_chi(q);
        for_each_subset(c.n(), 5, |s| assert_silent(&c, &pats, s));
    }
}

#[test]
fn all_patterns_absent_from_small_constructions() {
    let set = PatternSet::default_set();
    for q in [3, 5] {
        let r = soundness::exhaustive(&Construction::build(q).unwrap(), &set);
        assert!(r.passed(), "q={q}: {:?}", r.firings.first());
    }
}

#[test]
fn sampling_is_reproducible() {
    let set = PatternSet::default_set();
    let c = Construction::build(7).unwrap();
    let a = soundness::sampled(&c, &set, 2_000, 11);
    let b = soundness::sampled(&c, &set, 2_000, 11);
    assert_eq!(a, b);
    assert!(a.passed());
}

#[test]
fn a_planted_pattern_is_reported() {
    // every matching of a monochromatic K5 is monochromatic
    let striped = PatternSet::default_set().filter(|p| p.name() == "fig4b");
    assert!(striped.scan(&EdgeColoring::monochromatic(5)).is_some());
}
