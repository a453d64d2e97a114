//! Structural facts about two-generator semigroups, checked by brute force.

use std::collections::BTreeSet;

use sgp_core::{
    amenable_minimum, amenable_sets, generalized_fr, ground_layer, is_amenable, optimal_amenable, Budget,
    Dim2Semigroup, Layer, Optimality, StripSpec,
};
use sgp_oracle::{naive_contains, naive_divisors_in, NaiveSemigroup};

const SMALL: &[(i64, i64)] = &[(2, 3), (2, 5), (3, 4), (3, 5), (3, 7), (4, 5), (4, 7), (5, 6), (5, 7), (5, 8)];

fn dim2(a: i64, b: i64) -> Dim2Semigroup {
    Dim2Semigroup::new(a, b).unwrap()
}

#[test]
fn representations_round_trip() {
    for &(a, b) in SMALL {
        let s2 = dim2(a, b);
        for n in -a * b..=3 * a * b {
            let uv = s2.uv_rep(n);
            assert!((0..b).contains(&uv.u));
            assert_eq!(uv.u * a + uv.v * b, n);
            assert_eq!(s2.contains_uv(n), naive_contains(&[a, b], n), "<{a},{b}> n={n}");
            if n >= 0 {
                let ih = s2.ih_rep(n).unwrap();
                assert!((ih.i * a) % b < a);
                assert_eq!((ih.i * a) % b + ih.h * a, n);
            }
        }
    }
}

/// `|D(mbar + n) ∩ [mbar, ∞)|` grows with `n`.
#[test]
fn monotone_triangles() {
    for &(a, b) in SMALL {
        let mut oracle = NaiveSemigroup::new(&[a, b]);
        let mbar = 2 * (a - 1) * (b - 1) - 1;
        let sizes: Vec<usize> = (0..=2 * a * b)
            .map(|n| naive_divisors_in(&mut oracle, &[mbar + n]).into_iter().filter(|&d| d >= mbar).count())
            .collect();
        assert!(sizes.windows(2).all(|w| w[0] <= w[1]), "<{a},{b}>: {sizes:?}");
    }
}

fn interval(b: i64, i: i64, h: i64) -> BTreeSet<i64> {
    (0..=h).map(|t| (i + t) % b).collect()
}

fn amenable_interval(a: i64, b: i64, t: &BTreeSet<i64>) -> bool {
    if t.len() as i64 == b {
        return true;
    }
    let starts: Vec<i64> = t.iter().copied().filter(|&j| !t.contains(&((j + b - 1) % b))).collect();
    starts.len() == 1 && (starts[0] * a) % b < a
}

fn precedes(a: i64, b: i64, l: &BTreeSet<i64>, l2: &BTreeSet<i64>) -> bool {
    let union: BTreeSet<i64> = l.union(l2).copied().collect();
    !amenable_interval(a, b, &union) && (l.contains(&0) || (!l2.contains(&0) && l.iter().max() < l2.iter().min()))
}

/// Every amenable interval that is not the whole ground.
fn amenable_intervals(a: i64, b: i64) -> Vec<BTreeSet<i64>> {
    let mut out = Vec::new();
    for i in (0..b).filter(|i| (i * a) % b < a) {
        for h in 0..b - 1 {
            out.push(interval(b, i, h));
        }
    }
    out
}

/// Divisors of the ground elements indexed by `l`, as a set.
fn ground_divs(oracle: &mut NaiveSemigroup, a: i64, b: i64, mbar: i64, l: &BTreeSet<i64>) -> BTreeSet<i64> {
    let targets: Vec<i64> = l.iter().map(|j| mbar + (j * a) % b).collect();
    naive_divisors_in(oracle, &targets).into_iter().collect()
}

/// Only the neighbours of an interval in a ≺-chain take away its divisors.
#[test]
fn neighbour_locality() {
    let mut chains = 0;
    for &(a, b) in &[(3, 5), (3, 7), (4, 7), (5, 8), (3, 11), (5, 12)] {
        let mut oracle = NaiveSemigroup::new(&[a, b]);
        let mbar = 2 * (a - 1) * (b - 1) - 1;
        let all = amenable_intervals(a, b);
        let firsts: Vec<&BTreeSet<i64>> = all.iter().filter(|l| l.contains(&0)).collect();
        let mut stack: Vec<Vec<&BTreeSet<i64>>> = firsts.into_iter().map(|l| vec![l]).collect();
        while let Some(chain) = stack.pop() {
            if chain.len() >= 3 {
                chains += 1;
                let t = chain.len();
                for i in 1..t - 1 {
                    let own = ground_divs(&mut oracle, a, b, mbar, chain[i]);
                    let rest: BTreeSet<i64> =
                        (0..t).filter(|&j| j != i).flat_map(|j| chain[j].iter().copied()).collect();
                    let mut near: BTreeSet<i64> = chain[i - 1].union(chain[i + 1]).copied().collect();
                    near.insert(0);
                    let far = ground_divs(&mut oracle, a, b, mbar, &rest);
                    let close = ground_divs(&mut oracle, a, b, mbar, &near);
                    let lhs: BTreeSet<i64> = own.difference(&far).copied().collect();
                    let rhs: BTreeSet<i64> = own.difference(&close).copied().collect();
                    assert_eq!(lhs, rhs, "<{a},{b}> chain {chain:?} at {i}");
                }
            }
            if chain.len() < 4 {
                let last = *chain.last().unwrap();
                for next in all.iter().filter(|l| precedes(a, b, last, l)) {
                    // Elements of a chain are pairwise disjoint.
                    if chain.iter().all(|c| c.is_disjoint(next)) {
                        let mut longer = chain.clone();
                        longer.push(next);
                        stack.push(longer);
                    }
                }
            }
        }
    }
    assert!(chains > 100, "only {chains} chains");
}

/// An amenable set whose ground part fits in `interval(i, h)` divides `mbar ⊕ i + h a`.
#[test]
fn triangle_maximality() {
    let mut checked = 0;
    for &(a, b) in &[(2, 5), (3, 5), (3, 7), (4, 5), (4, 7)] {
        let s2 = dim2(a, b);
        let s = s2.base();
        let mbar = 2 * s.conductor() - 1;
        for r in 1..=5 {
            for m in amenable_sets(s, mbar, r).unwrap() {
                if m.iter().any(|&x| x >= mbar + 2 * b) {
                    continue;
                }
                let ground: BTreeSet<i64> = m.iter().filter_map(|&x| s2.ground_index(mbar, x)).collect();
                for l in amenable_intervals(a, b) {
                    if !ground.is_subset(&l) {
                        continue;
                    }
                    let i = *l.iter().find(|&&j| !l.contains(&((j + b - 1) % b))).unwrap();
                    let top = s2.ground_elem(mbar, i) + (l.len() as i64 - 1) * a;
                    for &x in &m {
                        assert!(naive_contains(&[a, b], top - x), "<{a},{b}> M={m:?} L={l:?}");
                    }
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 100);
}

/// On two generators the optimum over amenable sets is δ_FR^r(mbar).
#[test]
fn amenable_optimum_is_the_distance() {
    for &(a, b) in SMALL {
        let s2 = dim2(a, b);
        let s = s2.base();
        let mbar = 2 * s.conductor() - 1;
        for r in 1..=5 {
            let fr = generalized_fr(s, mbar, r, &Budget::default()).unwrap();
            let best = amenable_minimum(s, mbar, r).unwrap();
            let closed = optimal_amenable(s, mbar, r).unwrap();
            assert_eq!(closed.optimality, Optimality::Optimal);
            assert_eq!(best.divisor_count, fr.value, "<{a},{b}> r={r}");
            assert_eq!(closed.configuration.divisor_count, fr.value, "<{a},{b}> r={r}");
            assert_eq!(closed.configuration.len(), r);
            for m in amenable_sets(s, mbar, r).unwrap() {
                assert!(is_amenable(s, mbar, &m).unwrap());
            }
        }
    }
}

/// Highlighting new divisors draws exactly the rectangle set.
#[test]
fn strip_layers_are_sets() {
    for &(a, b) in SMALL {
        let s2 = dim2(a, b);
        let mbar = 2 * s2.conductor() - 1;
        for n in 0..2 * a * b {
            let new = s2.new_divisors(mbar, n).unwrap();
            let spec = StripSpec {
                a,
                b,
                origin: mbar,
                rows: (-a - 1, (n / b).max(1) + 1),
                layers: vec![ground_layer(a, b, mbar), Layer::new("new", new.clone())],
            };
            let drawn: Vec<i64> = spec.highlighted("new").into_iter().collect();
            assert_eq!(drawn, new, "<{a},{b}> n={n}");
            assert_eq!(spec.highlighted("ground").len() as i64, b);
            for x in new {
                let (u, v) = spec.cell_of(x);
                let rep = s2.uv_rep(x - mbar);
                assert_eq!((u, v), (rep.u, rep.v));
            }
        }
    }
}
