//! Closed-form bounds against exhaustive and exact checks.

use perfmax::bounds::{
    alon_friedland_bound, fundamental_ratio, ln_factorial, minc_bregman_bound, omega,
    stirling_interval, theta, LogValue,
};
use perfmax::constructions::{
    build_extremal_graph, extremal_decomposition, extremal_decompositions,
};
use perfmax::permanent::{count_perfect_matchings, permanent};
use perfmax::{Count, Graph, ZeroOneMatrix};
use proptest::prelude::*;

mod common;
use common::root_product_equals;

const MARGIN: f64 = 1e-12;

/// `ln((p!)^(1/p))`, summed directly.
fn ln_root_factorial(p: u64) -> f64 {
    (1..=p).map(|i| (i as f64).ln()).sum::<f64>() / p as f64
}

fn compositions(total: u64, parts: u64, out: &mut Vec<Vec<u64>>, cur: &mut Vec<u64>) {
    if parts == 1 {
        cur.push(total);
        out.push(cur.clone());
        cur.pop();
        return;
    }
    for first in 1..=total - (parts - 1) {
        cur.push(first);
        compositions(total - first, parts - 1, out, cur);
        cur.pop();
    }
}

#[test]
fn fundamental_ratio_is_strictly_increasing() {
    let mut prev = fundamental_ratio(1).unwrap().ln();
    for p in 2..=10_000 {
        let cur = fundamental_ratio(p).unwrap().ln();
        assert!(cur > prev, "a_{p} <= a_{}", p - 1);
        prev = cur;
    }
}

#[test]
fn fundamental_ratio_matches_direct_sum() {
    for p in 1..=200u64 {
        let direct = ln_root_factorial(p) - ln_root_factorial(p + 1);
        assert!((fundamental_ratio(p).unwrap().ln() - direct).abs() < 1e-12);
    }
}

#[test]
fn exchange_step_increases_the_product() {
    let r = |p: u64| {
        if p == 0 {
            0.0
        } else {
            ln_factorial(p) / p as f64
        }
    };
    for q in 3..=200u64 {
        for p in 1..=q - 2 {
            let before = r(p) + r(q);
            let after = r(p + 1) + r(q - 1);
            assert!(after > before + MARGIN, "p={p} q={q}");
        }
    }
}

#[test]
fn theta_dominates_every_composition() {
    for k in 2..=6u64 {
        for big_m in k..=24 {
            let th = theta(k, big_m).unwrap();
            let mut all = Vec::new();
            compositions(big_m, k, &mut all, &mut Vec::new());
            for parts in all {
                let near_equal = parts.iter().max().unwrap() - parts.iter().min().unwrap() <= 1;
                let ln: f64 = parts.iter().map(|&p| ln_root_factorial(p)).sum();
                if near_equal {
                    assert!(
                        (ln - th.ln()).abs() <= MARGIN * th.ln().abs().max(1.0),
                        "{parts:?}"
                    );
                    if let Some(x) = th.exact() {
                        assert!(root_product_equals(&parts, x), "{parts:?}");
                    }
                } else {
                    assert!(ln < th.ln() - MARGIN, "k={k} M={big_m} {parts:?}");
                }
            }
        }
    }
}

#[test]
fn theta_example() {
    let expected = 2.0 * 6f64.powf(2.0 / 3.0);
    assert!((theta(4, 10).unwrap().value() - expected).abs() < 1e-9);
}

#[test]
fn stirling_interval_brackets_factorial() {
    // Beyond this the bracket is narrower than f64 resolution of ln p!.
    for p in 1..=1_000u64 {
        let (lo, hi) = stirling_interval(p).unwrap();
        let f = ln_factorial(p);
        assert!(lo.ln() < f && f < hi.ln(), "p={p}");
    }
    for p in 1..=20u64 {
        let (lo, hi) = stirling_interval(p).unwrap();
        let f = Count::factorial(p);
        assert!(lo.cmp_count(&f, 0.0).is_lt() && hi.cmp_count(&f, 0.0).is_gt());
    }
}

#[test]
fn extremal_decomposition_is_unique_up_to_64() {
    for n in 1..=64u64 {
        for m in n..=n * n {
            let found = extremal_decompositions(n, m).unwrap();
            assert!(found.len() <= 1, "n={n} m={m}: {found:?}");
            if let Some(d) = found.first() {
                assert_eq!(d.half_order(), n);
                assert_eq!(d.num_edges(), m);
                assert_eq!(omega(2 * n, m).unwrap().exact(), Some(&d.matching_count()));
            }
        }
    }
}

#[test]
fn extremal_graphs_attain_omega() {
    for n in 1..=7u64 {
        for m in n..=n * n {
            if let Some(d) = extremal_decomposition(n, m).unwrap() {
                let g = build_extremal_graph(&d).unwrap();
                assert_eq!(g.num_vertices() as u64, 2 * n);
                assert_eq!(g.num_edges() as u64, m);
                assert!(g.is_bipartite());
                assert_eq!(count_perfect_matchings(&g), d.matching_count());
            }
        }
    }
}

#[test]
fn alon_friedland_sandwich_on_all_small_graphs() {
    use perfmax::search::enumerate_graphs;
    for n in [2usize, 4, 6, 8] {
        for m in n / 2..=n * (n - 1) / 2 {
            let w = omega(n as u64, m as u64).unwrap();
            for g in enumerate_graphs(n, m).unwrap() {
                let af = alon_friedland_bound(&g);
                assert!(!af.cmp_count(&count_perfect_matchings(&g), 1e-9).is_lt());
                let order = af.cmp_with_tolerance(&w, 1e-9);
                assert!(!order.is_gt(), "n={n} m={m}");
                assert_eq!(
                    order.is_eq(),
                    g.is_almost_regular(),
                    "n={n} m={m} {:?}",
                    g.edges()
                );
            }
        }
    }
}

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n / 2)
        .prop_flat_map(|h| {
            let n = 2 * h;
            (
                Just(n),
                proptest::collection::vec(any::<bool>(), n * (n - 1) / 2),
            )
        })
        .prop_map(|(n, bits)| {
            let mut g = Graph::new(n).unwrap();
            let mut it = bits.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    if it.next().unwrap() {
                        g.add_edge(u, v);
                    }
                }
            }
            g
        })
}

fn matrix_strategy(max_n: usize) -> impl Strategy<Value = ZeroOneMatrix> {
    (1..=max_n)
        .prop_flat_map(|n| proptest::collection::vec(proptest::collection::vec(0u8..=1, n), n))
        .prop_map(|rows| ZeroOneMatrix::from_entries(&rows).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn matchings_within_alon_friedland_within_omega(g in graph_strategy(10)) {
        let af = alon_friedland_bound(&g);
        let mu = count_perfect_matchings(&g);
        prop_assert!(!af.cmp_count(&mu, 1e-9).is_lt());
        let m = g.num_edges() as u64;
        let n = g.num_vertices() as u64;
        if m >= n / 2 {
            let w = omega(n, m).unwrap();
            prop_assert!(!af.cmp_with_tolerance(&w, 1e-9).is_gt());
            if !g.is_almost_regular() && !g.has_isolated_vertex() {
                prop_assert!(af.cmp_with_tolerance(&w, 1e-9).is_lt());
            }
        }
    }

    #[test]
    fn permanent_within_minc_bregman(a in matrix_strategy(8)) {
        let per = permanent(&a).unwrap();
        let mb = minc_bregman_bound(&a).unwrap();
        prop_assert!(!mb.cmp_count(&per, 1e-9).is_lt());
    }

    #[test]
    fn logvalue_products_track_counts(a in 1u64..1_000_000, b in 1u64..1_000_000) {
        let x = LogValue::from_count(Count::from(a));
        let y = LogValue::from_count(Count::from(b));
        let prod = x.mul(&y);
        prop_assert_eq!(prod.exact(), Some(&Count::from(a as u128 * b as u128)));
        prop_assert!(prod.cmp_count(&Count::from(a as u128 * b as u128), 0.0).is_eq());
    }
}
