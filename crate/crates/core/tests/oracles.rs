mod common;

use std::collections::BTreeSet;

use oddflag::bruhat::{down_set, leq};
use oddflag::curve_nbhd::{gamma, reachable};
use oddflag::moment_graph::{chain_degree_direct, chain_degree_od, Chain, GraphKind, MomentGraph};
use oddflag::root_system::{DegreeVector, FlagContext, Root};
use oddflag::weyl::{min_rep, CosetRep};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn ctx(n: usize, m: usize) -> FlagContext {
    FlagContext::new(n, m).unwrap()
}

#[test]
fn bruhat_criterion_matches_cover_closure() {
    for (n, m) in [(1, 1), (2, 1), (2, 2), (3, 1), (3, 2), (3, 3)] {
        let c = ctx(n, m);
        let (heads, above) = common::cover_closure(&c);
        for (i, a) in heads.iter().enumerate() {
            for (j, b) in heads.iter().enumerate() {
                assert_eq!(
                    leq(a, b).unwrap(),
                    above[i].contains(&j),
                    "({n},{m}) {a:?} <= {b:?}"
                );
            }
        }
    }
}

#[test]
fn reachable_matches_walk_enumeration() {
    for (n, m) in [(1, 1), (2, 1), (2, 2), (3, 2)] {
        let c = ctx(n, m);
        for kind in [GraphKind::Even, GraphKind::Odd] {
            let g = MomentGraph::build(c, kind).unwrap();
            for d in common::degrees_below(&c.ones()) {
                for v in g.vertices() {
                    let s = std::slice::from_ref(v);
                    assert_eq!(
                        reachable(&g, s, &d).unwrap(),
                        common::brute_force_reachable(&g, s, &d),
                        "({n},{m}) {kind:?} from {v:?} within {d}"
                    );
                }
            }
        }
    }
    // a larger budget on the smallest instance
    let c = ctx(2, 2);
    let g = MomentGraph::build(c, GraphKind::Odd).unwrap();
    let id = [CosetRep::identity(&c)];
    for d in common::degrees_below(&DegreeVector(vec![2, 2])) {
        assert_eq!(
            reachable(&g, &id, &d).unwrap(),
            common::brute_force_reachable(&g, &id, &d)
        );
    }
}

#[test]
fn graph_structure() {
    for n in 1..=4 {
        for m in 1..=n {
            let c = ctx(n, m);
            let even = MomentGraph::build(c, GraphKind::Even).unwrap();
            let odd = MomentGraph::build(c, GraphKind::Odd).unwrap();
            let complement = 2 * m * (n + 1) - m * m;
            assert_eq!(even.edges().len(), even.vertices().len() * complement);

            let mut directed = BTreeSet::new();
            for e in even.edges() {
                assert_ne!(e.src, e.dst);
                let w = min_rep(even.vertex(e.src), &c).unwrap();
                assert_eq!(&w.reflect(e.root).head(m), even.vertex(e.dst));
                directed.insert((e.src, e.dst, e.degree.clone()));
            }
            for (s, d, deg) in &directed {
                assert!(directed.contains(&(*d, *s, deg.clone())), "no reverse edge");
            }

            // odd graph = even graph restricted to W^odd endpoints
            let restricted: Vec<_> = even
                .edges()
                .iter()
                .filter(|e| even.vertex(e.src).is_odd(&c) && even.vertex(e.dst).is_odd(&c))
                .map(|e| {
                    (
                        even.vertex(e.src).clone(),
                        even.vertex(e.dst).clone(),
                        e.root,
                    )
                })
                .collect();
            let odd_edges: Vec<_> = odd
                .edges()
                .iter()
                .map(|e| (odd.vertex(e.src).clone(), odd.vertex(e.dst).clone(), e.root))
                .collect();
            assert_eq!(restricted, odd_edges);
            assert!(odd.vertices().iter().all(|v| v.is_odd(&c)));
        }
    }
}

#[test]
fn output_independent_of_worker_count() {
    let c = ctx(4, 3);
    let run = |threads| {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap();
        pool.install(|| {
            let g = MomentGraph::build(c, GraphKind::Odd).unwrap();
            let r = gamma(&g, &CosetRep::identity(&c), &c.ones()).unwrap();
            (g, r)
        })
    };
    let (g1, r1) = run(1);
    for t in [2, 3, 8] {
        let (g, r) = run(t);
        assert_eq!(g, g1);
        assert_eq!(r, r1);
    }
}

#[test]
fn chain_degree_routes_agree_on_even_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 1..=3 {
        for m in 1..=n {
            let c = ctx(n, m);
            let g = MomentGraph::build(c, GraphKind::Even).unwrap();
            for len in 0..40 {
                let (start, steps) = common::random_walk(&g, &mut rng, len % 9);
                let chain = Chain {
                    start: g.vertex(start).clone(),
                    steps: steps.iter().map(|e| g.step(e)).collect(),
                };
                let direct = chain_degree_direct(&chain, &c).unwrap();
                assert_eq!(chain_degree_od(&chain.roots(), &c).unwrap(), direct);
            }
        }
    }
}

#[test]
fn downsets_feed_gamma() {
    // Γ_d(X(λ)) contains X(λ): λ lies below some component.
    let c = ctx(3, 2);
    let g = MomentGraph::build(c, GraphKind::Odd).unwrap();
    for lam in g.vertices() {
        let r = gamma(&g, lam, &DegreeVector(vec![0, 1])).unwrap();
        assert!(r.components.iter().any(|x| leq(lam, &x.rep).unwrap()));
        assert!(down_set(lam, &c, true).contains(lam));
    }
}

fn point() -> impl Strategy<Value = FlagContext> {
    (1usize..=3)
        .prop_flat_map(|n| (Just(n), 1..=n))
        .prop_map(|(n, m)| ctx(n, m))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn reachability_is_monotone_in_budget(
        c in point(),
        lo in proptest::collection::vec(0u32..=1, 3),
        bump in proptest::collection::vec(0u32..=1, 3),
        pick in any::<prop::sample::Index>(),
    ) {
        let g = MomentGraph::build(c, GraphKind::Odd).unwrap();
        let d = DegreeVector(lo[..c.m].to_vec());
        let d2 = DegreeVector(lo[..c.m].iter().zip(&bump).map(|(a, b)| a + b).collect());
        let source = vec![g.vertex(pick.index(g.vertices().len())).clone()];
        let small = reachable(&g, &source, &d).unwrap();
        let big = reachable(&g, &source, &d2).unwrap();
        prop_assert!(small.iter().all(|v| big.binary_search(v).is_ok()));
    }

    #[test]
    fn od_formula_matches_direct_sum(c in point(), picks in proptest::collection::vec(any::<prop::sample::Index>(), 0..8)) {
        let roots: Vec<Root> = oddflag::root_system::parabolic_complement(&c);
        let chosen: Vec<Root> = picks.iter().map(|p| roots[p.index(roots.len())]).collect();
        let direct = chosen.iter().fold(c.zero_degree(), |acc, &r| {
            &acc + &oddflag::root_system::edge_degree(r, &c).unwrap()
        });
        prop_assert_eq!(chain_degree_od(&chosen, &c).unwrap(), direct);
    }
}
