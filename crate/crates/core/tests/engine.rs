mod common;

use proptest::prelude::*;

use kjump::generate::{independent_sets, random_connected_graph, rng};
use kjump::{
    decide, exists_within, lower_bound_moves, shortest, successors, validate_sequence, Error, Graph, LowerBound,
    Oracle, SearchLimits, TokenConfig,
};

fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..=7, proptest::collection::vec(any::<bool>(), 21)).prop_map(|(n, bits)| {
        let mut edges = Vec::new();
        let mut i = 0;
        for u in 0..n {
            for v in u + 1..n {
                if bits[i] {
                    edges.push((u, v));
                }
                i += 1;
            }
        }
        Graph::new(n, &edges).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn successors_match_the_rule(g in arb_graph(), k in 1usize..4, size in 1usize..4) {
        let d = common::floyd(&g);
        for c in independent_sets(&g, size) {
            let got: Vec<Vec<usize>> = successors(&g, &c, k).unwrap().iter().map(|s| s.vertices().to_vec()).collect();
            prop_assert_eq!(got, common::naive_successors(&g, &d, c.vertices(), k));
        }
    }

    #[test]
    fn shortest_matches_naive_bfs(g in arb_graph(), k in 1usize..4, size in 1usize..3) {
        let sets = independent_sets(&g, size);
        for s in sets.iter().take(4) {
            for t in &sets {
                let want = common::naive_distance(&g, s.vertices(), t.vertices(), k);
                let got = shortest(&g, s, t, k).unwrap();
                prop_assert_eq!(got.as_ref().map(|q| q.len()), want);
                prop_assert_eq!(decide(&g, s, t, k).unwrap(), want.is_some());
                if let Some(seq) = got {
                    let report = validate_sequence(&g, &seq, k);
                    prop_assert!(report.valid);
                    prop_assert_eq!(&report.final_config, t);
                    let bound = lower_bound_moves(&g, s, t, k).unwrap();
                    prop_assert!(bound.finite().unwrap() <= seq.len());
                }
                let len = want.unwrap_or(usize::MAX);
                for budget in 0..4 {
                    prop_assert_eq!(exists_within(&g, s, t, k, budget).unwrap(), len <= budget);
                }
            }
        }
    }

    #[test]
    fn reachability_is_symmetric(g in arb_graph(), k in 1usize..4) {
        let sets = independent_sets(&g, 2);
        for s in &sets {
            for t in &sets {
                prop_assert_eq!(decide(&g, s, t, k).unwrap(), decide(&g, t, s, k).unwrap());
            }
        }
    }
}

#[test]
fn witnesses_are_deterministic() {
    let mut r = rng(11);
    for _ in 0..20 {
        let g = random_connected_graph(&mut r, 9, 0.2);
        let sets = independent_sets(&g, 3);
        let (s, t) = (&sets[0], sets.last().unwrap());
        assert_eq!(shortest(&g, s, t, 2).unwrap(), shortest(&g, s, t, 2).unwrap());
    }
}

#[test]
fn large_graphs_use_the_list_backend() {
    // path on 70 vertices: one token walking end to end
    let edges: Vec<_> = (1..70).map(|i| (i - 1, i)).collect();
    let g = Graph::new(70, &edges).unwrap();
    let s = TokenConfig::new([0, 69]);
    let t = TokenConfig::new([10, 69]);
    let seq = shortest(&g, &s, &t, 3).unwrap().unwrap();
    assert_eq!(seq.len(), 4);
    assert!(exists_within(&g, &s, &t, 3, 4).unwrap());
    assert!(!exists_within(&g, &s, &t, 3, 3).unwrap());
    assert_eq!(lower_bound_moves(&g, &s, &t, 3).unwrap(), LowerBound::Finite(4));
    let oracle = Oracle::new(&g, 1).unwrap();
    assert_eq!(oracle.reachable(&TokenConfig::new([0])).unwrap().len(), 70);
}

#[test]
fn state_cap_surfaces_as_error() {
    let edges: Vec<_> = (1..12).map(|i| (i - 1, i)).collect();
    let g = Graph::new(12, &edges).unwrap();
    let s = TokenConfig::new([0, 2, 4, 6]);
    let t = TokenConfig::new([5, 7, 9, 11]);
    let oracle = Oracle::new(&g, 11).unwrap().with_limits(SearchLimits { max_states: 10 });
    assert_eq!(oracle.decide(&s, &t), Err(Error::ResourceExhausted { cap: 10 }));
}

#[test]
fn input_errors() {
    let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
    let a = TokenConfig::new([0]);
    assert_eq!(decide(&g, &a, &TokenConfig::new([0, 2]), 1), Err(Error::SizeMismatch(1, 2)));
    assert_eq!(decide(&g, &TokenConfig::new([0, 1]), &TokenConfig::new([0, 2]), 1), Err(Error::NotIndependent(0, 1)));
    assert!(matches!(decide(&g, &a, &TokenConfig::new([5]), 1), Err(Error::VertexOutOfRange { .. })));
    assert!(matches!(decide(&g, &a, &a, 0), Err(Error::BoundTooSmall { .. })));
}
