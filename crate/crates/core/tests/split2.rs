//! Structural properties of the split 2-Jump procedure, checked against the
//! exact search on every small split graph.

mod common;

use kjump::generate::{independent_sets, split_graphs};
use kjump::split::recognize_split;
use kjump::split2::{classify, distribution, is_frozen, normalize_typical, Kind, Split2};
use kjump::{Graph, Oracle, TokenConfig};

fn typical_sets(g: &Graph, size: usize) -> Vec<TokenConfig> {
    let dec = recognize_split(g).unwrap();
    independent_sets(g, size).into_iter().filter(|s| s.vertices().iter().all(|&v| !dec.in_clique(v))).collect()
}

#[test]
fn blocked_clique_vertices() {
    // every clique vertex of a non-Free cluster sees a token
    for g in split_graphs(7).iter().flatten() {
        let dec = recognize_split(g).unwrap();
        for size in 1..=dec.clustered_indep() {
            for s in typical_sets(g, size) {
                let types = classify(&dec, &distribution(&dec, &s).unwrap()).unwrap();
                for (c, t) in dec.clusters.iter().zip(&types) {
                    if t.kind == Kind::Free {
                        continue;
                    }
                    for &v in &c.clique {
                        assert!(g.neighbors(v).iter().any(|&w| s.contains(w)), "{:?} {s}", g.edges().collect::<Vec<_>>());
                    }
                }
            }
        }
    }
}

#[test]
fn equal_distributions_are_connected() {
    // isolated vertices sit outside every cluster, so only connected graphs
    for g in split_graphs(7).iter().flatten().filter(|g| g.is_connected()) {
        let dec = recognize_split(g).unwrap();
        let oracle = Oracle::new(g, 2).unwrap();
        for size in 1..=dec.clustered_indep().min(3) {
            let sets = typical_sets(g, size);
            for (i, s) in sets.iter().enumerate() {
                for t in &sets[i + 1..] {
                    if distribution(&dec, s).unwrap() == distribution(&dec, t).unwrap() {
                        assert!(oracle.decide(s, t).unwrap(), "{:?} {s} {t}", g.edges().collect::<Vec<_>>());
                    }
                }
            }
        }
    }
}

#[test]
fn decision_is_symmetric_and_normalization_is_reachable() {
    for g in split_graphs(7).iter().flatten() {
        let solver = Split2::new(g).unwrap();
        let dec = solver.decomposition();
        let oracle = Oracle::new(g, 2).unwrap();
        for size in 1..=3 {
            let sets = independent_sets(g, size);
            for s in &sets {
                if let Ok(typ) = normalize_typical(g, dec, s) {
                    assert!(typ.vertices().iter().all(|&v| !dec.in_clique(v)));
                    assert!(oracle.decide(s, &typ).unwrap());
                }
                for t in &sets {
                    assert_eq!(solver.decide(s, t).unwrap(), solver.decide(t, s).unwrap());
                }
            }
        }
    }
}

#[test]
fn worked_normalization() {
    // clique {p=0, q=1}; p-u1(2),u2(3); q-w1(4),w2(5)
    let g = Graph::new(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap();
    let dec = recognize_split(&g).unwrap();
    let norm = normalize_typical(&g, &dec, &TokenConfig::new([1, 2])).unwrap();
    assert_eq!(norm, TokenConfig::new([2, 3]));
    assert!(Oracle::new(&g, 2).unwrap().decide(&TokenConfig::new([1, 2]), &norm).unwrap());
}

#[test]
fn frozen_examples() {
    let g = Graph::new(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap();
    let dec = recognize_split(&g).unwrap();
    // both clusters full: nothing can move at all
    let s = TokenConfig::new([2, 3, 4, 5]);
    assert!(is_frozen(&dec, &distribution(&dec, &s).unwrap()).unwrap());
    assert!(Oracle::new(&g, 2).unwrap().successors(&s).unwrap().is_empty());
}
