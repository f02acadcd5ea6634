//! Split recognition and chordality against brute force on all small graphs.

use kjump::chordal::{find_peo, is_chordal, lex_bfs, verify_peo};
use kjump::generate::all_graphs;
use kjump::split::{recognize_split, ObstructionKind};
use kjump::{Error, Graph};

fn induced_is_cycle(g: &Graph, vs: &[usize]) -> bool {
    let deg = |v: usize| vs.iter().filter(|&&w| g.has_edge(v, w)).count();
    if vs.iter().any(|&v| deg(v) != 2) {
        return false;
    }
    // connected 2-regular means a single cycle
    let mut seen = vec![vs[0]];
    let mut i = 0;
    while i < seen.len() {
        let v = seen[i];
        for &w in vs {
            if g.has_edge(v, w) && !seen.contains(&w) {
                seen.push(w);
            }
        }
        i += 1;
    }
    seen.len() == vs.len()
}

fn brute_chordal(g: &Graph) -> bool {
    let n = g.n();
    (0u32..1 << n).all(|mask| {
        let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        vs.len() < 4 || !induced_is_cycle(g, &vs)
    })
}

fn brute_split(g: &Graph) -> bool {
    let n = g.n();
    (0u32..1 << n).any(|mask| {
        let a: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let b: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 0).collect();
        a.iter().all(|&u| a.iter().all(|&v| u == v || g.has_edge(u, v))) && g.is_independent(&b)
    })
}

#[test]
fn chordality_matches_brute_force() {
    for g in all_graphs(7).iter().flatten() {
        let chordal = brute_chordal(g);
        assert_eq!(is_chordal(g), chordal, "{:?}", g.edges().collect::<Vec<_>>());
        if let Some(peo) = find_peo(g) {
            assert!(verify_peo(g, &peo).unwrap());
        }
        let mut order = lex_bfs(g);
        order.sort_unstable();
        assert_eq!(order, (0..g.n()).collect::<Vec<_>>());
    }
}

#[test]
fn split_recognition_matches_brute_force() {
    for g in all_graphs(7).iter().flatten() {
        match recognize_split(g) {
            Ok(dec) => {
                assert!(brute_split(g));
                assert!(g.is_independent(&dec.indep));
                assert_eq!(dec.clique.len() + dec.indep.len(), g.n());
                for (i, c) in dec.clusters.iter().enumerate() {
                    for &v in c.indep.iter().chain(&c.clique) {
                        assert_eq!(dec.cluster_of[v], Some(i));
                    }
                    assert!(c.nmin.iter().all(|&u| g.has_edge(c.vmin, u)));
                }
                let sizes: Vec<usize> = dec.clusters.iter().map(|c| c.nsize()).collect();
                assert!(sizes.windows(2).all(|w| w[0] <= w[1]));
            }
            Err(Error::NotSplit(ob)) => {
                assert!(!brute_split(g));
                let vs = &ob.vertices;
                let edges = vs.iter().enumerate().flat_map(|(i, &u)| vs[i + 1..].iter().map(move |&v| (u, v)));
                let count = edges.filter(|&(u, v)| g.has_edge(u, v)).count();
                match ob.kind {
                    ObstructionKind::TwoK2 => assert_eq!(count, 2),
                    ObstructionKind::C4 | ObstructionKind::C5 => assert!(induced_is_cycle(g, vs)),
                }
            }
            Err(e) => panic!("unexpected error {e}"),
        }
    }
}
