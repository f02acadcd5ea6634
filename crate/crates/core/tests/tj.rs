use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use kjump::generate::{independent_sets, random_connected_graph};
use kjump::tj::{simulate_move, simulate_sequence};
use kjump::{shortest, validate_sequence, Error, Graph, TokenConfig};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn single_jumps_compile(seed in any::<u64>(), n in 2usize..16, k in 3usize..5) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let g = random_connected_graph(&mut r, n, 0.05);
        for size in 1..=3 {
            for c in independent_sets(&g, size).iter().take(12) {
                for &u in c.vertices() {
                    for v in 0..n {
                        let target = c.moved(u, v);
                        if c.contains(v) || !g.is_independent(target.vertices()) {
                            continue;
                        }
                        let seq = simulate_move(&g, c, u, v, k).unwrap();
                        let report = validate_sequence(&g, &seq, k);
                        prop_assert!(report.valid);
                        prop_assert_eq!(report.final_config, target);
                    }
                }
            }
        }
    }

    #[test]
    fn witnesses_compile(seed in any::<u64>(), n in 2usize..12) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let g = random_connected_graph(&mut r, n, 0.1);
        let d = g.diameter().unwrap().max(1);
        let sets = independent_sets(&g, 2);
        for s in sets.iter().take(5) {
            for t in &sets {
                if let Some(w) = shortest(&g, s, t, d).unwrap() {
                    let sim = simulate_sequence(&g, &w, 3).unwrap();
                    prop_assert_eq!(sim.expansions.len(), w.len());
                    prop_assert_eq!(&validate_sequence(&g, &sim.sequence, 3).final_config, t);
                }
            }
        }
    }
}

#[test]
fn long_path_expansion() {
    let edges: Vec<_> = (1..40).map(|i| (i - 1, i)).collect();
    let g = Graph::new(40, &edges).unwrap();
    let c = TokenConfig::new([0, 20, 39]);
    let seq = simulate_move(&g, &c, 0, 37, 3).unwrap();
    assert!(validate_sequence(&g, &seq, 3).valid);
    assert_eq!(seq.last(), TokenConfig::new([20, 37, 39]));
    assert!(seq.len() <= 2 * 37);
}

#[test]
fn rejects_small_bound_and_disconnected_input() {
    let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
    let w = kjump::MoveSequence::empty(TokenConfig::new([0]));
    assert_eq!(simulate_sequence(&g, &w, 3), Err(Error::Disconnected));
    let p = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
    assert!(matches!(simulate_sequence(&p, &kjump::MoveSequence::empty(TokenConfig::new([0])), 2), Err(Error::BoundTooSmall { .. })));
}
