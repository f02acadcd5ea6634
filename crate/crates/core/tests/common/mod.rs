//! Helpers shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, VecDeque};

use kjump::generate::independent_sets;
use kjump::{Graph, Oracle, TokenConfig};

/// All-pairs distances by Floyd-Warshall, `usize::MAX` when unreachable.
pub fn floyd(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut d = vec![vec![usize::MAX; n]; n];
    for u in 0..n {
        d[u][u] = 0;
        for &v in g.neighbors(u) {
            d[u][v] = 1;
        }
    }
    for w in 0..n {
        for u in 0..n {
            for v in 0..n {
                if d[u][w] != usize::MAX && d[w][v] != usize::MAX && d[u][w] + d[w][v] < d[u][v] {
                    d[u][v] = d[u][w] + d[w][v];
                }
            }
        }
    }
    d
}

/// Naive successor relation written straight from the rule.
pub fn naive_successors(g: &Graph, d: &[Vec<usize>], c: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = BTreeSet::new();
    for &u in c {
        for v in 0..g.n() {
            if c.contains(&v) || d[u][v] > k {
                continue;
            }
            let mut next: Vec<usize> = c.iter().copied().filter(|&x| x != u).collect();
            next.push(v);
            next.sort_unstable();
            let independent = next.iter().all(|&a| next.iter().all(|&b| a == b || !g.has_edge(a, b)));
            if independent {
                out.insert(next);
            }
        }
    }
    out.into_iter().collect()
}

/// Naive BFS distance between two configurations, `None` if unreachable.
pub fn naive_distance(g: &Graph, s: &[usize], t: &[usize], k: usize) -> Option<usize> {
    let d = floyd(g);
    let mut seen = HashMap::from([(s.to_vec(), 0usize)]);
    let mut queue = VecDeque::from([s.to_vec()]);
    while let Some(c) = queue.pop_front() {
        let depth = seen[&c];
        if c == t {
            return Some(depth);
        }
        for next in naive_successors(g, &d, &c, k) {
            if !seen.contains_key(&next) {
                seen.insert(next.clone(), depth + 1);
                queue.push_back(next);
            }
        }
    }
    None
}

/// Component label of every independent set of the given size in the
/// `k`-reconfiguration graph.
pub fn components(g: &Graph, k: usize, size: usize) -> (Vec<TokenConfig>, HashMap<TokenConfig, usize>) {
    let sets = independent_sets(g, size);
    let oracle = Oracle::new(g, k).unwrap();
    let mut label = HashMap::new();
    let mut next = 0;
    for s in &sets {
        if label.contains_key(s) {
            continue;
        }
        for r in oracle.reachable(s).unwrap() {
            label.insert(r, next);
        }
        next += 1;
    }
    (sets, label)
}
