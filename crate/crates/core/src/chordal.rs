//! Perfect elimination orderings and chordality.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A vertex ordering in which each vertex is simplicial among the vertices
/// that come after it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeoOrdering {
    pub order: Vec<usize>,
}

/// Lexicographic breadth-first search visit order.
///
/// Ties between equal labels go to the lowest vertex id.
pub fn lex_bfs(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let mut best: Option<usize> = None;
        for v in 0..n {
            if visited[v] {
                continue;
            }
            if best.is_none_or(|b| labels[v] > labels[b]) {
                best = Some(v);
            }
        }
        let v = best.expect("unvisited vertex remains");
        visited[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !visited[w] {
                labels[w].push(n - step);
            }
        }
    }
    order
}

/// A perfect elimination ordering when `g` is chordal, otherwise `None`.
pub fn find_peo(g: &Graph) -> Option<PeoOrdering> {
    let mut order = lex_bfs(g);
    order.reverse();
    let peo = PeoOrdering { order };
    match verify_peo(g, &peo) {
        Ok(true) => Some(peo),
        _ => None,
    }
}

pub fn is_chordal(g: &Graph) -> bool {
    find_peo(g).is_some()
}

/// Checks that every vertex is simplicial in the subgraph induced by itself
/// and its successors.
pub fn verify_peo(g: &Graph, peo: &PeoOrdering) -> Result<bool> {
    let n = g.n();
    if peo.order.len() != n {
        return Err(Error::NotPermutation);
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in peo.order.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return Err(Error::NotPermutation);
        }
        pos[v] = i;
    }
    for (i, &v) in peo.order.iter().enumerate() {
        let later: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| pos[w] > i).collect();
        // the earliest later neighbour must see all the others
        let Some(&parent) = later.iter().min_by_key(|&&w| pos[w]) else {
            continue;
        };
        if later.iter().any(|&w| w != parent && !g.has_edge(parent, w)) {
            return Ok(false);
        }
    }
    Ok(true)
}
