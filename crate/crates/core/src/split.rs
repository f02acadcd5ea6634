//! Split graph recognition and cluster structure.
//!
//! A split graph partitions into a clique part and an independent part. The
//! edges between the two parts form a bipartite graph whose connected
//! components are the clusters.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ObstructionKind {
    #[serde(rename = "2K2")]
    TwoK2,
    C4,
    C5,
}

/// An induced subgraph that no split graph contains.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Obstruction {
    pub kind: ObstructionKind,
    pub vertices: Vec<usize>,
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            ObstructionKind::TwoK2 => "2K2",
            ObstructionKind::C4 => "C4",
            ObstructionKind::C5 => "C5",
        };
        write!(f, "{name} on {:?}", self.vertices)
    }
}

/// One connected component of the bipartite part.
///
/// A pseudo-cluster has no independent-side vertices; it collects the clique
/// vertices without independent-side neighbours.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cluster {
    /// Independent-side vertices `U_i`.
    pub indep: Vec<usize>,
    /// Clique-side vertices `V_i`.
    pub clique: Vec<usize>,
    /// Bipartite edges `(clique vertex, independent vertex)`.
    pub edges: Vec<(usize, usize)>,
    /// Clique-side vertex of minimum degree inside the cluster.
    pub vmin: usize,
    /// Neighbourhood of `vmin` inside the cluster.
    pub nmin: Vec<usize>,
}

impl Cluster {
    pub fn is_pseudo(&self) -> bool {
        self.indep.is_empty()
    }

    pub fn nsize(&self) -> usize {
        self.nmin.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitDecomposition {
    pub clique: Vec<usize>,
    pub indep: Vec<usize>,
    /// Sorted ascending by `|N_i|`; ties keep discovery order.
    pub clusters: Vec<Cluster>,
    /// Independent-side vertices with no neighbour at all.
    pub isolated: Vec<usize>,
    /// Cluster index of each vertex (`None` for isolated vertices).
    pub cluster_of: Vec<Option<usize>>,
}

impl SplitDecomposition {
    pub fn in_clique(&self, v: usize) -> bool {
        self.clique.binary_search(&v).is_ok()
    }

    /// Independent-side vertices that belong to some cluster.
    pub fn clustered_indep(&self) -> usize {
        self.indep.len() - self.isolated.len()
    }

    pub fn n0(&self) -> usize {
        self.clusters.first().map_or(0, Cluster::nsize)
    }
}

/// Recognizes a split graph and returns its canonical decomposition.
///
/// The initial partition comes from the degree-sequence test. It is then
/// canonicalized: the independent side is made maximum, and among the
/// partitions with a maximum independent side the clique side is the
/// lexicographically smallest vertex set.
pub fn recognize_split(g: &Graph) -> Result<SplitDecomposition> {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let m = (0..n)
        .filter(|&i| g.degree(order[i]) >= i)
        .map(|i| i + 1)
        .max()
        .unwrap_or(0);
    let head: usize = order[..m].iter().map(|&v| g.degree(v)).sum();
    let tail: usize = order[m..].iter().map(|&v| g.degree(v)).sum();
    if head != m * m.saturating_sub(1) + tail {
        return Err(Error::NotSplit(find_obstruction(g).ok_or_else(|| {
            Error::Internal("degree test failed but no obstruction found".into())
        })?));
    }

    let mut in_clique = vec![false; n];
    for &v in &order[..m] {
        in_clique[v] = true;
    }
    canonicalize(g, &mut in_clique);
    Ok(decompose(g, &in_clique))
}

fn indep_neighbors(g: &Graph, in_clique: &[bool], v: usize) -> Vec<usize> {
    g.neighbors(v).iter().copied().filter(|&w| !in_clique[w]).collect()
}

fn canonicalize(g: &Graph, in_clique: &mut [bool]) {
    let n = g.n();
    // Clique vertices without independent neighbours can each move across,
    // but only one at a time: the family of interchangeable vertices is
    // exactly this set, and the highest id goes to the independent side.
    let movable: Vec<usize> = (0..n)
        .filter(|&v| in_clique[v] && indep_neighbors(g, in_clique, v).is_empty())
        .collect();
    if let Some(&v) = movable.last() {
        in_clique[v] = false;
        return;
    }
    let clique_size = in_clique.iter().filter(|&&c| c).count();
    if clique_size == 0 {
        return;
    }
    let full: Vec<usize> = (0..n)
        .filter(|&b| !in_clique[b] && g.degree(b) == clique_size)
        .collect();
    if let [b] = full[..] {
        let mut family: Vec<usize> = (0..n)
            .filter(|&a| in_clique[a] && indep_neighbors(g, in_clique, a) == [b])
            .collect();
        family.push(b);
        let keep_out = *family.iter().max().unwrap();
        if keep_out != b {
            in_clique[b] = true;
            in_clique[keep_out] = false;
        }
    }
}

fn decompose(g: &Graph, in_clique: &[bool]) -> SplitDecomposition {
    let n = g.n();
    let clique: Vec<usize> = (0..n).filter(|&v| in_clique[v]).collect();
    let indep: Vec<usize> = (0..n).filter(|&v| !in_clique[v]).collect();
    let isolated: Vec<usize> = indep.iter().copied().filter(|&v| g.degree(v) == 0).collect();
    let bip_degree = |v: usize| indep_neighbors(g, in_clique, v).len();
    let bip_neighbors = |v: usize| -> Vec<usize> {
        if in_clique[v] {
            indep_neighbors(g, in_clique, v)
        } else {
            g.neighbors(v).to_vec()
        }
    };

    let mut comp = vec![usize::MAX; n];
    let mut clusters = Vec::new();
    let mut pseudo = Vec::new();
    for start in 0..n {
        if comp[start] != usize::MAX || (!in_clique[start] && g.degree(start) == 0) {
            continue;
        }
        if in_clique[start] && bip_degree(start) == 0 {
            pseudo.push(start);
            continue;
        }
        let id = clusters.len();
        let mut queue = VecDeque::from([start]);
        comp[start] = id;
        let mut members = Vec::new();
        while let Some(v) = queue.pop_front() {
            members.push(v);
            for w in bip_neighbors(v) {
                if comp[w] == usize::MAX {
                    comp[w] = id;
                    queue.push_back(w);
                }
            }
        }
        members.sort_unstable();
        let (cl, ind): (Vec<usize>, Vec<usize>) = members.iter().partition(|&&v| in_clique[v]);
        let edges: Vec<(usize, usize)> = cl
            .iter()
            .flat_map(|&a| indep_neighbors(g, in_clique, a).into_iter().map(move |u| (a, u)))
            .collect();
        let vmin = *cl.iter().min_by_key(|&&a| (bip_degree(a), a)).unwrap();
        let nmin = indep_neighbors(g, in_clique, vmin);
        clusters.push(Cluster { indep: ind, clique: cl, edges, vmin, nmin });
    }
    if !pseudo.is_empty() {
        clusters.push(Cluster {
            indep: Vec::new(),
            vmin: pseudo[0],
            clique: pseudo,
            edges: Vec::new(),
            nmin: Vec::new(),
        });
    }
    // stable sort keeps discovery order on ties
    clusters.sort_by_key(Cluster::nsize);
    let mut cluster_of = vec![None; n];
    for (i, c) in clusters.iter().enumerate() {
        for &v in c.indep.iter().chain(&c.clique) {
            cluster_of[v] = Some(i);
        }
    }
    SplitDecomposition { clique, indep, clusters, isolated, cluster_of }
}

/// Searches for an induced 2K2, C4 or C5.
pub fn find_obstruction(g: &Graph) -> Option<Obstruction> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[i + 1..] {
            if a == c || a == d || b == c || b == d {
                continue;
            }
            let cross = [(a, c), (a, d), (b, c), (b, d)].map(|(x, y)| g.has_edge(x, y));
            match cross {
                [false, false, false, false] => {
                    return Some(Obstruction { kind: ObstructionKind::TwoK2, vertices: vec![a, b, c, d] });
                }
                // a-b-d-c-a
                [false, true, true, false] => {
                    return Some(Obstruction { kind: ObstructionKind::C4, vertices: vec![a, b, d, c] });
                }
                // a-b-c-d-a
                [true, false, false, true] => {
                    return Some(Obstruction { kind: ObstructionKind::C4, vertices: vec![a, b, c, d] });
                }
                _ => {}
            }
        }
    }
    find_c5(g)
}

fn find_c5(g: &Graph) -> Option<Obstruction> {
    // induced path a-b-c-d plus a vertex e adjacent to a and d only
    let n = g.n();
    for a in 0..n {
        for &b in g.neighbors(a) {
            for &c in g.neighbors(b) {
                if c == a || g.has_edge(a, c) {
                    continue;
                }
                for &d in g.neighbors(c) {
                    if d == b || d == a || g.has_edge(d, a) || g.has_edge(d, b) {
                        continue;
                    }
                    for &e in g.neighbors(d) {
                        if [a, b, c].contains(&e) {
                            continue;
                        }
                        if g.has_edge(e, a) && !g.has_edge(e, b) && !g.has_edge(e, c) {
                            return Some(Obstruction { kind: ObstructionKind::C5, vertices: vec![a, b, c, d, e] });
                        }
                    }
                }
            }
        }
    }
    None
}
