//! Seeded random instances and exhaustive enumeration of small graphs.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::TokenConfig;
use crate::graph::Graph;
use crate::split::recognize_split;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random spanning tree plus each remaining pair with probability `p`.
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        edges.push((parent.min(order[i]), parent.max(order[i])));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !edges.contains(&(u, v)) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("generated edges are simple")
}

/// Random split graph: a clique on a random subset, the rest independent,
/// cross pairs joined with probability `p`.
pub fn random_split_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut vertices: Vec<usize> = (0..n).collect();
    vertices.shuffle(rng);
    let a = rng.gen_range(0..=n);
    let (clique, indep) = vertices.split_at(a);
    let mut edges = Vec::new();
    for (i, &u) in clique.iter().enumerate() {
        for &v in &clique[i + 1..] {
            edges.push((u, v));
        }
        for &v in indep {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("generated edges are simple")
}

/// Greedy independent set of the given size over a random vertex order, if
/// one turns up within a few attempts.
pub fn random_independent_set<R: Rng>(rng: &mut R, g: &Graph, size: usize) -> Option<TokenConfig> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    for _ in 0..16 {
        order.shuffle(rng);
        let mut chosen: Vec<usize> = Vec::with_capacity(size);
        for &v in &order {
            if chosen.len() == size {
                break;
            }
            if chosen.iter().all(|&u| !g.has_edge(u, v)) {
                chosen.push(v);
            }
        }
        if chosen.len() == size {
            return Some(TokenConfig::new(chosen));
        }
    }
    None
}

/// All independent sets of `g` with exactly `size` vertices, in
/// lexicographic order.
pub fn independent_sets(g: &Graph, size: usize) -> Vec<TokenConfig> {
    fn go(g: &Graph, size: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<TokenConfig>) {
        if cur.len() == size {
            out.push(TokenConfig::new(cur.iter().copied()));
            return;
        }
        for v in from..g.n() {
            if cur.iter().all(|&u| !g.has_edge(u, v)) {
                cur.push(v);
                go(g, size, v + 1, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(g, size, 0, &mut Vec::new(), &mut out);
    out
}

/// Colour refinement; returns a per-vertex colour that is invariant under
/// isomorphism (same colours for corresponding vertices of isomorphic
/// graphs).
fn refined_colors(g: &Graph) -> Vec<u64> {
    let mut colors: Vec<u64> = (0..g.n()).map(|v| g.degree(v) as u64).collect();
    for _ in 0..g.n() {
        let next: Vec<u64> = (0..g.n())
            .map(|v| {
                let mut around: Vec<u64> = g.neighbors(v).iter().map(|&w| colors[w]).collect();
                around.sort_unstable();
                let mut h = DefaultHasher::new();
                (colors[v], around).hash(&mut h);
                h.finish()
            })
            .collect();
        let classes = |c: &[u64]| {
            let mut s = c.to_vec();
            s.sort_unstable();
            s.dedup();
            s.len()
        };
        let stable = classes(&next) == classes(&colors);
        colors = next;
        if stable {
            break;
        }
    }
    colors
}

fn invariant(g: &Graph, colors: &[u64]) -> (usize, usize, Vec<u64>) {
    let mut sorted = colors.to_vec();
    sorted.sort_unstable();
    (g.n(), g.edge_count(), sorted)
}

/// Backtracking isomorphism test respecting refined colours.
fn isomorphic(g: &Graph, gc: &[u64], h: &Graph, hc: &[u64]) -> bool {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    // rare colours first keeps branching low
    let mut count: HashMap<u64, usize> = HashMap::new();
    for &c in gc {
        *count.entry(c).or_default() += 1;
    }
    order.sort_by_key(|&v| (count[&gc[v]], v));
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn go(
        i: usize,
        order: &[usize],
        g: &Graph,
        gc: &[u64],
        h: &Graph,
        hc: &[u64],
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if i == order.len() {
            return true;
        }
        let v = order[i];
        for w in 0..h.n() {
            if used[w] || hc[w] != gc[v] {
                continue;
            }
            let fits = order[..i].iter().all(|&x| g.has_edge(v, x) == h.has_edge(w, map[x]));
            if !fits {
                continue;
            }
            map[v] = w;
            used[w] = true;
            if go(i + 1, order, g, gc, h, hc, map, used) {
                return true;
            }
            used[w] = false;
        }
        map[v] = usize::MAX;
        false
    }
    go(0, &order, g, gc, h, hc, &mut map, &mut used)
}

/// Collects graphs up to isomorphism.
#[derive(Default)]
pub struct IsoSet {
    buckets: HashMap<(usize, usize, Vec<u64>), Vec<usize>>,
    graphs: Vec<(Graph, Vec<u64>)>,
}

impl IsoSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `g` unless an isomorphic graph is already present.
    pub fn insert(&mut self, g: Graph) -> bool {
        let colors = refined_colors(&g);
        let key = invariant(&g, &colors);
        let bucket = self.buckets.entry(key).or_default();
        if bucket.iter().any(|&i| isomorphic(&self.graphs[i].0, &self.graphs[i].1, &g, &colors)) {
            return false;
        }
        bucket.push(self.graphs.len());
        self.graphs.push((g, colors));
        true
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn into_graphs(self) -> Vec<Graph> {
        self.graphs.into_iter().map(|(g, _)| g).collect()
    }
}

/// Extends every graph in `base` (all on `n - 1` vertices) by a new vertex in
/// every possible way and keeps those accepted by `keep`, up to isomorphism.
///
/// When `keep` is closed under taking induced subgraphs and `base` holds all
/// such graphs on `n - 1` vertices, the result holds all of them on `n`.
pub fn extend_by_vertex(base: &[Graph], keep: impl Fn(&Graph) -> bool) -> Vec<Graph> {
    let mut set = IsoSet::new();
    for g in base {
        let n = g.n() + 1;
        let old: Vec<(usize, usize)> = g.edges().collect();
        for nbrs in 0u64..1 << g.n() {
            let mut edges = old.clone();
            edges.extend((0..g.n()).filter(|&v| nbrs >> v & 1 == 1).map(|v| (v, n - 1)));
            let h = Graph::new(n, &edges).expect("extension is simple");
            if keep(&h) {
                set.insert(h);
            }
        }
    }
    set.into_graphs()
}

/// Every graph on `0..=max_n` vertices accepted by the hereditary predicate
/// `keep`, up to isomorphism; index `n` holds the graphs on `n` vertices.
pub fn hereditary_family(max_n: usize, keep: impl Fn(&Graph) -> bool) -> Vec<Vec<Graph>> {
    let mut levels = vec![vec![Graph::new(0, &[]).unwrap()]];
    for _ in 1..=max_n {
        let next = extend_by_vertex(levels.last().unwrap(), &keep);
        levels.push(next);
    }
    levels
}

/// All graphs up to isomorphism, by vertex count.
pub fn all_graphs(max_n: usize) -> Vec<Vec<Graph>> {
    hereditary_family(max_n, |_| true)
}

/// All split graphs up to isomorphism, by vertex count.
pub fn split_graphs(max_n: usize) -> Vec<Vec<Graph>> {
    hereditary_family(max_n, |g| recognize_split(g).is_ok())
}
