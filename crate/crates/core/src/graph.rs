//! Simple undirected graphs with dense vertex ids.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Largest vertex count for which the all-pairs distance table is cached.
pub const DIST_TABLE_LIMIT: usize = 4096;

const NO_PATH: u32 = u32::MAX;

/// Hop distance between two vertices.
///
/// `Unreachable` orders after every finite distance, so `d <= Finite(k)`
/// reads as "within k hops".
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(usize),
    Unreachable,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Unreachable => None,
        }
    }

    pub fn within(self, k: usize) -> bool {
        matches!(self, Distance::Finite(d) if d <= k)
    }

    fn from_raw(raw: u32) -> Self {
        if raw == NO_PATH {
            Distance::Unreachable
        } else {
            Distance::Finite(raw as usize)
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Unreachable => f.write_str("unreachable"),
        }
    }
}

/// An immutable simple graph on vertices `0..n`.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    masks: Option<Vec<u64>>,
    labels: BTreeMap<usize, String>,
    dist: OnceLock<Vec<u32>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj && self.labels == other.labels
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph, rejecting self-loops, repeated edges and bad endpoints.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::EdgeOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::DuplicateEdge(u, v));
            }
        }
        Ok(Self::from_edge_set(n, &seen))
    }

    /// Builds a graph from an edge collection where repeats are merged.
    /// Self-loops and out-of-range endpoints are still rejected.
    pub fn from_edges_merged(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::EdgeOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(Self::from_edge_set(n, &set))
    }

    fn from_edge_set(n: usize, edges: &BTreeSet<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let masks = (n <= 64).then(|| {
            adj.iter()
                .map(|list| list.iter().fold(0u64, |m, &v| m | (1 << v)))
                .collect()
        });
        Graph { n, adj, masks, labels: BTreeMap::new(), dist: OnceLock::new() }
    }

    pub fn with_labels(mut self, labels: BTreeMap<usize, String>) -> Result<Self> {
        if let Some((&vertex, _)) = labels.iter().find(|(&v, _)| v >= self.n) {
            return Err(Error::VertexOutOfRange { vertex, n: self.n });
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn labels(&self) -> &BTreeMap<usize, String> {
        &self.labels
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.get(&v).map(String::as_str)
    }

    /// Neighborhood bitmasks, available when `n <= 64`.
    pub fn masks(&self) -> Option<&[u64]> {
        self.masks.as_deref()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        match &self.masks {
            Some(m) => m[u] >> v & 1 == 1,
            None => self.adj[u].binary_search(&v).is_ok(),
        }
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    fn bfs_raw(&self, source: usize) -> Vec<u32> {
        let mut dist = vec![NO_PATH; self.n];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let next = dist[u] + 1;
            for &w in &self.adj[u] {
                if dist[w] == NO_PATH {
                    dist[w] = next;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    fn table(&self) -> Option<&[u32]> {
        if self.n > DIST_TABLE_LIMIT {
            return None;
        }
        Some(self.dist.get_or_init(|| {
            let mut table = Vec::with_capacity(self.n * self.n);
            for s in 0..self.n {
                table.extend(self.bfs_raw(s));
            }
            table
        }))
    }

    /// Distances from `source` to every vertex.
    pub fn distances_from(&self, source: usize) -> Vec<Distance> {
        match self.table() {
            Some(t) => t[source * self.n..(source + 1) * self.n]
                .iter()
                .map(|&d| Distance::from_raw(d))
                .collect(),
            None => self.bfs_raw(source).into_iter().map(Distance::from_raw).collect(),
        }
    }

    pub fn dist(&self, u: usize, v: usize) -> Result<Distance> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.distance(u, v))
    }

    /// Unchecked variant of [`Graph::dist`]; panics on out-of-range ids.
    pub fn distance(&self, u: usize, v: usize) -> Distance {
        match self.table() {
            Some(t) => Distance::from_raw(t[u * self.n + v]),
            None => Distance::from_raw(self.bfs_raw(u)[v]),
        }
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.bfs_raw(0).iter().all(|&d| d != NO_PATH)
    }

    /// Maximum pairwise distance; errors on a disconnected graph.
    pub fn diameter(&self) -> Result<usize> {
        let mut best = 0;
        for s in 0..self.n {
            let row: Vec<u32> = match self.table() {
                Some(t) => t[s * self.n..(s + 1) * self.n].to_vec(),
                None => self.bfs_raw(s),
            };
            for d in row {
                if d == NO_PATH {
                    return Err(Error::Disconnected);
                }
                best = best.max(d as usize);
            }
        }
        Ok(best)
    }

    /// First adjacent pair inside `set`, if any.
    pub fn independence_conflict(&self, set: &[usize]) -> Option<(usize, usize)> {
        for (i, &u) in set.iter().enumerate() {
            for &v in &set[i + 1..] {
                if self.has_edge(u, v) {
                    return Some((u.min(v), u.max(v)));
                }
            }
        }
        None
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        self.independence_conflict(set).is_none()
    }

    /// Shortest path from `u` to `v`, inclusive of both ends.
    ///
    /// Parents are assigned by a BFS from `u` that scans neighbors in
    /// ascending id order, so the path is deterministic.
    pub fn shortest_path(&self, u: usize, v: usize) -> Option<Vec<usize>> {
        let mut parent = vec![usize::MAX; self.n];
        let mut queue = VecDeque::new();
        parent[u] = u;
        queue.push_back(u);
        while let Some(x) = queue.pop_front() {
            if x == v {
                break;
            }
            for &w in &self.adj[x] {
                if parent[w] == usize::MAX {
                    parent[w] = x;
                    queue.push_back(w);
                }
            }
        }
        if parent[v] == usize::MAX {
            return None;
        }
        let mut path = vec![v];
        let mut x = v;
        while x != u {
            x = parent[x];
            path.push(x);
        }
        path.reverse();
        Some(path)
    }

    /// Induced subgraph on `keep` (renumbered in the given order).
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let edges: BTreeSet<(usize, usize)> = self
            .edges()
            .filter(|&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|(u, v)| (index[u].min(index[v]), index[u].max(index[v])))
            .collect();
        Graph::from_edge_set(keep.len(), &edges)
    }
}
