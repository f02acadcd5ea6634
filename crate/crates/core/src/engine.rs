//! Exact search over token configurations under the `k`-Jump rule.
//!
//! Tokens are indistinguishable, so states are vertex sets. Graphs with at
//! most 64 vertices use a `u64` bitmask per state; larger graphs fall back
//! to sorted vertex lists. Successors are always visited in ascending
//! lexicographic order of their vertex lists, which makes every witness
//! reproducible and independent of the state encoding.

use std::collections::hash_map::Entry;
use std::collections::{HashMap, VecDeque};
use std::hash::Hash;

use crate::bound::{matching_bound, LowerBound};
use crate::config::{Move, MoveSequence, TokenConfig};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default cap on the number of stored states per query.
pub const DEFAULT_STATE_CAP: usize = 50_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_states: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits { max_states: DEFAULT_STATE_CAP }
    }
}

trait Space {
    type Key: Clone + Eq + Hash;

    fn encode(&self, c: &TokenConfig) -> Self::Key;
    fn decode(&self, key: &Self::Key) -> TokenConfig;
    /// Appends `(successor, move)` pairs in canonical order.
    fn expand(&self, key: &Self::Key, out: &mut Vec<(Self::Key, Move)>);
    fn tokens(&self, key: &Self::Key) -> Vec<usize>;
}

struct MaskSpace<'g> {
    adj: &'g [u64],
    ball: Vec<u64>,
}

impl<'g> MaskSpace<'g> {
    fn new(g: &'g Graph, k: usize) -> Self {
        let adj = g.masks().expect("mask backend needs n <= 64");
        let ball = (0..g.n())
            .map(|u| {
                g.distances_from(u)
                    .iter()
                    .enumerate()
                    .filter(|&(v, d)| v != u && d.within(k))
                    .fold(0u64, |m, (v, _)| m | 1 << v)
            })
            .collect();
        MaskSpace { adj, ball }
    }
}

impl Space for MaskSpace<'_> {
    type Key = u64;

    fn encode(&self, c: &TokenConfig) -> u64 {
        c.mask()
    }

    fn decode(&self, key: &u64) -> TokenConfig {
        TokenConfig::from_mask(*key)
    }

    fn expand(&self, &key: &u64, out: &mut Vec<(u64, Move)>) {
        let start = out.len();
        let mut tokens = key;
        while tokens != 0 {
            let u = tokens.trailing_zeros() as usize;
            tokens &= tokens - 1;
            let rest = key & !(1 << u);
            let mut cand = self.ball[u] & !key;
            while cand != 0 {
                let v = cand.trailing_zeros() as usize;
                cand &= cand - 1;
                if self.adj[v] & rest == 0 {
                    out.push((rest | 1 << v, Move::new(u, v)));
                }
            }
        }
        // lexicographic order of sorted vertex lists: the set holding the
        // lowest differing vertex comes first
        out[start..].sort_by_key(|&(m, _)| std::cmp::Reverse(m.reverse_bits()));
    }

    fn tokens(&self, &key: &u64) -> Vec<usize> {
        (0..64).filter(|&v| key >> v & 1 == 1).collect()
    }
}

struct ListSpace<'g> {
    g: &'g Graph,
    ball: Vec<Vec<usize>>,
}

impl<'g> ListSpace<'g> {
    fn new(g: &'g Graph, k: usize) -> Self {
        let ball = (0..g.n())
            .map(|u| {
                g.distances_from(u)
                    .iter()
                    .enumerate()
                    .filter(|&(v, d)| v != u && d.within(k))
                    .map(|(v, _)| v)
                    .collect()
            })
            .collect();
        ListSpace { g, ball }
    }
}

impl Space for ListSpace<'_> {
    type Key = TokenConfig;

    fn encode(&self, c: &TokenConfig) -> TokenConfig {
        c.clone()
    }

    fn decode(&self, key: &TokenConfig) -> TokenConfig {
        key.clone()
    }

    fn expand(&self, key: &TokenConfig, out: &mut Vec<(TokenConfig, Move)>) {
        let start = out.len();
        for &u in key.vertices() {
            for &v in &self.ball[u] {
                if key.contains(v) {
                    continue;
                }
                let blocked = self.g.neighbors(v).iter().any(|&w| w != u && key.contains(w));
                if !blocked {
                    out.push((key.moved(u, v), Move::new(u, v)));
                }
            }
        }
        out[start..].sort_by(|a, b| a.0.cmp(&b.0));
    }

    fn tokens(&self, key: &TokenConfig) -> Vec<usize> {
        key.vertices().to_vec()
    }
}

/// Exact reachability and shortest-path queries for one graph and jump bound.
#[derive(Clone, Copy, Debug)]
pub struct Oracle<'g> {
    g: &'g Graph,
    k: usize,
    limits: SearchLimits,
}

impl<'g> Oracle<'g> {
    pub fn new(g: &'g Graph, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::BoundTooSmall { k, min: 1 });
        }
        Ok(Oracle { g, k, limits: SearchLimits::default() })
    }

    pub fn with_limits(mut self, limits: SearchLimits) -> Self {
        self.limits = limits;
        self
    }

    pub fn k(&self) -> usize {
        self.k
    }

    fn check_pair(&self, s: &TokenConfig, t: &TokenConfig) -> Result<()> {
        s.check(self.g)?;
        t.check(self.g)?;
        if s.len() != t.len() {
            return Err(Error::SizeMismatch(s.len(), t.len()));
        }
        Ok(())
    }

    fn with_space<R>(&self, f: impl FnOnce(&dyn SpaceRunner) -> R) -> R {
        if self.g.n() <= 64 {
            f(&Runner { space: MaskSpace::new(self.g, self.k), limits: self.limits, g: self.g, k: self.k })
        } else {
            f(&Runner { space: ListSpace::new(self.g, self.k), limits: self.limits, g: self.g, k: self.k })
        }
    }

    /// All configurations one move away from `c`, in canonical order.
    pub fn successors(&self, c: &TokenConfig) -> Result<Vec<TokenConfig>> {
        c.check(self.g)?;
        Ok(self.with_space(|r| r.successors(c)))
    }

    pub fn decide(&self, s: &TokenConfig, t: &TokenConfig) -> Result<bool> {
        self.check_pair(s, t)?;
        self.with_space(|r| r.bfs(s, Some(t)).map(|o| o.found.is_some()))
    }

    /// A minimum-length sequence from `s` to `t`, or `None` when unreachable.
    pub fn shortest(&self, s: &TokenConfig, t: &TokenConfig) -> Result<Option<MoveSequence>> {
        self.check_pair(s, t)?;
        self.with_space(|r| r.bfs(s, Some(t)).map(|o| o.found))
    }

    /// Every configuration reachable from `s`, sorted.
    pub fn reachable(&self, s: &TokenConfig) -> Result<Vec<TokenConfig>> {
        s.check(self.g)?;
        self.with_space(|r| r.bfs(s, None)).map(|o| {
            let mut all = o.visited;
            all.sort();
            all
        })
    }

    /// Whether some sequence of at most `budget` moves leads from `s` to `t`.
    ///
    /// Iterative deepening with the matching lower bound as an admissible
    /// cut-off and a table of budgets already proven insufficient.
    pub fn exists_within(&self, s: &TokenConfig, t: &TokenConfig, budget: usize) -> Result<bool> {
        self.check_pair(s, t)?;
        self.with_space(|r| r.bounded(s, t, budget))
    }
}

struct BfsOutcome {
    found: Option<MoveSequence>,
    visited: Vec<TokenConfig>,
}

trait SpaceRunner {
    fn successors(&self, c: &TokenConfig) -> Vec<TokenConfig>;
    fn bfs(&self, s: &TokenConfig, target: Option<&TokenConfig>) -> Result<BfsOutcome>;
    fn bounded(&self, s: &TokenConfig, t: &TokenConfig, budget: usize) -> Result<bool>;
}

struct Runner<'g, S> {
    space: S,
    limits: SearchLimits,
    g: &'g Graph,
    k: usize,
}

impl<S: Space> SpaceRunner for Runner<'_, S> {
    fn successors(&self, c: &TokenConfig) -> Vec<TokenConfig> {
        let mut out = Vec::new();
        self.space.expand(&self.space.encode(c), &mut out);
        out.iter().map(|(key, _)| self.space.decode(key)).collect()
    }

    fn bfs(&self, s: &TokenConfig, target: Option<&TokenConfig>) -> Result<BfsOutcome> {
        let start = self.space.encode(s);
        let goal = target.map(|t| self.space.encode(t));
        // parent links: state -> (previous state, move), start maps to None
        let mut parent: HashMap<S::Key, Option<(S::Key, Move)>> = HashMap::new();
        let mut order = Vec::new();
        parent.insert(start.clone(), None);
        order.push(start.clone());
        let mut queue = VecDeque::from([start.clone()]);
        let mut buf = Vec::new();
        let mut hit = goal.as_ref() == Some(&start);
        while !hit {
            let Some(cur) = queue.pop_front() else { break };
            buf.clear();
            self.space.expand(&cur, &mut buf);
            for (next, mv) in buf.drain(..) {
                if let Entry::Vacant(e) = parent.entry(next.clone()) {
                    e.insert(Some((cur.clone(), mv)));
                    if parent.len() > self.limits.max_states {
                        return Err(Error::ResourceExhausted { cap: self.limits.max_states });
                    }
                    order.push(next.clone());
                    if goal.as_ref() == Some(&next) {
                        hit = true;
                        break;
                    }
                    queue.push_back(next);
                }
            }
        }
        let found = if hit {
            let mut moves = Vec::new();
            let mut cur = goal.unwrap();
            while let Some(Some((prev, mv))) = parent.get(&cur) {
                moves.push(*mv);
                cur = prev.clone();
            }
            moves.reverse();
            Some(MoveSequence::new(s.clone(), moves))
        } else {
            None
        };
        let visited = if target.is_none() { order.iter().map(|k| self.space.decode(k)).collect() } else { Vec::new() };
        Ok(BfsOutcome { found, visited })
    }

    fn bounded(&self, s: &TokenConfig, t: &TokenConfig, budget: usize) -> Result<bool> {
        let goal = self.space.encode(t);
        let mut failed: HashMap<S::Key, usize> = HashMap::new();
        let start = self.space.encode(s);
        for depth in 0..=budget {
            if self.dfs(&start, &goal, t.vertices(), depth, &mut failed)? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

impl<S: Space> Runner<'_, S> {
    fn dfs(
        &self,
        cur: &S::Key,
        goal: &S::Key,
        target: &[usize],
        remaining: usize,
        failed: &mut HashMap<S::Key, usize>,
    ) -> Result<bool> {
        if cur == goal {
            return Ok(true);
        }
        if failed.get(cur).is_some_and(|&r| r >= remaining) {
            return Ok(false);
        }
        let enough = match matching_bound(self.g, &self.space.tokens(cur), target, self.k) {
            LowerBound::Finite(b) => b <= remaining,
            LowerBound::Unbounded => false,
        };
        if enough && remaining > 0 {
            let mut buf = Vec::new();
            self.space.expand(cur, &mut buf);
            for (next, _) in buf {
                if self.dfs(&next, goal, target, remaining - 1, failed)? {
                    return Ok(true);
                }
            }
        }
        let entry = failed.entry(cur.clone()).or_insert(0);
        *entry = (*entry).max(remaining);
        if failed.len() > self.limits.max_states {
            return Err(Error::ResourceExhausted { cap: self.limits.max_states });
        }
        Ok(false)
    }
}

pub fn successors(g: &Graph, c: &TokenConfig, k: usize) -> Result<Vec<TokenConfig>> {
    Oracle::new(g, k)?.successors(c)
}

pub fn decide(g: &Graph, s: &TokenConfig, t: &TokenConfig, k: usize) -> Result<bool> {
    Oracle::new(g, k)?.decide(s, t)
}

pub fn shortest(g: &Graph, s: &TokenConfig, t: &TokenConfig, k: usize) -> Result<Option<MoveSequence>> {
    Oracle::new(g, k)?.shortest(s, t)
}

pub fn exists_within(g: &Graph, s: &TokenConfig, t: &TokenConfig, k: usize, budget: usize) -> Result<bool> {
    Oracle::new(g, k)?.exists_within(s, t, budget)
}
