//! Deciding 2-Jump reconfigurability on split graphs.
//!
//! Once no token sits on the clique side, a configuration is determined up
//! to 2-Jump equivalence by its distribution: how many tokens each cluster
//! holds. A cluster is Free when its empty independent vertices outnumber the
//! neighbourhood of its weakest clique vertex, so some clique vertex is never
//! blocked and tokens can be routed through it. The decision compares the
//! clusters that are Free (or can be made Free with one token transfer) on
//! both ends and falls back to a counting condition.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::config::TokenConfig;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::split::{recognize_split, SplitDecomposition};

/// Per-cluster token counts, indexed like [`SplitDecomposition::clusters`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Distribution(pub Vec<usize>);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Kind {
    Free,
    PseudoFree,
    Bound,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClusterType {
    pub kind: Kind,
    pub full: bool,
}

impl fmt::Display for ClusterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.kind, if self.full { "+full" } else { "" })
    }
}

/// Moves the (at most one) clique token to the lowest-id empty vertex of a
/// cluster. Isolated vertices are not used as targets since no token can
/// jump onto them.
pub fn normalize_typical(g: &Graph, dec: &SplitDecomposition, c: &TokenConfig) -> Result<TokenConfig> {
    c.check(g)?;
    let Some(&a) = c.vertices().iter().find(|&&v| dec.in_clique(v)) else {
        return Ok(c.clone());
    };
    let target = dec
        .indep
        .iter()
        .copied()
        .find(|&u| dec.cluster_of[u].is_some() && !c.contains(u))
        .ok_or_else(|| Error::InvalidDistribution("no empty independent vertex for the clique token".into()))?;
    Ok(c.moved(a, target))
}

pub fn distribution(dec: &SplitDecomposition, c: &TokenConfig) -> Result<Distribution> {
    let mut counts = vec![0; dec.clusters.len()];
    for &v in c.vertices() {
        if dec.in_clique(v) {
            return Err(Error::NotTypical(v));
        }
        if let Some(i) = dec.cluster_of.get(v).copied().flatten() {
            counts[i] += 1;
        }
    }
    Ok(Distribution(counts))
}

fn check_distribution(dec: &SplitDecomposition, d: &Distribution) -> Result<()> {
    if d.0.len() != dec.clusters.len() {
        return Err(Error::InvalidDistribution(format!(
            "{} counts for {} clusters",
            d.0.len(),
            dec.clusters.len()
        )));
    }
    for (i, (&x, c)) in d.0.iter().zip(&dec.clusters).enumerate() {
        if x > c.indep.len() {
            return Err(Error::InvalidDistribution(format!("cluster {i} holds {x} > {} tokens", c.indep.len())));
        }
    }
    Ok(())
}

fn type_of(size: usize, count: usize, nsize: usize) -> ClusterType {
    let slack = size - count;
    let kind = if slack >= nsize {
        Kind::Free
    } else if slack + 1 == nsize {
        Kind::PseudoFree
    } else {
        Kind::Bound
    };
    ClusterType { kind, full: slack == 0 }
}

pub fn classify(dec: &SplitDecomposition, d: &Distribution) -> Result<Vec<ClusterType>> {
    check_distribution(dec, d)?;
    Ok(dec
        .clusters
        .iter()
        .zip(&d.0)
        .map(|(c, &x)| type_of(c.indep.len(), x, c.nsize()))
        .collect())
}

fn frozen(types: &[ClusterType]) -> bool {
    if types.iter().all(|t| t.kind == Kind::Bound) {
        return true;
    }
    if types.iter().any(|t| t.kind == Kind::Free) {
        return false;
    }
    types.iter().enumerate().all(|(i, t)| {
        t.kind != Kind::PseudoFree || types.iter().enumerate().all(|(j, o)| j == i || o.full)
    })
}

/// No 2-Jump move can change the distribution.
pub fn is_frozen(dec: &SplitDecomposition, d: &Distribution) -> Result<bool> {
    Ok(frozen(&classify(dec, d)?))
}

fn freeable(types: &[ClusterType]) -> Vec<usize> {
    (0..types.len())
        .filter(|&i| match types[i].kind {
            Kind::Free => true,
            Kind::PseudoFree => types.iter().enumerate().any(|(j, o)| j != i && !o.full),
            Kind::Bound => false,
        })
        .collect()
}

/// Clusters that are Free, or become Free after one token leaves them.
pub fn freeable_set(dec: &SplitDecomposition, d: &Distribution) -> Result<Vec<usize>> {
    let types = classify(dec, d)?;
    if frozen(&types) {
        return Err(Error::Frozen);
    }
    Ok(freeable(&types))
}

/// Counting condition for `size` tokens routed through cluster `i`.
pub fn condition(dec: &SplitDecomposition, size: usize, i: usize) -> bool {
    let ub = dec.clustered_indep();
    let ni = dec.clusters[i].nsize();
    let n0 = dec.n0();
    let general = (0..=2usize).any(|kappa| ni >= kappa && ub + kappa >= size + ni + n0);
    if ni >= 1 {
        debug_assert_eq!(general, condition_two_case(dec, size, i));
    }
    general
}

/// The same condition with `kappa` fixed to 1 when `|N_i| = 1` and to 2 when
/// `|N_i| > 1`. Agrees with [`condition`] whenever `|N_i| >= 1`.
pub fn condition_two_case(dec: &SplitDecomposition, size: usize, i: usize) -> bool {
    let ub = dec.clustered_indep();
    let ni = dec.clusters[i].nsize();
    let n0 = dec.n0();
    match ni {
        0 => ub >= size + n0,
        1 => ub + 1 >= size + ni + n0,
        _ => ub + 2 >= size + ni + n0,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decision {
    pub reconfigurable: bool,
    pub trace: Vec<String>,
}

/// Reusable solver for one split graph.
pub struct Split2<'g> {
    g: &'g Graph,
    dec: SplitDecomposition,
}

impl<'g> Split2<'g> {
    pub fn new(g: &'g Graph) -> Result<Self> {
        Ok(Split2 { g, dec: recognize_split(g)? })
    }

    pub fn decomposition(&self) -> &SplitDecomposition {
        &self.dec
    }

    pub fn decide(&self, s: &TokenConfig, t: &TokenConfig) -> Result<bool> {
        Ok(self.decide_traced(s, t)?.reconfigurable)
    }

    pub fn decide_traced(&self, s: &TokenConfig, t: &TokenConfig) -> Result<Decision> {
        s.check(self.g)?;
        t.check(self.g)?;
        if s.len() != t.len() {
            return Err(Error::SizeMismatch(s.len(), t.len()));
        }
        let mut trace = Vec::new();
        let answer = self.run(s, t, &mut trace)?;
        Ok(Decision { reconfigurable: answer, trace })
    }

    fn run(&self, s: &TokenConfig, t: &TokenConfig, trace: &mut Vec<String>) -> Result<bool> {
        let dec = &self.dec;
        if s == t {
            trace.push("identical".into());
            return Ok(true);
        }
        // tokens on isolated vertices can neither leave nor be joined
        let iso_s: Vec<usize> = s.vertices().iter().copied().filter(|&v| self.is_isolated(v)).collect();
        let iso_t: Vec<usize> = t.vertices().iter().copied().filter(|&v| self.is_isolated(v)).collect();
        if iso_s != iso_t {
            trace.push("isolated tokens differ".into());
            return Ok(false);
        }
        let s = TokenConfig::new(s.vertices().iter().copied().filter(|&v| !self.is_isolated(v)));
        let t = TokenConfig::new(t.vertices().iter().copied().filter(|&v| !self.is_isolated(v)));
        let size = s.len();
        let ub = dec.clustered_indep();
        if size > ub {
            trace.push(format!("size {size} exceeds independent side {ub}"));
            return Ok(true);
        }

        let s = normalize_typical(self.g, dec, &s)?;
        let t = normalize_typical(self.g, dec, &t)?;
        let ds = distribution(dec, &s)?;
        let dt = distribution(dec, &t)?;
        let ts = classify(dec, &ds)?;
        let tt = classify(dec, &dt)?;
        trace.push(format!("distributions {:?} and {:?}", ds.0, dt.0));

        if frozen(&ts) || frozen(&tt) {
            trace.push(format!("frozen: distributions {}", if ds == dt { "equal" } else { "differ" }));
            return Ok(ds == dt);
        }
        let fs = freeable(&ts);
        let ft = freeable(&tt);
        if let Some(&i) = fs.iter().find(|i| ft.contains(i)) {
            trace.push(format!("common freeable cluster {i}"));
            return Ok(true);
        }
        // clusters are sorted by |N_i|, so the first member minimises it
        let is = fs[0];
        let it = ft[0];
        let cs = condition(dec, size, is);
        let ct = condition(dec, size, it);
        trace.push(format!(
            "condition on cluster {is}: {}, on cluster {it}: {}",
            if cs { "holds" } else { "fails" },
            if ct { "holds" } else { "fails" }
        ));
        Ok(cs && ct)
    }

    fn is_isolated(&self, v: usize) -> bool {
        self.dec.isolated.binary_search(&v).is_ok()
    }
}

/// 2-Jump reconfigurability on a split graph.
pub fn decide2(g: &Graph, s: &TokenConfig, t: &TokenConfig) -> Result<bool> {
    Split2::new(g)?.decide(s, t)
}

pub fn decide2_traced(g: &Graph, s: &TokenConfig, t: &TokenConfig) -> Result<Decision> {
    Split2::new(g)?.decide_traced(s, t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::decide;

    // clique {0,1}; 0-2,3,..; 1-...
    fn per_side(m: usize) -> Graph {
        let mut edges = vec![(0, 1)];
        for i in 0..m {
            edges.push((0, 2 + i));
            edges.push((1, 2 + m + i));
        }
        Graph::new(2 + 2 * m, &edges).unwrap()
    }

    #[test]
    fn classification() {
        let g = per_side(2);
        let dec = recognize_split(&g).unwrap();
        assert_eq!(dec.clusters.len(), 2);
        let kinds = |d: Vec<usize>| {
            classify(&dec, &Distribution(d)).unwrap().iter().map(|t| (t.kind, t.full)).collect::<Vec<_>>()
        };
        assert_eq!(kinds(vec![1, 1]), vec![(Kind::PseudoFree, false), (Kind::PseudoFree, false)]);
        assert_eq!(kinds(vec![2, 0]), vec![(Kind::Bound, true), (Kind::Free, false)]);
        assert!(classify(&dec, &Distribution(vec![3, 0])).is_err());
        assert!(classify(&dec, &Distribution(vec![0])).is_err());
    }

    #[test]
    fn distributions() {
        let g = per_side(2);
        let dec = recognize_split(&g).unwrap();
        assert_eq!(distribution(&dec, &TokenConfig::empty()).unwrap().0, vec![0, 0]);
        assert_eq!(distribution(&dec, &TokenConfig::new([2, 4])).unwrap().0, vec![1, 1]);
        assert_eq!(distribution(&dec, &TokenConfig::new([2, 3])).unwrap().0, vec![2, 0]);
        assert_eq!(distribution(&dec, &TokenConfig::new([1, 2])), Err(Error::NotTypical(1)));
    }

    #[test]
    fn normalization() {
        let g = per_side(2);
        let dec = recognize_split(&g).unwrap();
        let c = TokenConfig::new([1, 2]);
        assert_eq!(normalize_typical(&g, &dec, &c).unwrap(), TokenConfig::new([2, 3]));
        let typical = TokenConfig::new([3, 5]);
        assert_eq!(normalize_typical(&g, &dec, &typical).unwrap(), typical);
    }

    #[test]
    fn frozen_and_freeable() {
        let g = per_side(2);
        let dec = recognize_split(&g).unwrap();
        let d = |v: Vec<usize>| Distribution(v);
        // both PseudoFree and non-full: each can pass a token to the other
        assert!(!is_frozen(&dec, &d(vec![1, 1])).unwrap());
        assert_eq!(freeable_set(&dec, &d(vec![1, 1])).unwrap(), vec![0, 1]);
        assert_eq!(freeable_set(&dec, &d(vec![2, 0])).unwrap(), vec![1]);
        assert!(is_frozen(&dec, &d(vec![2, 2])).unwrap());
        assert_eq!(freeable_set(&dec, &d(vec![2, 2])), Err(Error::Frozen));

        // |N| = 3 per side: (2, 3) has one PseudoFree next to a full cluster
        let g = per_side(3);
        let dec = recognize_split(&g).unwrap();
        assert!(is_frozen(&dec, &d(vec![1, 3])).unwrap());
        assert!(!is_frozen(&dec, &d(vec![1, 2])).unwrap());
    }

    #[test]
    fn conditions() {
        let g = per_side(3);
        let dec = recognize_split(&g).unwrap();
        assert!(!condition(&dec, 3, 0));
        assert!(!condition_two_case(&dec, 3, 0));
        let g = per_side(2);
        let dec = recognize_split(&g).unwrap();
        assert!(condition(&dec, 2, 0));
        assert!(condition_two_case(&dec, 2, 1));
    }

    #[test]
    fn worked_examples() {
        let g = per_side(2);
        let s = TokenConfig::new([2, 3]);
        let t = TokenConfig::new([4, 5]);
        assert!(decide2(&g, &s, &t).unwrap());
        assert!(decide(&g, &s, &t, 2).unwrap());

        let g = per_side(3);
        let s = TokenConfig::new([2, 3, 5]);
        let t = TokenConfig::new([2, 5, 6]);
        let d = decide2_traced(&g, &s, &t).unwrap();
        assert!(!d.reconfigurable);
        assert!(d.trace.last().unwrap().contains("fails"));
        assert!(!decide(&g, &s, &t, 2).unwrap());
        assert!(decide2(&g, &s, &s).unwrap());
    }

    #[test]
    fn isolated_vertices() {
        // K2 plus an isolated vertex
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        let a = TokenConfig::new([0, 2]);
        let b = TokenConfig::new([1, 2]);
        assert!(decide2(&g, &a, &b).unwrap());
        assert!(!decide2(&g, &TokenConfig::new([0]), &TokenConfig::new([2])).unwrap());
    }

    #[test]
    fn rejects_bad_input() {
        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let s = TokenConfig::new([0]);
        assert!(matches!(decide2(&c4, &s, &s), Err(Error::NotSplit(_))));
        let g = per_side(2);
        assert!(matches!(
            decide2(&g, &TokenConfig::new([2]), &TokenConfig::new([2, 4])),
            Err(Error::SizeMismatch(1, 2))
        ));
        assert!(matches!(
            decide2(&g, &TokenConfig::new([0, 2]), &TokenConfig::new([2, 4])),
            Err(Error::NotIndependent(0, 2))
        ));
    }
}
