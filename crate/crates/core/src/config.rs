//! Token placements, moves and move sequences.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Distance, Graph};

/// A token placement, stored as a sorted duplicate-free vertex list.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<usize>", into = "Vec<usize>")]
pub struct TokenConfig(Vec<usize>);

impl TokenConfig {
    pub fn new(vertices: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = vertices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        TokenConfig(v)
    }

    pub fn empty() -> Self {
        TokenConfig(Vec::new())
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// `self \ {from} ∪ {to}`; the caller guarantees `from ∈ self`.
    pub fn moved(&self, from: usize, to: usize) -> Self {
        let mut v: Vec<usize> = self.0.iter().copied().filter(|&x| x != from).collect();
        if let Err(pos) = v.binary_search(&to) {
            v.insert(pos, to);
        }
        TokenConfig(v)
    }

    /// Checks range and independence against `g`.
    pub fn check(&self, g: &Graph) -> Result<()> {
        for &v in &self.0 {
            g.check_vertex(v)?;
        }
        match g.independence_conflict(&self.0) {
            Some((u, v)) => Err(Error::NotIndependent(u, v)),
            None => Ok(()),
        }
    }

    pub fn mask(&self) -> u64 {
        self.0.iter().fold(0u64, |m, &v| m | 1 << v)
    }

    pub fn from_mask(mask: u64) -> Self {
        TokenConfig((0..64).filter(|&v| mask >> v & 1 == 1).collect())
    }
}

impl From<Vec<usize>> for TokenConfig {
    fn from(v: Vec<usize>) -> Self {
        TokenConfig::new(v)
    }
}

impl From<TokenConfig> for Vec<usize> {
    fn from(c: TokenConfig) -> Self {
        c.0
    }
}

impl fmt::Display for TokenConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// One token moves from `from` to `to`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "[usize; 2]", into = "[usize; 2]")]
pub struct Move {
    pub from: usize,
    pub to: usize,
}

impl Move {
    pub fn new(from: usize, to: usize) -> Self {
        Move { from, to }
    }
}

impl From<[usize; 2]> for Move {
    fn from([from, to]: [usize; 2]) -> Self {
        Move { from, to }
    }
}

impl From<Move> for [usize; 2] {
    fn from(m: Move) -> Self {
        [m.from, m.to]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveSequence {
    pub start: TokenConfig,
    pub moves: Vec<Move>,
}

impl MoveSequence {
    pub fn new(start: TokenConfig, moves: Vec<Move>) -> Self {
        MoveSequence { start, moves }
    }

    pub fn empty(start: TokenConfig) -> Self {
        MoveSequence { start, moves: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// Every configuration along the sequence, start included. Only occupancy
    /// is tracked; use [`validate_sequence`] for the full rule check.
    pub fn configs(&self) -> Vec<TokenConfig> {
        let mut out = Vec::with_capacity(self.moves.len() + 1);
        let mut cur = self.start.clone();
        out.push(cur.clone());
        for m in &self.moves {
            cur = cur.moved(m.from, m.to);
            out.push(cur.clone());
        }
        out
    }

    pub fn last(&self) -> TokenConfig {
        self.configs().pop().unwrap()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    StartNotIndependent { u: usize, v: usize },
    VertexOutOfRange { vertex: usize },
    SameVertex { vertex: usize },
    NoTokenAtSource { vertex: usize },
    TargetOccupied { vertex: usize },
    TooFar { distance: Option<usize>, k: usize },
    NotIndependent { u: usize, v: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::StartNotIndependent { u, v } => write!(f, "start set has adjacent tokens {u} and {v}"),
            Violation::VertexOutOfRange { vertex } => write!(f, "vertex {vertex} out of range"),
            Violation::SameVertex { vertex } => write!(f, "move from {vertex} to itself"),
            Violation::NoTokenAtSource { vertex } => write!(f, "no token on {vertex}"),
            Violation::TargetOccupied { vertex } => write!(f, "vertex {vertex} already carries a token"),
            Violation::TooFar { distance: Some(d), k } => write!(f, "distance {d} > {k}"),
            Violation::TooFar { distance: None, k } => write!(f, "target unreachable within {k}"),
            Violation::NotIndependent { u, v } => write!(f, "tokens on adjacent vertices {u} and {v}"),
        }
    }
}

/// Outcome of [`validate_sequence`]. `step` is the 0-based index of the
/// offending move; a bad start set is reported at step 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub valid: bool,
    pub moves: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub step: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation: Option<Violation>,
    #[serde(rename = "final")]
    pub final_config: TokenConfig,
}

impl ValidationReport {
    pub fn into_result(self) -> Result<TokenConfig> {
        match (self.step, self.violation) {
            (Some(step), Some(v)) => Err(Error::InvalidSequence { step, reason: v.to_string() }),
            _ => Ok(self.final_config),
        }
    }
}

/// Checks one move from `cur` under the `k`-Jump rule.
pub fn check_move(g: &Graph, cur: &TokenConfig, m: Move, k: usize) -> std::result::Result<(), Violation> {
    for v in [m.from, m.to] {
        if v >= g.n() {
            return Err(Violation::VertexOutOfRange { vertex: v });
        }
    }
    if m.from == m.to {
        return Err(Violation::SameVertex { vertex: m.from });
    }
    if !cur.contains(m.from) {
        return Err(Violation::NoTokenAtSource { vertex: m.from });
    }
    if cur.contains(m.to) {
        return Err(Violation::TargetOccupied { vertex: m.to });
    }
    let d = g.distance(m.from, m.to);
    if !d.within(k) {
        return Err(Violation::TooFar { distance: d.finite(), k });
    }
    if let Some(&other) = cur.vertices().iter().find(|&&w| w != m.from && g.has_edge(w, m.to)) {
        return Err(Violation::NotIndependent { u: other.min(m.to), v: other.max(m.to) });
    }
    Ok(())
}

/// Replays `seq` and reports the first rule violation, if any.
pub fn validate_sequence(g: &Graph, seq: &MoveSequence, k: usize) -> ValidationReport {
    let fail = |step, violation, cur: TokenConfig| ValidationReport {
        valid: false,
        moves: seq.moves.len(),
        step: Some(step),
        violation: Some(violation),
        final_config: cur,
    };
    if let Some(&v) = seq.start.vertices().iter().find(|&&v| v >= g.n()) {
        return fail(0, Violation::VertexOutOfRange { vertex: v }, seq.start.clone());
    }
    if let Some((u, v)) = g.independence_conflict(seq.start.vertices()) {
        return fail(0, Violation::StartNotIndependent { u, v }, seq.start.clone());
    }
    let mut cur = seq.start.clone();
    for (step, &m) in seq.moves.iter().enumerate() {
        if let Err(v) = check_move(g, &cur, m, k) {
            return fail(step, v, cur);
        }
        cur = cur.moved(m.from, m.to);
    }
    ValidationReport { valid: true, moves: seq.moves.len(), step: None, violation: None, final_config: cur }
}

/// Whether `a` and `b` differ by a single token whose endpoints are within `k`.
pub fn k_adjacent(g: &Graph, a: &TokenConfig, b: &TokenConfig, k: usize) -> Result<bool> {
    a.check(g)?;
    b.check(g)?;
    let only_a: Vec<usize> = a.vertices().iter().copied().filter(|&v| !b.contains(v)).collect();
    let only_b: Vec<usize> = b.vertices().iter().copied().filter(|&v| !a.contains(v)).collect();
    Ok(match (&only_a[..], &only_b[..]) {
        ([u], [v]) => g.distance(*u, *v) <= Distance::Finite(k),
        _ => false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> Graph {
        Graph::new(3, &[(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn canonical_encoding() {
        assert_eq!(TokenConfig::new([3, 1, 3, 2]).vertices(), &[1, 2, 3]);
        assert_eq!(TokenConfig::new([5, 0]).moved(5, 2).vertices(), &[0, 2]);
        let c = TokenConfig::new([0, 7, 63]);
        assert_eq!(TokenConfig::from_mask(c.mask()), c);
    }

    #[test]
    fn adjacency_relation() {
        let g = p3();
        let a = TokenConfig::new([0]);
        let b = TokenConfig::new([2]);
        assert!(k_adjacent(&g, &a, &b, 2).unwrap());
        assert!(!k_adjacent(&g, &a, &a, 5).unwrap());
        assert!(!k_adjacent(&g, &a, &b, 1).unwrap());
        assert!(k_adjacent(&g, &TokenConfig::new([0, 1]), &b, 2).is_err());
    }

    #[test]
    fn validation_reports_first_violation() {
        let g = p3();
        let empty = MoveSequence::empty(TokenConfig::new([0]));
        assert!(validate_sequence(&g, &empty, 1).valid);

        let far = MoveSequence::new(TokenConfig::new([0]), vec![Move::new(0, 2)]);
        let report = validate_sequence(&g, &far, 1);
        assert!(!report.valid);
        assert_eq!(report.step, Some(0));
        assert_eq!(report.violation, Some(Violation::TooFar { distance: Some(2), k: 1 }));
        assert!(validate_sequence(&g, &far, 2).valid);

        let blocked = MoveSequence::new(TokenConfig::new([0, 2]), vec![Move::new(2, 1)]);
        assert_eq!(
            validate_sequence(&g, &blocked, 3).violation,
            Some(Violation::NotIndependent { u: 0, v: 1 })
        );
        let ghost = MoveSequence::new(TokenConfig::new([0]), vec![Move::new(0, 2), Move::new(0, 1)]);
        let report = validate_sequence(&g, &ghost, 2);
        assert_eq!(report.step, Some(1));
        assert_eq!(report.violation, Some(Violation::NoTokenAtSource { vertex: 0 }));
    }

    #[test]
    fn json_shapes() {
        let seq = MoveSequence::new(TokenConfig::new([2, 0]), vec![Move::new(0, 1)]);
        let text = serde_json::to_string(&seq).unwrap();
        assert_eq!(text, r#"{"start":[0,2],"moves":[[0,1]]}"#);
        let back: MoveSequence = serde_json::from_str(&text).unwrap();
        assert_eq!(back, seq);
    }
}
