//! Compiling token-jumping moves into `k`-Jump sequences for `k >= 3`.
//!
//! A jump of length `l > k` along a shortest path `u_0 .. u_l` is split at
//! `w = u_{l-k+1}`, which is within `k - 1` of the target:
//!
//! - `w` is empty and has no token around it: move the token to `w`
//!   recursively, then jump `w -> u_l`;
//! - otherwise some token sits on `w` or next to it at `u'`: that token jumps
//!   to `u_l` first (distance at most `k`), and the original token is moved
//!   to `u'` recursively.
//!
//! The recursion ends because `u'` and `w` are strictly closer to `u_0` than
//! `u_l` is. Tokens may trade places, so only the final set is preserved.

use serde::{Deserialize, Serialize};

use crate::config::{check_move, validate_sequence, Move, MoveSequence, TokenConfig};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MIN_JUMP: usize = 3;

/// Expansion of one input move.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expansion {
    pub from: usize,
    pub to: usize,
    pub distance: usize,
    pub moves: usize,
}

impl Expansion {
    /// Whether the expansion exceeds `2 * distance` moves.
    pub fn exceeds_bound(&self) -> bool {
        self.moves > 2 * self.distance
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Simulation {
    pub sequence: MoveSequence,
    pub expansions: Vec<Expansion>,
}

impl Simulation {
    pub fn bound_violations(&self) -> Vec<&Expansion> {
        self.expansions.iter().filter(|e| e.exceeds_bound()).collect()
    }
}

struct Compiler<'g> {
    g: &'g Graph,
    k: usize,
    cur: TokenConfig,
    out: Vec<Move>,
}

impl Compiler<'_> {
    fn emit(&mut self, from: usize, to: usize) -> Result<()> {
        let m = Move::new(from, to);
        check_move(self.g, &self.cur, m, self.k)
            .map_err(|v| Error::Internal(format!("generated move {from} -> {to} is illegal: {v}")))?;
        self.cur = self.cur.moved(from, to);
        self.out.push(m);
        Ok(())
    }

    fn jump(&mut self, u: usize, v: usize) -> Result<()> {
        let path = self
            .g
            .shortest_path(u, v)
            .ok_or_else(|| Error::Internal(format!("no path from {u} to {v}")))?;
        let len = path.len() - 1;
        if len <= self.k {
            return self.emit(u, v);
        }
        let w = path[len - self.k + 1];
        let blocker = if self.cur.contains(w) {
            Some(w)
        } else {
            self.g.neighbors(w).iter().copied().find(|&x| x != u && self.cur.contains(x))
        };
        match blocker {
            None => {
                self.jump(u, w)?;
                self.emit(w, v)
            }
            Some(other) => {
                self.emit(other, v)?;
                self.jump(u, other)
            }
        }
    }
}

fn check_bound(k: usize) -> Result<()> {
    if k < MIN_JUMP {
        return Err(Error::BoundTooSmall { k, min: MIN_JUMP });
    }
    Ok(())
}

/// Simulates the single jump `u -> v` from `c` with jumps of length at most `k`.
pub fn simulate_move(g: &Graph, c: &TokenConfig, u: usize, v: usize, k: usize) -> Result<MoveSequence> {
    check_bound(k)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    c.check(g)?;
    g.check_vertex(v)?;
    let bad = |reason: &str| Err(Error::InvalidMove { from: u, to: v, reason: reason.into() });
    if !c.contains(u) {
        return bad("no token on the source");
    }
    if c.contains(v) {
        return bad("target already occupied");
    }
    let target = c.moved(u, v);
    if let Some((a, b)) = g.independence_conflict(target.vertices()) {
        return bad(&format!("result has adjacent tokens {a} and {b}"));
    }
    compile_one(g, c, u, v, k, &target)
}

fn compile_one(g: &Graph, c: &TokenConfig, u: usize, v: usize, k: usize, target: &TokenConfig) -> Result<MoveSequence> {
    let mut compiler = Compiler { g, k, cur: c.clone(), out: Vec::new() };
    compiler.jump(u, v)?;
    if &compiler.cur != target {
        return Err(Error::Internal(format!(
            "simulation of {u} -> {v} ended in {} instead of {}",
            compiler.cur, target
        )));
    }
    Ok(MoveSequence::new(c.clone(), compiler.out))
}

/// Compiles a token-jumping sequence into an equivalent `k`-Jump sequence.
///
/// The input must be valid with jumps up to the diameter of the (connected)
/// graph. Each move is expanded on the configuration current at that point.
pub fn simulate_sequence(g: &Graph, seq: &MoveSequence, k: usize) -> Result<Simulation> {
    check_bound(k)?;
    let diameter = g.diameter()?;
    let report = validate_sequence(g, seq, diameter.max(1));
    let end = report.into_result()?;
    let mut cur = seq.start.clone();
    let mut moves = Vec::new();
    let mut expansions = Vec::with_capacity(seq.moves.len());
    for m in &seq.moves {
        let next = cur.moved(m.from, m.to);
        let part = compile_one(g, &cur, m.from, m.to, k, &next)?;
        expansions.push(Expansion {
            from: m.from,
            to: m.to,
            distance: g.distance(m.from, m.to).finite().unwrap_or(0),
            moves: part.len(),
        });
        moves.extend(part.moves);
        cur = next;
    }
    let out = MoveSequence::new(seq.start.clone(), moves);
    let check = validate_sequence(g, &out, k);
    if !check.valid || check.final_config != end {
        return Err(Error::Internal(format!("compiled sequence failed validation: {check:?}")));
    }
    Ok(Simulation { sequence: out, expansions })
}
