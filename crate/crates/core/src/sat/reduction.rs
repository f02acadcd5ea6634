//! Reduction from exactly-3 CNF to shortest `k`-Jump reconfiguration on
//! chordal graphs.
//!
//! Clause gadget `i` is a path `v_0 .. v_{2k}` plus two extra vertices `k_0`,
//! `k_2` attached to `v_{k-1}` and `v_{k+1}`; together with `k_1 = v_k` they
//! form the clause's literal slots, and all slots of all clauses form one
//! clique. Variable gadget `j` is a path `u_0 .. u_{k-1}` (`t_0 = u_0`,
//! `t_1 = u_{k-1}`) with `s_0`, `s_1` hanging off `t_0`. A literal in slot
//! `p` of clause `i` joins `k^i_p` to `t_0` of its variable and to `s_0`
//! (positive) or `s_1` (negative).
//!
//! Vertex layout: clause gadget `i` occupies `i(2k+3) ..`, with `v_j` at
//! offset `j`, `k_0` at `2k+1` and `k_2` at `2k+2`; variable gadget `j`
//! follows at `m(2k+3) + j(k+2)`, with `u_x` at offset `x`, `s_0` at `k` and
//! `s_1` at `k+1`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::bound::{lower_bound_moves, LowerBound};
use crate::chordal::{is_chordal, PeoOrdering};
use crate::config::{validate_sequence, Move, MoveSequence, TokenConfig};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::sat::cnf::CnfFormula;

pub const MIN_K: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionInstance {
    pub graph: Graph,
    pub k: usize,
    pub start: TokenConfig,
    pub target: TokenConfig,
    pub formula: CnfFormula,
}

impl ReductionInstance {
    pub fn num_clauses(&self) -> usize {
        self.formula.num_clauses()
    }

    pub fn num_vars(&self) -> usize {
        self.formula.num_vars
    }

    /// Length of the witness built from a satisfying assignment.
    pub fn witness_length(&self) -> usize {
        2 * (self.num_clauses() + self.num_vars())
    }

    fn clause_base(&self, i: usize) -> usize {
        i * (2 * self.k + 3)
    }

    fn var_base(&self, j: usize) -> usize {
        self.num_clauses() * (2 * self.k + 3) + j * (self.k + 2)
    }

    /// `v^i_j` for `j <= 2k`.
    pub fn v(&self, i: usize, j: usize) -> usize {
        debug_assert!(j <= 2 * self.k);
        self.clause_base(i) + j
    }

    /// Literal slot `k^i_p`; slot 1 is the path midpoint `v^i_k`.
    pub fn slot(&self, i: usize, p: usize) -> usize {
        match p {
            0 => self.clause_base(i) + 2 * self.k + 1,
            1 => self.v(i, self.k),
            2 => self.clause_base(i) + 2 * self.k + 2,
            _ => panic!("slot {p} out of range"),
        }
    }

    /// `u^j_x` for `x < k`.
    pub fn u(&self, j: usize, x: usize) -> usize {
        debug_assert!(x < self.k);
        self.var_base(j) + x
    }

    pub fn s(&self, j: usize, x: usize) -> usize {
        debug_assert!(x < 2);
        self.var_base(j) + self.k + x
    }

    /// `t^j_0 = u^j_0`, `t^j_1 = u^j_{k-1}`.
    pub fn t(&self, j: usize, x: usize) -> usize {
        match x {
            0 => self.u(j, 0),
            1 => self.u(j, self.k - 1),
            _ => panic!("t index {x} out of range"),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.num_clauses() * (2 * self.k + 3) + self.num_vars() * (self.k + 2)
    }
}

pub fn build_instance(formula: &CnfFormula, k: usize) -> Result<ReductionInstance> {
    if k < MIN_K {
        return Err(Error::BoundTooSmall { k, min: MIN_K });
    }
    formula.check()?;
    let m = formula.num_clauses();
    let n_vars = formula.num_vars;
    // the graph is filled in below once the layout helpers are available
    let mut inst = ReductionInstance {
        graph: Graph::new(0, &[]).unwrap(),
        k,
        start: TokenConfig::empty(),
        target: TokenConfig::empty(),
        formula: formula.clone(),
    };
    let n = inst.vertex_count();
    let mut edges = Vec::new();
    let mut labels = BTreeMap::new();

    for i in 0..m {
        for j in 0..=2 * k {
            labels.insert(inst.v(i, j), format!("v:{i}:{j}"));
            if j > 0 {
                edges.push((inst.v(i, j - 1), inst.v(i, j)));
            }
        }
        labels.insert(inst.slot(i, 0), format!("k:{i}:0"));
        labels.insert(inst.slot(i, 2), format!("k:{i}:2"));
        for p in [0, 2] {
            edges.push((inst.slot(i, p), inst.v(i, k - 1)));
            edges.push((inst.slot(i, p), inst.v(i, k + 1)));
        }
    }
    let slots: Vec<usize> = (0..m).flat_map(|i| (0..3).map(move |p| (i, p))).map(|(i, p)| inst.slot(i, p)).collect();
    for (a, &x) in slots.iter().enumerate() {
        for &y in &slots[a + 1..] {
            edges.push((x, y));
        }
    }
    for j in 0..n_vars {
        for x in 0..k {
            let label = match x {
                0 => format!("t:{j}:0"),
                _ if x == k - 1 => format!("t:{j}:1"),
                _ => format!("u:{j}:{x}"),
            };
            labels.insert(inst.u(j, x), label);
            if x > 0 {
                edges.push((inst.u(j, x - 1), inst.u(j, x)));
            }
        }
        for x in 0..2 {
            labels.insert(inst.s(j, x), format!("s:{j}:{x}"));
            edges.push((inst.s(j, x), inst.t(j, 0)));
        }
    }
    for (i, clause) in formula.clauses.iter().enumerate() {
        for (p, lit) in clause.iter().enumerate() {
            let slot = inst.slot(i, p);
            let side = if lit.positive { 0 } else { 1 };
            edges.push((inst.s(lit.var, side), slot));
            edges.push((inst.t(lit.var, 0), slot));
        }
    }

    inst.graph = Graph::from_edges_merged(n, edges)?.with_labels(labels)?;
    inst.start = TokenConfig::new(
        (0..m).map(|i| inst.v(i, 0)).chain((0..n_vars).flat_map(|j| [inst.s(j, 0), inst.s(j, 1)])),
    );
    inst.target = TokenConfig::new(
        (0..m).map(|i| inst.v(i, 2 * k)).chain((0..n_vars).flat_map(|j| [inst.t(j, 0), inst.t(j, 1)])),
    );
    Ok(inst)
}

/// Explicit elimination ordering: clause path ends inwards, variable paths
/// from the far end, then `s_0`, `s_1`, `t_0` of every variable, and the
/// clique of literal slots last.
pub fn peo_order(inst: &ReductionInstance) -> PeoOrdering {
    let (m, n, k) = (inst.num_clauses(), inst.num_vars(), inst.k);
    let mut order = Vec::with_capacity(inst.vertex_count());
    for i in 0..m {
        order.extend((0..k).map(|j| inst.v(i, j)));
    }
    for i in 0..m {
        order.extend((0..k).map(|j| inst.v(i, 2 * k - j)));
    }
    for j in 0..n {
        order.extend((0..k - 1).map(|x| inst.u(j, k - 1 - x)));
    }
    order.extend((0..n).map(|j| inst.s(j, 0)));
    order.extend((0..n).map(|j| inst.s(j, 1)));
    order.extend((0..n).map(|j| inst.t(j, 0)));
    for i in 0..m {
        order.extend((0..3).map(|p| inst.slot(i, p)));
    }
    PeoOrdering { order }
}

/// Builds the `2(m+n)`-move sequence for a satisfying assignment.
///
/// First every variable opens the gadget side matching its value (the token
/// on the true side's `s` moves to `t_1`), then each clause token walks
/// through the slot of its lowest-positioned true literal, and finally the
/// remaining `s` tokens move to `t_0`.
pub fn assignment_to_sequence(inst: &ReductionInstance, assignment: &[bool]) -> Result<MoveSequence> {
    let f = &inst.formula;
    if let Some(i) = f.first_unsatisfied(assignment)? {
        return Err(Error::UnsatisfiedClause(i));
    }
    let k = inst.k;
    let mut moves = Vec::with_capacity(inst.witness_length());
    for (j, &value) in assignment.iter().enumerate() {
        let side = if value { 0 } else { 1 };
        moves.push(Move::new(inst.s(j, side), inst.t(j, 1)));
    }
    for (i, clause) in f.clauses.iter().enumerate() {
        let p = clause.iter().position(|l| l.eval(assignment)).expect("clause is satisfied");
        let slot = inst.slot(i, p);
        moves.push(Move::new(inst.v(i, 0), slot));
        moves.push(Move::new(slot, inst.v(i, 2 * k)));
    }
    for (j, &value) in assignment.iter().enumerate() {
        let side = if value { 1 } else { 0 };
        moves.push(Move::new(inst.s(j, side), inst.t(j, 0)));
    }
    let seq = MoveSequence::new(inst.start.clone(), moves);
    let report = validate_sequence(&inst.graph, &seq, k);
    if !report.valid || report.final_config != inst.target {
        return Err(Error::Internal(format!("witness failed validation: {report:?}")));
    }
    Ok(seq)
}

/// Reads an assignment off a shortest sequence: a variable is true if its
/// gadget was ever open on the positive side (no token on `s_0` nor `t_0`),
/// and false otherwise.
pub fn sequence_to_assignment(inst: &ReductionInstance, seq: &MoveSequence) -> Result<Vec<bool>> {
    if seq.start != inst.start {
        return Err(Error::InvalidSequence { step: 0, reason: "does not start at the start set".into() });
    }
    let budget = inst.witness_length();
    if seq.len() > budget {
        return Err(Error::OverLength { len: seq.len(), budget });
    }
    let end = validate_sequence(&inst.graph, seq, inst.k).into_result()?;
    if end != inst.target {
        return Err(Error::InvalidSequence { step: seq.len(), reason: "does not end at the target set".into() });
    }
    let n = inst.num_vars();
    let mut positive = vec![false; n];
    for c in seq.configs() {
        for (j, open) in positive.iter_mut().enumerate() {
            if !c.contains(inst.s(j, 0)) && !c.contains(inst.t(j, 0)) {
                *open = true;
            }
        }
    }
    Ok(positive)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceStats {
    pub vertices: usize,
    pub edges: usize,
    pub tokens: usize,
    /// `None` when the graph is disconnected (a variable in no clause).
    pub diameter: Option<usize>,
    pub chordal: bool,
    pub lower_bound: LowerBound,
}

pub fn instance_stats(inst: &ReductionInstance) -> Result<InstanceStats> {
    let g = &inst.graph;
    Ok(InstanceStats {
        vertices: g.n(),
        edges: g.edge_count(),
        tokens: inst.start.len(),
        diameter: g.diameter().ok(),
        chordal: is_chordal(g),
        lower_bound: lower_bound_moves(g, &inst.start, &inst.target, inst.k)?,
    })
}
