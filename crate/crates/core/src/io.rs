//! JSON and DIMACS edge-list formats for graphs, instances and sequences.
//!
//! Graph JSON: `{"n": 4, "edges": [[0, 1], ...], "labels": {"0": "a"}}`.
//! Edge list: `p edge N M` followed by `e U V` lines, vertices 1-based.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::config::{Move, MoveSequence, TokenConfig};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::sat::cnf::CnfFormula;
use crate::sat::reduction::{build_instance, ReductionInstance};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Json,
    EdgeList,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDoc {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub labels: BTreeMap<String, String>,
}

impl From<&Graph> for GraphDoc {
    fn from(g: &Graph) -> Self {
        GraphDoc {
            n: g.n(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
            labels: g.labels().iter().map(|(v, l)| (v.to_string(), l.clone())).collect(),
        }
    }
}

impl GraphDoc {
    pub fn to_graph(&self) -> Result<Graph> {
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|&[u, v]| (u, v)).collect();
        let mut labels = BTreeMap::new();
        for (key, label) in &self.labels {
            let v: usize = key.parse().map_err(|_| Error::Format(format!("label key {key:?} is not a vertex id")))?;
            labels.insert(v, label.clone());
        }
        Graph::new(self.n, &edges)?.with_labels(labels)
    }
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse { line: e.line(), msg: e.to_string() }
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::Json => serde_json::from_str::<GraphDoc>(text).map_err(json_error)?.to_graph(),
        GraphFormat::EdgeList => parse_edge_list(text),
    }
}

pub fn write_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Json => to_json(&GraphDoc::from(g)),
        GraphFormat::EdgeList => write_edge_list(g),
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut n = None;
    let mut declared = 0;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let err = |msg: String| Error::Parse { line: line_no, msg };
        let parts: Vec<&str> = raw.split_whitespace().collect();
        match parts.first().copied() {
            None | Some("c") => {}
            Some("p") => {
                if n.is_some() {
                    return Err(err("duplicate header".into()));
                }
                if parts.len() != 4 || !matches!(parts[1], "edge" | "col") {
                    return Err(err(format!("malformed header {:?}", raw.trim())));
                }
                n = Some(parts[2].parse::<usize>().map_err(|_| err("bad vertex count".into()))?);
                declared = parts[3].parse::<usize>().map_err(|_| err("bad edge count".into()))?;
            }
            Some("e") => {
                let Some(n) = n else {
                    return Err(err("edge before header".into()));
                };
                if parts.len() != 3 {
                    return Err(err(format!("malformed edge line {:?}", raw.trim())));
                }
                let mut ends = [0usize; 2];
                for (slot, p) in ends.iter_mut().zip(&parts[1..]) {
                    let x: usize = p.parse().map_err(|_| err(format!("bad vertex {p:?}")))?;
                    if x == 0 || x > n {
                        return Err(err(format!("vertex {x} outside 1..={n}")));
                    }
                    *slot = x - 1;
                }
                edges.push((ends[0], ends[1]));
            }
            Some(other) => return Err(err(format!("unknown line type {other:?}"))),
        }
    }
    let n = n.ok_or(Error::Parse { line: 0, msg: "missing header".into() })?;
    if edges.len() != declared {
        return Err(Error::Format(format!("header declares {declared} edges, found {}", edges.len())));
    }
    Graph::new(n, &edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out += &format!("e {} {}\n", u + 1, v + 1);
    }
    out
}

/// A reconfiguration instance. `formula` is present for instances produced
/// by the SAT reduction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceDoc {
    pub graph: GraphDoc,
    pub start: TokenConfig,
    pub target: TokenConfig,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub formula: Option<CnfFormula>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub start: TokenConfig,
    pub target: TokenConfig,
    pub k: Option<usize>,
    pub formula: Option<CnfFormula>,
}

impl Instance {
    pub fn from_doc(doc: InstanceDoc) -> Result<Self> {
        let graph = doc.graph.to_graph()?;
        doc.start.check(&graph)?;
        doc.target.check(&graph)?;
        if doc.start.len() != doc.target.len() {
            return Err(Error::SizeMismatch(doc.start.len(), doc.target.len()));
        }
        Ok(Instance { graph, start: doc.start, target: doc.target, k: doc.k, formula: doc.formula })
    }

    pub fn to_doc(&self) -> InstanceDoc {
        InstanceDoc {
            graph: GraphDoc::from(&self.graph),
            start: self.start.clone(),
            target: self.target.clone(),
            k: self.k,
            formula: self.formula.clone(),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::from_doc(serde_json::from_str(text).map_err(json_error)?)
    }

    pub fn to_json(&self) -> String {
        to_json(&self.to_doc())
    }

    /// Rebuilds the reduction this instance came from and checks that the
    /// stored graph and sets match it.
    pub fn to_reduction(&self) -> Result<ReductionInstance> {
        let formula = self.formula.as_ref().ok_or_else(|| Error::Format("instance has no formula".into()))?;
        let k = self.k.ok_or_else(|| Error::Format("instance has no k".into()))?;
        let inst = build_instance(formula, k)?;
        if inst.graph != self.graph || inst.start != self.start || inst.target != self.target {
            return Err(Error::Format("instance does not match the reduction of its formula".into()));
        }
        Ok(inst)
    }
}

impl From<&ReductionInstance> for Instance {
    fn from(r: &ReductionInstance) -> Self {
        Instance {
            graph: r.graph.clone(),
            start: r.start.clone(),
            target: r.target.clone(),
            k: Some(r.k),
            formula: Some(r.formula.clone()),
        }
    }
}

/// A move sequence, optionally carrying its graph and jump bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph: Option<GraphDoc>,
    pub start: TokenConfig,
    pub moves: Vec<Move>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
}

impl SequenceDoc {
    pub fn new(seq: &MoveSequence, graph: Option<&Graph>, k: Option<usize>) -> Self {
        SequenceDoc { graph: graph.map(GraphDoc::from), start: seq.start.clone(), moves: seq.moves.clone(), k }
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(json_error)
    }

    pub fn sequence(&self) -> MoveSequence {
        MoveSequence::new(self.start.clone(), self.moves.clone())
    }
}

/// Compact JSON with a trailing newline. Map keys come out in a fixed order,
/// so equal values always print identically.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable value");
    s.push('\n');
    s
}
