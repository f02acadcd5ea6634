//! Matching lower bound on the length of a reconfiguration sequence.
//!
//! Each token travels to a distinct target vertex, and a token covering
//! distance `d` needs at least `ceil(d / k)` jumps. The cheapest perfect
//! matching between start and target under that cost is therefore a lower
//! bound on the number of moves.

use pathfinding::kuhn_munkres::kuhn_munkres_min;
use pathfinding::matrix::Matrix;
use serde::{Deserialize, Serialize};

use crate::config::TokenConfig;
use crate::error::{Error, Result};
use crate::graph::{Distance, Graph};

/// Serialized as a number, or the string `"unbounded"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum LowerBound {
    Finite(usize),
    /// Every perfect matching pairs some token with an unreachable target.
    Unbounded,
}

impl Serialize for LowerBound {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            LowerBound::Finite(b) => s.serialize_u64(*b as u64),
            LowerBound::Unbounded => s.serialize_str("unbounded"),
        }
    }
}

impl<'de> Deserialize<'de> for LowerBound {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(usize),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(b) => Ok(LowerBound::Finite(b)),
            Raw::Text(t) if t == "unbounded" => Ok(LowerBound::Unbounded),
            Raw::Text(t) => Err(serde::de::Error::custom(format!("unexpected bound {t:?}"))),
        }
    }
}

impl LowerBound {
    pub fn finite(self) -> Option<usize> {
        match self {
            LowerBound::Finite(b) => Some(b),
            LowerBound::Unbounded => None,
        }
    }
}

pub fn lower_bound_moves(g: &Graph, s: &TokenConfig, t: &TokenConfig, k: usize) -> Result<LowerBound> {
    if s.len() != t.len() {
        return Err(Error::SizeMismatch(s.len(), t.len()));
    }
    if k == 0 {
        return Err(Error::BoundTooSmall { k, min: 1 });
    }
    for &v in s.vertices().iter().chain(t.vertices()) {
        g.check_vertex(v)?;
    }
    Ok(matching_bound(g, s.vertices(), t.vertices(), k))
}

pub(crate) fn matching_bound(g: &Graph, s: &[usize], t: &[usize], k: usize) -> LowerBound {
    let size = s.len();
    if size == 0 {
        return LowerBound::Finite(0);
    }
    let big = (size * (g.n() + 1) + 1) as i64;
    let rows: Vec<Vec<i64>> = s
        .iter()
        .map(|&u| {
            t.iter()
                .map(|&v| match g.distance(u, v) {
                    Distance::Finite(d) => d.div_ceil(k) as i64,
                    Distance::Unreachable => big,
                })
                .collect()
        })
        .collect();
    let weights = Matrix::from_rows(rows).expect("square cost matrix");
    let (cost, _) = kuhn_munkres_min(&weights);
    if cost >= big {
        LowerBound::Unbounded
    } else {
        LowerBound::Finite(cost as usize)
    }
}
