//! Independent set reconfiguration under the `k`-Jump rule.
//!
//! A token may jump from its vertex to any vertex within distance `k`, as
//! long as the token placement stays an independent set. `k = 1` is token
//! sliding and `k = diameter` is token jumping.
//!
//! The crate provides:
//! - [`engine`]: exact breadth-first and bounded search over configurations;
//! - [`tj`]: compilation of token-jumping sequences into `k`-Jump sequences for `k >= 3`;
//! - [`split2`]: a polynomial decision procedure for 2-Jump on split graphs;
//! - [`sat`]: a reduction from E3-SAT to shortest `k`-Jump reconfiguration on chordal graphs.

pub mod bound;
pub mod chordal;
pub mod config;
pub mod engine;
pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod sat;
pub mod split;
pub mod split2;
pub mod tj;

pub use bound::{lower_bound_moves, LowerBound};
pub use chordal::{find_peo, verify_peo, PeoOrdering};
pub use config::{k_adjacent, validate_sequence, Move, MoveSequence, TokenConfig, ValidationReport};
pub use engine::{decide, exists_within, shortest, successors, Oracle, SearchLimits};
pub use error::{Error, Result};
pub use graph::{Distance, Graph};
pub use split::{recognize_split, SplitDecomposition};
pub use split2::decide2;
