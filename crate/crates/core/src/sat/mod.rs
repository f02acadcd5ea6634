//! Exactly-3 CNF formulas and their reduction to chordal `k`-Jump instances.

pub mod cnf;
pub mod reduction;

pub use cnf::{parse_e3cnf, CnfFormula, Literal};
pub use reduction::{
    assignment_to_sequence, build_instance, instance_stats, peo_order, sequence_to_assignment, InstanceStats,
    ReductionInstance,
};
