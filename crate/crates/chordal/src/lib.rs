//! A chordal graph toolkit built around minimum-size extremal questions.
//!
//! What lives where:
//!
//! - [`graph`]: simple undirected graphs with value semantics, plus the
//!   handful of constructors and queries everything else needs.
//! - [`graph6`]: the compact ASCII interchange format for simple graphs.
//! - [`recognition`]: chordality with certificates. A yes comes with a
//!   perfect elimination ordering, a no with a chordless cycle.
//! - [`edit`]: edge additions and deletions that keep chordality, and the
//!   loops that push the minimum degree to a target in either direction.
//! - [`extremal`]: closed formulas for the minimum number of edges in a
//!   chordal graph of given order and minimum degree (connected or not),
//!   with labeled constructions attaining them.
//! - [`oracle`]: an independent brute-force search verifying those
//!   formulas at small orders, and a seeded random chordal generator.

pub mod edit;
pub mod extremal;
pub mod graph;
pub mod graph6;
pub mod oracle;
pub mod recognition;

pub use edit::{
    augment_edge, augment_edge_trace, delete_edge_at_simplicial, raise_min_degree,
    reduce_min_degree, EditError, EditStep, EditTrace,
};
pub use extremal::{
    construct_b, construct_q, g_formula, phi, ConstructionResult, ExtremalError, ExtremalParams,
    FamilyTag,
};
pub use graph::{Edge, Graph, GraphError};
pub use graph6::{parse_graph6, to_graph6, Graph6Error};
pub use oracle::{
    brute_force_min_size, brute_force_min_size_jobs, brute_force_min_size_with, naive_is_chordal,
    random_chordal, verify_tables, verify_tables_jobs, DegreeConstraint, OracleError,
    OracleReport, TableReport, TableRow, MAX_ORACLE_ORDER,
};
pub use recognition::{
    check_perfect_elimination, dirac_pair, is_chordal, is_chordless_cycle, is_dominating,
    is_perfect_elimination, is_simplicial, mcs_order, simplicial_vertices, ChordalityVerdict,
    EliminationOrdering, PeoViolation, RecognitionError,
};
