//! Exact solver and audit harness for the co-even domination number of
//! small simple graphs.
//!
//! A co-even dominating set is a dominating set whose outside vertices all
//! have even degree; `gamma_coe` is the least size of one. The crate
//! provides:
//!
//! - exact solvers for the domination number and the co-even domination
//!   number, with lexicographically least certificates and an independent
//!   exhaustive oracle ([`domination`]);
//! - the four one-element modifications (vertex/edge removal, vertex/edge
//!   contraction) with explicit relabelling ([`transform`]);
//! - the constructive certificate lifts across each modification, whose
//!   validity is checked rather than assumed ([`lift`]);
//! - window checks for how each modification can move `gamma_coe`, corpus
//!   audits and sharpness-witness searches; the edge-contraction upper
//!   window is genuinely violated, first by K3 ([`audit`]);
//! - graph6 interchange, exhaustive labeled enumeration and seeded G(n,p)
//!   sampling ([`graph6`], [`generate`]), plus named gadget graphs
//!   ([`families`]).

pub mod audit;
pub mod domination;
pub mod families;
pub mod generate;
pub mod graph;
pub mod graph6;
pub mod lift;
pub mod transform;

pub use audit::{
    audit_corpus, audit_graph, check_additivity, check_operation_bounds, graph_witnesses,
    witness_search, AuditError, AuditSummary, BoundCheck, CheckKind, HalfInt, Relation, Tally,
    WitnessRecord,
};
pub use domination::{
    coeven_brute_force, coeven_domination_number, domination_number, forced_vertices,
    is_coeven_dominating_set, is_dominating_set, DominationResult, SolveError, DEFAULT_SOLVER_CAP,
};
pub use generate::{enumerate_labeled, gnp, labeled_graph_count, GenerateError};
pub use graph::{Edge, Element, Graph, GraphError, VertexId, MAX_VERTICES};
pub use graph6::{
    emit_graph6, parse_graph6, strip_file_header, Graph6Error, GRAPH6_FILE_HEADER,
    MAX_GRAPH6_VERTICES,
};
pub use lift::{
    edge_contraction_lift, edge_removal_lift, vertex_contraction_lift, vertex_removal_lift,
    CandidateCert, LiftCase, LiftDirection, LiftError,
};
pub use transform::{contract_edge, contract_vertex, remove_edge, remove_vertex, TransformResult};
