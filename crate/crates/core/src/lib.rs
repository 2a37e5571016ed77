//! Cycle matroids of labeled graphs, matroid truncation, and the complete
//! structural classification of graph pairs that share a truncated cycle
//! matroid while their cycle matroids differ.
//!
//! The crate is organized around four layers:
//!
//! * [`graph`] — labeled multigraphs, cycle/forest enumeration, isomorphism,
//!   connectivity, small-graph enumeration, and graph6 I/O;
//! * [`matroid`] — explicit-base matroids: circuits, truncation, the
//!   truncated-circuit formula, uniform matroids, isomorphism, and an
//!   exhaustive axiom check;
//! * [`cycle_matroid`] — the bridge from graphs to matroids, the
//!   tree/quasi-Hamiltonian/small-cycle decomposition, and GF(2) cycle-space
//!   membership;
//! * [`pair`] — the pair conditions, witness search, rim/spoke/chord
//!   structure, structural claim checks, classification, and the graph
//!   operations relating the members of a pair.
//!
//! All values are immutable after construction and safe to share across
//! threads; enumeration helpers return plain vectors in deterministic
//! orders.

pub mod cycle_matroid;
pub mod edge_set;
pub mod error;
pub mod graph;
pub mod matroid;
pub mod pair;

pub use cycle_matroid::{
    cycle_matroid, decompose_truncated_circuits, in_gf2_span, truncated_cycle_matroid,
    TruncatedCircuitDecomposition,
};
pub use edge_set::{k_subsets, EdgeSet, MAX_EDGE_LABELS};
pub use error::{GraphError, MatroidError};
pub use graph::{
    components, connectivity_at_least, cycles, enumerate_graphs, hamiltonian_cycles, is_connected,
    isomorphic, parse_graph6, quasi_hamiltonian_cycles, small_cycles, spanning_forests,
    write_graph6, EdgeId, EnumerateOptions, GraphIsomorphism, LabeledGraph, VertexId,
};
pub use matroid::Matroid;
pub use pair::{
    check_pair_conditions, classify_pair, edge_exchange, find_witness, identify_components,
    rim_structure, verify_structural_claims, whitney_twist, Certificate, ClaimCheck,
    ClassificationTag, PairClassification, PairConditions, PairError, RimStructure, Spoke,
    StructuralClaim, ViolationCertificate, Witness, WitnessSide,
};
