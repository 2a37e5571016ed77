//! Analysis of graph pairs sharing a truncated cycle matroid.
//!
//! A pair qualifies when both graphs are connected and simple, share their
//! edge-label set, have equal truncated cycle matroids, and have different
//! cycle matroids. For such a pair there is a witness edge set that induces
//! a quasi-Hamiltonian cycle on one side and a spanning tree on the other;
//! the quasi-Hamiltonian side decomposes into a rim, an apex, and one to
//! three spokes, and the pair falls into one of five structural shapes.
//! Any input that escapes the catalogue is reported as a violation with a
//! full certificate instead of being classified loosely.

mod ops;

pub use ops::{edge_exchange, identify_components, whitney_twist};

use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cycle_matroid::{cycle_matroid, in_gf2_span, truncated_cycle_matroid};
use crate::edge_set::EdgeSet;
use crate::graph::{
    components, connectivity_at_least, is_connected, isomorphic, quasi_hamiltonian_cycles,
    small_cycles, spanning_forests, EdgeId, GraphIsomorphism, LabeledGraph, VertexId,
};

/// The five defining conditions of a qualifying pair, each computed
/// independently so a report shows exactly what failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairConditions {
    /// Both graphs connected.
    pub connected: [bool; 2],
    /// Both graphs loop-free and parallel-free.
    pub simple: [bool; 2],
    /// Equal edge-label sets (and nonempty).
    pub shared_edge_set: bool,
    /// Equal truncated cycle matroids.
    pub truncations_equal: bool,
    /// Different cycle matroids.
    pub cycle_matroids_differ: bool,
    /// Conjunction of the five conditions above.
    pub satisfied: bool,
}

/// Evaluates the pair conditions. The matroid comparisons are guarded: they
/// are reported false when either edge set is empty or a truncation does not
/// exist (rank zero).
pub fn check_pair_conditions(g: &LabeledGraph, f: &LabeledGraph) -> PairConditions {
    let connected = [is_connected(g), is_connected(f)];
    let simple = [g.is_simple(), f.is_simple()];
    let shared_edge_set = !g.edge_set().is_empty() && g.edge_set() == f.edge_set();

    let mg = cycle_matroid(g).ok();
    let mf = cycle_matroid(f).ok();
    let truncations_equal = match (&mg, &mf) {
        (Some(mg), Some(mf)) => match (mg.truncate(), mf.truncate()) {
            (Ok(tg), Ok(tf)) => tg == tf,
            _ => false,
        },
        _ => false,
    };
    let cycle_matroids_differ = match (&mg, &mf) {
        (Some(mg), Some(mf)) => mg != mf,
        _ => false,
    };

    let satisfied = connected[0]
        && connected[1]
        && simple[0]
        && simple[1]
        && shared_edge_set
        && truncations_equal
        && cycle_matroids_differ;
    PairConditions {
        connected,
        simple,
        shared_edge_set,
        truncations_equal,
        cycle_matroids_differ,
        satisfied,
    }
}

/// Which side of the pair carries the quasi-Hamiltonian cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessSide {
    First,
    Second,
}

/// A witness edge set: a quasi-Hamiltonian cycle on one side that is a
/// spanning tree on the other. Exactly one side can hold the quasi side for
/// a given edge set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub edges: EdgeSet,
    pub quasi_side: WitnessSide,
}

/// Finds the witness for a qualifying pair. Candidates from both
/// orientations are collected and the lexicographically least edge set wins,
/// so repeated runs agree. A qualifying pair without a witness contradicts
/// the theory and is reported as a violation.
pub fn find_witness(g: &LabeledGraph, f: &LabeledGraph) -> Result<Witness, PairError> {
    let conditions = check_pair_conditions(g, f);
    if !conditions.satisfied {
        return Err(PairError::ConditionsNotMet(Box::new(conditions)));
    }
    let quasi_g: HashSet<EdgeSet> = quasi_hamiltonian_cycles(g).into_iter().collect();
    let quasi_f: HashSet<EdgeSet> = quasi_hamiltonian_cycles(f).into_iter().collect();
    let trees_g: HashSet<EdgeSet> = spanning_forests(g).into_iter().collect();
    let trees_f: HashSet<EdgeSet> = spanning_forests(f).into_iter().collect();

    let mut candidates: Vec<Witness> = Vec::new();
    for &x in &quasi_g {
        if !quasi_f.contains(&x) && trees_f.contains(&x) && !trees_g.contains(&x) {
            candidates.push(Witness { edges: x, quasi_side: WitnessSide::First });
        }
    }
    for &x in &quasi_f {
        if !quasi_g.contains(&x) && trees_g.contains(&x) && !trees_f.contains(&x) {
            candidates.push(Witness { edges: x, quasi_side: WitnessSide::Second });
        }
    }
    candidates
        .into_iter()
        .min_by(|a, b| a.edges.cmp_lex(b.edges))
        .ok_or_else(|| {
            PairError::Violation(Box::new(ViolationCertificate {
                reason: "qualifying pair admits no quasi-Hamiltonian/spanning-tree witness".into(),
                first: g.clone(),
                second: f.clone(),
                conditions,
                witness: None,
                rim: None,
                claims: Vec::new(),
            }))
        })
}

/// An edge joining the apex to the rim, with its rim end-vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Spoke {
    pub edge: EdgeId,
    pub foot: VertexId,
}

/// The structure of the quasi-Hamiltonian side around its witness cycle:
/// the rim, the apex vertex left uncovered, the spokes at the apex, and any
/// chords (non-rim edges with both ends on the rim).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RimStructure {
    pub rim: EdgeSet,
    /// Rim vertices in traversal order.
    pub rim_cycle: Vec<VertexId>,
    pub apex: VertexId,
    pub spokes: Vec<Spoke>,
    pub chords: Vec<EdgeId>,
}

impl RimStructure {
    /// Distance between two rim vertices along the rim cycle.
    pub fn rim_distance(&self, a: VertexId, b: VertexId) -> usize {
        let pos = |v| self.rim_cycle.iter().position(|&x| x == v).expect("vertex on rim");
        let (i, j) = (pos(a), pos(b));
        let d = i.abs_diff(j);
        d.min(self.rim_cycle.len() - d)
    }
}

/// Derives the rim structure of `g` around a witness edge set whose
/// quasi-Hamiltonian side is `g`.
pub fn rim_structure(g: &LabeledGraph, witness_edges: EdgeSet) -> Result<RimStructure, PairError> {
    let induced = g.induced_subgraph(witness_edges).map_err(|e| {
        PairError::InvalidWitness(format!("witness is not an edge subset: {e}"))
    })?;
    if !induced.is_cycle() {
        return Err(PairError::InvalidWitness("witness does not induce a cycle".into()));
    }
    let covered = g.covered_vertices(witness_edges);
    let mut uncovered = g.vertices().filter(|v| !covered.contains(v));
    let apex = match (uncovered.next(), uncovered.next()) {
        (Some(v), None) => v,
        _ => {
            return Err(PairError::InvalidWitness(
                "witness cycle is not quasi-Hamiltonian".into(),
            ))
        }
    };

    // walk the rim from its smallest vertex toward its smaller neighbor
    let adj = induced.adjacency();
    let start = *adj.keys().next().expect("nonempty cycle");
    let mut rim_cycle = vec![start];
    let mut prev = start;
    let mut current = adj[&start][0].0;
    while current != start {
        rim_cycle.push(current);
        let next = adj[&current]
            .iter()
            .map(|&(w, _)| w)
            .find(|&w| w != prev)
            .expect("cycle vertices have two neighbors");
        prev = current;
        current = next;
    }

    let mut spokes = Vec::new();
    let mut chords = Vec::new();
    for (e, (u, v)) in g.edges() {
        if witness_edges.contains(e) {
            continue;
        }
        if u == apex || v == apex {
            spokes.push(Spoke { edge: e, foot: if u == apex { v } else { u } });
        } else {
            chords.push(e);
        }
    }
    Ok(RimStructure { rim: witness_edges, rim_cycle, apex, spokes, chords })
}

/// The structural facts checked for every classified pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StructuralClaim {
    /// The rim has no chords (so at least one spoke exists).
    RimHasNoChords,
    /// Any two spoke feet lie at rim distance at most two.
    SpokeFeetWithinDistanceTwo,
    /// Between one and three spokes; two-spoke feet at distance one or two,
    /// three-spoke feet on a three-vertex rim path.
    SpokeCountAndLayout,
    /// The witness edge set is not a symmetric difference of small cycles.
    WitnessOutsideSmallCycleSpan,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimCheck {
    pub claim: StructuralClaim,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

fn check(claim: StructuralClaim, passed: bool, detail: impl FnOnce() -> String) -> ClaimCheck {
    ClaimCheck { claim, passed, detail: if passed { None } else { Some(detail()) } }
}

/// Runs the structural checks on the quasi-Hamiltonian side `g` with rim
/// structure `rim`. All must pass for a genuine qualifying pair; failures
/// carry the counterexample data.
pub fn verify_structural_claims(g: &LabeledGraph, rim: &RimStructure) -> Vec<ClaimCheck> {
    let mut out = Vec::new();

    out.push(check(
        StructuralClaim::RimHasNoChords,
        rim.chords.is_empty() && !rim.spokes.is_empty(),
        || format!("chords {:?}, {} spokes", rim.chords, rim.spokes.len()),
    ));

    let mut far_pair = None;
    for (i, a) in rim.spokes.iter().enumerate() {
        for b in &rim.spokes[i + 1..] {
            if rim.rim_distance(a.foot, b.foot) > 2 {
                far_pair = Some((a.edge, b.edge, rim.rim_distance(a.foot, b.foot)));
            }
        }
    }
    out.push(check(StructuralClaim::SpokeFeetWithinDistanceTwo, far_pair.is_none(), || {
        let (a, b, d) = far_pair.unwrap();
        format!("spokes {a} and {b} have feet at rim distance {d}")
    }));

    let count = rim.spokes.len();
    let layout_ok = match count {
        1 => true,
        2 => {
            let d = rim.rim_distance(rim.spokes[0].foot, rim.spokes[1].foot);
            d == 1 || d == 2
        }
        3 => {
            // some foot must be rim-adjacent to both others
            rim.spokes.iter().any(|mid| {
                rim.spokes
                    .iter()
                    .filter(|s| s.edge != mid.edge)
                    .all(|s| rim.rim_distance(mid.foot, s.foot) == 1)
            })
        }
        _ => false,
    };
    out.push(check(StructuralClaim::SpokeCountAndLayout, layout_ok, || {
        format!(
            "{} spokes with feet {:?}",
            count,
            rim.spokes.iter().map(|s| s.foot).collect::<Vec<_>>()
        )
    }));

    let small = small_cycles(g);
    out.push(check(
        StructuralClaim::WitnessOutsideSmallCycleSpan,
        !in_gf2_span(rim.rim, &small),
        || format!("witness {} is a symmetric difference of {} small cycles", rim.rim, small.len()),
    ));

    out
}

/// The five structural shapes of a qualifying pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ClassificationTag {
    /// One spoke: the partner is either isomorphic or a cycle, and the
    /// shared truncation is uniform of corank two.
    OneSpoke { partner_is_cycle: bool },
    /// Two spokes with rim-adjacent feet; the graphs are isomorphic.
    TwoSpokesAdjacent,
    /// Two spokes with feet at rim distance two; the graphs are isomorphic.
    TwoSpokesDistanceTwo,
    /// Three spokes with feet on a three-vertex rim path; the graphs are
    /// isomorphic.
    ThreeSpokes,
    /// A disconnected participant: exactly one single-edge component plus
    /// one cycle component.
    DisconnectedOneEdgePlusCycle,
}

/// The component split of a disconnected participant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OneEdgePlusCycleShape {
    pub edge_component: EdgeSet,
    pub cycle_component: EdgeSet,
}

/// Shapes of the disconnected sides, in pair order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DisconnectedShapes {
    pub first: Option<OneEdgePlusCycleShape>,
    pub second: Option<OneEdgePlusCycleShape>,
}

/// Everything backing a classification: the witness and rim, the claim
/// checks that were run, an isomorphism when the shape asserts one, and the
/// uniform parameters of the shared truncation for the one-spoke shape.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    /// True when the quasi-Hamiltonian side is the second argument; the rim
    /// data then describes the second graph.
    pub swapped: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rim: Option<RimStructure>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub isomorphism: Option<GraphIsomorphism>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub truncation_uniform: Option<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub disconnected: Option<DisconnectedShapes>,
    pub claims: Vec<ClaimCheck>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairClassification {
    pub tag: ClassificationTag,
    pub certificate: Certificate,
}

/// A full dump of a pair that escaped the catalogue: the inputs, the
/// conditions, and whatever witness and claim data was derived before the
/// contradiction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationCertificate {
    pub reason: String,
    pub first: LabeledGraph,
    pub second: LabeledGraph,
    pub conditions: PairConditions,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rim: Option<RimStructure>,
    pub claims: Vec<ClaimCheck>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PairError {
    #[error("pair does not meet the required conditions: {0:?}")]
    ConditionsNotMet(Box<PairConditions>),
    #[error("invalid witness: {0}")]
    InvalidWitness(String),
    #[error("structural violation: {}", .0.reason)]
    Violation(Box<ViolationCertificate>),
    #[error(transparent)]
    Graph(#[from] crate::error::GraphError),
    #[error(transparent)]
    Matroid(#[from] crate::error::MatroidError),
}

fn one_edge_plus_cycle_shape(g: &LabeledGraph) -> Option<OneEdgePlusCycleShape> {
    let comps = components(g);
    if comps.len() != 2 {
        return None;
    }
    let edge_sets: Vec<EdgeSet> = comps
        .iter()
        .map(|cc| {
            EdgeSet::from_labels(
                g.edges().filter(|(_, (u, _))| cc.contains(u)).map(|(e, _)| e),
            )
        })
        .collect();
    for (i, &es) in edge_sets.iter().enumerate() {
        let other = edge_sets[1 - i];
        if es.len() == 1 && comps[i].len() == 2 {
            let cycle_part = g.induced_subgraph(other).ok()?;
            if cycle_part.is_cycle() && comps[1 - i].len() == cycle_part.vertex_count() {
                return Some(OneEdgePlusCycleShape { edge_component: es, cycle_component: other });
            }
        }
    }
    None
}

/// Classifies a pair meeting all conditions except possibly connectivity.
/// Disconnected participants must be a one-edge component plus a cycle;
/// connected pairs are classified by the spoke layout of the
/// quasi-Hamiltonian side, with every asserted isomorphism found and
/// attached. Pairs that fit no case are errors carrying a certificate.
pub fn classify_pair(g: &LabeledGraph, f: &LabeledGraph) -> Result<PairClassification, PairError> {
    let conditions = check_pair_conditions(g, f);
    if !(conditions.simple[0]
        && conditions.simple[1]
        && conditions.shared_edge_set
        && conditions.truncations_equal
        && conditions.cycle_matroids_differ)
    {
        return Err(PairError::ConditionsNotMet(Box::new(conditions)));
    }

    let violation = |reason: String,
                     witness: Option<Witness>,
                     rim: Option<RimStructure>,
                     claims: Vec<ClaimCheck>| {
        PairError::Violation(Box::new(ViolationCertificate {
            reason,
            first: g.clone(),
            second: f.clone(),
            conditions,
            witness,
            rim,
            claims,
        }))
    };

    if !(conditions.connected[0] && conditions.connected[1]) {
        let mut shapes = DisconnectedShapes { first: None, second: None };
        for (idx, graph) in [g, f].into_iter().enumerate() {
            if is_connected(graph) {
                continue;
            }
            match one_edge_plus_cycle_shape(graph) {
                Some(shape) => {
                    if idx == 0 {
                        shapes.first = Some(shape);
                    } else {
                        shapes.second = Some(shape);
                    }
                }
                None => {
                    return Err(violation(
                        "disconnected participant is not a one-edge component plus a cycle".into(),
                        None,
                        None,
                        Vec::new(),
                    ))
                }
            }
        }
        return Ok(PairClassification {
            tag: ClassificationTag::DisconnectedOneEdgePlusCycle,
            certificate: Certificate {
                swapped: false,
                witness: None,
                rim: None,
                isomorphism: None,
                truncation_uniform: None,
                disconnected: Some(shapes),
                claims: Vec::new(),
            },
        });
    }

    let witness = find_witness(g, f)?;
    let (quasi_side, tree_side, swapped) = match witness.quasi_side {
        WitnessSide::First => (g, f, false),
        WitnessSide::Second => (f, g, true),
    };
    let rim = rim_structure(quasi_side, witness.edges)?;
    let claims = verify_structural_claims(quasi_side, &rim);
    if claims.iter().any(|c| !c.passed) {
        return Err(violation(
            "structural claim failed".into(),
            Some(witness),
            Some(rim),
            claims,
        ));
    }

    let mut certificate = Certificate {
        swapped,
        witness: Some(witness),
        rim: None,
        isomorphism: None,
        truncation_uniform: None,
        disconnected: None,
        claims,
    };

    let require_isomorphism = |certificate: &mut Certificate| -> Result<(), PairError> {
        match isomorphic(g, f) {
            Some(iso) => {
                certificate.isomorphism = Some(iso);
                Ok(())
            }
            None => Err(violation(
                "shape asserts an isomorphism but none exists".into(),
                Some(witness),
                certificate.rim.clone(),
                certificate.claims.clone(),
            )),
        }
    };

    let tag = match rim.spokes.len() {
        1 => {
            let partner_is_cycle = tree_side.is_cycle();
            if !partner_is_cycle {
                require_isomorphism(&mut certificate)?;
            }
            // the shared truncation must be uniform of corank two
            let uniform = truncated_cycle_matroid(quasi_side)?.is_uniform();
            let m = quasi_side.edge_count();
            match uniform {
                Some((k, size)) if k + 2 == size && size == m => {
                    certificate.truncation_uniform = uniform;
                }
                _ => {
                    return Err(violation(
                        "one-spoke pair whose truncation is not uniform of corank two".into(),
                        Some(witness),
                        Some(rim),
                        certificate.claims,
                    ))
                }
            }
            ClassificationTag::OneSpoke { partner_is_cycle }
        }
        2 | 3 => {
            if !(connectivity_at_least(g, 2) && connectivity_at_least(f, 2)) {
                return Err(violation(
                    "multi-spoke pair is not 2-connected".into(),
                    Some(witness),
                    Some(rim),
                    certificate.claims,
                ));
            }
            require_isomorphism(&mut certificate)?;
            if rim.spokes.len() == 3 {
                ClassificationTag::ThreeSpokes
            } else if rim.rim_distance(rim.spokes[0].foot, rim.spokes[1].foot) == 1 {
                ClassificationTag::TwoSpokesAdjacent
            } else {
                ClassificationTag::TwoSpokesDistanceTwo
            }
        }
        n => {
            return Err(violation(
                format!("{n} spokes is outside the catalogue"),
                Some(witness),
                Some(rim),
                certificate.claims,
            ))
        }
    };
    certificate.rim = Some(rim);
    Ok(PairClassification { tag, certificate })
}
