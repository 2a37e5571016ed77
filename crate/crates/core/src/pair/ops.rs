//! Graph operations that move between members of a qualifying pair: the
//! Whitney two-vertex-cut switch, identification of components at chosen
//! vertices, and the exchange of two edge incidences.

use std::collections::BTreeSet;

use crate::error::GraphError;
use crate::graph::{components, components_without, is_connected, EdgeId, LabeledGraph, VertexId};

/// The Whitney switch at a separating vertex pair: edges between `side` and
/// the cut have their cut endpoint exchanged (`u` with `v`); labels and all
/// other incidences are untouched. The cycle matroid is preserved exactly.
pub fn whitney_twist(
    g: &LabeledGraph,
    cut: (VertexId, VertexId),
    side: &BTreeSet<VertexId>,
) -> Result<LabeledGraph, GraphError> {
    let (u, v) = cut;
    if !g.contains_vertex(u) {
        return Err(GraphError::UnknownVertex(u));
    }
    if !g.contains_vertex(v) {
        return Err(GraphError::UnknownVertex(v));
    }
    let removed = BTreeSet::from([u, v]);
    if u == v || components_without(g, &removed).len() < 2 {
        return Err(GraphError::NotACut(u, v));
    }
    // side must be a union of components of the cut complement
    for comp in components_without(g, &removed) {
        let inside = comp.intersection(side).count();
        if inside != 0 && inside != comp.len() {
            return Err(GraphError::InvalidSide);
        }
    }
    if side.iter().any(|w| removed.contains(w) || !g.contains_vertex(*w)) {
        return Err(GraphError::InvalidSide);
    }

    let mut out = LabeledGraph::new();
    for w in g.vertices() {
        out.add_vertex(w);
    }
    let swap = |w: VertexId| if w == u { v } else if w == v { u } else { w };
    for (e, (a, b)) in g.edges() {
        let (a2, b2) = match (side.contains(&a), side.contains(&b)) {
            // an edge from the side to the cut is re-glued
            (true, false) => (a, swap(b)),
            (false, true) => (swap(a), b),
            _ => (a, b),
        };
        out.add_edge(e, a2, b2)?;
    }
    Ok(out)
}

/// Identifies one chosen vertex of each component of a disconnected graph
/// into a single new vertex. The input must be loop-free, parallel-free,
/// and have no isolated vertices; `picks` must contain exactly one vertex
/// of each component, in any order. Both the cycle matroid and its
/// truncation are preserved.
pub fn identify_components(
    h: &LabeledGraph,
    picks: &[VertexId],
) -> Result<LabeledGraph, GraphError> {
    if !h.is_simple() {
        return Err(GraphError::NotSimple);
    }
    if h.has_isolated_vertices() {
        return Err(GraphError::IsolatedVertices);
    }
    let comps = components(h);
    if comps.len() < 2 {
        return Err(GraphError::NotDisconnected);
    }
    if picks.len() != comps.len() {
        return Err(GraphError::InvalidPicks(format!(
            "{} picks for {} components",
            picks.len(),
            comps.len()
        )));
    }
    let pick_set: BTreeSet<VertexId> = picks.iter().copied().collect();
    if pick_set.len() != picks.len() {
        return Err(GraphError::InvalidPicks("duplicate pick".into()));
    }
    for comp in &comps {
        if comp.intersection(&pick_set).count() != 1 {
            return Err(GraphError::InvalidPicks(
                "picks must select exactly one vertex of each component".into(),
            ));
        }
    }

    let fresh = h.vertices().max().expect("graph has vertices") + 1;
    let mut out = LabeledGraph::new();
    let map = |w: VertexId| if pick_set.contains(&w) { fresh } else { w };
    for w in h.vertices() {
        out.add_vertex(map(w));
    }
    for (e, (a, b)) in h.edges() {
        out.add_edge(e, map(a), map(b))?;
    }
    debug_assert!(is_connected(&out));
    Ok(out)
}

/// Swaps the incidences of two edge labels, leaving everything else alone.
/// An involution; exchanging an edge with itself is the identity.
pub fn edge_exchange(
    g: &LabeledGraph,
    e1: EdgeId,
    e2: EdgeId,
) -> Result<LabeledGraph, GraphError> {
    let p1 = g.endpoints(e1).ok_or(GraphError::UnknownEdge(e1))?;
    let p2 = g.endpoints(e2).ok_or(GraphError::UnknownEdge(e2))?;
    let mut out = LabeledGraph::new();
    for w in g.vertices() {
        out.add_vertex(w);
    }
    for (e, (a, b)) in g.edges() {
        let (a2, b2) = if e == e1 {
            p2
        } else if e == e2 {
            p1
        } else {
            (a, b)
        };
        out.add_edge(e, a2, b2)?;
    }
    Ok(out)
}
