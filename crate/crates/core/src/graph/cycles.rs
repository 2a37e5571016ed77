//! Exhaustive cycle and maximal-forest enumeration.
//!
//! Cycles are found by backtracking over closed walks with distinct vertices
//! and edges, anchored at their minimal vertex; this handles loops (1-edge
//! cycles) and parallel pairs (2-edge cycles) as well as simple graphs.
//! Everything here is meant for desk-scale inputs; the 32-label ground-set
//! cap bounds the work.

use std::collections::{BTreeMap, BTreeSet};

use super::{LabeledGraph, VertexId};
use crate::edge_set::{k_subsets, EdgeSet};

/// Edge sets of all cycles of `g`: subsets inducing a connected 2-regular
/// subgraph. Sorted by mask.
pub fn cycles(g: &LabeledGraph) -> Vec<EdgeSet> {
    let mut found: BTreeSet<EdgeSet> = BTreeSet::new();
    for (e, (u, v)) in g.edges() {
        if u == v {
            found.insert(EdgeSet::singleton(e));
        }
    }
    let adj = g.adjacency();
    for start in g.vertices() {
        walk(&adj, start, start, EdgeSet::empty(), &mut BTreeSet::from([start]), &mut found);
    }
    found.into_iter().collect()
}

fn walk(
    adj: &BTreeMap<VertexId, Vec<(VertexId, usize)>>,
    start: VertexId,
    current: VertexId,
    used: EdgeSet,
    visited: &mut BTreeSet<VertexId>,
    found: &mut BTreeSet<EdgeSet>,
) {
    for &(next, e) in &adj[&current] {
        if used.contains(e) {
            continue;
        }
        if next == start {
            if !used.is_empty() {
                found.insert(used.with(e));
            }
        } else if next > start && !visited.contains(&next) {
            visited.insert(next);
            walk(adj, start, next, used.with(e), visited, found);
            visited.remove(&next);
        }
    }
}

fn is_acyclic(g: &LabeledGraph, x: EdgeSet) -> bool {
    // union-find over endpoint identifiers
    let mut parent: BTreeMap<VertexId, VertexId> = BTreeMap::new();
    fn find(parent: &mut BTreeMap<VertexId, VertexId>, v: VertexId) -> VertexId {
        let p = *parent.entry(v).or_insert(v);
        if p == v {
            return v;
        }
        let root = find(parent, p);
        parent.insert(v, root);
        root
    }
    for e in x.iter() {
        let (u, v) = g.endpoints(e).expect("edge in ground set");
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru == rv {
            return false;
        }
        parent.insert(ru, rv);
    }
    true
}

/// Rank of the cycle matroid: vertices minus components.
pub(crate) fn graph_rank(g: &LabeledGraph) -> usize {
    g.vertex_count() - super::components(g).len()
}

/// Edge sets of all maximal forests of `g` (spanning trees when `g` is
/// connected). Sorted by mask.
pub fn spanning_forests(g: &LabeledGraph) -> Vec<EdgeSet> {
    let rank = graph_rank(g);
    k_subsets(g.edge_set(), rank)
        .filter(|&x| is_acyclic(g, x))
        .collect()
}

/// Cycles covering every vertex of `g`.
pub fn hamiltonian_cycles(g: &LabeledGraph) -> Vec<EdgeSet> {
    cycles_covering(g, |c, n| c == n)
}

/// Cycles covering all vertices except exactly one.
pub fn quasi_hamiltonian_cycles(g: &LabeledGraph) -> Vec<EdgeSet> {
    cycles_covering(g, |c, n| c + 1 == n)
}

/// Cycles covering at most `|V| - 2` vertices: neither Hamiltonian nor
/// quasi-Hamiltonian.
pub fn small_cycles(g: &LabeledGraph) -> Vec<EdgeSet> {
    cycles_covering(g, |c, n| c + 2 <= n)
}

fn cycles_covering(g: &LabeledGraph, keep: impl Fn(usize, usize) -> bool) -> Vec<EdgeSet> {
    let n = g.vertex_count();
    cycles(g)
        .into_iter()
        .filter(|&c| keep(g.covered_vertices(c).len(), n))
        .collect()
}
