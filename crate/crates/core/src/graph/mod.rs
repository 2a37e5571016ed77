//! Labeled multigraphs.
//!
//! A graph is a vertex set plus an injective map from edge labels to
//! unordered endpoint pairs. Labels are the ground-set elements that all
//! matroid machinery works over, so they are preserved exactly by every
//! operation here. Loops and parallel edges are representable; `is_simple`
//! distinguishes the graphs the pair-analysis claims are stated for.

mod connectivity;
mod cycles;
mod enumerate;
pub mod families;
mod graph6;
mod isomorphism;

pub use connectivity::{components, components_without, connectivity_at_least, is_connected, separates};
pub use cycles::{cycles, hamiltonian_cycles, quasi_hamiltonian_cycles, small_cycles, spanning_forests};
pub use enumerate::{enumerate_graphs, EnumerateOptions, MAX_ENUM_VERTICES};
pub use graph6::{parse_graph6, write_graph6};
pub use isomorphism::{isomorphic, GraphIsomorphism};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::edge_set::{EdgeSet, MAX_EDGE_LABELS};
use crate::error::GraphError;

pub type VertexId = usize;
pub type EdgeId = usize;

/// A finite labeled multigraph: a vertex set and a map from edge labels to
/// unordered endpoint pairs.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LabeledGraph {
    vertices: BTreeSet<VertexId>,
    incidence: BTreeMap<EdgeId, (VertexId, VertexId)>,
}

impl LabeledGraph {
    pub fn new() -> Self {
        LabeledGraph::default()
    }

    pub fn add_vertex(&mut self, v: VertexId) {
        self.vertices.insert(v);
    }

    /// Adds edge `label` with endpoints `{u, v}`; endpoints are added to the
    /// vertex set. `u == v` creates a loop.
    pub fn add_edge(&mut self, label: EdgeId, u: VertexId, v: VertexId) -> Result<(), GraphError> {
        if label >= MAX_EDGE_LABELS {
            return Err(GraphError::LabelOutOfRange(label));
        }
        if self.incidence.contains_key(&label) {
            return Err(GraphError::DuplicateEdgeLabel(label));
        }
        self.vertices.insert(u);
        self.vertices.insert(v);
        self.incidence.insert(label, (u.min(v), u.max(v)));
        Ok(())
    }

    /// Builds a graph from `(label, u, v)` triples.
    pub fn from_edges<I: IntoIterator<Item = (EdgeId, VertexId, VertexId)>>(
        edges: I,
    ) -> Result<Self, GraphError> {
        let mut g = LabeledGraph::new();
        for (label, u, v) in edges {
            g.add_edge(label, u, v)?;
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.incidence.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices.iter().copied()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    /// Edges as `(label, (u, v))` in ascending label order, with `u <= v`.
    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, (VertexId, VertexId))> + '_ {
        self.incidence.iter().map(|(&e, &uv)| (e, uv))
    }

    pub fn endpoints(&self, e: EdgeId) -> Option<(VertexId, VertexId)> {
        self.incidence.get(&e).copied()
    }

    /// The ground set: all edge labels.
    pub fn edge_set(&self) -> EdgeSet {
        EdgeSet::from_labels(self.incidence.keys().copied())
    }

    /// Degree of `v`; a loop contributes 2.
    pub fn degree(&self, v: VertexId) -> usize {
        self.incidence
            .values()
            .map(|&(a, b)| (a == v) as usize + (b == v) as usize)
            .sum()
    }

    pub fn has_loops(&self) -> bool {
        self.incidence.values().any(|&(a, b)| a == b)
    }

    pub fn has_parallel_edges(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.incidence.values().any(|&p| !seen.insert(p))
    }

    /// No loops and no parallel edges.
    pub fn is_simple(&self) -> bool {
        !self.has_loops() && !self.has_parallel_edges()
    }

    pub fn isolated_vertices(&self) -> Vec<VertexId> {
        let mut covered = BTreeSet::new();
        for &(a, b) in self.incidence.values() {
            covered.insert(a);
            covered.insert(b);
        }
        self.vertices
            .iter()
            .copied()
            .filter(|v| !covered.contains(v))
            .collect()
    }

    pub fn has_isolated_vertices(&self) -> bool {
        !self.isolated_vertices().is_empty()
    }

    /// Vertices covered by the edges in `x`.
    pub fn covered_vertices(&self, x: EdgeSet) -> BTreeSet<VertexId> {
        let mut out = BTreeSet::new();
        for e in x.iter() {
            if let Some((a, b)) = self.endpoints(e) {
                out.insert(a);
                out.insert(b);
            }
        }
        out
    }

    /// The subgraph induced by an edge subset: edge set exactly `x`, vertex
    /// set the endpoints of `x`.
    pub fn induced_subgraph(&self, x: EdgeSet) -> Result<LabeledGraph, GraphError> {
        if !x.is_subset_of(self.edge_set()) {
            return Err(GraphError::EdgeSetNotInGraph(x));
        }
        let mut g = LabeledGraph::new();
        for e in x.iter() {
            let (u, v) = self.incidence[&e];
            g.add_edge(e, u, v)?;
        }
        Ok(g)
    }

    /// True iff every vertex of the subgraph induced by `y` has even degree.
    pub fn is_even_subset(&self, y: EdgeSet) -> Result<bool, GraphError> {
        let sub = self.induced_subgraph(y)?;
        let even = sub.vertices.iter().all(|&v| sub.degree(v) % 2 == 0);
        Ok(even)
    }

    /// The set of edges incident to `v`.
    pub fn vertex_star(&self, v: VertexId) -> EdgeSet {
        EdgeSet::from_labels(
            self.incidence
                .iter()
                .filter(|(_, &(a, b))| a == v || b == v)
                .map(|(&e, _)| e),
        )
    }

    /// Stars of all non-isolated vertices, as a sorted multiset.
    pub fn vertex_star_family(&self) -> Vec<EdgeSet> {
        let mut stars: Vec<EdgeSet> = self
            .vertices()
            .map(|v| self.vertex_star(v))
            .filter(|s| !s.is_empty())
            .collect();
        stars.sort();
        stars
    }

    /// True iff the two graphs have the same family of vertex stars.
    /// Requires equal ground sets.
    pub fn strongly_isomorphic(&self, other: &LabeledGraph) -> Result<bool, GraphError> {
        if self.edge_set() != other.edge_set() {
            return Err(GraphError::GroundMismatch);
        }
        Ok(self.vertex_star_family() == other.vertex_star_family())
    }

    /// Nonempty, connected, and 2-regular: the graph is a single cycle.
    pub fn is_cycle(&self) -> bool {
        self.edge_count() > 0
            && is_connected(self)
            && self.vertices().all(|v| self.degree(v) == 2)
    }

    /// Relabels edges through a bijection defined on exactly this graph's
    /// edge set.
    pub fn relabel_edges(&self, map: &BTreeMap<EdgeId, EdgeId>) -> Result<LabeledGraph, GraphError> {
        let mut g = LabeledGraph::new();
        for v in self.vertices() {
            g.add_vertex(v);
        }
        for (e, (u, v)) in self.edges() {
            let &new = map.get(&e).ok_or(GraphError::UnknownEdge(e))?;
            g.add_edge(new, u, v)?;
        }
        if g.edge_count() != self.edge_count() {
            return Err(GraphError::InvalidPicks("edge relabeling is not injective".into()));
        }
        Ok(g)
    }

    /// Adjacency lists: `v -> [(neighbor, edge)]`, loops excluded.
    pub(crate) fn adjacency(&self) -> BTreeMap<VertexId, Vec<(VertexId, EdgeId)>> {
        let mut adj: BTreeMap<VertexId, Vec<(VertexId, EdgeId)>> =
            self.vertices().map(|v| (v, Vec::new())).collect();
        for (e, (u, v)) in self.edges() {
            if u == v {
                continue;
            }
            adj.get_mut(&u).unwrap().push((v, e));
            adj.get_mut(&v).unwrap().push((u, e));
        }
        for list in adj.values_mut() {
            list.sort();
        }
        adj
    }
}

impl fmt::Debug for LabeledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LabeledGraph{{V={:?}, E={{", self.vertices)?;
        for (i, (e, (u, v))) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}:{u}-{v}")?;
        }
        write!(f, "}}}}")
    }
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    vertices: Vec<VertexId>,
    edges: Vec<(EdgeId, VertexId, VertexId)>,
}

impl Serialize for LabeledGraph {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let repr = GraphRepr {
            vertices: self.vertices().collect(),
            edges: self.edges().map(|(e, (u, v))| (e, u, v)).collect(),
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LabeledGraph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = GraphRepr::deserialize(deserializer)?;
        let mut g = LabeledGraph::new();
        for v in repr.vertices {
            g.add_vertex(v);
        }
        for (e, u, v) in repr.edges {
            g.add_edge(e, u, v).map_err(serde::de::Error::custom)?;
        }
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::families::{complete_graph, cycle_graph, pan_graph};
    use super::*;

    fn pan4() -> LabeledGraph {
        // triangle u=0, v=1, w=2 with pendant c=3 on w
        LabeledGraph::from_edges([(1, 0, 1), (2, 1, 2), (3, 2, 0), (4, 2, 3)]).unwrap()
    }

    #[test]
    fn induced_subgraph_restricts() {
        let k4 = complete_graph(4);
        // labels in lexicographic endpoint order: 0=01 1=02 2=03 3=12 4=13 5=23
        let tri = k4.induced_subgraph(EdgeSet::from_labels([0, 1, 3])).unwrap();
        assert_eq!(tri.vertex_count(), 3);
        assert_eq!(tri.edge_count(), 3);
        assert!(tri.is_cycle());

        let empty = k4.induced_subgraph(EdgeSet::empty()).unwrap();
        assert_eq!(empty.vertex_count(), 0);
        assert_eq!(empty.edge_count(), 0);

        // pan: edges 2=vw and 4=wc induce the path v-w-c
        let p = pan4().induced_subgraph(EdgeSet::from_labels([2, 4])).unwrap();
        assert_eq!(p.vertex_count(), 3);
        assert_eq!(p.degree(2), 2);
        assert_eq!(p.degree(1), 1);
        assert_eq!(p.degree(3), 1);

        assert!(matches!(
            pan4().induced_subgraph(EdgeSet::from_labels([9])),
            Err(GraphError::EdgeSetNotInGraph(_))
        ));
    }

    #[test]
    fn evenness() {
        let g = pan4();
        for c in cycles(&g) {
            assert!(g.is_even_subset(c).unwrap());
        }
        assert!(!g.is_even_subset(EdgeSet::singleton(4)).unwrap());
        // diamond: symmetric difference of its two triangles is the 4-cycle
        let d = LabeledGraph::from_edges([(0, 0, 1), (1, 0, 2), (2, 1, 2), (3, 0, 3), (4, 1, 3)])
            .unwrap();
        let t1 = EdgeSet::from_labels([0, 1, 2]);
        let t2 = EdgeSet::from_labels([0, 3, 4]);
        assert!(d.is_even_subset(t1 ^ t2).unwrap());
    }

    #[test]
    fn star_families_detect_strong_isomorphism() {
        let g = pan4();
        // renaming a vertex leaves the stars unchanged
        let renamed =
            LabeledGraph::from_edges([(1, 0, 1), (2, 1, 9), (3, 9, 0), (4, 9, 3)]).unwrap();
        assert!(g.strongly_isomorphic(&renamed).unwrap());

        let c4 = LabeledGraph::from_edges([(1, 0, 1), (2, 1, 2), (3, 2, 3), (4, 3, 0)]).unwrap();
        assert!(!g.strongly_isomorphic(&c4).unwrap());

        let k4 = complete_graph(4);
        // swap the incidences of labels 0 (=01) and 5 (=23): not induced by
        // any vertex permutation, so some star changes
        let mut swapped = LabeledGraph::new();
        for (e, (u, v)) in k4.edges() {
            let (u, v) = match e {
                0 => (2, 3),
                5 => (0, 1),
                _ => (u, v),
            };
            swapped.add_edge(e, u, v).unwrap();
        }
        assert!(!k4.strongly_isomorphic(&swapped).unwrap());

        assert!(matches!(
            g.strongly_isomorphic(&complete_graph(4)),
            Err(GraphError::GroundMismatch)
        ));
    }

    #[test]
    fn multigraph_flags() {
        let mut g = LabeledGraph::new();
        g.add_edge(0, 0, 0).unwrap(); // loop
        g.add_edge(1, 0, 1).unwrap();
        g.add_edge(2, 0, 1).unwrap(); // parallel to 1
        assert!(g.has_loops());
        assert!(g.has_parallel_edges());
        assert!(!g.is_simple());
        assert_eq!(g.degree(0), 4);
        assert!(pan_graph(4).is_simple());
    }

    #[test]
    fn serde_round_trip() {
        let g = pan4();
        let json = serde_json::to_string(&g).unwrap();
        let back: LabeledGraph = serde_json::from_str(&json).unwrap();
        assert_eq!(g, back);
    }
}
