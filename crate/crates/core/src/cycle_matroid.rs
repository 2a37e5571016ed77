//! From graphs to matroids: the cycle matroid, its truncation, the
//! tree/quasi-Hamiltonian/small-cycle decomposition of the truncated
//! circuits, and GF(2) cycle-space membership.

use serde::{Deserialize, Serialize};

use crate::edge_set::EdgeSet;
use crate::error::{GraphError, MatroidError};
use crate::graph::{
    is_connected, quasi_hamiltonian_cycles, small_cycles, spanning_forests, LabeledGraph,
};
use crate::matroid::Matroid;

/// The cycle matroid `M(G)`: ground set the edge labels, bases the maximal
/// forests. Its circuits are exactly the cycle edge sets, which the test
/// suites verify against the independent circuit derivation.
pub fn cycle_matroid(g: &LabeledGraph) -> Result<Matroid, MatroidError> {
    if g.edge_count() == 0 {
        return Err(MatroidError::EmptyGround);
    }
    Matroid::from_bases(g.edge_set().iter(), spanning_forests(g))
}

/// The truncation of the cycle matroid. For connected `g` its bases are the
/// edge sets of maximal two-component forests.
pub fn truncated_cycle_matroid(g: &LabeledGraph) -> Result<Matroid, MatroidError> {
    cycle_matroid(g)?.truncate()
}

/// The circuits of the truncated cycle matroid of a connected simple graph,
/// split into the three families that compose it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruncatedCircuitDecomposition {
    /// Edge sets of spanning trees.
    pub trees: Vec<EdgeSet>,
    /// Edge sets of quasi-Hamiltonian cycles.
    pub quasi: Vec<EdgeSet>,
    /// Edge sets of small cycles.
    pub small: Vec<EdgeSet>,
}

impl TruncatedCircuitDecomposition {
    pub fn families_are_disjoint(&self) -> bool {
        let mut all: Vec<EdgeSet> = Vec::new();
        all.extend(&self.trees);
        all.extend(&self.quasi);
        all.extend(&self.small);
        let before = all.len();
        all.sort_unstable();
        all.dedup();
        all.len() == before
    }

    /// The union of the three families, sorted.
    pub fn union(&self) -> Vec<EdgeSet> {
        let mut all: Vec<EdgeSet> = Vec::new();
        all.extend(&self.trees);
        all.extend(&self.quasi);
        all.extend(&self.small);
        all.sort_unstable();
        all.dedup();
        all
    }
}

/// Splits the truncated circuits of a connected simple graph into spanning
/// trees, quasi-Hamiltonian cycles, and small cycles. Rejects disconnected
/// or non-simple input rather than silently repairing it.
pub fn decompose_truncated_circuits(
    g: &LabeledGraph,
) -> Result<TruncatedCircuitDecomposition, GraphError> {
    if !is_connected(g) {
        return Err(GraphError::NotConnected);
    }
    if !g.is_simple() {
        return Err(GraphError::NotSimple);
    }
    Ok(TruncatedCircuitDecomposition {
        trees: spanning_forests(g),
        quasi: quasi_hamiltonian_cycles(g),
        small: small_cycles(g),
    })
}

/// Whether `x` is the symmetric difference of some subfamily of `family`,
/// decided by elimination over GF(2) with pivots chosen lowest edge index
/// first. The empty subfamily witnesses the empty set.
pub fn in_gf2_span(x: EdgeSet, family: &[EdgeSet]) -> bool {
    let mut basis: std::collections::BTreeMap<usize, EdgeSet> = Default::default();
    for &member in family {
        if let Some(reduced) = reduce(member, &basis) {
            basis.insert(reduced.min_label().expect("nonzero"), reduced);
        }
    }
    reduce(x, &basis).is_none()
}

/// Reduces `v` against the pivot basis; `None` means it reduced to zero.
fn reduce(mut v: EdgeSet, basis: &std::collections::BTreeMap<usize, EdgeSet>) -> Option<EdgeSet> {
    for (&pivot, &row) in basis {
        if v.contains(pivot) {
            v = v ^ row;
        }
    }
    if v.is_empty() {
        None
    } else {
        Some(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::{
        complete_graph, cycle_graph, disjoint_union, pan_graph, path_graph,
    };

    #[test]
    fn cycle_matroid_shapes() {
        let m = cycle_matroid(&cycle_graph(4)).unwrap();
        assert_eq!(m.rank(), 3);
        assert_eq!(m.bases().len(), 4);

        // two components: a triangle and an edge
        let u = disjoint_union(&[&complete_graph(3), &path_graph(2)]);
        let m = cycle_matroid(&u).unwrap();
        assert_eq!(m.rank(), 3);
        let expected: Vec<EdgeSet> = [[0, 1, 3], [0, 2, 3], [1, 2, 3]]
            .into_iter()
            .map(EdgeSet::from_labels)
            .collect();
        assert_eq!(m.bases(), expected.as_slice());

        let single = cycle_matroid(&path_graph(2)).unwrap();
        assert_eq!(single.rank(), 1);
        assert!(single.circuits().is_empty());

        let mut edgeless = LabeledGraph::new();
        edgeless.add_vertex(0);
        assert!(matches!(cycle_matroid(&edgeless), Err(MatroidError::EmptyGround)));
    }

    #[test]
    fn truncations_of_named_graphs_are_uniform() {
        assert_eq!(
            truncated_cycle_matroid(&pan_graph(4)).unwrap().is_uniform(),
            Some((2, 4))
        );
        assert_eq!(
            truncated_cycle_matroid(&complete_graph(4)).unwrap().is_uniform(),
            Some((2, 6))
        );
        assert_eq!(
            truncated_cycle_matroid(&complete_graph(3)).unwrap().is_uniform(),
            Some((1, 3))
        );
    }

    #[test]
    fn decomposition_examples() {
        let pan = decompose_truncated_circuits(&pan_graph(4)).unwrap();
        assert_eq!(pan.trees.len(), 3);
        assert_eq!(pan.quasi, vec![EdgeSet::from_labels([0, 1, 2])]);
        assert!(pan.small.is_empty());

        let c4 = decompose_truncated_circuits(&cycle_graph(4)).unwrap();
        assert_eq!(c4.trees.len(), 4);
        assert!(c4.quasi.is_empty());
        assert!(c4.small.is_empty());

        let k4 = decompose_truncated_circuits(&complete_graph(4)).unwrap();
        assert_eq!(k4.trees.len(), 16);
        assert_eq!(k4.quasi.len(), 4);
        assert!(k4.small.is_empty());

        let u = disjoint_union(&[&complete_graph(3), &path_graph(2)]);
        assert!(matches!(decompose_truncated_circuits(&u), Err(GraphError::NotConnected)));
        let mut multi = LabeledGraph::new();
        multi.add_edge(0, 0, 1).unwrap();
        multi.add_edge(1, 0, 1).unwrap();
        assert!(matches!(decompose_truncated_circuits(&multi), Err(GraphError::NotSimple)));
    }

    #[test]
    fn gf2_span_examples() {
        assert!(in_gf2_span(EdgeSet::empty(), &[]));
        assert!(in_gf2_span(EdgeSet::empty(), &[EdgeSet::from_labels([0, 1])]));

        // diamond: the 4-cycle is the symmetric difference of the two triangles
        let t1 = EdgeSet::from_labels([0, 1, 2]);
        let t2 = EdgeSet::from_labels([0, 3, 4]);
        assert!(in_gf2_span(t1 ^ t2, &[t1, t2]));

        // nothing nonzero lies in the span of the empty family
        assert!(!in_gf2_span(EdgeSet::from_labels([0, 1, 2]), &[]));
    }
}
