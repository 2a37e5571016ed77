//! Constructors for the small named graphs used throughout the tests and
//! benchmarks. Vertices are `0..n`, edge labels are assigned sequentially in
//! construction order.

use super::LabeledGraph;

/// Path on `n` vertices (`n - 1` edges).
pub fn path_graph(n: usize) -> LabeledGraph {
    let mut g = LabeledGraph::new();
    for v in 0..n {
        g.add_vertex(v);
    }
    for i in 0..n.saturating_sub(1) {
        g.add_edge(i, i, i + 1).unwrap();
    }
    g
}

/// Cycle on `n >= 3` vertices; edge `i` joins `i` and `(i + 1) mod n`.
pub fn cycle_graph(n: usize) -> LabeledGraph {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    let mut g = LabeledGraph::new();
    for i in 0..n {
        g.add_edge(i, i, (i + 1) % n).unwrap();
    }
    g
}

/// Complete graph; edge labels in lexicographic endpoint order.
pub fn complete_graph(n: usize) -> LabeledGraph {
    let mut g = LabeledGraph::new();
    for v in 0..n {
        g.add_vertex(v);
    }
    let mut label = 0;
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(label, u, v).unwrap();
            label += 1;
        }
    }
    g
}

/// Cycle on `n - 1` vertices plus one pendant vertex attached to vertex 0
/// (`pan_graph(4)` is the triangle with a tail).
pub fn pan_graph(n: usize) -> LabeledGraph {
    assert!(n >= 4);
    let mut g = cycle_graph(n - 1);
    g.add_edge(n - 1, 0, n - 1).unwrap();
    g
}

/// Complete bipartite graph with parts `0..a` and `a..a+b`.
pub fn complete_bipartite_graph(a: usize, b: usize) -> LabeledGraph {
    let mut g = LabeledGraph::new();
    let mut label = 0;
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(label, u, v).unwrap();
            label += 1;
        }
    }
    g
}

/// Wheel: a cycle on `rim >= 3` vertices plus a hub adjacent to every rim
/// vertex.
pub fn wheel_graph(rim: usize) -> LabeledGraph {
    let mut g = cycle_graph(rim);
    for v in 0..rim {
        g.add_edge(rim + v, v, rim).unwrap();
    }
    g
}

/// Disjoint union of the given graphs: vertices are shifted into disjoint
/// ranges and edge labels are reassigned sequentially component by component.
pub fn disjoint_union(parts: &[&LabeledGraph]) -> LabeledGraph {
    let mut g = LabeledGraph::new();
    let mut vertex_offset = 0;
    let mut label = 0;
    for part in parts {
        let remap: std::collections::BTreeMap<usize, usize> = part
            .vertices()
            .enumerate()
            .map(|(i, v)| (v, vertex_offset + i))
            .collect();
        for v in remap.values() {
            g.add_vertex(*v);
        }
        for (_, (u, v)) in part.edges() {
            g.add_edge(label, remap[&u], remap[&v]).unwrap();
            label += 1;
        }
        vertex_offset += part.vertex_count();
    }
    g
}
