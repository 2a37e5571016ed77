//! Components and vertex connectivity, by direct search.

use std::collections::BTreeSet;

use super::{LabeledGraph, VertexId};

/// Connected components, each a vertex set; isolated vertices form singleton
/// components. Sorted by minimal vertex.
pub fn components(g: &LabeledGraph) -> Vec<BTreeSet<VertexId>> {
    components_without(g, &BTreeSet::new())
}

/// Components of the graph with `removed` vertices (and their edges) deleted.
pub fn components_without(g: &LabeledGraph, removed: &BTreeSet<VertexId>) -> Vec<BTreeSet<VertexId>> {
    let adj = g.adjacency();
    let mut seen: BTreeSet<VertexId> = removed.clone();
    let mut out = Vec::new();
    for start in g.vertices() {
        if seen.contains(&start) {
            continue;
        }
        let mut comp = BTreeSet::from([start]);
        let mut stack = vec![start];
        seen.insert(start);
        while let Some(v) = stack.pop() {
            for &(w, _) in &adj[&v] {
                if !seen.contains(&w) {
                    seen.insert(w);
                    comp.insert(w);
                    stack.push(w);
                }
            }
        }
        out.push(comp);
    }
    out
}

/// At most one component. The empty graph and a single vertex count as
/// connected.
pub fn is_connected(g: &LabeledGraph) -> bool {
    components(g).len() <= 1
}

/// Whether deleting `{u, v}` leaves at least two components.
pub fn separates(g: &LabeledGraph, u: VertexId, v: VertexId) -> bool {
    if u == v || !g.contains_vertex(u) || !g.contains_vertex(v) {
        return false;
    }
    components_without(g, &BTreeSet::from([u, v])).len() >= 2
}

/// Vertex connectivity at least `k`, checked exhaustively: the graph must
/// have more than `k` vertices and no vertex cut of fewer than `k` vertices.
pub fn connectivity_at_least(g: &LabeledGraph, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    let n = g.vertex_count();
    if n < k + 1 {
        return false;
    }
    // With n >= k + 1 it suffices to test removals of exactly k - 1 vertices:
    // any smaller cut extends to one of that size without emptying a side.
    let vs: Vec<VertexId> = g.vertices().collect();
    let mut ok = true;
    for_each_subset(&vs, k - 1, &mut |subset| {
        let removed: BTreeSet<VertexId> = subset.iter().copied().collect();
        if components_without(g, &removed).len() != 1 {
            ok = false;
        }
        ok
    });
    ok
}

/// Calls `f` on every `k`-subset of `items`; `f` returns false to stop early.
fn for_each_subset<T: Copy>(items: &[T], k: usize, f: &mut impl FnMut(&[T]) -> bool) {
    fn rec<T: Copy>(items: &[T], k: usize, start: usize, acc: &mut Vec<T>, f: &mut impl FnMut(&[T]) -> bool) -> bool {
        if acc.len() == k {
            return f(acc);
        }
        for i in start..items.len() {
            acc.push(items[i]);
            let keep_going = rec(items, k, i + 1, acc, f);
            acc.pop();
            if !keep_going {
                return false;
            }
        }
        true
    }
    rec(items, k, 0, &mut Vec::new(), f);
}

#[cfg(test)]
mod tests {
    use super::super::families::{complete_graph, cycle_graph, pan_graph, path_graph, disjoint_union};
    use super::*;

    #[test]
    fn component_structure() {
        let u = disjoint_union(&[&complete_graph(3), &path_graph(2)]);
        assert_eq!(components(&u).len(), 2);
        assert!(!is_connected(&u));
        assert!(is_connected(&pan_graph(4)));
        let mut with_isolated = path_graph(2);
        with_isolated.add_vertex(9);
        assert_eq!(components(&with_isolated).len(), 2);
    }

    #[test]
    fn connectivity_thresholds() {
        assert!(connectivity_at_least(&complete_graph(4), 3));
        assert!(!connectivity_at_least(&cycle_graph(4), 3));
        assert!(connectivity_at_least(&cycle_graph(4), 2));
        // the pan has a cut vertex
        assert!(!connectivity_at_least(&pan_graph(4), 2));
        assert!(connectivity_at_least(&pan_graph(4), 1));
        // K3 is 2-connected but not 3-connected (too few vertices)
        assert!(connectivity_at_least(&complete_graph(3), 2));
        assert!(!connectivity_at_least(&complete_graph(3), 3));
        let u = disjoint_union(&[&complete_graph(3), &path_graph(2)]);
        assert!(!connectivity_at_least(&u, 1));
    }

    #[test]
    fn separation() {
        let c4 = cycle_graph(4);
        assert!(separates(&c4, 0, 2));
        assert!(!separates(&c4, 0, 1));
        assert!(!separates(&complete_graph(4), 0, 1));
    }
}
