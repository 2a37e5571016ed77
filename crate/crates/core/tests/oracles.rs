//! Cross-checks of the enumeration routines against independent brute-force
//! oracles: exhaustive subset scans for cycles and maximal forests, a
//! Kirchhoff determinant for spanning-tree counts, minimal-dependent-set
//! enumeration for circuits, definition expansion for truncation, and
//! exhaustive cut checks for connectivity.

use std::collections::BTreeSet;

use tcm_core::edge_set::k_subsets;
use tcm_core::graph::families::{complete_graph, pan_graph, path_graph};
use tcm_core::{
    components, connectivity_at_least, cycles, cycle_matroid, enumerate_graphs, is_connected,
    parse_graph6, spanning_forests, write_graph6, EdgeSet, EnumerateOptions, LabeledGraph, Matroid,
};

/// Subset-scan oracle: a nonempty edge subset is a cycle edge set iff it
/// induces a connected subgraph with every vertex of degree two.
fn cycle_oracle(g: &LabeledGraph) -> Vec<EdgeSet> {
    let ground = g.edge_set();
    let mut out = Vec::new();
    for mask in 1u32..(1 << g.edge_count()) {
        let x = expand(mask, ground);
        let sub = g.induced_subgraph(x).unwrap();
        let two_regular = sub.vertices().all(|v| sub.degree(v) == 2);
        if two_regular && is_connected(&sub) && sub.vertex_count() > 0 {
            out.push(x);
        }
    }
    out
}

/// Subset-scan oracle for maximal forests: acyclic, and adding any
/// non-member edge creates a cycle.
fn maximal_forest_oracle(g: &LabeledGraph) -> Vec<EdgeSet> {
    let ground = g.edge_set();
    let cycle_list = cycle_oracle(g);
    let acyclic = |x: EdgeSet| cycle_list.iter().all(|c| !c.is_subset_of(x));
    let mut out = Vec::new();
    for mask in 0u32..(1 << g.edge_count()) {
        let x = expand(mask, ground);
        if !acyclic(x) {
            continue;
        }
        let maximal = (ground - x).iter().all(|e| !acyclic(x.with(e)));
        if maximal {
            out.push(x);
        }
    }
    out.sort_unstable();
    out
}

fn expand(mask: u32, ground: EdgeSet) -> EdgeSet {
    let labels: Vec<usize> = ground.iter().collect();
    let mut out = EdgeSet::empty();
    for (i, &l) in labels.iter().enumerate() {
        if mask >> i & 1 == 1 {
            out.insert(l);
        }
    }
    out
}

/// Kirchhoff spanning-tree count via fraction-free Gaussian elimination of
/// the reduced Laplacian.
fn matrix_tree_count(g: &LabeledGraph) -> i64 {
    let vs: Vec<usize> = g.vertices().collect();
    let n = vs.len();
    let idx = |v: usize| vs.iter().position(|&x| x == v).unwrap();
    let mut lap = vec![vec![0i64; n]; n];
    for (_, (u, v)) in g.edges() {
        let (i, j) = (idx(u), idx(v));
        lap[i][i] += 1;
        lap[j][j] += 1;
        lap[i][j] -= 1;
        lap[j][i] -= 1;
    }
    // delete the last row and column, then Bareiss elimination
    let m = n - 1;
    let mut a: Vec<Vec<i64>> = (0..m).map(|i| lap[i][..m].to_vec()).collect();
    let mut prev = 1i64;
    for k in 0..m {
        if a[k][k] == 0 {
            if let Some(s) = (k + 1..m).find(|&s| a[s][k] != 0) {
                a.swap(k, s);
                for row in a.iter_mut() {
                    for x in row.iter_mut() {
                        *x = -*x;
                    }
                }
            } else {
                return 0;
            }
        }
        for i in k + 1..m {
            for j in k + 1..m {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    a[m - 1][m - 1]
}

/// Minimal-dependent-set oracle for circuits: dependent means contained in
/// no base; keep the inclusion-minimal ones.
fn circuit_oracle(m: &Matroid) -> Vec<EdgeSet> {
    let ground = m.ground_set();
    let mut dependent = Vec::new();
    for size in 1..=ground.len() {
        for x in k_subsets(ground, size) {
            if !m.bases().iter().any(|&b| x.is_subset_of(b)) {
                dependent.push(x);
            }
        }
    }
    let minimal: Vec<EdgeSet> = dependent
        .iter()
        .copied()
        .filter(|&c| !dependent.iter().any(|&d| d != c && d.is_subset_of(c)))
        .collect();
    let mut out = minimal;
    out.sort_unstable();
    out
}

/// Definition-expansion oracle for truncation: all sets `B - x`.
fn truncation_oracle(m: &Matroid) -> Vec<EdgeSet> {
    let mut out: BTreeSet<EdgeSet> = BTreeSet::new();
    for &b in m.bases() {
        for x in b.iter() {
            out.insert(b.without(x));
        }
    }
    out.into_iter().collect()
}

fn test_population() -> Vec<LabeledGraph> {
    let mut graphs = vec![
        cycle_graph(4),
        pan_graph(4),
        pan_graph(5),
        complete_graph(4),
        path_graph(5),
    ];
    for n in 2..=5 {
        graphs.extend(enumerate_graphs(n, &EnumerateOptions::default()).unwrap());
    }
    graphs
}

#[test]
fn cycles_match_subset_scan() {
    for g in test_population() {
        assert_eq!(cycles(&g), cycle_oracle(&g), "graph {g:?}");
    }
}

#[test]
fn forests_match_subset_scan_and_kirchhoff() {
    for g in test_population() {
        let forests = spanning_forests(&g);
        assert_eq!(forests, maximal_forest_oracle(&g), "graph {g:?}");
        if is_connected(&g) && g.vertex_count() >= 2 {
            assert_eq!(forests.len() as i64, matrix_tree_count(&g), "graph {g:?}");
        }
    }
    assert_eq!(matrix_tree_count(&complete_graph(4)), 16);
    assert_eq!(spanning_forests(&complete_graph(4)).len(), 16);
}

#[test]
fn circuits_match_minimal_dependent_scan() {
    for g in test_population() {
        if g.edge_count() == 0 {
            continue;
        }
        let m = cycle_matroid(&g).unwrap();
        assert_eq!(m.circuits(), circuit_oracle(&m).as_slice(), "graph {g:?}");
        // and the circuits of the cycle matroid are exactly the cycles
        assert_eq!(m.circuits(), cycles(&g).as_slice(), "graph {g:?}");
    }
    // a couple of non-graphic base families
    let u = Matroid::uniform(2, 5).unwrap();
    assert_eq!(u.circuits(), circuit_oracle(&u).as_slice());
    let free = Matroid::from_bases(0..4, [EdgeSet::from_labels(0..4)]).unwrap();
    assert!(circuit_oracle(&free).is_empty());
    assert!(free.circuits().is_empty());
}

#[test]
fn truncation_matches_definition_expansion() {
    for g in test_population() {
        if g.edge_count() == 0 {
            continue;
        }
        let m = cycle_matroid(&g).unwrap();
        if m.rank() == 0 {
            continue;
        }
        let t = m.truncate().unwrap();
        assert_eq!(t.bases(), truncation_oracle(&m).as_slice(), "graph {g:?}");
        assert_eq!(t.rank() + 1, m.rank());
        assert_eq!(t.ground(), m.ground());
    }
}

#[test]
fn connectivity_matches_exhaustive_cut_scan() {
    // oracle: no removal of fewer than k vertices disconnects, and n > k
    fn oracle(g: &LabeledGraph, k: usize) -> bool {
        let n = g.vertex_count();
        if n < k + 1 {
            return false;
        }
        let vs: Vec<usize> = g.vertices().collect();
        for mask in 0u32..(1 << n) {
            let removed: BTreeSet<usize> =
                vs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect();
            if removed.len() >= k {
                continue;
            }
            let remaining: Vec<usize> = vs.iter().copied().filter(|v| !removed.contains(v)).collect();
            if remaining.is_empty() {
                continue;
            }
            let keep = EdgeSet::from_labels(
                g.edges()
                    .filter(|(_, (u, v))| !removed.contains(u) && !removed.contains(v))
                    .map(|(e, _)| e),
            );
            let mut sub = g.induced_subgraph(keep).unwrap();
            for &v in &remaining {
                sub.add_vertex(v);
            }
            if components(&sub).len() > 1 {
                return false;
            }
        }
        true
    }
    for g in test_population() {
        for k in 1..=3 {
            assert_eq!(connectivity_at_least(&g, k), oracle(&g, k), "graph {g:?}, k={k}");
        }
    }
}

#[test]
fn enumeration_matches_published_counts() {
    let connected = EnumerateOptions::default();
    let counts: Vec<usize> = (1..=6)
        .map(|n| enumerate_graphs(n, &connected).unwrap().len())
        .collect();
    assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);

    let all = EnumerateOptions { connected_only: false, ..Default::default() };
    let counts: Vec<usize> = (1..=6).map(|n| enumerate_graphs(n, &all).unwrap().len()).collect();
    assert_eq!(counts, vec![1, 2, 4, 11, 34, 156]);
}

#[test]
fn enumeration_representatives_are_pairwise_non_isomorphic() {
    for n in 2..=5 {
        let graphs = enumerate_graphs(n, &EnumerateOptions::default()).unwrap();
        for (i, g) in graphs.iter().enumerate() {
            for f in &graphs[i + 1..] {
                assert!(tcm_core::isomorphic(g, f).is_none());
            }
        }
    }
}

#[test]
fn graph6_round_trips_on_all_small_graphs() {
    let all = EnumerateOptions { connected_only: false, ..Default::default() };
    for n in 1..=5 {
        for g in enumerate_graphs(n, &all).unwrap() {
            let s = write_graph6(&g).unwrap();
            let back = parse_graph6(&s).unwrap();
            assert_eq!(back, g, "graph6 {s}");
            assert_eq!(write_graph6(&back).unwrap(), s);
        }
    }
}
