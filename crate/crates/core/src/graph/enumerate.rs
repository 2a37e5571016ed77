//! Exhaustive enumeration of small simple graphs, one representative per
//! isomorphism class. Graphs are grown one vertex at a time; each candidate
//! is reduced to a canonical adjacency bitmask (minimum over vertex
//! permutations, found by prefix-pruned backtracking) and deduplicated.

use std::collections::HashSet;

use super::LabeledGraph;
use crate::error::GraphError;

/// Hard ceiling on the vertex count for enumeration.
pub const MAX_ENUM_VERTICES: usize = 7;

#[derive(Debug, Clone)]
pub struct EnumerateOptions {
    /// Keep only connected graphs.
    pub connected_only: bool,
    /// Configurable bound; requests above it are rejected.
    pub vertex_limit: usize,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions { connected_only: true, vertex_limit: MAX_ENUM_VERTICES }
    }
}

/// Bit index of the unordered pair `(i, j)` with `i < j`, in the column-wise
/// order `(0,1), (0,2), (1,2), (0,3), ...` (the graph6 order).
fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

fn adj_bit(adj: u64, i: usize, j: usize) -> bool {
    if i == j {
        return false;
    }
    let (i, j) = (i.min(j), i.max(j));
    adj >> pair_index(i, j) & 1 == 1
}

/// Minimum adjacency bitmask over all vertex permutations. The search fills
/// target slots one at a time, comparing the new slot's adjacency row to the
/// best known assignment and pruning any prefix that is already larger.
pub(crate) fn canonical_form(adj: u64, n: usize) -> u64 {
    if n <= 1 {
        return 0;
    }
    // rows[k] = adjacency bits of slot k against slots 0..k, bit (k-1-i) for
    // slot i, so that numeric comparison of a row equals lexicographic
    // comparison over earlier slots first.
    let mut best: Option<Vec<u32>> = None;

    fn dfs(
        adj: u64,
        n: usize,
        chosen: &mut Vec<usize>,
        used: &mut [bool],
        rows: &mut Vec<u32>,
        strict: bool,
        best: &mut Option<Vec<u32>>,
    ) {
        let k = chosen.len();
        if k == n {
            if strict || best.is_none() {
                *best = Some(rows.clone());
            }
            return;
        }
        for u in 0..n {
            if used[u] {
                continue;
            }
            let mut row: u32 = 0;
            for (i, &c) in chosen.iter().enumerate() {
                if adj_bit(adj, u, c) {
                    row |= 1 << (k - 1 - i);
                }
            }
            let (prune, strict_next) = match best {
                Some(b) if !strict => {
                    if row > b[k] {
                        (true, false)
                    } else {
                        (false, row < b[k])
                    }
                }
                _ => (false, strict),
            };
            if prune {
                continue;
            }
            chosen.push(u);
            used[u] = true;
            rows.push(row);
            dfs(adj, n, chosen, used, rows, strict_next, best);
            rows.pop();
            used[u] = false;
            chosen.pop();
        }
    }

    dfs(adj, n, &mut Vec::new(), &mut vec![false; n], &mut Vec::new(), false, &mut best);

    // repack rows into the pair-index bitmask
    let rows = best.expect("complete search");
    let mut out = 0u64;
    for (j, row) in rows.iter().enumerate() {
        for i in 0..j {
            if row >> (j - 1 - i) & 1 == 1 {
                out |= 1 << pair_index(i, j);
            }
        }
    }
    out
}

fn to_labeled(adj: u64, n: usize) -> LabeledGraph {
    let mut g = LabeledGraph::new();
    for v in 0..n {
        g.add_vertex(v);
    }
    let mut label = 0;
    // label edges in lexicographic endpoint order
    for i in 0..n {
        for j in i + 1..n {
            if adj_bit(adj, i, j) {
                g.add_edge(label, i, j).unwrap();
                label += 1;
            }
        }
    }
    g
}

/// One representative per isomorphism class of simple graphs on exactly `n`
/// vertices, in a fixed deterministic order.
pub fn enumerate_graphs(n: usize, opts: &EnumerateOptions) -> Result<Vec<LabeledGraph>, GraphError> {
    if n == 0 || n > opts.vertex_limit || n > MAX_ENUM_VERTICES {
        return Err(GraphError::EnumerationLimit(n, opts.vertex_limit.min(MAX_ENUM_VERTICES)));
    }
    // level k holds the canonical forms of all graphs on k vertices
    let mut level: Vec<u64> = vec![0];
    for k in 1..n {
        let mut next: HashSet<u64> = HashSet::new();
        for &adj in &level {
            // attach vertex k with every possible neighborhood
            for mask in 0u64..(1 << k) {
                let mut extended = adj;
                for i in 0..k {
                    if mask >> i & 1 == 1 {
                        extended |= 1 << pair_index(i, k);
                    }
                }
                next.insert(canonical_form(extended, k + 1));
            }
        }
        let mut sorted: Vec<u64> = next.into_iter().collect();
        sorted.sort_unstable();
        level = sorted;
    }
    let mut out: Vec<LabeledGraph> = level.into_iter().map(|adj| to_labeled(adj, n)).collect();
    if opts.connected_only {
        out.retain(super::is_connected);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_is_invariant() {
        // path 0-1-2 vs path 1-0-2 (relabeled)
        let p1 = (1 << pair_index(0, 1)) | (1 << pair_index(1, 2));
        let p2 = (1 << pair_index(0, 1)) | (1 << pair_index(0, 2));
        assert_eq!(canonical_form(p1, 3), canonical_form(p2, 3));
        let triangle = p1 | (1 << pair_index(0, 2));
        assert_ne!(canonical_form(p1, 3), canonical_form(triangle, 3));
    }

    #[test]
    fn connected_counts_match_published_values() {
        let opts = EnumerateOptions::default();
        let counts: Vec<usize> = (1..=5)
            .map(|n| enumerate_graphs(n, &opts).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21]);
    }

    #[test]
    fn all_graph_counts() {
        let opts = EnumerateOptions { connected_only: false, ..Default::default() };
        let counts: Vec<usize> = (1..=5)
            .map(|n| enumerate_graphs(n, &opts).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34]);
    }

    #[test]
    fn limit_is_enforced() {
        let opts = EnumerateOptions { vertex_limit: 5, ..Default::default() };
        assert!(enumerate_graphs(6, &opts).is_err());
        assert!(enumerate_graphs(8, &EnumerateOptions::default()).is_err());
        assert!(enumerate_graphs(0, &EnumerateOptions::default()).is_err());
    }
}
