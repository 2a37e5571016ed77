//! Graph isomorphism by backtracking over vertex maps with degree pruning.
//! No canonical-form dependency; inputs are desk scale.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{EdgeId, LabeledGraph, VertexId};

/// A witnessing isomorphism: a vertex bijection and an edge bijection with
/// `endpoints(e) = {x, y}` iff `endpoints(edge_map[e]) = {vertex_map[x], vertex_map[y]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphIsomorphism {
    pub vertex_map: BTreeMap<VertexId, VertexId>,
    pub edge_map: BTreeMap<EdgeId, EdgeId>,
}

impl GraphIsomorphism {
    /// Checks the witness against the two graphs it claims to relate.
    pub fn verify(&self, g: &LabeledGraph, f: &LabeledGraph) -> bool {
        if self.vertex_map.len() != g.vertex_count()
            || f.vertex_count() != g.vertex_count()
            || self.edge_map.len() != g.edge_count()
            || f.edge_count() != g.edge_count()
        {
            return false;
        }
        let mut image_vertices: Vec<VertexId> = self.vertex_map.values().copied().collect();
        image_vertices.sort_unstable();
        image_vertices.dedup();
        if image_vertices.len() != g.vertex_count()
            || !image_vertices.iter().all(|v| f.contains_vertex(*v))
        {
            return false;
        }
        let mut image_edges: Vec<EdgeId> = self.edge_map.values().copied().collect();
        image_edges.sort_unstable();
        image_edges.dedup();
        if image_edges.len() != g.edge_count() {
            return false;
        }
        g.edges().all(|(e, (u, v))| {
            match (self.edge_map.get(&e), self.vertex_map.get(&u), self.vertex_map.get(&v)) {
                (Some(&fe), Some(&fu), Some(&fv)) => {
                    f.endpoints(fe) == Some((fu.min(fv), fu.max(fv)))
                }
                _ => false,
            }
        })
    }
}

type PairMults = BTreeMap<(VertexId, VertexId), Vec<EdgeId>>;

fn pair_multiplicities(g: &LabeledGraph) -> PairMults {
    let mut out: PairMults = BTreeMap::new();
    for (e, (u, v)) in g.edges() {
        out.entry((u, v)).or_default().push(e);
    }
    out
}

/// Searches for an isomorphism from `g` to `f`.
pub fn isomorphic(g: &LabeledGraph, f: &LabeledGraph) -> Option<GraphIsomorphism> {
    if g.vertex_count() != f.vertex_count() || g.edge_count() != f.edge_count() {
        return None;
    }
    let mut deg_g: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut deg_f: Vec<usize> = f.vertices().map(|v| f.degree(v)).collect();
    deg_g.sort_unstable();
    deg_f.sort_unstable();
    if deg_g != deg_f {
        return None;
    }

    let mg = pair_multiplicities(g);
    let mf = pair_multiplicities(f);
    let mult = |m: &PairMults, a: VertexId, b: VertexId| -> usize {
        m.get(&(a.min(b), a.max(b))).map_or(0, Vec::len)
    };

    // order: rarest degree class first, then highest degree
    let mut order: Vec<VertexId> = g.vertices().collect();
    let class_size = |d: usize| deg_g.iter().filter(|&&x| x == d).count();
    order.sort_by_key(|&v| (class_size(g.degree(v)), usize::MAX - g.degree(v), v));

    let f_vertices: Vec<VertexId> = f.vertices().collect();
    let mut vmap: BTreeMap<VertexId, VertexId> = BTreeMap::new();
    let mut used: BTreeMap<VertexId, bool> = f_vertices.iter().map(|&v| (v, false)).collect();

    fn extend(
        g: &LabeledGraph,
        f: &LabeledGraph,
        order: &[VertexId],
        depth: usize,
        f_vertices: &[VertexId],
        vmap: &mut BTreeMap<VertexId, VertexId>,
        used: &mut BTreeMap<VertexId, bool>,
        mg: &PairMults,
        mf: &PairMults,
        mult: &impl Fn(&PairMults, VertexId, VertexId) -> usize,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let v = order[depth];
        for &w in f_vertices {
            if used[&w] || f.degree(w) != g.degree(v) || mult(mf, w, w) != mult(mg, v, v) {
                continue;
            }
            // every previously mapped vertex must see the same multiplicity
            if !vmap.iter().all(|(&u, &x)| mult(mg, v, u) == mult(mf, w, x)) {
                continue;
            }
            vmap.insert(v, w);
            used.insert(w, true);
            if extend(g, f, order, depth + 1, f_vertices, vmap, used, mg, mf, mult) {
                return true;
            }
            vmap.remove(&v);
            used.insert(w, false);
        }
        false
    }

    if !extend(g, f, &order, 0, &f_vertices, &mut vmap, &mut used, &mg, &mf, &mult) {
        return None;
    }

    // induce the edge bijection; parallel edges are matched in label order
    let mut edge_map = BTreeMap::new();
    for ((u, v), g_edges) in &mg {
        let (fu, fv) = (vmap[u], vmap[v]);
        let f_edges = &mf[&(fu.min(fv), fu.max(fv))];
        for (ge, fe) in g_edges.iter().zip(f_edges) {
            edge_map.insert(*ge, *fe);
        }
    }
    let iso = GraphIsomorphism { vertex_map: vmap, edge_map };
    debug_assert!(iso.verify(g, f));
    Some(iso)
}
