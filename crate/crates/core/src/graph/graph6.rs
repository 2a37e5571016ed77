//! graph6 text encoding for simple graphs on up to 62 vertices: one header
//! byte `n + 63`, then the upper triangle in column-wise order packed into
//! 6-bit groups, each emitted as `value + 63`. Zero padding is required, so
//! parse and write are mutually inverse on accepted inputs.

use super::LabeledGraph;
use crate::error::GraphError;

fn err(offset: usize, reason: impl Into<String>) -> GraphError {
    GraphError::Graph6 { offset, reason: reason.into() }
}

/// Parses a single graph6 token. Edge labels are assigned in lexicographic
/// endpoint order, starting from 0.
pub fn parse_graph6(text: &str) -> Result<LabeledGraph, GraphError> {
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(err(0, "empty input"));
    }
    if bytes[0] == b'~' {
        return Err(err(0, "vertex counts above 62 are not supported"));
    }
    if !(63..=125).contains(&bytes[0]) {
        return Err(err(0, format!("invalid size byte {}", bytes[0])));
    }
    let n = (bytes[0] - 63) as usize;
    let bit_count = n * (n - 1) / 2;
    let data_bytes = bit_count.div_ceil(6);
    if bytes.len() != 1 + data_bytes {
        return Err(err(
            bytes.len().min(1 + data_bytes),
            format!("expected {} bytes for {} vertices, got {}", 1 + data_bytes, n, bytes.len()),
        ));
    }
    let mut bits = Vec::with_capacity(data_bytes * 6);
    for (i, &b) in bytes[1..].iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(1 + i, format!("invalid data byte {b}")));
        }
        let v = b - 63;
        for k in (0..6).rev() {
            bits.push(v >> k & 1 == 1);
        }
    }
    if bits[bit_count..].iter().any(|&b| b) {
        return Err(err(bytes.len() - 1, "nonzero padding bits"));
    }

    let mut g = LabeledGraph::new();
    for v in 0..n {
        g.add_vertex(v);
    }
    let mut pairs = Vec::new();
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[idx] {
                pairs.push((i, j));
            }
            idx += 1;
        }
    }
    pairs.sort_unstable();
    for (label, (u, v)) in pairs.into_iter().enumerate() {
        g.add_edge(label, u, v).expect("labels are fresh");
    }
    Ok(g)
}

/// Writes a simple graph with at most 62 vertices. Vertex ids are compressed
/// to `0..n` in sorted order; edge labels are not represented by the format.
pub fn write_graph6(g: &LabeledGraph) -> Result<String, GraphError> {
    if !g.is_simple() {
        return Err(GraphError::NotSimple);
    }
    let n = g.vertex_count();
    if n > 62 {
        return Err(err(0, "vertex counts above 62 are not supported"));
    }
    let index: std::collections::BTreeMap<usize, usize> =
        g.vertices().enumerate().map(|(i, v)| (v, i)).collect();
    let mut bits = vec![false; n.saturating_mul(n.saturating_sub(1)) / 2];
    for (_, (u, v)) in g.edges() {
        let (i, j) = (index[&u].min(index[&v]), index[&u].max(index[&v]));
        bits[j * (j - 1) / 2 + i] = true;
    }
    let mut out = String::new();
    out.push((n as u8 + 63) as char);
    for chunk in bits.chunks(6) {
        let mut v = 0u8;
        for k in 0..6 {
            v = (v << 1) | (*chunk.get(k).unwrap_or(&false) as u8);
        }
        out.push((v + 63) as char);
    }
    Ok(out)
}
