//! Matroid isomorphism: ground-set bijections carrying bases onto bases.
//!
//! The search matches circuits rather than bases (circuits pin elements down
//! much harder), pruning with per-element signatures before backtracking
//! over element assignments; every completed map is verified against the
//! base families. `for_each_isomorphism` enumerates all isomorphisms in a
//! deterministic order, which the search harness uses to walk every
//! bijection equating two truncated matroids.

use std::collections::HashSet;

use super::Matroid;
use crate::edge_set::EdgeSet;

/// First isomorphism found, as `(element of a, element of b)` pairs sorted
/// by the first component, or `None`.
pub fn isomorphism(a: &Matroid, b: &Matroid) -> Option<Vec<(usize, usize)>> {
    let mut found = None;
    for_each_isomorphism(a, b, |bij| {
        found = Some(bij.to_vec());
        false
    });
    found
}

/// Enumerates every isomorphism from `a` to `b` in a fixed deterministic
/// order. The callback returns `false` to stop the enumeration.
pub fn for_each_isomorphism<F>(a: &Matroid, b: &Matroid, mut f: F)
where
    F: FnMut(&[(usize, usize)]) -> bool,
{
    let m = a.size();
    if m != b.size() || a.rank() != b.rank() || a.bases().len() != b.bases().len() {
        return;
    }

    // everything below works in position space: element i of the sorted ground
    let ca = compress_family(a.circuits(), a.ground());
    let cb = compress_family(b.circuits(), b.ground());
    if ca.len() != cb.len() {
        return;
    }
    let mut sizes_a: Vec<usize> = ca.iter().map(|c| c.count_ones() as usize).collect();
    let mut sizes_b: Vec<usize> = cb.iter().map(|c| c.count_ones() as usize).collect();
    sizes_a.sort_unstable();
    sizes_b.sort_unstable();
    if sizes_a != sizes_b {
        return;
    }

    // signature of a position: sorted (circuit size, count) profile
    let signature = |circuits: &[u32], pos: usize| -> Vec<(usize, usize)> {
        let mut counts: std::collections::BTreeMap<usize, usize> = Default::default();
        for c in circuits {
            if c >> pos & 1 == 1 {
                *counts.entry(c.count_ones() as usize).or_default() += 1;
            }
        }
        counts.into_iter().collect()
    };
    let sig_a: Vec<_> = (0..m).map(|p| signature(&ca, p)).collect();
    let sig_b: Vec<_> = (0..m).map(|p| signature(&cb, p)).collect();
    {
        let mut sa = sig_a.clone();
        let mut sb = sig_b.clone();
        sa.sort();
        sb.sort();
        if sa != sb {
            return;
        }
    }

    // candidate images per position, as masks
    let candidates: Vec<u32> = (0..m)
        .map(|p| {
            let mut mask = 0u32;
            for q in 0..m {
                if sig_a[p] == sig_b[q] {
                    mask |= 1 << q;
                }
            }
            mask
        })
        .collect();
    if candidates.iter().any(|&c| c == 0) {
        return;
    }

    // assign the most constrained positions first (fixed order)
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&p| (candidates[p].count_ones(), p));

    // circuit bookkeeping: which circuits touch each position
    let touching: Vec<Vec<usize>> = (0..m)
        .map(|p| {
            ca.iter()
                .enumerate()
                .filter(|(_, c)| *c >> p & 1 == 1)
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    let cb_set: HashSet<u32> = cb.iter().copied().collect();
    let ba = compress_family(a.bases(), a.ground());
    let bb_set: HashSet<u32> = compress_family(b.bases(), b.ground()).into_iter().collect();

    let mut state = Search {
        m,
        order: &order,
        candidates: &candidates,
        touching: &touching,
        ca: &ca,
        cb_set: &cb_set,
        ba: &ba,
        bb_set: &bb_set,
        ground_a: a.ground(),
        ground_b: b.ground(),
        perm: vec![usize::MAX; m],
        used: 0,
        remaining: ca.iter().map(|c| c.count_ones() as usize).collect(),
        images: vec![0; ca.len()],
        stopped: false,
        emit: &mut f,
    };
    state.dfs(0);
}

fn compress_family(sets: &[EdgeSet], ground: &[usize]) -> Vec<u32> {
    sets.iter()
        .map(|s| {
            let mut mask = 0u32;
            for (pos, &label) in ground.iter().enumerate() {
                if s.contains(label) {
                    mask |= 1 << pos;
                }
            }
            mask
        })
        .collect()
}

struct Search<'a, F: FnMut(&[(usize, usize)]) -> bool> {
    m: usize,
    order: &'a [usize],
    candidates: &'a [u32],
    touching: &'a [Vec<usize>],
    ca: &'a [u32],
    cb_set: &'a HashSet<u32>,
    ba: &'a [u32],
    bb_set: &'a HashSet<u32>,
    ground_a: &'a [usize],
    ground_b: &'a [usize],
    perm: Vec<usize>,
    used: u32,
    remaining: Vec<usize>,
    images: Vec<u32>,
    stopped: bool,
    emit: &'a mut F,
}

impl<F: FnMut(&[(usize, usize)]) -> bool> Search<'_, F> {
    fn dfs(&mut self, depth: usize) {
        if self.stopped {
            return;
        }
        if depth == self.m {
            self.leaf();
            return;
        }
        let p = self.order[depth];
        let mut options = self.candidates[p] & !self.used;
        while options != 0 {
            let q = options.trailing_zeros() as usize;
            options &= options - 1;
            if self.assign(p, q, depth) && self.stopped {
                return;
            }
        }
    }

    /// Tries `perm[p] = q`; recurses when all completed circuits map onto
    /// circuits. Returns after undoing the assignment.
    fn assign(&mut self, p: usize, q: usize, depth: usize) -> bool {
        self.perm[p] = q;
        self.used |= 1 << q;
        let mut ok = true;
        let mut applied = 0;
        for (idx, &ci) in self.touching[p].iter().enumerate() {
            self.remaining[ci] -= 1;
            self.images[ci] |= 1 << q;
            applied = idx + 1;
            if self.remaining[ci] == 0 && !self.cb_set.contains(&self.images[ci]) {
                ok = false;
                break;
            }
        }
        if ok {
            self.dfs(depth + 1);
        }
        for &ci in self.touching[p].iter().take(applied) {
            self.remaining[ci] += 1;
            self.images[ci] &= !(1 << q);
        }
        self.used &= !(1 << q);
        self.perm[p] = usize::MAX;
        true
    }

    fn leaf(&mut self) {
        // a complete circuit-preserving map must also carry bases to bases;
        // verify rather than trust it
        for &base in self.ba {
            let mut image = 0u32;
            let mut bits = base;
            while bits != 0 {
                let p = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                image |= 1 << self.perm[p];
            }
            if !self.bb_set.contains(&image) {
                return;
            }
        }
        let pairs: Vec<(usize, usize)> = (0..self.m)
            .map(|p| (self.ground_a[p], self.ground_b[self.perm[p]]))
            .collect();
        if !(self.emit)(&pairs) {
            self.stopped = true;
        }
    }
}
