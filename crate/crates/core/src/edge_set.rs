//! Fixed-width bit-indexed edge sets.
//!
//! Every ground set in this crate is a set of small integer edge labels, so
//! subsets are stored as 32-bit masks. Set algebra (union, intersection,
//! symmetric difference) is one machine instruction each, which is what makes
//! the exhaustive searches in the harness cheap.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor, Sub};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Largest number of distinct edge labels a ground set may use.
pub const MAX_EDGE_LABELS: usize = 32;

/// A set of edge labels over a ground set of at most [`MAX_EDGE_LABELS`]
/// labels; label `i` occupies bit `i`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct EdgeSet(u32);

impl EdgeSet {
    pub const EMPTY: EdgeSet = EdgeSet(0);

    pub fn empty() -> Self {
        EdgeSet(0)
    }

    pub fn singleton(label: usize) -> Self {
        assert!(label < MAX_EDGE_LABELS, "edge label {label} out of range");
        EdgeSet(1 << label)
    }

    pub fn from_labels<I: IntoIterator<Item = usize>>(labels: I) -> Self {
        let mut s = EdgeSet(0);
        for l in labels {
            s.insert(l);
        }
        s
    }

    /// Raw mask. Bit `i` set means label `i` is a member.
    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn from_bits(bits: u32) -> Self {
        EdgeSet(bits)
    }

    pub fn insert(&mut self, label: usize) {
        assert!(label < MAX_EDGE_LABELS, "edge label {label} out of range");
        self.0 |= 1 << label;
    }

    pub fn with(mut self, label: usize) -> Self {
        self.insert(label);
        self
    }

    pub fn remove(&mut self, label: usize) {
        if label < MAX_EDGE_LABELS {
            self.0 &= !(1 << label);
        }
    }

    pub fn without(mut self, label: usize) -> Self {
        self.remove(label);
        self
    }

    pub fn contains(self, label: usize) -> bool {
        label < MAX_EDGE_LABELS && self.0 >> label & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: EdgeSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: EdgeSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Smallest label in the set, if any.
    pub fn min_label(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Labels in ascending order.
    pub fn iter(self) -> Labels {
        Labels(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Lexicographic order on the ascending label sequence, e.g.
    /// `{1,4} < {2,3}`. This differs from the derived `Ord`, which compares
    /// raw masks; the lexicographic order is used for serialization and for
    /// reproducible tie-breaking.
    pub fn cmp_lex(self, other: EdgeSet) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl BitOr for EdgeSet {
    type Output = EdgeSet;
    fn bitor(self, rhs: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 | rhs.0)
    }
}

impl BitAnd for EdgeSet {
    type Output = EdgeSet;
    fn bitand(self, rhs: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 & rhs.0)
    }
}

/// Symmetric difference.
impl BitXor for EdgeSet {
    type Output = EdgeSet;
    fn bitxor(self, rhs: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 ^ rhs.0)
    }
}

/// Set difference.
impl Sub for EdgeSet {
    type Output = EdgeSet;
    fn sub(self, rhs: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 & !rhs.0)
    }
}

impl FromIterator<usize> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        EdgeSet::from_labels(iter)
    }
}

pub struct Labels(u32);

impl Iterator for Labels {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let l = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(l)
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, l) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for EdgeSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for EdgeSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let labels = Vec::<usize>::deserialize(deserializer)?;
        let mut s = EdgeSet::empty();
        for l in labels {
            if l >= MAX_EDGE_LABELS {
                return Err(D::Error::custom(format!("edge label {l} out of range")));
            }
            s.insert(l);
        }
        Ok(s)
    }
}

/// All `k`-element subsets of `ground`, in ascending mask order (Gosper's
/// hack over the compressed positions).
pub fn k_subsets(ground: EdgeSet, k: usize) -> KSubsets {
    let positions = ground.to_vec();
    let done = k > positions.len();
    KSubsets {
        positions,
        k,
        current: if k == 0 { 0 } else { (1u64 << k) - 1 },
        emitted_empty: false,
        done,
    }
}

pub struct KSubsets {
    positions: Vec<usize>,
    k: usize,
    current: u64,
    emitted_empty: bool,
    done: bool,
}

impl Iterator for KSubsets {
    type Item = EdgeSet;

    fn next(&mut self) -> Option<EdgeSet> {
        if self.done {
            return None;
        }
        if self.k == 0 {
            if self.emitted_empty {
                return None;
            }
            self.emitted_empty = true;
            return Some(EdgeSet::empty());
        }
        let n = self.positions.len();
        if self.current >= 1u64 << n {
            self.done = true;
            return None;
        }
        let mut out = EdgeSet::empty();
        let mut bits = self.current;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            out.insert(self.positions[i]);
            bits &= bits - 1;
        }
        // Gosper: next mask with the same popcount.
        let c = self.current;
        let lowest = c & c.wrapping_neg();
        let ripple = c + lowest;
        if ripple == 0 {
            self.done = true;
        } else {
            self.current = ripple | (((c ^ ripple) >> 2) / lowest);
        }
        Some(out)
    }
}
