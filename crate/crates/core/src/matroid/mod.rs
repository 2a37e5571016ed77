//! Matroids given by an explicit family of bases.
//!
//! Everything downstream (truncation, the circuit formula, pair search) is
//! phrased over bases and circuits of desk-scale matroids, so the explicit
//! representation is the right one: a sorted ground set plus a sorted vector
//! of equicardinal edge sets. Circuits are derived on demand and cached.

mod isomorphism;

pub use isomorphism::{for_each_isomorphism, isomorphism};

use std::collections::{BTreeSet, HashSet};
use std::sync::OnceLock;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::edge_set::{k_subsets, EdgeSet, MAX_EDGE_LABELS};
use crate::error::MatroidError;

/// A matroid on a ground set of edge labels, stored by its base family.
///
/// Construction enforces the representation invariants that are cheap to
/// check (nonempty equicardinal family over the ground set); the exchange
/// axiom is checked exhaustively by [`Matroid::verify_axioms`], so families
/// violating it can be built and then rejected by that test.
#[derive(Debug, Clone)]
pub struct Matroid {
    ground: Vec<usize>,
    bases: Vec<EdgeSet>,
    rank: usize,
    circuits: OnceLock<Vec<EdgeSet>>,
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.ground == other.ground && self.bases == other.bases
    }
}

impl Eq for Matroid {}

impl Matroid {
    pub fn from_bases<G, B>(ground: G, bases: B) -> Result<Matroid, MatroidError>
    where
        G: IntoIterator<Item = usize>,
        B: IntoIterator<Item = EdgeSet>,
    {
        let ground_set: BTreeSet<usize> = ground.into_iter().collect();
        if ground_set.is_empty() {
            return Err(MatroidError::EmptyGround);
        }
        if let Some(&max) = ground_set.iter().next_back() {
            if max >= MAX_EDGE_LABELS {
                return Err(MatroidError::GroundTooLarge(max + 1, MAX_EDGE_LABELS));
            }
        }
        let ground_mask = EdgeSet::from_labels(ground_set.iter().copied());
        let mut base_vec: Vec<EdgeSet> = bases.into_iter().collect();
        base_vec.sort_unstable();
        base_vec.dedup();
        if base_vec.is_empty() {
            return Err(MatroidError::NoBases);
        }
        let rank = base_vec[0].len();
        for &b in &base_vec {
            if !b.is_subset_of(ground_mask) {
                return Err(MatroidError::BaseOutsideGround(b));
            }
            if b.len() != rank {
                return Err(MatroidError::UnequalBaseSizes(rank, b.len()));
            }
        }
        Ok(Matroid {
            ground: ground_set.into_iter().collect(),
            bases: base_vec,
            rank,
            circuits: OnceLock::new(),
        })
    }

    /// The uniform matroid on ground set `0..m` whose bases are all
    /// `k`-subsets.
    pub fn uniform(k: usize, m: usize) -> Result<Matroid, MatroidError> {
        if m == 0 {
            return Err(MatroidError::EmptyGround);
        }
        if k > m {
            return Err(MatroidError::RankExceedsSize(k, m));
        }
        if m > MAX_EDGE_LABELS {
            return Err(MatroidError::GroundTooLarge(m, MAX_EDGE_LABELS));
        }
        let ground = EdgeSet::from_labels(0..m);
        Matroid::from_bases(0..m, k_subsets(ground, k))
    }

    pub fn ground(&self) -> &[usize] {
        &self.ground
    }

    pub fn ground_set(&self) -> EdgeSet {
        EdgeSet::from_labels(self.ground.iter().copied())
    }

    pub fn size(&self) -> usize {
        self.ground.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn bases(&self) -> &[EdgeSet] {
        &self.bases
    }

    pub fn is_base(&self, x: EdgeSet) -> bool {
        self.bases.binary_search(&x).is_ok()
    }

    /// A set is independent iff some base contains it.
    pub fn is_independent(&self, x: EdgeSet) -> bool {
        self.bases.iter().any(|&b| x.is_subset_of(b))
    }

    /// All circuits: the minimal dependent sets. Derived once and cached.
    ///
    /// Every circuit is the unique circuit inside `B + e` for some base `B`
    /// and non-member `e`, and an element `x` of `B + e` lies on that circuit
    /// iff `B + e - x` is again a base; the family is the union of these over
    /// all `(B, e)`.
    pub fn circuits(&self) -> &[EdgeSet] {
        self.circuits.get_or_init(|| {
            let ground_mask = self.ground_set();
            let mut out: BTreeSet<EdgeSet> = BTreeSet::new();
            for &base in &self.bases {
                for e in (ground_mask - base).iter() {
                    let extended = base.with(e);
                    let mut circuit = EdgeSet::empty();
                    for x in extended.iter() {
                        if self.is_base(extended.without(x)) {
                            circuit.insert(x);
                        }
                    }
                    out.insert(circuit);
                }
            }
            out.into_iter().collect()
        })
    }

    /// Circuits whose size is `rank + 1`.
    pub fn hamiltonian_circuits(&self) -> Vec<EdgeSet> {
        self.circuits().iter().copied().filter(|c| c.len() == self.rank + 1).collect()
    }

    /// The truncation: bases are all sets `B - x` for a base `B` and
    /// `x` in `B`. Rank drops by exactly one.
    pub fn truncate(&self) -> Result<Matroid, MatroidError> {
        if self.rank == 0 {
            return Err(MatroidError::RankZero);
        }
        let mut bases: BTreeSet<EdgeSet> = BTreeSet::new();
        for &b in &self.bases {
            for x in b.iter() {
                bases.insert(b.without(x));
            }
        }
        Matroid::from_bases(self.ground.iter().copied(), bases)
    }

    /// The circuits of the truncation, computed without constructing it:
    /// the circuits of `self`, together with the bases of `self`, minus the
    /// Hamiltonian circuits. Must agree with `self.truncate().circuits()`;
    /// the two routes are cross-checked exhaustively in the test suites.
    pub fn truncation_circuits(&self) -> Result<Vec<EdgeSet>, MatroidError> {
        if self.rank == 0 {
            return Err(MatroidError::RankZero);
        }
        let hamiltonian: HashSet<EdgeSet> = self.hamiltonian_circuits().into_iter().collect();
        let mut out: BTreeSet<EdgeSet> = self
            .circuits()
            .iter()
            .copied()
            .filter(|c| !hamiltonian.contains(c))
            .collect();
        out.extend(self.bases.iter().copied());
        Ok(out.into_iter().collect())
    }

    /// `Some((rank, size))` iff the base family is exactly all
    /// rank-subsets of the ground set.
    pub fn is_uniform(&self) -> Option<(usize, usize)> {
        let m = self.ground.len();
        if self.bases.len() == binomial(m, self.rank) {
            Some((self.rank, m))
        } else {
            None
        }
    }

    /// Exhaustively checks the base axioms: equicardinality plus the
    /// exchange property (for bases `B1`, `B2` and `x` in `B1 - B2` there is
    /// `y` in `B2 - B1` with `B1 - x + y` a base).
    pub fn verify_axioms(&self) -> bool {
        if self.bases.is_empty() || self.bases.iter().any(|b| b.len() != self.rank) {
            return false;
        }
        let lookup: HashSet<EdgeSet> = self.bases.iter().copied().collect();
        for &b1 in &self.bases {
            for &b2 in &self.bases {
                for x in (b1 - b2).iter() {
                    let without = b1.without(x);
                    let found = (b2 - b1)
                        .iter()
                        .any(|y| lookup.contains(&without.with(y)));
                    if !found {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Canonical JSON: `{"ground": [...], "bases": [[...], ...]}` with
    /// labels ascending and bases in lexicographic order.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serialization cannot fail")
    }
}

impl Serialize for Matroid {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut bases: Vec<EdgeSet> = self.bases.clone();
        bases.sort_by(|a, b| a.cmp_lex(*b));
        let mut s = serializer.serialize_struct("Matroid", 2)?;
        s.serialize_field("ground", &self.ground)?;
        s.serialize_field("bases", &bases)?;
        s.end()
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut out: u128 = 1;
    for i in 0..k {
        out = out * (n - i) as u128 / (i + 1) as u128;
    }
    out as usize
}

/// No member contains another.
pub fn is_antichain(sets: &[EdgeSet]) -> bool {
    for (i, &a) in sets.iter().enumerate() {
        for &b in &sets[i + 1..] {
            if a.is_subset_of(b) || b.is_subset_of(a) {
                return false;
            }
        }
    }
    true
}

/// Circuit elimination, checked exhaustively: for distinct circuits `C1`,
/// `C2` and `e` in both, some circuit lies inside `C1 ∪ C2 - e`.
pub fn circuit_elimination_holds(circuits: &[EdgeSet]) -> bool {
    for &c1 in circuits {
        for &c2 in circuits {
            if c1 == c2 {
                continue;
            }
            for e in (c1 & c2).iter() {
                let union = (c1 | c2).without(e);
                if !circuits.iter().any(|c| c.is_subset_of(union)) {
                    return false;
                }
            }
        }
    }
    true
}
