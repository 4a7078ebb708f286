//! Shared inputs for the benchmark targets.

use dsing_core::group::{CayleyGraph, ConnectingSet, GroupKind};
use dsing_core::oracle::ExactMatrix;

/// The 2n-vertex prism-like set {a, a^(n-1), b, ab}: balanced, so always
/// singular, and cheap to vary in n.
pub fn balanced_dihedral_set(n: u64) -> ConnectingSet {
    ConnectingSet::from_exponents(n, GroupKind::Dihedral, [1, n - 1], [0, 1], false)
        .expect("set is symmetric and identity-free")
}

/// The n-cycle set {a, a^(n-1)}.
pub fn cycle_set(n: u64) -> ConnectingSet {
    ConnectingSet::from_exponents(n, GroupKind::Cyclic, [1, n - 1], [], false)
        .expect("set is symmetric and identity-free")
}

/// Adjacency matrix of the n-cycle.
pub fn cycle_adjacency(n: u64) -> ExactMatrix {
    CayleyGraph::build(cycle_set(n)).adjacency().clone()
}
