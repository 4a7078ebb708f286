//! Exhaustive sweeps over symmetric identity-free subsets: census tables
//! and divisibility-versus-oracle verification.
//!
//! The subset universe is indexed by a bitmask over inverse-closed classes:
//! rotation classes `{a^k, a^(n-k)}` for `k = 1..floor(n/2)` on the low
//! bits, then (for dihedral groups) one bit per reflection. Masks are
//! enumerated ascending, so sweep output is deterministic. The universe
//! deliberately includes the empty set and non-generating sets; each row
//! records whether its set generates.

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dihedral::{
    char_poly_factorization, walk_polynomials, walk_polynomials_via_matrix, BlockDecomposition,
};
use crate::group::{CayleyGraph, ConnectingSet, GroupKind};
use crate::polynomial::IntPolynomial;
use crate::report::{bigint_string, divisibility_verdict, Verdict};
use crate::settext::format_set;

/// Number of symmetric identity-free subsets: `2^floor(n/2)` rotation class
/// choices, times `2^n` reflection choices for dihedral groups.
pub fn subset_count(kind: GroupKind, n: u64) -> u64 {
    let bits = subset_bits(kind, n);
    assert!(bits < 63, "subset space for n = {n} exceeds the mask width");
    1 << bits
}

fn subset_bits(kind: GroupKind, n: u64) -> u64 {
    match kind {
        GroupKind::Cyclic => n / 2,
        GroupKind::Dihedral => n / 2 + n,
    }
}

/// The subset at a given class bitmask.
pub fn subset_at(kind: GroupKind, n: u64, mask: u64) -> ConnectingSet {
    let half = n / 2;
    let mut rotations = Vec::new();
    for bit in 0..half {
        if mask >> bit & 1 == 1 {
            let k = bit + 1;
            rotations.push(k);
            if k != n - k {
                rotations.push(n - k);
            }
        }
    }
    let mut reflections = Vec::new();
    if kind == GroupKind::Dihedral {
        for bit in 0..n {
            if mask >> (half + bit) & 1 == 1 {
                reflections.push(bit);
            }
        }
    }
    ConnectingSet::from_exponents(n, kind, rotations, reflections, false)
        .expect("class subsets are symmetric and identity-free")
}

/// All subsets for one `n`, in mask order.
pub fn enumerate_subsets(kind: GroupKind, n: u64) -> Vec<ConnectingSet> {
    (0..subset_count(kind, n))
        .map(|mask| subset_at(kind, n, mask))
        .collect()
}

/// One census line per enumerated subset.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CensusRow {
    pub n: u64,
    pub group_kind: GroupKind,
    pub set: String,
    pub is_generating: bool,
    pub edge_count: u64,
    pub verdict: Verdict,
    pub dividing_d: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CensusSummary {
    pub group_kind: GroupKind,
    pub n: u64,
    pub total: u64,
    pub singular: u64,
    #[serde(skip)]
    pub rows: Vec<CensusRow>,
}

/// Default largest `n` the census accepts without an explicit override.
pub fn default_census_bound(kind: GroupKind) -> u64 {
    match kind {
        GroupKind::Cyclic => 24,
        GroupKind::Dihedral => 10,
    }
}

/// Enumerates every subset for the given `n` and classifies each one by the
/// divisibility criterion. Rows come back in mask order regardless of how
/// the work was scheduled.
pub fn census(kind: GroupKind, n: u64) -> CensusSummary {
    let rows: Vec<CensusRow> = (0..subset_count(kind, n))
        .into_par_iter()
        .map(|mask| {
            let set = subset_at(kind, n, mask);
            let (_tested, verdict) = divisibility_verdict(&set);
            CensusRow {
                n,
                group_kind: kind,
                set: format_set(&set),
                is_generating: set.is_generating(),
                edge_count: set.group_order() * set.degree() / 2,
                verdict: Verdict::from_singular(verdict.singular),
                dividing_d: verdict.dividing_d,
            }
        })
        .collect();
    let singular = rows.iter().filter(|r| r.verdict.is_singular()).count() as u64;
    CensusSummary {
        group_kind: kind,
        n,
        total: rows.len() as u64,
        singular,
        rows,
    }
}

/// A subset on which a verification check failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Counterexample {
    pub n: u64,
    pub group_kind: GroupKind,
    pub set: String,
    pub failed_check: String,
    pub divisibility_verdict: Verdict,
    pub oracle_verdict: Verdict,
    #[serde(with = "bigint_string")]
    pub determinant: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VerifySummary {
    pub group_kind: GroupKind,
    pub max_n: u64,
    pub subsets_checked: u64,
    pub failures: Vec<Counterexample>,
}

impl VerifySummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Sweeps every subset for `3 <= n <= max_n`, comparing the divisibility
/// verdict against the determinant oracle and, for dihedral subsets,
/// checking the block-structure, factorization, determinant-identity, and
/// walk-polynomial invariants. Failures carry the first offending subset
/// data in enumeration order.
pub fn verify(kind: GroupKind, max_n: u64) -> VerifySummary {
    verify_with(kind, max_n, |set| divisibility_verdict(set).1.singular)
}

/// Verification with an injectable verdict function, used to prove the
/// harness actually catches disagreements.
pub(crate) fn verify_with<F>(kind: GroupKind, max_n: u64, verdict_fn: F) -> VerifySummary
where
    F: Fn(&ConnectingSet) -> bool + Sync,
{
    let mut subsets_checked = 0;
    let mut failures = Vec::new();
    for n in 3..=max_n.max(2) {
        let count = subset_count(kind, n);
        subsets_checked += count;
        let mut batch: Vec<Counterexample> = (0..count)
            .into_par_iter()
            .flat_map_iter(|mask| {
                let set = subset_at(kind, n, mask);
                check_subset(&set, &verdict_fn)
            })
            .collect();
        failures.append(&mut batch);
    }
    VerifySummary {
        group_kind: kind,
        max_n,
        subsets_checked,
        failures,
    }
}

fn check_subset<F>(set: &ConnectingSet, verdict_fn: &F) -> Vec<Counterexample>
where
    F: Fn(&ConnectingSet) -> bool + Sync,
{
    let graph = CayleyGraph::build(set.clone());
    let adjacency = graph.adjacency();
    let determinant = adjacency.determinant().expect("adjacency is square");
    let oracle_singular = determinant.is_zero();
    let claimed_singular = verdict_fn(set);

    let mut failed = Vec::new();
    if claimed_singular != oracle_singular {
        failed.push("verdict".to_string());
    }
    match set.kind() {
        GroupKind::Cyclic => {
            let (_tested, verdict) = divisibility_verdict(set);
            if verdict.nullity as usize != adjacency.nullity() {
                failed.push("nullity".to_string());
            }
        }
        GroupKind::Dihedral => match BlockDecomposition::from_graph(&graph) {
            Err(_) => failed.push("block-structure".to_string()),
            Ok(blocks) => {
                let (sum, diff) = char_poly_factorization(&blocks);
                let product = &sum * &diff;
                if product != adjacency.char_poly().expect("adjacency is square") {
                    failed.push("char-factorization".to_string());
                }
                let block_det = blocks
                    .square_difference()
                    .determinant()
                    .expect("block difference is square");
                if block_det != determinant {
                    failed.push("determinant-identity".to_string());
                }
                if !walk_routes_agree(set, &blocks, adjacency) {
                    failed.push("walk-polynomials".to_string());
                }
            }
        },
    }

    failed
        .into_iter()
        .map(|failed_check| Counterexample {
            n: set.n(),
            group_kind: set.kind(),
            set: format_set(set),
            failed_check,
            divisibility_verdict: Verdict::from_singular(claimed_singular),
            oracle_verdict: Verdict::from_singular(oracle_singular),
            determinant: determinant.clone(),
        })
        .collect()
}

/// Pair enumeration, block squares, and restricted walk counting must give
/// the same two coefficient vectors.
fn walk_routes_agree(
    set: &ConnectingSet,
    blocks: &BlockDecomposition,
    adjacency: &crate::oracle::ExactMatrix,
) -> bool {
    let by_pairs = walk_polynomials(set).expect("set is dihedral");
    let by_matrix = walk_polynomials_via_matrix(blocks);
    if by_pairs != by_matrix {
        return false;
    }
    let n = set.n() as usize;
    let rotations: Vec<usize> = (0..n).collect();
    let reflections: Vec<usize> = (n..2 * n).collect();
    let count = |allowed: &[usize]| {
        IntPolynomial::from_coeffs(
            (0..n)
                .map(|k| adjacency.walk_count(0, k, 2, allowed))
                .collect(),
        )
    };
    by_pairs.via_rotations == count(&rotations) && by_pairs.via_reflections == count(&reflections)
}
