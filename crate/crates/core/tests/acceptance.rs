//! Acceptance suite: every shipped guarantee, run end to end at full
//! strength. Each test prints one PASS line (visible with `--nocapture`).
//!
//! The determinant/rank/char-poly oracle is the ground truth throughout;
//! divisibility verdicts are never compared against themselves.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use dsing_core::census::{census, enumerate_subsets, subset_count};
use dsing_core::circulant::{circulant_singularity, is_anticirculant, is_circulant, CirculantMatrix};
use dsing_core::dihedral::{
    balanced_neighbor_test, char_poly_factorization, dihedral_singularity, prime_order_test,
    walk_polynomials, walk_polynomials_via_matrix, BlockDecomposition,
};
use dsing_core::group::{CayleyGraph, ConnectingSet, GroupKind};
use dsing_core::polynomial::{cyclotomic, divisors, IntPolynomial};
use dsing_core::report::divisibility_verdict;

fn cyclic_set(n: u64, rotations: &[u64]) -> ConnectingSet {
    ConnectingSet::from_exponents(n, GroupKind::Cyclic, rotations.iter().copied(), [], false)
        .unwrap()
}

fn dihedral_set(n: u64, rotations: &[u64], reflections: &[u64]) -> ConnectingSet {
    ConnectingSet::from_exponents(
        n,
        GroupKind::Dihedral,
        rotations.iter().copied(),
        reflections.iter().copied(),
        false,
    )
    .unwrap()
}

fn oracle_determinant(set: &ConnectingSet) -> BigInt {
    CayleyGraph::build(set.clone())
        .adjacency()
        .determinant()
        .unwrap()
}

#[test]
fn a01_cyclic_verdicts_match_oracle() {
    let mut checked = 0u64;
    for n in 3..=10u64 {
        let subsets = enumerate_subsets(GroupKind::Cyclic, n);
        assert_eq!(subsets.len() as u64, 1 << (n / 2));
        for set in subsets {
            let (_psi, verdict) = divisibility_verdict(&set);
            let det = oracle_determinant(&set);
            assert_eq!(
                verdict.singular,
                det.is_zero(),
                "disagreement at n={n}, set {set:?}"
            );
            checked += 1;
        }
    }
    println!("PASS cyclic verdict vs determinant oracle: {checked} subsets (n=3..10), 0 disagreements");
}

#[test]
fn a02_dihedral_verdicts_match_oracle() {
    let mut checked = 0u64;
    for n in 3..=6u64 {
        for set in enumerate_subsets(GroupKind::Dihedral, n) {
            let verdict = dihedral_singularity(&set).unwrap();
            let det = oracle_determinant(&set);
            assert_eq!(
                verdict.singular(),
                det.is_zero(),
                "disagreement at n={n}, set {set:?}"
            );
            checked += 1;
        }
    }
    assert_eq!(subset_count(GroupKind::Dihedral, 6), 512);
    println!("PASS dihedral verdict vs determinant oracle: {checked} subsets (n=3..6), 0 disagreements");
}

#[test]
fn a03_census_counts_confirmed_by_oracle() {
    // Counts under the census convention (every symmetric identity-free
    // subset, the empty set included). For n = 9 the full universe holds 5
    // singular subsets; the often-quoted figure 4 counts only those with at
    // least one edge, and no single convention yields 2, 4, 4 across the
    // three orders. Both numbers are pinned here, each oracle-confirmed.
    let expected = [(4u64, 2u64, 1u64), (6, 4, 3), (9, 5, 4)];
    for (n, want_total, want_nonempty) in expected {
        let summary = census(GroupKind::Cyclic, n);
        let oracle_singular: Vec<ConnectingSet> = enumerate_subsets(GroupKind::Cyclic, n)
            .into_iter()
            .filter(|set| oracle_determinant(set).is_zero())
            .collect();
        assert_eq!(summary.singular, want_total, "census count for n={n}");
        assert_eq!(oracle_singular.len() as u64, want_total, "oracle count for n={n}");
        let nonempty = oracle_singular.iter().filter(|s| !s.is_empty()).count() as u64;
        assert_eq!(nonempty, want_nonempty, "nonempty oracle count for n={n}");
    }
    println!(
        "PASS cyclic census counts, oracle-confirmed: n=4: 2 (1 nonempty), n=6: 4 (3 nonempty), \
         n=9: 5 (4 nonempty) -- the edgeless subset is n=9's fifth"
    );
}

#[test]
fn a04_n_cycle_singular_iff_divisible_by_four() {
    for n in 3..=64u64 {
        let set = cyclic_set(n, &[1, n - 1]);
        let (_psi, verdict) = divisibility_verdict(&set);
        assert_eq!(verdict.singular, n % 4 == 0, "divisibility verdict at n={n}");
        if n <= 16 {
            let det = oracle_determinant(&set);
            assert_eq!(det.is_zero(), n % 4 == 0, "oracle at n={n}");
        }
    }
    println!("PASS n-cycle law (singular iff 4 | n) for n=3..64, oracle-checked for n<=16");
}

#[test]
fn a05_prime_order_generating_sets_are_nonsingular() {
    let mut checked = 0u64;
    for n in [3u64, 5, 7, 11, 13] {
        for set in enumerate_subsets(GroupKind::Cyclic, n) {
            if set.is_empty() {
                continue; // edgeless graph, excluded by the at-least-one-edge guard
            }
            assert!(set.is_generating(), "nonempty set generates C_{n}");
            let (_psi, verdict) = divisibility_verdict(&set);
            assert!(!verdict.singular, "n={n}, set {set:?}");
            assert!(!oracle_determinant(&set).is_zero(), "n={n}, set {set:?}");
            checked += 1;
        }
    }
    println!("PASS prime-order cyclic graphs nonsingular: {checked} generating sets over n in {{3,5,7,11,13}}");
}

#[test]
fn a06_cyclic_nullity_equals_totient_sum() {
    let mut checked = 0u64;
    for n in 3..=10u64 {
        for set in enumerate_subsets(GroupKind::Cyclic, n) {
            let (_psi, verdict) = divisibility_verdict(&set);
            let graph = CayleyGraph::build(set.clone());
            let oracle_nullity = graph.adjacency().nullity() as u64;
            assert_eq!(verdict.nullity, oracle_nullity, "n={n}, set {set:?}");
            if set.is_empty() {
                assert_eq!(verdict.nullity, n, "edgeless graph has full nullity");
            }
            checked += 1;
        }
    }
    let four_cycle = divisibility_verdict(&cyclic_set(4, &[1, 3])).1;
    assert_eq!(four_cycle.nullity, 2);
    println!("PASS cyclic nullity = totient sum over dividing d: {checked} subsets (n=3..10)");
}

#[test]
fn a07_dihedral_block_structure() {
    let mut checked = 0u64;
    for n in 3..=6u64 {
        for set in enumerate_subsets(GroupKind::Dihedral, n) {
            let graph = CayleyGraph::build(set.clone());
            // from_graph verifies every clause; re-assert the key ones on the
            // expanded blocks for good measure
            let blocks = BlockDecomposition::from_graph(&graph).unwrap();
            let m = blocks.rotation_block().expand();
            let nb = blocks.reflection_block().expand();
            assert!(is_circulant(&m).unwrap() && m.is_symmetric());
            assert!(is_anticirculant(&nb).unwrap() && nb.is_symmetric());
            assert_eq!(m.multiply(&nb), nb.multiply(&m), "blocks commute");
            assert_eq!(&blocks.assemble(), graph.adjacency());
            checked += 1;
        }
    }
    println!("PASS dihedral block structure (circulant/anti-circulant symmetric, commuting): {checked} subsets, 0 violations");
}

#[test]
fn a08_char_poly_and_determinant_identities() {
    let mut checked = 0u64;
    for n in 3..=6u64 {
        for set in enumerate_subsets(GroupKind::Dihedral, n) {
            let graph = CayleyGraph::build(set.clone());
            let blocks = BlockDecomposition::from_graph(&graph).unwrap();
            let (sum, diff) = char_poly_factorization(&blocks);
            let whole = graph.adjacency().char_poly().unwrap();
            assert_eq!(&sum * &diff, whole, "char factorization at n={n}, {set:?}");
            let det = graph.adjacency().determinant().unwrap();
            let block_det = blocks.square_difference().determinant().unwrap();
            assert_eq!(det, block_det, "determinant identity at n={n}, {set:?}");
            checked += 1;
        }
    }
    println!("PASS characteristic-polynomial factorization and determinant identity: {checked} subsets");
}

#[test]
fn a09_walk_polynomials_agree_on_three_routes() {
    let mut checked = 0u64;
    for n in 3..=6u64 {
        for set in enumerate_subsets(GroupKind::Dihedral, n) {
            let graph = CayleyGraph::build(set.clone());
            let blocks = BlockDecomposition::from_graph(&graph).unwrap();
            let by_pairs = walk_polynomials(&set).unwrap();
            let by_blocks = walk_polynomials_via_matrix(&blocks);
            assert_eq!(by_pairs, by_blocks, "pair/block routes at n={n}, {set:?}");

            let nn = n as usize;
            let rotations: Vec<usize> = (0..nn).collect();
            let reflections: Vec<usize> = (nn..2 * nn).collect();
            let adjacency = graph.adjacency();
            let restricted = |allowed: &[usize]| {
                IntPolynomial::from_coeffs(
                    (0..nn)
                        .map(|k| adjacency.walk_count(0, k, 2, allowed))
                        .collect(),
                )
            };
            assert_eq!(by_pairs.via_rotations, restricted(&rotations));
            assert_eq!(by_pairs.via_reflections, restricted(&reflections));
            checked += 1;
        }
    }
    // the worked example: full rotation part and two reflections in D_3
    let worked = walk_polynomials(&dihedral_set(3, &[1, 2], &[0, 1])).unwrap();
    let expect = IntPolynomial::from_i64_coeffs(&[2, 1, 1]);
    assert_eq!(worked.via_rotations, expect);
    assert_eq!(worked.via_reflections, expect);
    println!("PASS walk-count vectors identical via pair counts, block squares, and restricted walks: {checked} subsets");
}

#[test]
fn a10_balanced_split_and_prime_order_shortcuts() {
    let mut balanced_checked = 0u64;
    for n in 3..=6u64 {
        for set in enumerate_subsets(GroupKind::Dihedral, n) {
            if balanced_neighbor_test(&set).unwrap() {
                assert!(
                    dihedral_singularity(&set).unwrap().singular(),
                    "balanced split must be singular: n={n}, {set:?}"
                );
                assert!(oracle_determinant(&set).is_zero());
                balanced_checked += 1;
            }
        }
    }

    let mut prime_checked = 0u64;
    let mut wide_constants = 0u64;
    for n in [3u64, 5, 7] {
        for set in enumerate_subsets(GroupKind::Dihedral, n) {
            if balanced_neighbor_test(&set).unwrap() {
                continue;
            }
            let shortcut = prime_order_test(&set).unwrap();
            let full = dihedral_singularity(&set).unwrap();
            assert_eq!(
                shortcut.singular,
                full.singular(),
                "prime-order shortcut vs full criterion: n={n}, {set:?}"
            );
            if let Some(c) = &shortcut.constant {
                assert!(shortcut.singular && !c.is_zero());
                if c.magnitude() > BigInt::one().magnitude() {
                    wide_constants += 1;
                }
            }
            prime_checked += 1;
        }
    }
    // the constant is not always +-1: all reflections and no rotations in
    // D_3 gives the complete bipartite graph with constant -3
    let k33 = prime_order_test(&dihedral_set(3, &[], &[0, 1, 2])).unwrap();
    assert_eq!(k33.constant, Some(BigInt::from(-3)));
    assert!(k33.singular);
    assert!(oracle_determinant(&dihedral_set(3, &[], &[0, 1, 2])).is_zero());
    assert!(wide_constants > 0, "sweep must exercise constants beyond +-1");

    println!(
        "PASS balanced split implies singular ({balanced_checked} balanced subsets); \
         prime-order constant test matches the full criterion ({prime_checked} unbalanced subsets, n in {{3,5,7}})"
    );
}

#[test]
fn a11_polynomial_self_checks() {
    for n in 1..=200u64 {
        let mut product = IntPolynomial::one();
        for d in divisors(n) {
            product = &product * &cyclotomic(d);
        }
        assert_eq!(product, IntPolynomial::xn_minus_1(n as usize), "n={n}");
    }

    let mut rng = StdRng::seed_from_u64(0x5eed);
    for trial in 0..500 {
        let n = rng.gen_range(1..=16usize);
        let random_row = |rng: &mut StdRng| -> Vec<BigInt> {
            (0..n).map(|_| BigInt::from(rng.gen_range(-9i64..=9))).collect()
        };
        let p = CirculantMatrix::new(random_row(&mut rng));
        let q = CirculantMatrix::new(random_row(&mut rng));
        let via_ring = p.multiply(&q).unwrap().expand();
        let dense = p.expand().multiply(&q.expand());
        assert_eq!(via_ring, dense, "trial {trial}, n={n}");
    }
    println!("PASS cyclotomic product identity to n=200; circulant ring product vs dense product on 500 random pairs");
}

#[test]
fn acceptance_domain_sanity() {
    // the sweeps above rely on these exact universe sizes
    assert_eq!(subset_count(GroupKind::Cyclic, 10), 32);
    assert_eq!(subset_count(GroupKind::Dihedral, 3), 16);
    assert_eq!(subset_count(GroupKind::Dihedral, 4), 64);
    assert_eq!(subset_count(GroupKind::Dihedral, 5), 128);
    // zero-polynomial convention backing the nullity formula
    let zero = circulant_singularity(&IntPolynomial::zero(), 6).unwrap();
    assert_eq!(zero.nullity, 6);
}
