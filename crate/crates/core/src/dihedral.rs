//! Dihedral Cayley-graph machinery: block decomposition of the adjacency
//! matrix, the two walk-count polynomials, the divisibility singularity
//! test, and the characteristic-polynomial and determinant identities.
//!
//! With vertices enumerated rotations-then-reflections, the adjacency matrix
//! of a dihedral Cayley graph is `[[M, N], [N, M]]` where `M` (rotation to
//! rotation) is circulant and symmetric, `N` (rotation to reflection) is
//! anti-circulant, and `M N = N M`. Then `char(A) = char(M+N) char(M-N)`,
//! `det(A) = det(M^2 - N^2)`, and `M^2 - N^2` is circulant, so the
//! cyclotomic test applies to the difference of the associated polynomials
//! of `M^2` and `N^2` — the generating polynomials of length-2 walk counts
//! from `a` through rotation and reflection intermediates respectively.

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::circulant::{
    associated_polynomial, circulant_singularity, is_anticirculant, is_circulant,
    AntiCirculantMatrix, CirculantMatrix, CirculantSingularity,
};
use crate::group::{CayleyGraph, ConnectingSet, GroupKind};
use crate::oracle::ExactMatrix;
use crate::polynomial::{is_prime, IntPolynomial};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DihedralError {
    #[error("operation requires a dihedral graph or set")]
    NotDihedral,
    #[error("adjacency matrix is not 2n x 2n")]
    BadShape,
    #[error("block structure violated: {0}")]
    Structure(StructureViolation),
    #[error("order {0} is not prime")]
    CompositeOrder(u64),
    #[error("rotation and reflection parts have equal size; the balanced case is decided directly")]
    BalancedSplit,
}

/// Which clause of the block-structure law failed; any failure signals
/// vertices out of the canonical enumeration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructureViolation {
    RotationBlockNotCirculant,
    RotationBlockNotSymmetric,
    ReflectionBlockNotAntiCirculant,
    BlocksNotMirrored,
    BlocksDoNotCommute,
}

impl std::fmt::Display for StructureViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let msg = match self {
            StructureViolation::RotationBlockNotCirculant => "rotation block is not circulant",
            StructureViolation::RotationBlockNotSymmetric => "rotation block is not symmetric",
            StructureViolation::ReflectionBlockNotAntiCirculant => {
                "reflection block is not anti-circulant"
            }
            StructureViolation::BlocksNotMirrored => {
                "lower blocks do not mirror the upper blocks"
            }
            StructureViolation::BlocksDoNotCommute => "the two blocks do not commute",
        };
        write!(f, "{msg}")
    }
}

/// The two structured blocks of a dihedral adjacency matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    n: usize,
    rotation_block: CirculantMatrix,
    reflection_block: AntiCirculantMatrix,
}

impl BlockDecomposition {
    /// Extracts and checks the blocks of a dihedral Cayley graph.
    pub fn from_graph(graph: &CayleyGraph) -> Result<BlockDecomposition, DihedralError> {
        if graph.kind() != GroupKind::Dihedral {
            return Err(DihedralError::NotDihedral);
        }
        BlockDecomposition::from_adjacency(graph.connecting_set().n() as usize, graph.adjacency())
    }

    /// Extracts the blocks of an arbitrary `2n x 2n` matrix, verifying every
    /// clause of the block-structure law: the top-left block is circulant
    /// and symmetric, the top-right block is anti-circulant (hence
    /// symmetric), the bottom row of blocks mirrors the top, and the blocks
    /// commute.
    pub fn from_adjacency(
        n: usize,
        adjacency: &ExactMatrix,
    ) -> Result<BlockDecomposition, DihedralError> {
        if n == 0 || !adjacency.is_square() || adjacency.rows() != 2 * n {
            return Err(DihedralError::BadShape);
        }
        let rotation = ExactMatrix::from_fn(n, n, |i, j| adjacency.get(i, j).clone());
        let reflection = ExactMatrix::from_fn(n, n, |i, j| adjacency.get(i, n + j).clone());
        if !is_circulant(&rotation).expect("block is square") {
            return Err(DihedralError::Structure(
                StructureViolation::RotationBlockNotCirculant,
            ));
        }
        if !rotation.is_symmetric() {
            return Err(DihedralError::Structure(
                StructureViolation::RotationBlockNotSymmetric,
            ));
        }
        if !is_anticirculant(&reflection).expect("block is square") {
            return Err(DihedralError::Structure(
                StructureViolation::ReflectionBlockNotAntiCirculant,
            ));
        }
        let mirrored = (0..n).all(|i| {
            (0..n).all(|j| {
                adjacency.get(n + i, j) == reflection.get(i, j)
                    && adjacency.get(n + i, n + j) == rotation.get(i, j)
            })
        });
        if !mirrored {
            return Err(DihedralError::Structure(StructureViolation::BlocksNotMirrored));
        }
        if rotation.multiply(&reflection) != reflection.multiply(&rotation) {
            return Err(DihedralError::Structure(StructureViolation::BlocksDoNotCommute));
        }
        Ok(BlockDecomposition {
            n,
            rotation_block: CirculantMatrix::new(
                (0..n).map(|j| rotation.get(0, j).clone()).collect(),
            ),
            reflection_block: AntiCirculantMatrix::new(
                (0..n).map(|j| reflection.get(0, j).clone()).collect(),
            ),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The rotation-to-rotation block (circulant, symmetric).
    pub fn rotation_block(&self) -> &CirculantMatrix {
        &self.rotation_block
    }

    /// The rotation-to-reflection block (anti-circulant, symmetric).
    pub fn reflection_block(&self) -> &AntiCirculantMatrix {
        &self.reflection_block
    }

    /// Dense `M^2 - N^2`; circulant because `N^2` is.
    pub fn square_difference(&self) -> ExactMatrix {
        let m = self.rotation_block.expand();
        let n = self.reflection_block.expand();
        m.multiply(&m).sub(&n.multiply(&n))
    }

    /// Reassembles the `2n x 2n` matrix `[[M, N], [N, M]]`.
    pub fn assemble(&self) -> ExactMatrix {
        let m = self.rotation_block.expand();
        let nb = self.reflection_block.expand();
        let n = self.n;
        ExactMatrix::from_fn(2 * n, 2 * n, |i, j| {
            let same = (i < n) == (j < n);
            let block = if same { &m } else { &nb };
            block.get(i % n, j % n).clone()
        })
    }
}

/// Generating polynomials of the length-2 walk counts from `a`: the
/// coefficient of `x^(i-1)` counts walks `a -> v -> a^i` with `v` a rotation
/// (`via_rotations`) or a reflection (`via_reflections`). Equivalently they
/// are the associated polynomials of `M^2` and `N^2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkPolynomials {
    pub via_rotations: IntPolynomial,
    pub via_reflections: IntPolynomial,
}

impl WalkPolynomials {
    /// The tested polynomial of the dihedral singularity criterion.
    pub fn difference(&self) -> IntPolynomial {
        &self.via_rotations - &self.via_reflections
    }
}

/// Walk polynomials by ordered-pair enumeration: the coefficient of
/// `x^k` in `via_rotations` counts pairs `(h1, h2)` of rotation members with
/// `h2 h1 = a^k`, and likewise for reflection members.
pub fn walk_polynomials(set: &ConnectingSet) -> Result<WalkPolynomials, DihedralError> {
    if set.kind() != GroupKind::Dihedral {
        return Err(DihedralError::NotDihedral);
    }
    let n = set.n() as usize;
    let count_pairs = |reflected: bool| {
        let members: Vec<_> = set
            .elements()
            .filter(|e| e.is_reflection() == reflected)
            .collect();
        let mut coeffs = vec![BigInt::zero(); n];
        for h1 in &members {
            for h2 in &members {
                let product = h2.multiply(h1).expect("orders match");
                debug_assert!(!product.is_reflection());
                coeffs[product.exponent() as usize] += 1;
            }
        }
        IntPolynomial::from_coeffs(coeffs)
    };
    Ok(WalkPolynomials {
        via_rotations: count_pairs(false),
        via_reflections: count_pairs(true),
    })
}

/// Walk polynomials through the matrix route: associated polynomials of the
/// dense squares of the two blocks. Independent cross-check of
/// [`walk_polynomials`].
pub fn walk_polynomials_via_matrix(blocks: &BlockDecomposition) -> WalkPolynomials {
    let m = blocks.rotation_block().expand();
    let nb = blocks.reflection_block().expand();
    WalkPolynomials {
        via_rotations: associated_polynomial(&m.multiply(&m)).expect("square block"),
        via_reflections: associated_polynomial(&nb.multiply(&nb)).expect("square block"),
    }
}

/// Dihedral singularity verdict with its certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DihedralSingularity {
    /// The tested polynomial: difference of the two walk polynomials.
    pub tested: IntPolynomial,
    /// Cyclotomic verdict on the tested polynomial; its nullity field is the
    /// nullity of `M^2 - N^2` (the block nullity), not of the graph.
    pub verdict: CirculantSingularity,
}

impl DihedralSingularity {
    pub fn singular(&self) -> bool {
        self.verdict.singular
    }
}

/// Singularity of the `2n`-vertex dihedral Cayley graph: singular iff some
/// `Phi_d` with `d | n` divides the difference of the walk polynomials.
pub fn dihedral_singularity(set: &ConnectingSet) -> Result<DihedralSingularity, DihedralError> {
    let walks = walk_polynomials(set)?;
    let tested = walks.difference();
    let verdict =
        circulant_singularity(&tested, set.n()).expect("walk polynomials have degree < n");
    Ok(DihedralSingularity { tested, verdict })
}

/// Exact characteristic polynomials of `M + N` and `M - N`; their product
/// is the characteristic polynomial of the assembled `2n x 2n` matrix.
pub fn char_poly_factorization(blocks: &BlockDecomposition) -> (IntPolynomial, IntPolynomial) {
    let m = blocks.rotation_block().expand();
    let n = blocks.reflection_block().expand();
    let sum = m.add(&n).char_poly().expect("square block");
    let diff = m.sub(&n).char_poly().expect("square block");
    (sum, diff)
}

/// Whether `det(A) = det(M^2 - N^2)` for the given dense matrix. True for
/// every adjacency matrix in canonical vertex order; may fail when rows are
/// permuted out of that order.
pub fn determinant_identity_check(blocks: &BlockDecomposition, a: &ExactMatrix) -> bool {
    let lhs = a.determinant().expect("adjacency matrix is square");
    let rhs = blocks
        .square_difference()
        .determinant()
        .expect("block difference is square");
    lhs == rhs
}

/// Whether the rotation and reflection parts have equal size. Every rotation
/// vertex then sees equally many rotation and reflection neighbours, and the
/// graph is singular: the walk-polynomial difference vanishes at 1, so
/// `Phi_1` divides it.
pub fn balanced_neighbor_test(set: &ConnectingSet) -> Result<bool, DihedralError> {
    if set.kind() != GroupKind::Dihedral {
        return Err(DihedralError::NotDihedral);
    }
    Ok(set.rotation_exponents().len() == set.reflection_exponents().len())
}

/// Outcome of the prime-order shortcut test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeOrderOutcome {
    pub singular: bool,
    /// The constant value of the walk-count difference vector when it is
    /// constant, else `None`. Singular iff `Some(c)` with `c != 0`.
    pub constant: Option<BigInt>,
}

/// Prime-order singularity shortcut for an unbalanced split: the graph is
/// singular iff the coefficient vector of the walk-polynomial difference is
/// a constant nonzero vector `(c, c, ..., c)`.
///
/// For prime `n` only `Phi_1` and `Phi_n` can divide the difference, the
/// unbalanced split rules out `Phi_1`, and a polynomial of degree `< n` is
/// divisible by `Phi_n = 1 + x + ... + x^(n-1)` exactly when it is an
/// integer multiple of it. The multiplier `c` equals the split difference
/// `|H'| - |H''|`; it is often, but not always, `1` or `-1` (all reflections
/// and no rotations gives `c = -n`), so any nonzero constant decides.
pub fn prime_order_test(set: &ConnectingSet) -> Result<PrimeOrderOutcome, DihedralError> {
    if set.kind() != GroupKind::Dihedral {
        return Err(DihedralError::NotDihedral);
    }
    if !is_prime(set.n()) {
        return Err(DihedralError::CompositeOrder(set.n()));
    }
    if balanced_neighbor_test(set)? {
        return Err(DihedralError::BalancedSplit);
    }
    let difference = walk_polynomials(set)?.difference();
    let n = set.n() as usize;
    let first = difference.coefficient(0);
    let constant = (0..n).all(|k| difference.coefficient(k) == first);
    if constant && !first.is_zero() {
        Ok(PrimeOrderOutcome {
            singular: true,
            constant: Some(first),
        })
    } else {
        // an unbalanced split cannot produce the zero difference
        debug_assert!(!constant || !difference.is_zero());
        Ok(PrimeOrderOutcome {
            singular: false,
            constant: None,
        })
    }
}
