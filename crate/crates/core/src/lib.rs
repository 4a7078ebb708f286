//! Exact singularity tests for Cayley graphs of cyclic and dihedral groups.
//!
//! The adjacency matrix of a Cayley graph of `C_n`, with vertices enumerated
//! `a, a^2, ..., a^n`, is circulant, and a circulant integer matrix is
//! singular exactly when some cyclotomic polynomial `Phi_d` with `d | n`
//! divides its associated polynomial. For Cayley graphs of the dihedral
//! group `D_n` the same divisibility test applies to the difference of two
//! walk-count polynomials read off the block decomposition of the adjacency
//! matrix. This crate implements both tests in exact integer arithmetic and
//! cross-checks every verdict against an independent fraction-free linear
//! algebra oracle (determinant, rank, characteristic polynomial).
//!
//! All computations are exact; floating point appears only in advisory
//! eigenvalue estimates that never influence a verdict.

pub mod census;
pub mod circulant;
pub mod dihedral;
pub mod group;
pub mod oracle;
pub mod polynomial;
pub mod report;
pub mod settext;

pub use census::{census, verify, CensusRow, CensusSummary, Counterexample, VerifySummary};
pub use circulant::{AntiCirculantMatrix, CirculantMatrix, CirculantSingularity};
pub use dihedral::{BlockDecomposition, DihedralSingularity, PrimeOrderOutcome, WalkPolynomials};
pub use group::{CayleyGraph, ConnectingSet, DihedralElement, GroupKind};
pub use oracle::ExactMatrix;
pub use polynomial::IntPolynomial;
pub use report::{Certificate, SingularityReport, SpectrumReport, Verdict};
