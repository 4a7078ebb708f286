//! Circulant and anti-circulant integer matrices, the associated-polynomial
//! ring homomorphism, and the cyclotomic singularity/nullity test.
//!
//! A circulant matrix `Y` satisfies `Y[i][j] = y[(j - i) mod n]` for its
//! first row `y`; an anti-circulant matrix satisfies `X[i][j] =
//! x[(i + j) mod n]` and is automatically symmetric. Reading the first row
//! as polynomial coefficients turns circulant multiplication into polynomial
//! multiplication modulo `x^n - 1`, and singularity into a cyclotomic
//! divisibility question: a circulant is singular iff `Phi_d` divides its
//! associated polynomial for some divisor `d` of `n`, with nullity the sum
//! of `phi(d)` over the dividing `d`.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::oracle::ExactMatrix;
use crate::polynomial::{cyclotomic, divisors, euler_totient, IntPolynomial};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CirculantError {
    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("polynomial of degree {degree} is not reduced modulo x^{n} - 1")]
    NotReduced { degree: usize, n: usize },
}

/// Circulant matrix stored by its first row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CirculantMatrix {
    first_row: Vec<BigInt>,
}

impl CirculantMatrix {
    pub fn new(first_row: Vec<BigInt>) -> Self {
        assert!(!first_row.is_empty(), "dimension must be at least 1");
        CirculantMatrix { first_row }
    }

    pub fn from_i64(first_row: &[i64]) -> Self {
        CirculantMatrix::new(first_row.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn zero(n: usize) -> Self {
        CirculantMatrix::new(vec![BigInt::zero(); n])
    }

    pub fn dimension(&self) -> usize {
        self.first_row.len()
    }

    pub fn first_row(&self) -> &[BigInt] {
        &self.first_row
    }

    pub fn expand(&self) -> ExactMatrix {
        let n = self.dimension();
        ExactMatrix::from_fn(n, n, |i, j| self.first_row[(n + j - i) % n].clone())
    }

    /// The first row read as polynomial coefficients, constant term first.
    pub fn associated_polynomial(&self) -> IntPolynomial {
        IntPolynomial::from_coeffs(self.first_row.clone())
    }

    /// Rebuilds a circulant from a polynomial of degree `< n` (coefficients
    /// padded with zeros up to dimension `n`).
    pub fn from_polynomial(p: &IntPolynomial, n: usize) -> Result<Self, CirculantError> {
        if let Some(d) = p.degree() {
            if d >= n {
                return Err(CirculantError::NotReduced { degree: d, n });
            }
        }
        Ok(CirculantMatrix::new(
            (0..n).map(|k| p.coefficient(k)).collect(),
        ))
    }

    /// Product of two circulants, computed through the quotient ring: the
    /// first row of `P Q` is the reduction of `psi(P) psi(Q)` mod `x^n - 1`.
    pub fn multiply(&self, rhs: &CirculantMatrix) -> Result<CirculantMatrix, CirculantError> {
        let n = self.dimension();
        if n != rhs.dimension() {
            return Err(CirculantError::DimensionMismatch(n, rhs.dimension()));
        }
        let product = &self.associated_polynomial() * &rhs.associated_polynomial();
        CirculantMatrix::from_polynomial(&product.reduce_mod_xn_minus_1(n), n)
    }
}

/// Anti-circulant matrix stored by its first row; always symmetric.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AntiCirculantMatrix {
    first_row: Vec<BigInt>,
}

impl AntiCirculantMatrix {
    pub fn new(first_row: Vec<BigInt>) -> Self {
        assert!(!first_row.is_empty(), "dimension must be at least 1");
        AntiCirculantMatrix { first_row }
    }

    pub fn from_i64(first_row: &[i64]) -> Self {
        AntiCirculantMatrix::new(first_row.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn zero(n: usize) -> Self {
        AntiCirculantMatrix::new(vec![BigInt::zero(); n])
    }

    pub fn dimension(&self) -> usize {
        self.first_row.len()
    }

    pub fn first_row(&self) -> &[BigInt] {
        &self.first_row
    }

    pub fn expand(&self) -> ExactMatrix {
        let n = self.dimension();
        ExactMatrix::from_fn(n, n, |i, j| self.first_row[(i + j) % n].clone())
    }

    /// The square of an anti-circulant is circulant; the product is computed
    /// densely and the circulant index law asserted on the result.
    pub fn square(&self) -> CirculantMatrix {
        let dense = self.expand();
        let product = dense.multiply(&dense);
        assert!(
            is_circulant(&product).expect("product of square matrices is square"),
            "anti-circulant square violated the circulant index law"
        );
        CirculantMatrix::new(
            (0..self.dimension())
                .map(|j| product.get(0, j).clone())
                .collect(),
        )
    }
}

/// Whether a dense matrix satisfies the circulant index law.
pub fn is_circulant(m: &ExactMatrix) -> Result<bool, CirculantError> {
    let n = square_dimension(m)?;
    Ok((0..n).all(|i| (0..n).all(|j| m.get(i, j) == m.get(0, (n + j - i) % n))))
}

/// Whether a dense matrix satisfies the anti-circulant index law.
pub fn is_anticirculant(m: &ExactMatrix) -> Result<bool, CirculantError> {
    let n = square_dimension(m)?;
    Ok((0..n).all(|i| (0..n).all(|j| m.get(i, j) == m.get(0, (i + j) % n))))
}

/// First row of an arbitrary square matrix read as polynomial coefficients.
pub fn associated_polynomial(m: &ExactMatrix) -> Result<IntPolynomial, CirculantError> {
    let n = square_dimension(m)?;
    Ok(IntPolynomial::from_coeffs(
        (0..n).map(|j| m.get(0, j).clone()).collect(),
    ))
}

fn square_dimension(m: &ExactMatrix) -> Result<usize, CirculantError> {
    if m.is_square() {
        Ok(m.rows())
    } else {
        Err(CirculantError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        })
    }
}

/// Outcome of the cyclotomic singularity test on a circulant with associated
/// polynomial `psi`: singular iff some `Phi_d` with `d | n` divides `psi`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CirculantSingularity {
    pub singular: bool,
    /// Divisors `d` of `n` with `Phi_d | psi`, ascending.
    pub dividing_d: Vec<u64>,
    /// Sum of `phi(d)` over the dividing `d`; the nullity of the circulant.
    pub nullity: u64,
}

/// Cyclotomic singularity test for the `n x n` circulant with associated
/// polynomial `psi`. The zero polynomial is divisible by every `Phi_d`, so
/// the zero circulant comes out singular with nullity `n`.
pub fn circulant_singularity(
    psi: &IntPolynomial,
    n: u64,
) -> Result<CirculantSingularity, CirculantError> {
    if let Some(d) = psi.degree() {
        if d >= n as usize {
            return Err(CirculantError::NotReduced {
                degree: d,
                n: n as usize,
            });
        }
    }
    let dividing_d: Vec<u64> = divisors(n)
        .into_iter()
        .filter(|&d| {
            cyclotomic(d)
                .divides(psi)
                .expect("cyclotomic polynomials are nonzero")
        })
        .collect();
    let nullity = dividing_d.iter().map(|&d| euler_totient(d)).sum();
    Ok(CirculantSingularity {
        singular: !dividing_d.is_empty(),
        dividing_d,
        nullity,
    })
}
