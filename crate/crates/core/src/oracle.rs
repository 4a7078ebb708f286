//! Independent exact linear algebra over arbitrary-precision integers:
//! determinant, rank/nullity, characteristic polynomial, and restricted walk
//! counts.
//!
//! This module is the ground truth the divisibility criteria are validated
//! against, so it never consults them: determinants and ranks come from
//! fraction-free (Bareiss) elimination, characteristic polynomials from the
//! Faddeev-LeVerrier recurrence. No floating point anywhere.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::polynomial::IntPolynomial;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("rows have unequal lengths")]
    RaggedRows,
}

/// Dense matrix of arbitrary-precision integers, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ExactMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self, MatrixError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(MatrixError::RaggedRows);
        }
        Ok(ExactMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        ExactMatrix::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
        .expect("literal rows are rectangular")
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        ExactMatrix { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn transpose(&self) -> ExactMatrix {
        ExactMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn add(&self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        ExactMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) + rhs.get(i, j))
    }

    pub fn sub(&self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        ExactMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) - rhs.get(i, j))
    }

    pub fn multiply(&self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, rhs.rows, "inner dimension mismatch");
        ExactMatrix::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).map(|k| self.get(i, k) * rhs.get(k, j)).sum()
        })
    }

    pub fn pow(&self, exp: u32) -> ExactMatrix {
        assert!(self.is_square(), "matrix power needs a square matrix");
        let mut acc = ExactMatrix::identity(self.rows);
        for _ in 0..exp {
            acc = acc.multiply(self);
        }
        acc
    }

    pub fn trace(&self) -> BigInt {
        assert!(self.is_square(), "trace needs a square matrix");
        (0..self.rows).map(|i| self.get(i, i)).sum()
    }

    fn require_square(&self) -> Result<usize, MatrixError> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(MatrixError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    /// Exact determinant via fraction-free (Bareiss) elimination.
    ///
    /// Every division in the update step is by the previous pivot and is
    /// exact by Sylvester's identity; intermediate entries are minors of the
    /// input, so growth stays polynomial.
    pub fn determinant(&self) -> Result<BigInt, MatrixError> {
        let n = self.require_square()?;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.entries.clone();
        let at = |a: &[BigInt], i: usize, j: usize| a[i * n + j].clone();
        let mut prev = BigInt::one();
        let mut sign = 1i8;
        for k in 0..n - 1 {
            if at(&a, k, k).is_zero() {
                let Some(r) = (k + 1..n).find(|&r| !at(&a, r, k).is_zero()) else {
                    return Ok(BigInt::zero());
                };
                for j in 0..n {
                    a.swap(k * n + j, r * n + j);
                }
                sign = -sign;
            }
            let pivot = at(&a, k, k);
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = at(&a, i, j) * &pivot - at(&a, i, k) * at(&a, k, j);
                    debug_assert!((&num % &prev).is_zero(), "Bareiss division must be exact");
                    a[i * n + j] = num / &prev;
                }
                a[i * n + k] = BigInt::zero();
            }
            prev = pivot;
        }
        let det = at(&a, n - 1, n - 1);
        Ok(if sign < 0 { -det } else { det })
    }

    /// Rank by fraction-free elimination with exact pivot tests; columns
    /// without a pivot are skipped.
    pub fn rank(&self) -> usize {
        let (rows, cols) = (self.rows, self.cols);
        let mut a = self.entries.clone();
        let at = |a: &[BigInt], i: usize, j: usize| a[i * cols + j].clone();
        let mut prev = BigInt::one();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !at(&a, i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    a.swap(r * cols + j, p * cols + j);
                }
            }
            let pivot = at(&a, r, c);
            for i in r + 1..rows {
                for j in c + 1..cols {
                    let num = at(&a, i, j) * &pivot - at(&a, i, c) * at(&a, r, j);
                    assert!((&num % &prev).is_zero(), "fraction-free update must divide exactly");
                    a[i * cols + j] = num / &prev;
                }
                a[i * cols + c] = BigInt::zero();
            }
            prev = pivot;
            r += 1;
        }
        r
    }

    /// Dimension of the kernel: `cols - rank`.
    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// Exact characteristic polynomial `det(x I - A)` by the
    /// Faddeev-LeVerrier recurrence; all intermediate matrices stay integral
    /// and the division by the step index is exact.
    pub fn char_poly(&self) -> Result<IntPolynomial, MatrixError> {
        let n = self.require_square()?;
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        let mut b = ExactMatrix::identity(n);
        for k in 1..=n {
            let ab = self.multiply(&b);
            let t = ab.trace();
            debug_assert!((&t % BigInt::from(k)).is_zero(), "trace divisible by step");
            let c = -(t / BigInt::from(k));
            b = ab;
            for i in 0..n {
                let d = b.get(i, i) + &c;
                b.set(i, i, d);
            }
            coeffs[n - k] = c;
        }
        Ok(IntPolynomial::from_coeffs(coeffs))
    }

    /// Number of walks `from -> ... -> to` of the given length whose
    /// intermediate vertices all lie in `allowed_intermediate`. Length 1 has
    /// no intermediate vertex and reduces to the adjacency entry.
    pub fn walk_count(
        &self,
        from: usize,
        to: usize,
        length: usize,
        allowed_intermediate: &[usize],
    ) -> BigInt {
        assert!(self.is_square(), "walk counting needs a square matrix");
        assert!(length >= 1, "walks have length at least 1");
        let n = self.rows;
        let mut mask = vec![false; n];
        for &v in allowed_intermediate {
            mask[v] = true;
        }
        // weights over vertices reached after each step, zeroed outside the mask
        let mut reached: Vec<BigInt> = (0..n)
            .map(|v| {
                if mask[v] {
                    self.get(from, v).clone()
                } else {
                    BigInt::zero()
                }
            })
            .collect();
        for _ in 0..length.saturating_sub(2) {
            reached = (0..n)
                .map(|v| {
                    if mask[v] {
                        (0..n).map(|u| &reached[u] * self.get(u, v)).sum()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect();
        }
        if length == 1 {
            self.get(from, to).clone()
        } else {
            (0..n).map(|u| &reached[u] * self.get(u, to)).sum()
        }
    }
}
