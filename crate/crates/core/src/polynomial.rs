//! Exact integer polynomial arithmetic and the number-theoretic helpers
//! (cyclotomic polynomials, divisor lists, Euler's totient) used by the
//! singularity criteria.
//!
//! Coefficients are arbitrary-precision integers stored ascending by
//! exponent with trailing zeros trimmed; the zero polynomial is the empty
//! coefficient vector and has no degree.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{LazyLock, Mutex};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("the zero polynomial is not a valid divisor")]
    ZeroDivisor,
}

/// An integer-coefficient polynomial; index `i` of the coefficient vector
/// holds the coefficient of `x^i`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPolynomial::from_coeffs(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        IntPolynomial::from_coeffs(vec![BigInt::zero(), BigInt::one()])
    }

    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        IntPolynomial::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `x^n - 1`.
    pub fn xn_minus_1(n: usize) -> Self {
        assert!(n >= 1);
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = -BigInt::one();
        coeffs[n] = BigInt::one();
        IntPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^k` (zero beyond the stored range).
    pub fn coefficient(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coefficient().is_some_and(|c| c.is_one())
    }

    pub fn evaluate(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Canonical representative of degree `< n` in the quotient ring modulo
    /// `x^n - 1`: every `x^(kn+r)` folds onto `x^r` with coefficients summed.
    pub fn reduce_mod_xn_minus_1(&self, n: usize) -> IntPolynomial {
        assert!(n >= 1, "modulus exponent must be at least 1");
        let mut folded = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            folded[i % n] += c;
        }
        IntPolynomial::from_coeffs(folded)
    }

    /// Exact quotient `self / divisor` over the integers, or `None` when the
    /// divisor does not divide exactly.
    ///
    /// Long division is run greedily; whenever the divisor's leading
    /// coefficient fails to divide the current leading coefficient the
    /// quotient cannot have integer coefficients and division aborts. For a
    /// monic divisor the division always runs to completion.
    pub fn exact_div(&self, divisor: &IntPolynomial) -> Result<Option<IntPolynomial>, PolyError> {
        if divisor.is_zero() {
            return Err(PolyError::ZeroDivisor);
        }
        if self.is_zero() {
            return Ok(Some(IntPolynomial::zero()));
        }
        let dd = divisor.degree().expect("divisor is nonzero");
        let nd = self.degree().expect("dividend is nonzero");
        if nd < dd {
            return Ok(None);
        }
        let lead = divisor.leading_coefficient().expect("divisor is nonzero");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for k in (0..quot.len()).rev() {
            let top = rem[k + dd].clone();
            if top.is_zero() {
                continue;
            }
            if !(&top % lead).is_zero() {
                return Ok(None);
            }
            let q = &top / lead;
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * dc;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Ok(None);
        }
        Ok(Some(IntPolynomial::from_coeffs(quot)))
    }

    /// Whether `self` divides `dividend` over the integers. Every nonzero
    /// polynomial divides the zero polynomial.
    pub fn divides(&self, dividend: &IntPolynomial) -> Result<bool, PolyError> {
        dividend.exact_div(self).map(|q| q.is_some())
    }

    /// Evaluates at the `n`-th roots of unity `omega^j` for `j = 0..n-1`.
    /// Floating point, advisory only; exact verdicts never depend on it.
    pub fn evaluate_at_unit_roots(&self, n: usize) -> Vec<Complex64> {
        assert!(n >= 1);
        (0..n)
            .map(|j| {
                let theta = 2.0 * std::f64::consts::PI * j as f64 / n as f64;
                let root = Complex64::from_polar(1.0, theta);
                let mut acc = Complex64::new(0.0, 0.0);
                for c in self.coeffs.iter().rev() {
                    acc = acc * root + Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0);
                }
                acc
            })
            .collect()
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            out[i] += c;
        }
        IntPolynomial::from_coeffs(out)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            out[i] -= c;
        }
        IntPolynomial::from_coeffs(out)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for IntPolynomial {
    /// Renders ascending by exponent, e.g. `2 + x + x^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if k == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

// JSON form is the coefficient array, index = exponent. Coefficients are
// decimal strings so arbitrary-precision values survive the round trip.
impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let strings: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        strings.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(deserializer)?;
        let coeffs = strings
            .iter()
            .map(|s| {
                s.parse::<BigInt>()
                    .map_err(|e| D::Error::custom(format!("bad integer coefficient {s:?}: {e}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(IntPolynomial::from_coeffs(coeffs))
    }
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1);
    let mut divs = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            divs.push(i);
            if i != n / i {
                divs.push(n / i);
            }
        }
        i += 1;
    }
    divs.sort_unstable();
    divs
}

/// Euler's totient by trial factorization.
pub fn euler_totient(n: u64) -> u64 {
    assert!(n >= 1);
    let mut m = n;
    let mut phi = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if m > 1 {
        phi -= phi / m;
    }
    phi
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            return false;
        }
        p += 1;
    }
    true
}

static CYCLOTOMIC_CACHE: LazyLock<Mutex<HashMap<u64, IntPolynomial>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// The `d`-th cyclotomic polynomial: monic, integer, of degree `phi(d)`.
///
/// Computed by exact division `Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e`
/// and memoized in a process-wide table shared across threads.
pub fn cyclotomic(d: u64) -> IntPolynomial {
    assert!(d >= 1);
    let mut cache = CYCLOTOMIC_CACHE.lock().expect("cyclotomic cache poisoned");
    cyclotomic_cached(&mut cache, d)
}

fn cyclotomic_cached(cache: &mut HashMap<u64, IntPolynomial>, d: u64) -> IntPolynomial {
    if let Some(p) = cache.get(&d) {
        return p.clone();
    }
    let phi = if d == 1 {
        IntPolynomial::from_i64_coeffs(&[-1, 1])
    } else {
        let mut quot = IntPolynomial::xn_minus_1(d as usize);
        for e in divisors(d) {
            if e == d {
                continue;
            }
            let factor = cyclotomic_cached(cache, e);
            quot = quot
                .exact_div(&factor)
                .expect("cyclotomic factor is nonzero")
                .expect("cyclotomic division is exact");
        }
        quot
    };
    cache.insert(d, phi.clone());
    phi
}
