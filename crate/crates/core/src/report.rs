//! Machine-readable verdict reports for single-graph checks and spectra.
//!
//! Reports serialize to JSON with camelCase keys; arbitrary-precision
//! integers are carried as decimal strings so the documents round-trip
//! exactly.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::circulant::{circulant_singularity, CirculantSingularity};
use crate::dihedral::dihedral_singularity;
use crate::group::{CayleyGraph, ConnectingSet, GroupKind};
use crate::polynomial::IntPolynomial;
use crate::settext::format_set;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Singular,
    Nonsingular,
}

impl Verdict {
    pub fn from_singular(singular: bool) -> Verdict {
        if singular {
            Verdict::Singular
        } else {
            Verdict::Nonsingular
        }
    }

    pub fn is_singular(self) -> bool {
        self == Verdict::Singular
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Singular => write!(f, "singular"),
            Verdict::Nonsingular => write!(f, "nonsingular"),
        }
    }
}

/// Witness for the verdict: the polynomial fed to the cyclotomic test and
/// the divisors whose cyclotomic polynomial divides it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Certificate {
    /// For a cyclic graph the connection polynomial of the set; for a
    /// dihedral graph the difference of the two walk polynomials.
    pub tested_polynomial: IntPolynomial,
    pub dividing_d: Vec<u64>,
    /// Sum of totients over `dividing_d`: the nullity of the circulant the
    /// test ran on (the adjacency matrix itself in the cyclic case, the
    /// block difference in the dihedral case).
    pub nullity: u64,
}

/// Full verdict report for one connecting set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SingularityReport {
    pub group_kind: GroupKind,
    pub n: u64,
    pub connecting_set: String,
    pub is_generating: bool,
    pub verdict: Verdict,
    pub certificate: Certificate,
    /// Nullity of the block difference; dihedral reports only. This is not
    /// the nullity of the graph.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub block_nullity: Option<u64>,
    #[serde(
        default,
        skip_serializing_if = "Option::is_none",
        with = "opt_bigint_string"
    )]
    pub oracle_determinant: Option<BigInt>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle_nullity: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub agreement: Option<bool>,
}

/// Connection polynomial of a cyclic set: the indicator of the rotation
/// exponents, which is the associated polynomial of the adjacency matrix.
pub fn connection_polynomial(set: &ConnectingSet) -> IntPolynomial {
    let mut coeffs = vec![BigInt::zero(); set.n() as usize];
    for &k in set.rotation_exponents() {
        coeffs[k as usize] += 1;
    }
    IntPolynomial::from_coeffs(coeffs)
}

/// The divisibility-criterion verdict for either group kind, with the
/// polynomial it tested.
pub fn divisibility_verdict(set: &ConnectingSet) -> (IntPolynomial, CirculantSingularity) {
    match set.kind() {
        GroupKind::Cyclic => {
            let psi = connection_polynomial(set);
            let verdict =
                circulant_singularity(&psi, set.n()).expect("connection polynomial has degree < n");
            (psi, verdict)
        }
        GroupKind::Dihedral => {
            let outcome = dihedral_singularity(set).expect("set is dihedral");
            (outcome.tested, outcome.verdict)
        }
    }
}

/// Runs the singularity check, optionally cross-checking the verdict against
/// the exact determinant and nullity of the adjacency matrix.
pub fn check(set: &ConnectingSet, with_oracle: bool) -> SingularityReport {
    let (tested, verdict) = divisibility_verdict(set);
    let singular = verdict.singular;
    let block_nullity = match set.kind() {
        GroupKind::Cyclic => None,
        GroupKind::Dihedral => Some(verdict.nullity),
    };
    let mut report = SingularityReport {
        group_kind: set.kind(),
        n: set.n(),
        connecting_set: format_set(set),
        is_generating: set.is_generating(),
        verdict: Verdict::from_singular(singular),
        certificate: Certificate {
            tested_polynomial: tested,
            dividing_d: verdict.dividing_d,
            nullity: verdict.nullity,
        },
        block_nullity,
        oracle_determinant: None,
        oracle_nullity: None,
        agreement: None,
    };
    if with_oracle {
        let graph = CayleyGraph::build(set.clone());
        let det = graph
            .adjacency()
            .determinant()
            .expect("adjacency matrix is square");
        report.oracle_nullity = Some(graph.adjacency().nullity() as u64);
        report.agreement = Some(det.is_zero() == singular);
        report.oracle_determinant = Some(det);
    }
    report
}

/// Exact characteristic polynomial data plus advisory float eigenvalues.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "groupKind", rename_all = "camelCase")]
pub enum SpectrumReport {
    #[serde(rename = "cyclic", rename_all = "camelCase")]
    Cyclic {
        n: u64,
        connecting_set: String,
        char_poly: IntPolynomial,
        /// Connection polynomial evaluated at the unit roots, sorted
        /// descending. Advisory floats; never used for verdicts.
        eigenvalues: Vec<f64>,
    },
    #[serde(rename = "dihedral", rename_all = "camelCase")]
    Dihedral {
        n: u64,
        connecting_set: String,
        /// Characteristic polynomial of the block sum `M + N`.
        factor_sum: IntPolynomial,
        /// Characteristic polynomial of the block difference `M - N`.
        factor_difference: IntPolynomial,
        /// Product of the factors: the characteristic polynomial of the
        /// whole adjacency matrix.
        product: IntPolynomial,
    },
}

pub fn spectrum(set: &ConnectingSet) -> SpectrumReport {
    match set.kind() {
        GroupKind::Cyclic => {
            let graph = CayleyGraph::build(set.clone());
            let char_poly = graph
                .adjacency()
                .char_poly()
                .expect("adjacency matrix is square");
            let psi = connection_polynomial(set);
            let mut eigenvalues: Vec<f64> = psi
                .evaluate_at_unit_roots(set.n() as usize)
                .into_iter()
                .map(|z| z.re)
                .collect();
            eigenvalues.sort_by(|a, b| b.partial_cmp(a).expect("finite floats"));
            SpectrumReport::Cyclic {
                n: set.n(),
                connecting_set: format_set(set),
                char_poly,
                eigenvalues,
            }
        }
        GroupKind::Dihedral => {
            let graph = CayleyGraph::build(set.clone());
            let blocks = crate::dihedral::BlockDecomposition::from_graph(&graph)
                .expect("canonical adjacency decomposes");
            let (factor_sum, factor_difference) = crate::dihedral::char_poly_factorization(&blocks);
            let product = &factor_sum * &factor_difference;
            SpectrumReport::Dihedral {
                n: set.n(),
                connecting_set: format_set(set),
                factor_sum,
                factor_difference,
                product,
            }
        }
    }
}

pub(crate) mod bigint_string {
    use num_bigint::BigInt;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, serializer: S) -> Result<S::Ok, S::Error> {
        v.to_string().serialize(serializer)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse::<BigInt>()
            .map_err(|e| D::Error::custom(format!("bad integer {s:?}: {e}")))
    }
}

mod opt_bigint_string {
    use num_bigint::BigInt;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<BigInt>, serializer: S) -> Result<S::Ok, S::Error> {
        v.as_ref().map(BigInt::to_string).serialize(serializer)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        deserializer: D,
    ) -> Result<Option<BigInt>, D::Error> {
        let s = Option::<String>::deserialize(deserializer)?;
        s.map(|s| {
            s.parse::<BigInt>()
                .map_err(|e| D::Error::custom(format!("bad integer {s:?}: {e}")))
        })
        .transpose()
    }
}
