//! Exact arithmetic in the cyclic group `C_n` and the dihedral group `D_n`,
//! connecting-set validation, and Cayley-graph construction.
//!
//! `D_n` is generated by a rotation `a` of order `n` and a reflection `b`
//! with `b a b = a^-1`; every element has the normal form `a^i b^e` with
//! `0 <= i < n` and `e` in `{0, 1}`. Vertices are enumerated rotations
//! first (`a, a^2, ..., a^n`, identity last) and then, for dihedral graphs,
//! the reflections `ab, a^2 b, ..., a^n b` in the same exponent order; the
//! adjacency matrices this module builds are always indexed that way.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::oracle::ExactMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupKind {
    Cyclic,
    Dihedral,
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupKind::Cyclic => write!(f, "cyclic"),
            GroupKind::Dihedral => write!(f, "dihedral"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("group order must be at least 3, got {0}")]
    OrderTooSmall(u64),
    #[error("group order mismatch: {0} vs {1}")]
    OrderMismatch(u64, u64),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SetError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("a connecting set may not contain the identity")]
    ContainsIdentity,
    #[error("set is not symmetric: contains {element} but not its inverse {inverse}")]
    NotSymmetric {
        element: DihedralElement,
        inverse: DihedralElement,
    },
    #[error("set does not generate the group")]
    NotGenerating,
    #[error("reflection {0} cannot belong to a cyclic-group set")]
    ReflectionInCyclicSet(DihedralElement),
    #[error("exponent {value} out of range for group order {n}")]
    ExponentOutOfRange { value: u64, n: u64 },
}

/// A group element in normal form `a^i b^e`. Rotations have `reflected =
/// false`; with `n >= 3` fixed per element, mixed-order arithmetic is
/// rejected.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DihedralElement {
    n: u64,
    exponent: u64,
    reflected: bool,
}

impl DihedralElement {
    pub fn identity(n: u64) -> Self {
        DihedralElement::rotation(n, 0)
    }

    /// `a^exponent`; the exponent is reduced mod `n`.
    pub fn rotation(n: u64, exponent: u64) -> Self {
        assert!(n >= 3, "group order must be at least 3");
        DihedralElement {
            n,
            exponent: exponent % n,
            reflected: false,
        }
    }

    /// `a^exponent b`; the exponent is reduced mod `n`.
    pub fn reflection(n: u64, exponent: u64) -> Self {
        assert!(n >= 3, "group order must be at least 3");
        DihedralElement {
            n,
            exponent: exponent % n,
            reflected: true,
        }
    }

    pub fn order_parameter(&self) -> u64 {
        self.n
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn is_reflection(&self) -> bool {
        self.reflected
    }

    pub fn is_identity(&self) -> bool {
        !self.reflected && self.exponent == 0
    }

    /// Product in normal form: `a^i b . a^j = a^(i-j) b` and
    /// `a^i . a^j = a^(i+j)`, exponents reduced mod `n`.
    pub fn multiply(&self, rhs: &DihedralElement) -> Result<DihedralElement, GroupError> {
        if self.n != rhs.n {
            return Err(GroupError::OrderMismatch(self.n, rhs.n));
        }
        let n = self.n;
        let exponent = if self.reflected {
            (self.exponent + n - rhs.exponent) % n
        } else {
            (self.exponent + rhs.exponent) % n
        };
        Ok(DihedralElement {
            n,
            exponent,
            reflected: self.reflected ^ rhs.reflected,
        })
    }

    /// Rotations invert to `a^(n-i)`; reflections are involutions.
    pub fn inverse(&self) -> DihedralElement {
        if self.reflected {
            *self
        } else {
            DihedralElement {
                n: self.n,
                exponent: (self.n - self.exponent) % self.n,
                reflected: false,
            }
        }
    }
}

impl fmt::Display for DihedralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.exponent, self.reflected) {
            (0, false) => write!(f, "1"),
            (0, true) => write!(f, "b"),
            (1, false) => write!(f, "a"),
            (1, true) => write!(f, "ab"),
            (k, false) => write!(f, "a^{k}"),
            (k, true) => write!(f, "a^{k}b"),
        }
    }
}

impl fmt::Debug for DihedralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (n={})", self.n)
    }
}

/// A validated symmetric identity-free subset of `C_n` or `D_n`, the graph
/// generator. Rotation members are kept as exponents of `a` in `[1, n)`,
/// reflection members as the `j` of `a^j b` in `[0, n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectingSet {
    n: u64,
    kind: GroupKind,
    rotation_part: BTreeSet<u64>,
    reflection_part: BTreeSet<u64>,
    is_generating: bool,
}

impl ConnectingSet {
    /// Validates a raw element list. The symmetry and identity conditions
    /// always hold for a returned set; the generation condition is enforced
    /// only when `require_generating` is set, but its outcome is recorded
    /// either way.
    pub fn validate(
        raw: &[DihedralElement],
        n: u64,
        kind: GroupKind,
        require_generating: bool,
    ) -> Result<ConnectingSet, SetError> {
        if n < 3 {
            return Err(GroupError::OrderTooSmall(n).into());
        }
        let mut rotation_part = BTreeSet::new();
        let mut reflection_part = BTreeSet::new();
        for e in raw {
            if e.order_parameter() != n {
                return Err(GroupError::OrderMismatch(n, e.order_parameter()).into());
            }
            if e.is_identity() {
                return Err(SetError::ContainsIdentity);
            }
            if e.is_reflection() {
                if kind == GroupKind::Cyclic {
                    return Err(SetError::ReflectionInCyclicSet(*e));
                }
                reflection_part.insert(e.exponent());
            } else {
                rotation_part.insert(e.exponent());
            }
        }
        for &k in &rotation_part {
            if !rotation_part.contains(&((n - k) % n)) {
                return Err(SetError::NotSymmetric {
                    element: DihedralElement::rotation(n, k),
                    inverse: DihedralElement::rotation(n, n - k),
                });
            }
        }
        let mut set = ConnectingSet {
            n,
            kind,
            rotation_part,
            reflection_part,
            is_generating: false,
        };
        set.is_generating = set.generates();
        if require_generating && !set.is_generating {
            return Err(SetError::NotGenerating);
        }
        Ok(set)
    }

    /// Convenience constructor from exponent lists. Rotation exponents must
    /// lie in `[1, n)` and reflection exponents in `[0, n)`.
    pub fn from_exponents(
        n: u64,
        kind: GroupKind,
        rotations: impl IntoIterator<Item = u64>,
        reflections: impl IntoIterator<Item = u64>,
        require_generating: bool,
    ) -> Result<ConnectingSet, SetError> {
        if n < 3 {
            return Err(GroupError::OrderTooSmall(n).into());
        }
        let mut raw = Vec::new();
        for k in rotations {
            if k >= n {
                return Err(SetError::ExponentOutOfRange { value: k, n });
            }
            if k == 0 {
                return Err(SetError::ContainsIdentity);
            }
            raw.push(DihedralElement::rotation(n, k));
        }
        for j in reflections {
            if j >= n {
                return Err(SetError::ExponentOutOfRange { value: j, n });
            }
            raw.push(DihedralElement::reflection(n, j));
        }
        ConnectingSet::validate(&raw, n, kind, require_generating)
    }

    /// Closure over products, starting from the identity: the set generates
    /// iff the closure reaches the whole group.
    fn generates(&self) -> bool {
        let gens: Vec<DihedralElement> = self.elements().collect();
        if gens.is_empty() {
            return false;
        }
        let mut seen: BTreeSet<DihedralElement> = BTreeSet::new();
        let mut frontier = vec![DihedralElement::identity(self.n)];
        seen.insert(frontier[0]);
        while let Some(e) = frontier.pop() {
            for g in &gens {
                let next = e.multiply(g).expect("orders match");
                if seen.insert(next) {
                    frontier.push(next);
                }
            }
        }
        seen.len() as u64 == self.group_order()
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    /// Number of vertices of the Cayley graph: `n` or `2n`.
    pub fn group_order(&self) -> u64 {
        match self.kind {
            GroupKind::Cyclic => self.n,
            GroupKind::Dihedral => 2 * self.n,
        }
    }

    pub fn rotation_exponents(&self) -> &BTreeSet<u64> {
        &self.rotation_part
    }

    pub fn reflection_exponents(&self) -> &BTreeSet<u64> {
        &self.reflection_part
    }

    pub fn is_generating(&self) -> bool {
        self.is_generating
    }

    pub fn is_empty(&self) -> bool {
        self.rotation_part.is_empty() && self.reflection_part.is_empty()
    }

    /// Vertex degree of the Cayley graph.
    pub fn degree(&self) -> u64 {
        (self.rotation_part.len() + self.reflection_part.len()) as u64
    }

    pub fn contains(&self, e: &DihedralElement) -> bool {
        e.order_parameter() == self.n
            && if e.is_reflection() {
                self.reflection_part.contains(&e.exponent())
            } else {
                !e.is_identity() && self.rotation_part.contains(&e.exponent())
            }
    }

    pub fn elements(&self) -> impl Iterator<Item = DihedralElement> + '_ {
        let n = self.n;
        self.rotation_part
            .iter()
            .map(move |&k| DihedralElement::rotation(n, k))
            .chain(
                self.reflection_part
                    .iter()
                    .map(move |&j| DihedralElement::reflection(n, j)),
            )
    }
}

/// A Cayley graph with adjacency rows/columns in the canonical vertex
/// enumeration (rotations `a..a^n`, then reflections `ab..a^n b`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyGraph {
    connecting_set: ConnectingSet,
    adjacency: ExactMatrix,
}

impl CayleyGraph {
    /// Vertices `u, v` are adjacent iff `v u^-1` lies in the connecting set.
    pub fn build(connecting_set: ConnectingSet) -> CayleyGraph {
        let order = connecting_set.group_order() as usize;
        let vertices: Vec<DihedralElement> =
            (0..order).map(|i| vertex_at(&connecting_set, i)).collect();
        let adjacency = ExactMatrix::from_fn(order, order, |i, j| {
            let vu_inv = vertices[j]
                .multiply(&vertices[i].inverse())
                .expect("orders match");
            if connecting_set.contains(&vu_inv) {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        });
        CayleyGraph {
            connecting_set,
            adjacency,
        }
    }

    pub fn connecting_set(&self) -> &ConnectingSet {
        &self.connecting_set
    }

    pub fn kind(&self) -> GroupKind {
        self.connecting_set.kind()
    }

    pub fn vertex_count(&self) -> usize {
        self.connecting_set.group_order() as usize
    }

    /// The vertex at enumeration index `i`.
    pub fn vertex(&self, i: usize) -> DihedralElement {
        vertex_at(&self.connecting_set, i)
    }

    /// Enumeration index of a vertex.
    pub fn vertex_index(&self, e: &DihedralElement) -> usize {
        let n = self.connecting_set.n() as usize;
        let pos = (e.exponent() as usize + n - 1) % n;
        if e.is_reflection() {
            n + pos
        } else {
            pos
        }
    }

    pub fn adjacency(&self) -> &ExactMatrix {
        &self.adjacency
    }

    /// Whether the right translation `v -> v g` preserves adjacency. Holds
    /// for every `g`; exposed as a test utility.
    pub fn right_translation_is_automorphism(&self, g: &DihedralElement) -> bool {
        let order = self.vertex_count();
        let image: Vec<usize> = (0..order)
            .map(|i| self.vertex_index(&self.vertex(i).multiply(g).expect("orders match")))
            .collect();
        (0..order).all(|i| {
            (0..order).all(|j| self.adjacency.get(i, j) == self.adjacency.get(image[i], image[j]))
        })
    }
}

fn vertex_at(set: &ConnectingSet, i: usize) -> DihedralElement {
    let n = set.n() as usize;
    debug_assert!(i < set.group_order() as usize);
    // index 0 is a, index n-1 is a^n = 1, then reflections in the same order
    if i < n {
        DihedralElement::rotation(set.n(), (i as u64 + 1) % set.n())
    } else {
        DihedralElement::reflection(set.n(), ((i - n) as u64 + 1) % set.n())
    }
}
