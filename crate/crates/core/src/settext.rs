//! Text form of connecting sets.
//!
//! Cyclic sets are comma-separated rotation exponents, e.g. `1,3` for
//! `{a, a^3}`. Dihedral sets use semicolon-separated segments `r:` for
//! rotation exponents and `f:` for reflection exponents (`j` standing for
//! `a^j b`), e.g. `r:1,2;f:0,1`; either segment may be omitted. Whitespace
//! is ignored everywhere; the empty string is the empty set.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::group::{ConnectingSet, GroupKind, SetError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("invalid integer {0:?}")]
    BadInteger(String),
    #[error("unknown segment {0:?}; expected \"r:...\" or \"f:...\"")]
    UnknownSegment(String),
    #[error("segment {0:?} appears twice")]
    DuplicateSegment(String),
    #[error("cyclic sets have no r:/f: segments; give bare exponents")]
    SegmentInCyclicSet,
    #[error(transparent)]
    Invalid(#[from] SetError),
}

/// Parses the text form and validates the resulting set.
pub fn parse_set(
    kind: GroupKind,
    n: u64,
    text: &str,
    require_generating: bool,
) -> Result<ConnectingSet, ParseError> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let (rotations, reflections) = match kind {
        GroupKind::Cyclic => {
            if compact.contains(':') || compact.contains(';') {
                return Err(ParseError::SegmentInCyclicSet);
            }
            (parse_exponents(&compact)?, Vec::new())
        }
        GroupKind::Dihedral => {
            let mut rotations = None;
            let mut reflections = None;
            for segment in compact.split(';').filter(|s| !s.is_empty()) {
                if let Some(rest) = segment.strip_prefix("r:") {
                    if rotations.replace(parse_exponents(rest)?).is_some() {
                        return Err(ParseError::DuplicateSegment("r".into()));
                    }
                } else if let Some(rest) = segment.strip_prefix("f:") {
                    if reflections.replace(parse_exponents(rest)?).is_some() {
                        return Err(ParseError::DuplicateSegment("f".into()));
                    }
                } else {
                    return Err(ParseError::UnknownSegment(segment.to_string()));
                }
            }
            (rotations.unwrap_or_default(), reflections.unwrap_or_default())
        }
    };
    Ok(ConnectingSet::from_exponents(
        n,
        kind,
        rotations,
        reflections,
        require_generating,
    )?)
}

fn parse_exponents(text: &str) -> Result<Vec<u64>, ParseError> {
    text.split(',')
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<u64>()
                .map_err(|_| ParseError::BadInteger(s.to_string()))
        })
        .collect()
}

/// Canonical text form; parsing it back yields the same set.
pub fn format_set(set: &ConnectingSet) -> String {
    let join = |exps: &BTreeSet<u64>| {
        exps.iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(",")
    };
    match set.kind() {
        GroupKind::Cyclic => join(set.rotation_exponents()),
        GroupKind::Dihedral => {
            let mut parts = Vec::new();
            if !set.rotation_exponents().is_empty() {
                parts.push(format!("r:{}", join(set.rotation_exponents())));
            }
            if !set.reflection_exponents().is_empty() {
                parts.push(format!("f:{}", join(set.reflection_exponents())));
            }
            parts.join(";")
        }
    }
}
