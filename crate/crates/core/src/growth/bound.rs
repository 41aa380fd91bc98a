//! Rationals that may be unconstrained (the supremum of an empty family).

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::rational::{fmt_q, JsonRational, Q};

const UNCONSTRAINED: &str = "unconstrained";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    Finite(Q),
    Unconstrained,
}

impl Bound {
    pub fn finite(&self) -> Option<&Q> {
        match self {
            Bound::Finite(x) => Some(x),
            Bound::Unconstrained => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Bound::Finite(_))
    }

    /// Minimum, treating `Unconstrained` as `+∞`.
    pub fn min(self, other: Bound) -> Bound {
        match (self, other) {
            (Bound::Unconstrained, b) | (b, Bound::Unconstrained) => b,
            (Bound::Finite(a), Bound::Finite(b)) => Bound::Finite(a.min(b)),
        }
    }
}

impl PartialOrd for Bound {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Bound {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Bound::Finite(a), Bound::Finite(b)) => a.cmp(b),
            (Bound::Finite(_), Bound::Unconstrained) => Ordering::Less,
            (Bound::Unconstrained, Bound::Finite(_)) => Ordering::Greater,
            (Bound::Unconstrained, Bound::Unconstrained) => Ordering::Equal,
        }
    }
}

impl From<Q> for Bound {
    fn from(x: Q) -> Self {
        Bound::Finite(x)
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::Finite(x) => f.write_str(&fmt_q(x)),
            Bound::Unconstrained => f.write_str(UNCONSTRAINED),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Wire {
    Finite(JsonRational),
    Tag(String),
}

impl Serialize for Bound {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Bound::Finite(x) => JsonRational::from_q(x)
                .ok_or_else(|| serde::ser::Error::custom("rational out of i64 range"))?
                .serialize(s),
            Bound::Unconstrained => s.serialize_str(UNCONSTRAINED),
        }
    }
}

impl<'de> Deserialize<'de> for Bound {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match Wire::deserialize(d)? {
            Wire::Finite(j) => j
                .to_q()
                .map(Bound::Finite)
                .ok_or_else(|| serde::de::Error::custom("non-canonical rational")),
            Wire::Tag(t) if t == UNCONSTRAINED => Ok(Bound::Unconstrained),
            Wire::Tag(t) => Err(serde::de::Error::custom(format!("unknown bound tag {t:?}"))),
        }
    }
}
