//! The Cartan density `∏_{α∈Σ⁺} (2 sinh⟨α|a⟩)^{m_α}` as a signed sum of
//! exponentials `Σ_γ h_γ e^{⟨γ|a⟩}`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::polytope::{Face, Polytope};
use crate::rational::{to_f64_vec, Q};
use crate::rootsys::{RootSystem, Weight};

/// Collected exponential sum; every stored coefficient is nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpSum {
    terms: BTreeMap<Weight, i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpTerm {
    pub weight: Weight,
    pub coefficient: i64,
}

impl Serialize for ExpSum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.terms().serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExpSum {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let terms = Vec::<ExpTerm>::deserialize(d)?;
        let mut map = BTreeMap::new();
        for t in terms {
            if t.coefficient == 0 || map.insert(t.weight, t.coefficient).is_some() {
                return Err(serde::de::Error::custom("zero or repeated exponent"));
            }
        }
        Ok(ExpSum { terms: map })
    }
}

impl ExpSum {
    /// Expands the density, collecting like exponents after every factor.
    pub fn expand(rs: &RootSystem) -> Self {
        let mut terms: BTreeMap<Weight, i64> = BTreeMap::from([(rs.zero_weight(), 1)]);
        for p in rs.positive_roots() {
            for _ in 0..p.multiplicity {
                let mut next: BTreeMap<Weight, i64> = BTreeMap::new();
                for (w, h) in &terms {
                    *next.entry(w.add(&p.root)).or_default() += h;
                    *next.entry(w.sub(&p.root)).or_default() -= h;
                }
                next.retain(|_, h| *h != 0);
                terms = next;
            }
        }
        ExpSum { terms }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: &Weight) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, i64)> {
        self.terms.iter().map(|(w, h)| (w, *h))
    }

    pub fn exponents(&self) -> Vec<Weight> {
        self.terms.keys().cloned().collect()
    }

    pub fn terms(&self) -> Vec<ExpTerm> {
        self.terms.iter().map(|(w, h)| ExpTerm { weight: w.clone(), coefficient: *h }).collect()
    }

    /// Splits the exponents into those with `γ/d` on `face` of `c`, and the
    /// rest. `c` is in weight coordinates of `rs`.
    pub fn split(&self, rs: &RootSystem, c: &Polytope, face: &Face, d: &Q) -> (Vec<Weight>, Vec<Weight>) {
        let inv = Q::from_integer(1.into()) / d;
        self.terms
            .keys()
            .cloned()
            .partition(|g| c.face_contains(face, &rs.weight_coords(&g.scale(&inv))))
    }

    /// True iff `γ/d ∈ c` for every nonzero exponent `γ`.
    pub fn audit_scaled_membership(&self, rs: &RootSystem, c: &Polytope, d: &Q) -> bool {
        let inv = Q::from_integer(1.into()) / d;
        self.terms
            .keys()
            .filter(|g| !g.is_zero())
            .all(|g| c.contains(&rs.weight_coords(&g.scale(&inv))))
    }

    /// `Σ h_γ e^{⟨γ|a⟩}` for `a` in ambient coordinates.
    pub fn eval(&self, a: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(g, h)| {
                let x: f64 = to_f64_vec(&g.0).iter().zip(a).map(|(gi, ai)| gi * ai).sum();
                *h as f64 * x.exp()
            })
            .sum()
    }
}

/// The product form `∏ (2 sinh⟨α|a⟩)^{m_α}` evaluated directly.
pub fn sinh_product(rs: &RootSystem, a: &[f64]) -> f64 {
    rs.positive_roots()
        .iter()
        .map(|p| {
            let x: f64 = to_f64_vec(&p.root.0).iter().zip(a).map(|(r, ai)| r * ai).sum();
            (2.0 * x.sinh()).powi(p.multiplicity as i32)
        })
        .product()
}
