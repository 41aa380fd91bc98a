//! Finite-dimensional representations recorded as exact weight multisets.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::rank;
use crate::polytope::Polytope;
use crate::rational::q;
use crate::rootsys::{RootSystem, Weight};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error("the standard representation needs a single A_(n-1) factor")]
    NotSimple,
    #[error("representations live over different root systems")]
    MismatchedRootSystems,
    #[error("weight has {got} coordinates, root system needs {expected}")]
    BadWeight { expected: usize, got: usize },
    #[error("representation fails validation: {0}")]
    Invalid(Violation),
}

/// A hypothesis of the growth analysis that a representation violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Violation {
    SumZero,
    FullSpan,
    OriginInterior,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Violation::SumZero => "weights do not sum to zero",
            Violation::FullSpan => "weights do not span the dual Cartan subalgebra",
            Violation::OriginInterior => "0 is not interior to the weight polytope",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Diagnostics {
    pub sum_zero: bool,
    pub full_span: bool,
    pub origin_interior: bool,
}

impl Diagnostics {
    pub fn passed(&self) -> bool {
        self.first_violation().is_none()
    }

    pub fn first_violation(&self) -> Option<Violation> {
        if !self.sum_zero {
            Some(Violation::SumZero)
        } else if !self.full_span {
            Some(Violation::FullSpan)
        } else if !self.origin_interior {
            Some(Violation::OriginInterior)
        } else {
            None
        }
    }
}

/// Weight multiset over a root system. Distinct weights are kept in first
/// insertion order; equality is multiset equality.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Representation {
    root_system: RootSystem,
    weights: Vec<WeightMult>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightMult {
    pub weight: Weight,
    pub multiplicity: u32,
}

impl PartialEq for Representation {
    fn eq(&self, other: &Self) -> bool {
        self.root_system == other.root_system && self.counts() == other.counts()
    }
}

impl Eq for Representation {}

impl Representation {
    /// Builds a representation from weights given with repetition. Weights
    /// are normalized blockwise.
    pub fn from_weights(rs: &RootSystem, weights: &[Weight]) -> Result<Self, RepError> {
        let mut rep = Representation { root_system: rs.clone(), weights: Vec::new() };
        for w in weights {
            if w.0.len() != rs.ambient_len() {
                return Err(RepError::BadWeight { expected: rs.ambient_len(), got: w.0.len() });
            }
            rep.push(rs.weight(&w.0), 1);
        }
        Ok(rep)
    }

    fn push(&mut self, weight: Weight, multiplicity: u32) {
        match self.weights.iter_mut().find(|e| e.weight == weight) {
            Some(e) => e.multiplicity += multiplicity,
            None => self.weights.push(WeightMult { weight, multiplicity }),
        }
    }

    /// `λ_1, …, λ_n` of `SL(n)`.
    pub fn standard(rs: &RootSystem) -> Result<Self, RepError> {
        if !rs.is_simple() {
            return Err(RepError::NotSimple);
        }
        let ws: Vec<Weight> = (0..rs.factors()[0]).map(|i| rs.lambda(0, i)).collect();
        Self::from_weights(rs, &ws)
    }

    /// All roots, plus the zero weight with multiplicity the rank.
    pub fn adjoint(rs: &RootSystem) -> Self {
        let mut rep = Representation { root_system: rs.clone(), weights: Vec::new() };
        for p in rs.positive_roots() {
            for _ in 0..p.multiplicity {
                rep.push(p.root.clone(), 1);
            }
        }
        rep.push(rs.zero_weight(), rs.rank() as u32);
        for p in rs.positive_roots() {
            for _ in 0..p.multiplicity {
                rep.push(p.root.neg(), 1);
            }
        }
        rep
    }

    /// The one-dimensional trivial representation.
    pub fn trivial(rs: &RootSystem) -> Self {
        let mut rep = Representation { root_system: rs.clone(), weights: Vec::new() };
        rep.push(rs.zero_weight(), 1);
        rep
    }

    pub fn dual(&self) -> Self {
        Representation {
            root_system: self.root_system.clone(),
            weights: self
                .weights
                .iter()
                .map(|e| WeightMult { weight: e.weight.neg(), multiplicity: e.multiplicity })
                .collect(),
        }
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self, RepError> {
        if self.root_system != other.root_system {
            return Err(RepError::MismatchedRootSystems);
        }
        let mut rep = self.clone();
        for e in &other.weights {
            rep.push(e.weight.clone(), e.multiplicity);
        }
        Ok(rep)
    }

    pub fn tensor(&self, other: &Self) -> Result<Self, RepError> {
        if self.root_system != other.root_system {
            return Err(RepError::MismatchedRootSystems);
        }
        let mut rep = Representation { root_system: self.root_system.clone(), weights: Vec::new() };
        for a in &self.weights {
            for b in &other.weights {
                rep.push(a.weight.add(&b.weight), a.multiplicity * b.multiplicity);
            }
        }
        Ok(rep)
    }

    /// Representation of the product group on the tensor product; weights
    /// are concatenated blockwise.
    pub fn external_tensor(&self, other: &Self) -> Self {
        let rs = self.root_system.product(&other.root_system);
        let mut rep = Representation { root_system: rs, weights: Vec::new() };
        for a in &self.weights {
            for b in &other.weights {
                let mut v = a.weight.0.clone();
                v.extend(b.weight.0.iter().cloned());
                rep.push(Weight(v), a.multiplicity * b.multiplicity);
            }
        }
        rep
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.root_system
    }

    /// Distinct weights with multiplicities, in insertion order.
    pub fn entries(&self) -> &[WeightMult] {
        &self.weights
    }

    pub fn distinct_weights(&self) -> Vec<Weight> {
        self.weights.iter().map(|e| e.weight.clone()).collect()
    }

    /// Weights with repetition, in insertion order.
    pub fn weights(&self) -> Vec<Weight> {
        self.weights
            .iter()
            .flat_map(|e| std::iter::repeat(e.weight.clone()).take(e.multiplicity as usize))
            .collect()
    }

    /// `dim V`.
    pub fn dim(&self) -> usize {
        self.weights.iter().map(|e| e.multiplicity as usize).sum()
    }

    pub fn multiplicity(&self, w: &Weight) -> u32 {
        self.weights.iter().find(|e| &e.weight == w).map_or(0, |e| e.multiplicity)
    }

    pub fn counts(&self) -> BTreeMap<Weight, u32> {
        self.weights.iter().map(|e| (e.weight.clone(), e.multiplicity)).collect()
    }

    /// The weight polytope `C` in intrinsic weight coordinates.
    pub fn weight_polytope(&self) -> Polytope {
        let pts: Vec<_> = self.weights.iter().map(|e| self.root_system.weight_coords(&e.weight)).collect();
        Polytope::hull(&pts, self.root_system.rank()).expect("representations are nonempty")
    }

    pub fn diagnostics(&self) -> Diagnostics {
        let rs = &self.root_system;
        let total = self
            .weights
            .iter()
            .fold(rs.zero_weight(), |acc, e| acc.add(&e.weight.scale(&q(e.multiplicity as i64))));
        let coords: Vec<_> = self.weights.iter().map(|e| rs.weight_coords(&e.weight)).collect();
        let full_span = rank(&coords, rs.rank()) == rs.rank();
        let origin_interior = full_span && self.weight_polytope().has_origin_in_interior();
        Diagnostics { sum_zero: total.is_zero(), full_span, origin_interior }
    }

    /// Succeeds iff every hypothesis of the growth analysis holds.
    pub fn validate(&self) -> Result<(), RepError> {
        match self.diagnostics().first_violation() {
            None => Ok(()),
            Some(v) => Err(RepError::Invalid(v)),
        }
    }
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .weights
            .iter()
            .map(|e| if e.multiplicity == 1 { e.weight.to_string() } else { format!("{}^{}", e.weight, e.multiplicity) })
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}
