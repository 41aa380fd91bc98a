//! Exact rational convex polytopes: irredundant V- and H-representations,
//! polar duality, faces, and linear optimization by vertex enumeration.
//!
//! Facets are stored as `⟨normal | x⟩ ≤ offset` with `normal` a primitive
//! integer vector. A polytope of dimension below its ambient dimension also
//! carries the equations of its affine hull; its facet normals are then
//! taken with zero entries outside a fixed set of affine-hull coordinates,
//! which keeps them canonical.

mod dd;
mod lp;

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{affine_rank, rank, rref, solve_affine};
use crate::rational::{centroid, dot, primitive, scale, sub, zeros, QVec, Q};
use crate::rootsys::RootSystem;

pub use dd::{extreme_rays, NotPointed};
pub use lp::{barycentric_interior, convex_coefficients, LpMax};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolytopeError {
    #[error("convex hull of an empty point set")]
    EmptyInput,
    #[error("point has length {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("the origin is not an interior point")]
    OriginNotInterior,
    #[error("point is not in the polytope")]
    NotInPolytope,
    #[error("face must be a nonempty proper face")]
    ImproperFace,
    #[error("inequality system is infeasible")]
    Infeasible,
    #[error("inequality system is unbounded")]
    Unbounded,
    #[error("target is not in the relative interior of the generators' hull")]
    NotRelativeInterior,
}

/// `⟨normal | x⟩ ≤ offset` (or `=` for affine-hull equations).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Halfspace {
    #[serde(with = "crate::rational::serde_qvec")]
    pub normal: QVec,
    #[serde(with = "crate::rational::serde_q")]
    pub offset: Q,
}

impl Halfspace {
    fn slack(&self, x: &[Q]) -> Q {
        &self.offset - dot(&self.normal, x)
    }

    /// Rescales so the normal is a primitive integer vector.
    fn canonical(normal: QVec, offset: Q) -> Self {
        let (normal, factor) = primitive(&normal);
        Self { normal, offset: offset * factor }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Polytope {
    ambient_dim: usize,
    dim: usize,
    #[serde(with = "crate::rational::serde_qmat")]
    vertices: Vec<QVec>,
    facets: Vec<Halfspace>,
    equations: Vec<Halfspace>,
}

/// A nonempty face, identified by the facets tight on it (empty for the
/// polytope itself).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Face {
    pub tight_facets: Vec<usize>,
    pub vertices: Vec<usize>,
    pub dim: usize,
    #[serde(with = "crate::rational::serde_qvec")]
    pub relint_point: QVec,
}

impl Polytope {
    /// Convex hull of a nonempty point set.
    pub fn hull(points: &[QVec], ambient_dim: usize) -> Result<Self, PolytopeError> {
        if let Some(bad) = points.iter().find(|p| p.len() != ambient_dim) {
            return Err(PolytopeError::DimensionMismatch { expected: ambient_dim, got: bad.len() });
        }
        let distinct: Vec<QVec> = points.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
        let origin = distinct.first().ok_or(PolytopeError::EmptyInput)?.clone();

        let directions: Vec<QVec> = distinct[1..].iter().map(|p| sub(p, &origin)).collect();
        let (_, pivots) = rref(&directions, ambient_dim);
        let dim = pivots.len();

        let equations = if dim < ambient_dim {
            let null = solve_affine(&directions, &zeros(directions.len()), ambient_dim)
                .map(|(_, basis)| basis)
                .unwrap_or_default();
            // `solve_affine` on an empty system yields the standard basis
            let mut eqs: Vec<Halfspace> = null
                .into_iter()
                .map(|c| {
                    let off = dot(&c, &origin);
                    Halfspace::canonical(c, off)
                })
                .collect();
            eqs.sort();
            eqs
        } else {
            Vec::new()
        };

        if dim == 0 {
            return Ok(Self { ambient_dim, dim, vertices: vec![origin], facets: Vec::new(), equations });
        }

        let project = |p: &QVec| -> QVec { pivots.iter().map(|&i| p[i].clone()).collect() };
        let rows: Vec<QVec> = distinct
            .iter()
            .map(|p| {
                let mut row: QVec = project(p).iter().map(|x| -x).collect();
                row.push(Q::one());
                row
            })
            .collect();
        let rays = extreme_rays(&rows, dim + 1).expect("affinely spanning points give a pointed cone");

        let mut facets: Vec<Halfspace> = rays
            .into_iter()
            .filter(|ray| !ray[..dim].iter().all(Zero::is_zero))
            .map(|ray| {
                let mut normal = zeros(ambient_dim);
                for (k, &i) in pivots.iter().enumerate() {
                    normal[i] = ray[k].clone();
                }
                Halfspace::canonical(normal, ray[dim].clone())
            })
            .collect();
        facets.sort();
        facets.dedup();

        let vertices = distinct
            .into_iter()
            .filter(|p| {
                let tight: Vec<QVec> = facets
                    .iter()
                    .filter(|f| f.slack(p).is_zero())
                    .map(|f| project(&f.normal))
                    .collect();
                rank(&tight, dim) == dim
            })
            .collect();

        Ok(Self { ambient_dim, dim, vertices, facets, equations })
    }

    /// Bounded polytope `{ x : ⟨normal | x⟩ ≤ offset }`.
    pub fn from_inequalities(ineqs: &[Halfspace], ambient_dim: usize) -> Result<Self, PolytopeError> {
        let mut rows: Vec<QVec> = ineqs
            .iter()
            .map(|h| {
                let mut row: QVec = h.normal.iter().map(|x| -x).collect();
                row.push(h.offset.clone());
                row
            })
            .collect();
        let mut t_row = zeros(ambient_dim + 1);
        t_row[ambient_dim] = Q::one();
        rows.push(t_row);
        let rays = extreme_rays(&rows, ambient_dim + 1).map_err(|_| PolytopeError::Unbounded)?;
        let mut vertices = Vec::new();
        for ray in rays {
            let t = &ray[ambient_dim];
            if t.is_zero() {
                return Err(PolytopeError::Unbounded);
            }
            vertices.push(scale(&ray[..ambient_dim], &(Q::one() / t)));
        }
        if vertices.is_empty() {
            return Err(PolytopeError::Infeasible);
        }
        Self::hull(&vertices, ambient_dim)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[QVec] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Halfspace] {
        &self.facets
    }

    pub fn equations(&self) -> &[Halfspace] {
        &self.equations
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim == self.ambient_dim
    }

    pub fn contains(&self, x: &[Q]) -> bool {
        x.len() == self.ambient_dim
            && self.equations.iter().all(|e| e.slack(x).is_zero())
            && self.facets.iter().all(|f| !f.slack(x).is_negative())
    }

    /// Strict interior membership (requires full dimension).
    pub fn contains_in_interior(&self, x: &[Q]) -> bool {
        self.is_full_dimensional() && self.facets.iter().all(|f| f.slack(x).is_positive())
    }

    pub fn has_origin_in_interior(&self) -> bool {
        self.contains_in_interior(&zeros(self.ambient_dim))
    }

    /// The inequality system, with each equation split into two inequalities.
    pub fn halfspaces(&self) -> Vec<Halfspace> {
        let mut out = self.facets.clone();
        for e in &self.equations {
            out.push(e.clone());
            out.push(Halfspace { normal: e.normal.iter().map(|x| -x).collect(), offset: -e.offset.clone() });
        }
        out
    }

    /// Polar body `{ a : ⟨x | a⟩ ≤ 1 for all x in P }`.
    pub fn dual(&self) -> Result<Polytope, PolytopeError> {
        if !self.has_origin_in_interior() {
            return Err(PolytopeError::OriginNotInterior);
        }
        let points: Vec<QVec> = self
            .facets
            .iter()
            .map(|f| scale(&f.normal, &(Q::one() / &f.offset)))
            .collect();
        Polytope::hull(&points, self.ambient_dim)
    }

    /// The face cut out by the given tight facets (the whole polytope for an
    /// empty set).
    fn face_from_tight(&self, tight: Vec<usize>) -> Face {
        let vertices: Vec<usize> = (0..self.vertices.len())
            .filter(|&v| tight.iter().all(|&f| self.facets[f].slack(&self.vertices[v]).is_zero()))
            .collect();
        let pts: Vec<&QVec> = vertices.iter().map(|&v| &self.vertices[v]).collect();
        Face {
            dim: affine_rank(&pts),
            relint_point: centroid(&pts),
            tight_facets: tight,
            vertices,
        }
    }

    /// Smallest face containing `x`.
    pub fn minimal_face(&self, x: &[Q]) -> Result<Face, PolytopeError> {
        if !self.contains(x) {
            return Err(PolytopeError::NotInPolytope);
        }
        let tight = (0..self.facets.len()).filter(|&f| self.facets[f].slack(x).is_zero()).collect();
        Ok(self.face_from_tight(tight))
    }

    /// Smallest face containing the given vertices (by index).
    pub fn face_of_vertices(&self, vertex_idx: &[usize]) -> Face {
        let tight = (0..self.facets.len())
            .filter(|&f| vertex_idx.iter().all(|&v| self.facets[f].slack(&self.vertices[v]).is_zero()))
            .collect();
        self.face_from_tight(tight)
    }

    /// The facet with the given index, as a face.
    pub fn facet_face(&self, facet: usize) -> Face {
        self.face_from_tight(vec![facet])
    }

    pub fn whole_face(&self) -> Face {
        self.face_from_tight(Vec::new())
    }

    /// Whether `x` lies on the given face.
    pub fn face_contains(&self, face: &Face, x: &[Q]) -> bool {
        self.contains(x) && face.tight_facets.iter().all(|&f| self.facets[f].slack(x).is_zero())
    }

    pub fn is_proper(&self, face: &Face) -> bool {
        !face.tight_facets.is_empty()
    }

    /// The face `{ a ∈ P* : ⟨χ | a⟩ = 1 for all χ ∈ F }` of the polar body
    /// `dual`, which must be `self.dual()`.
    pub fn dual_face(&self, face: &Face, dual: &Polytope) -> Result<Face, PolytopeError> {
        if !self.is_proper(face) || face.vertices.is_empty() {
            return Err(PolytopeError::ImproperFace);
        }
        let points: Vec<QVec> = face
            .tight_facets
            .iter()
            .map(|&f| scale(&self.facets[f].normal, &(Q::one() / &self.facets[f].offset)))
            .collect();
        let refs: Vec<&QVec> = points.iter().collect();
        dual.minimal_face(&centroid(&refs))
    }

    /// Vertex indices of a face, as points.
    pub fn face_points(&self, face: &Face) -> Vec<QVec> {
        face.vertices.iter().map(|&v| self.vertices[v].clone()).collect()
    }

    /// Maximum of a linear form and the face where it is attained.
    pub fn lp_max(&self, gamma: &[Q]) -> LpMax {
        lp::maximize(self, gamma)
    }

    /// Same point set as `other` (vertex sets compared exactly).
    pub fn same_set(&self, other: &Polytope) -> bool {
        let a: BTreeSet<&QVec> = self.vertices.iter().collect();
        let b: BTreeSet<&QVec> = other.vertices.iter().collect();
        a == b
    }

    /// Scales every point by a positive rational factor.
    pub fn scaled(&self, factor: &Q) -> Polytope {
        assert!(factor.is_positive());
        let pts: Vec<QVec> = self.vertices.iter().map(|v| scale(v, factor)).collect();
        Polytope::hull(&pts, self.ambient_dim).expect("scaling preserves nonemptiness")
    }
}

/// `P ∩ 𝔞⁺` for a polytope `P` given in coweight coordinates of `rs`.
pub fn intersect_chamber(p: &Polytope, rs: &RootSystem) -> Result<Polytope, PolytopeError> {
    if p.ambient_dim() != rs.rank() {
        return Err(PolytopeError::DimensionMismatch { expected: rs.rank(), got: p.ambient_dim() });
    }
    let mut ineqs = p.halfspaces();
    for alpha in rs.simple_roots() {
        let normal: QVec = rs.weight_coords(alpha).iter().map(|x| -x).collect();
        ineqs.push(Halfspace { normal, offset: Q::zero() });
    }
    Polytope::from_inequalities(&ineqs, p.ambient_dim())
}
