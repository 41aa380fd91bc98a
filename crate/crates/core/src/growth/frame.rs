//! The adapted weight basis of the change of variables around `F_β`, and the
//! exponents and affine forms it produces.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{Exponents, Geometry, GrowthError};
use crate::linalg::{affine_rank, inverse, rank};
use crate::polytope::{barycentric_interior, Face};
use crate::rational::{dot, is_zero_vec, QVec, Q};
use crate::repspace::Representation;
use crate::rootsys::{ChamberVector, Weight};

/// An affine form `constant + Σ_j linear_j y_j` attached to a weight or a
/// positive root.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineForm {
    pub label: Weight,
    #[serde(with = "crate::rational::serde_q")]
    pub constant: Q,
    #[serde(with = "crate::rational::serde_qvec")]
    pub linear: QVec,
}

impl AffineForm {
    pub fn is_constant(&self) -> bool {
        is_zero_vec(&self.linear)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Frame {
    /// Facet index (into the facets of `C`) of `F′`.
    pub face_prime_facet: usize,
    pub face_prime: Face,
    /// Indices into the representation's distinct weights; the first `s + 1`
    /// form an affine basis of the hull of `F_β`.
    pub basis_idx: Vec<usize>,
    pub basis: Vec<Weight>,
    pub dual_basis: Vec<ChamberVector>,
    /// `⟨χ | χ_j*⟩` for every distinct weight `χ` (rows) and basis index `j`.
    #[serde(with = "crate::rational::serde_qmat")]
    pub pairings: Vec<QVec>,
    /// Exponents `γ_j` of the leading family, with `γ_j / d` on `F_β`.
    pub omega1: Vec<Weight>,
    /// `μ_{i,j}` for `i ≤ s + 1` (rows) and `γ_j` (columns).
    #[serde(with = "crate::rational::serde_qmat")]
    pub mu: Vec<QVec>,
    /// `R = Φ ∩ F_β` with the max-min barycentric coefficients of `β/d`.
    pub face_weights: Vec<Weight>,
    #[serde(with = "crate::rational::serde_qvec")]
    pub kappa: QVec,
    /// `τ_j = d κ_{χ_j} − 1` for `j ≤ s + 1`.
    #[serde(with = "crate::rational::serde_qvec")]
    pub tau_exp: QVec,
    pub weight_forms: Vec<AffineForm>,
    pub root_forms: Vec<AffineForm>,
}

/// A choice of `F′` and basis indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrameChoice {
    pub facet: usize,
    pub basis_idx: Vec<usize>,
}

fn weights_coords(rep: &Representation) -> Vec<QVec> {
    let rs = rep.root_system();
    rep.entries().iter().map(|e| rs.weight_coords(&e.weight)).collect()
}

fn on_facet(geo: &Geometry, facet: usize, x: &[Q]) -> bool {
    let h = &geo.c.facets()[facet];
    dot(&h.normal, x) == h.offset
}

/// Facets of `C` containing `F_β`, ordered by their sorted vertex lists.
pub fn facets_through(geo: &Geometry, ex: &Exponents) -> Vec<usize> {
    let mut facets: Vec<(Vec<QVec>, usize)> = ex
        .face_beta
        .tight_facets
        .iter()
        .map(|&f| {
            let mut vs = geo.c.face_points(&geo.c.facet_face(f));
            vs.sort();
            (vs, f)
        })
        .collect();
    facets.sort();
    facets.into_iter().map(|(_, f)| f).collect()
}

/// The deterministic choice: least `F′`, then greedy bases in weight order.
pub fn canonical_choice(rep: &Representation, geo: &Geometry, ex: &Exponents) -> Result<FrameChoice, GrowthError> {
    let facet = *facets_through(geo, ex).first().ok_or(GrowthError::BasisSelection)?;
    let coords = weights_coords(rep);
    let r = geo.rank;

    let mut chosen: Vec<usize> = Vec::new();
    for (i, x) in coords.iter().enumerate() {
        if chosen.len() == ex.s + 1 {
            break;
        }
        if !geo.c.face_contains(&ex.face_beta, x) {
            continue;
        }
        let mut pts: Vec<&QVec> = chosen.iter().map(|&k| &coords[k]).collect();
        pts.push(x);
        if affine_rank(&pts) == chosen.len() {
            chosen.push(i);
        }
    }
    if chosen.len() != ex.s + 1 {
        return Err(GrowthError::BasisSelection);
    }
    for (i, x) in coords.iter().enumerate() {
        if chosen.len() == r {
            break;
        }
        if chosen.contains(&i) || !on_facet(geo, facet, x) {
            continue;
        }
        let mut rows: Vec<QVec> = chosen.iter().map(|&k| coords[k].clone()).collect();
        rows.push(x.clone());
        if rank(&rows, r) == rows.len() {
            chosen.push(i);
        }
    }
    if chosen.len() != r {
        return Err(GrowthError::BasisSelection);
    }
    Ok(FrameChoice { facet, basis_idx: chosen })
}

fn combinations(pool: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &first) in pool.iter().enumerate() {
        if pool.len() - i < k {
            break;
        }
        for mut rest in combinations(&pool[i + 1..], k - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Every admissible choice, in lexicographic order of `(F′ rank, indices)`.
pub fn all_choices(rep: &Representation, geo: &Geometry, ex: &Exponents) -> Vec<FrameChoice> {
    let coords = weights_coords(rep);
    let r = geo.rank;
    let in_face: Vec<usize> = (0..coords.len()).filter(|&i| geo.c.face_contains(&ex.face_beta, &coords[i])).collect();
    let affine_bases: Vec<Vec<usize>> = combinations(&in_face, ex.s + 1)
        .into_iter()
        .filter(|b| affine_rank(&b.iter().map(|&i| &coords[i]).collect::<Vec<_>>()) == ex.s)
        .collect();

    let mut out = Vec::new();
    for facet in facets_through(geo, ex) {
        let on: Vec<usize> = (0..coords.len()).filter(|&i| on_facet(geo, facet, &coords[i])).collect();
        for head in &affine_bases {
            let pool: Vec<usize> = on.iter().copied().filter(|i| !head.contains(i)).collect();
            for tail in combinations(&pool, r - ex.s - 1) {
                let idx: Vec<usize> = head.iter().chain(&tail).copied().collect();
                let rows: Vec<QVec> = idx.iter().map(|&i| coords[i].clone()).collect();
                if rank(&rows, r) == r {
                    out.push(FrameChoice { facet, basis_idx: idx });
                }
            }
        }
    }
    out
}

impl Frame {
    pub fn build(
        rep: &Representation,
        geo: &Geometry,
        ex: &Exponents,
        omega1: &[Weight],
        choice: &FrameChoice,
    ) -> Result<Frame, GrowthError> {
        let rs = rep.root_system();
        let r = geo.rank;
        let s1 = ex.s + 1;
        let entries = rep.entries();
        let basis: Vec<Weight> = choice.basis_idx.iter().map(|&i| entries[i].weight.clone()).collect();
        let rows: Vec<QVec> = basis.iter().map(|w| rs.weight_coords(w)).collect();
        let inv = inverse(&rows).ok_or(GrowthError::BasisSelection)?;
        let dual_coords: Vec<QVec> = (0..r).map(|j| inv.iter().map(|row| row[j].clone()).collect()).collect();
        let dual_basis: Vec<ChamberVector> = dual_coords.iter().map(|b| rs.chamber_from_coords(b)).collect();

        let pair_row = |w: &Weight| -> QVec {
            let x = rs.weight_coords(w);
            dual_coords.iter().map(|b| dot(&x, b)).collect()
        };
        let pairings: Vec<QVec> = entries.iter().map(|e| pair_row(&e.weight)).collect();

        let inv_d = Q::one() / &ex.d;
        let mu: Vec<QVec> = (0..s1)
            .map(|i| omega1.iter().map(|g| pair_row(&g.scale(&inv_d))[i].clone()).collect())
            .collect();

        let face_weights: Vec<Weight> = entries
            .iter()
            .map(|e| e.weight.clone())
            .filter(|w| geo.c.face_contains(&ex.face_beta, &rs.weight_coords(w)))
            .collect();
        let target = rs.weight_coords(&rs.beta().scale(&inv_d));
        let gens: Vec<QVec> = face_weights.iter().map(|w| rs.weight_coords(w)).collect();
        let kappa = barycentric_interior(&target, &gens)?;
        let tau_exp: QVec = basis[..s1]
            .iter()
            .map(|b| {
                let k = face_weights.iter().position(|w| w == b).expect("affine basis lies in R");
                &ex.d * &kappa[k] - Q::one()
            })
            .collect();

        let form = |label: &Weight, p: &QVec, shift: Q| AffineForm {
            label: label.clone(),
            constant: p[..s1].iter().fold(Q::zero(), |a, x| a + x) - shift,
            linear: p[s1..].to_vec(),
        };
        let weight_forms = entries.iter().zip(&pairings).map(|(e, p)| form(&e.weight, p, Q::one())).collect();
        let root_forms = rs
            .positive_roots()
            .iter()
            .map(|a| form(&a.root, &pair_row(&a.root), Q::zero()))
            .collect();

        Ok(Frame {
            face_prime_facet: choice.facet,
            face_prime: geo.c.facet_face(choice.facet),
            basis_idx: choice.basis_idx.clone(),
            basis,
            dual_basis,
            pairings,
            omega1: omega1.to_vec(),
            mu,
            face_weights,
            kappa,
            tau_exp,
            weight_forms,
            root_forms,
        })
    }

    /// `s + 1`, the size of the affine part of the basis.
    pub fn affine_len(&self) -> usize {
        self.tau_exp.len()
    }
}
