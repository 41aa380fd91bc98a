//! Exact linear optimization over small polytopes by vertex enumeration.

use num_traits::{One, Signed};

use super::{Face, Halfspace, Polytope, PolytopeError};
use crate::linalg::solve_affine;
use crate::rational::{centroid, dot, QVec, Q};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpMax {
    pub value: Q,
    pub argmax: Face,
}

pub(super) fn maximize(p: &Polytope, gamma: &[Q]) -> LpMax {
    let values: Vec<Q> = p.vertices().iter().map(|v| dot(gamma, v)).collect();
    let value = values.iter().max().expect("polytopes are nonempty").clone();
    let winners: Vec<usize> = (0..values.len()).filter(|&i| values[i] == value).collect();
    LpMax { value, argmax: p.face_of_vertices(&winners) }
}

/// Strictly positive barycentric coordinates of `target` over `generators`,
/// chosen to maximize the smallest coefficient. Among optimal solutions the
/// centroid of the optimal vertices is returned, which makes the choice
/// canonical.
pub fn barycentric_interior(target: &[Q], generators: &[QVec]) -> Result<QVec, PolytopeError> {
    match max_min_coefficients(target, generators)? {
        Some((kappa, t)) if t.is_positive() => Ok(kappa),
        _ => Err(PolytopeError::NotRelativeInterior),
    }
}

/// Convex-combination coefficients of `target` over `generators`, if any.
pub fn convex_coefficients(target: &[Q], generators: &[QVec]) -> Result<Option<QVec>, PolytopeError> {
    Ok(max_min_coefficients(target, generators)?
        .filter(|(_, t)| !t.is_negative())
        .map(|(kappa, _)| kappa))
}

/// Affine coefficients maximizing the smallest entry, with that entry; `None`
/// when no affine combination has all entries at least -1.
fn max_min_coefficients(target: &[Q], generators: &[QVec]) -> Result<Option<(QVec, Q)>, PolytopeError> {
    let k = generators.len();
    if k == 0 {
        return Err(PolytopeError::EmptyInput);
    }
    let dim = target.len();
    if let Some(g) = generators.iter().find(|g| g.len() != dim) {
        return Err(PolytopeError::DimensionMismatch { expected: dim, got: g.len() });
    }

    // Σ κ_i g_i = target, Σ κ_i = 1
    let mut rows: Vec<QVec> = (0..dim).map(|c| generators.iter().map(|g| g[c].clone()).collect()).collect();
    rows.push(vec![Q::one(); k]);
    let mut rhs: QVec = target.to_vec();
    rhs.push(Q::one());
    let Some((kappa0, null)) = solve_affine(&rows, &rhs, k) else {
        return Ok(None);
    };

    if null.is_empty() {
        let t = kappa0.iter().min().expect("k > 0").clone();
        return Ok(Some((kappa0, t)));
    }

    // variables (z, t): κ = κ0 + N z, maximize t subject to κ_i ≥ t, t ≥ -1
    let q = null.len();
    let mut ineqs: Vec<Halfspace> = (0..k)
        .map(|i| {
            let mut normal: QVec = null.iter().map(|n| -n[i].clone()).collect();
            normal.push(Q::one());
            Halfspace { normal, offset: kappa0[i].clone() }
        })
        .collect();
    let mut floor = vec![Q::from_integer(0.into()); q + 1];
    floor[q] = -Q::one();
    ineqs.push(Halfspace { normal: floor, offset: Q::one() });

    let feasible = match Polytope::from_inequalities(&ineqs, q + 1) {
        Ok(p) => p,
        Err(PolytopeError::Infeasible) => return Ok(None),
        Err(e) => return Err(e),
    };
    let best = feasible.vertices().iter().map(|v| v[q].clone()).max().expect("nonempty");
    let winners: Vec<&QVec> = feasible.vertices().iter().filter(|v| v[q] == best).collect();
    let zt = centroid(&winners);
    let kappa = (0..k)
        .map(|i| &kappa0[i] + null.iter().zip(&zt[..q]).fold(Q::from_integer(0.into()), |a, (n, z)| a + &n[i] * z))
        .collect();
    Ok(Some((kappa, best)))
}
