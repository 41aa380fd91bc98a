//! Double-description (Motzkin) iteration for the extreme rays of a pointed
//! polyhedral cone `{ y : ⟨row, y⟩ ≥ 0 for every row }`, exact over Q.
//!
//! Adjacency of rays is decided by the combinatorial test: two rays are
//! adjacent iff no third ray vanishes on every constraint where both vanish.

use num_traits::{Signed, Zero};

use crate::linalg::{inverse, rref};
use crate::rational::{dot, primitive, QVec, Q};

#[derive(Clone, Debug, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn is_subset_of(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }
}

struct Ray {
    v: QVec,
    zeros: Bits,
}

/// The constraint system does not define a pointed cone.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NotPointed;

/// Extreme rays of `{ y ∈ Q^dim : ⟨row, y⟩ ≥ 0 }`, each scaled to a
/// primitive integer vector. Fails when the rows do not have full rank.
pub fn extreme_rays(rows: &[QVec], dim: usize) -> Result<Vec<QVec>, NotPointed> {
    let m = rows.len();

    // greedy choice of `dim` independent rows for the initial simplicial cone
    let mut basis_idx: Vec<usize> = Vec::new();
    let mut basis_rows: Vec<QVec> = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        let mut trial = basis_rows.clone();
        trial.push(row.clone());
        if rref(&trial, dim).1.len() > basis_rows.len() {
            basis_rows = trial;
            basis_idx.push(i);
            if basis_idx.len() == dim {
                break;
            }
        }
    }
    if basis_idx.len() < dim {
        return Err(NotPointed);
    }
    let inv = inverse(&basis_rows).ok_or(NotPointed)?;

    let mut processed = vec![false; m];
    for &i in &basis_idx {
        processed[i] = true;
    }
    let mut rays: Vec<Ray> = (0..dim)
        .map(|j| {
            let column: QVec = inv.iter().map(|r| r[j].clone()).collect();
            let mut zeros = Bits::new(m);
            for (k, &i) in basis_idx.iter().enumerate() {
                if k != j {
                    zeros.set(i);
                }
            }
            Ray { v: primitive(&column).0, zeros }
        })
        .collect();

    for (k, row) in rows.iter().enumerate() {
        if processed[k] {
            continue;
        }
        processed[k] = true;
        let values: Vec<Q> = rays.iter().map(|r| dot(row, &r.v)).collect();
        if values.iter().all(|v| !v.is_negative()) {
            for (ray, val) in rays.iter_mut().zip(&values) {
                if val.is_zero() {
                    ray.zeros.set(k);
                }
            }
            continue;
        }
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_negative()).collect();

        let mut fresh: Vec<Ray> = Vec::new();
        for &p in &pos {
            for &n in &neg {
                let common = rays[p].zeros.and(&rays[n].zeros);
                if common.count() + 2 < dim {
                    continue;
                }
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(i, r)| i == p || i == n || !common.is_subset_of(&r.zeros));
                if !adjacent {
                    continue;
                }
                let combined: QVec = rays[n]
                    .v
                    .iter()
                    .zip(&rays[p].v)
                    .map(|(xn, xp)| &values[p] * xn - &values[n] * xp)
                    .collect();
                let mut zeros = common;
                zeros.set(k);
                fresh.push(Ray { v: primitive(&combined).0, zeros });
            }
        }

        let mut next: Vec<Ray> = Vec::with_capacity(rays.len() + fresh.len());
        for (i, mut ray) in rays.into_iter().enumerate() {
            if values[i].is_negative() {
                continue;
            }
            if values[i].is_zero() {
                ray.zeros.set(k);
            }
            next.push(ray);
        }
        next.extend(fresh);
        rays = next;
    }

    Ok(rays.into_iter().map(|r| r.v).collect())
}
