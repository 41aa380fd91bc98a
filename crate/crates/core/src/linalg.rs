//! Exact Gaussian elimination over the rationals.

use num_traits::{One, Zero};

use crate::rational::{sub, zeros, QVec, Q};

/// Reduced row echelon form. Returns the reduced rows (zero rows dropped)
/// and the pivot column of each.
pub fn rref(rows: &[QVec], ncols: usize) -> (Vec<QVec>, Vec<usize>) {
    let mut m: Vec<QVec> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Q::one() / &m[r][c];
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..ncols {
                    let delta = &f * &m[r][j];
                    m[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(rows: &[QVec], ncols: usize) -> usize {
    rref(rows, ncols).1.len()
}

/// Dimension of the affine hull of a nonempty point set.
pub fn affine_rank(points: &[&QVec]) -> usize {
    let Some(first) = points.first() else {
        return 0;
    };
    let diffs: Vec<QVec> = points[1..].iter().map(|p| sub(p, first)).collect();
    rank(&diffs, first.len())
}

/// Solution set of `A x = b` as a particular solution plus a nullspace
/// basis, or `None` when the system is inconsistent.
pub fn solve_affine(a: &[QVec], b: &[Q], ncols: usize) -> Option<(QVec, Vec<QVec>)> {
    let aug: Vec<QVec> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let (red, pivots) = rref(&aug, ncols + 1);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut particular = zeros(ncols);
    for (row, &p) in red.iter().zip(&pivots) {
        particular[p] = row[ncols].clone();
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    let basis = free
        .iter()
        .map(|&f| {
            let mut v = zeros(ncols);
            v[f] = Q::one();
            for (row, &p) in red.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect();
    Some((particular, basis))
}

/// Inverse of a square matrix, `None` when singular.
pub fn inverse(m: &[QVec]) -> Option<Vec<QVec>> {
    let n = m.len();
    let aug: Vec<QVec> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    let (red, pivots) = rref(&aug, 2 * n);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(red.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn transpose(m: &[QVec]) -> Vec<QVec> {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len())
        .map(|j| m.iter().map(|row| row[j].clone()).collect())
        .collect()
}

/// Determinant by elimination.
pub fn det(m: &[QVec]) -> Q {
    let n = m.len();
    let mut a = m.to_vec();
    let mut d = Q::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Q::zero();
        };
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        d *= &a[c][c];
        for i in c + 1..n {
            if !a[i][c].is_zero() {
                let f = &a[i][c] / &a[c][c];
                for j in c..n {
                    let delta = &f * &a[c][j];
                    a[i][j] -= delta;
                }
            }
        }
    }
    d
}
