//! Root systems of type A and their finite products.
//!
//! A factor `A_{n-1}` (the split group `SL(n, R)`) occupies a block of `n`
//! coordinates. Weights and chamber vectors are rational vectors that sum to
//! zero on every block; the duality pairing is the plain dot product. The
//! weight `λ_i` of a block is the coordinate functional `e_i` projected to
//! the sum-zero hyperplane, so `⟨λ_i | a⟩ = a_i`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rational::{dot, fmt_vec, q, qf, sub, zeros, QVec, Q};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootSystemError {
    #[error("type A_(n-1) needs n >= 2, got n = {0}")]
    TooSmall(usize),
    #[error("root system has no factors")]
    Empty,
    #[error("operation needs a single almost simple factor of rank >= 2")]
    NeedsHigherRankSimple,
}

/// A rational covector on the Cartan subalgebra, normalized to sum zero on
/// every factor block.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(#[serde(with = "crate::rational::serde_qvec")] pub QVec);

/// An element of the Cartan subalgebra, sum-zero on every block.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ChamberVector(#[serde(with = "crate::rational::serde_qvec")] pub QVec);

impl Weight {
    pub fn coords(&self) -> &[Q] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|x| -x).collect())
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(sub(&self.0, &other.0))
    }

    pub fn scale(&self, s: &Q) -> Weight {
        Weight(self.0.iter().map(|x| x * s).collect())
    }

    pub fn pair(&self, a: &ChamberVector) -> Q {
        dot(&self.0, &a.0)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_vec(&self.0))
    }
}

impl ChamberVector {
    pub fn coords(&self) -> &[Q] {
        &self.0
    }
}

/// Maximal-compact-subgroup data of one `SL(n, R)` factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CompactData {
    pub rank_k: usize,
    pub num_pos_roots_k: usize,
}

impl CompactData {
    /// Rank and positive-root count of `SO(n)` as tabulated for the lattice
    /// remainder estimates: explicit entries for `n <= 6`, closed formulas
    /// above that.
    pub fn for_sl(n: usize) -> Self {
        let (rank_k, num_pos_roots_k) = match n {
            2 | 3 => (1, 1),
            4 => (2, 2),
            6 => (3, 6),
            n if n % 2 == 1 => ((n - 1) / 2, (n * n - 2 * n - 3) / 4),
            n => (n / 2, (n * n - 2 * n) / 4),
        };
        Self { rank_k, num_pos_roots_k }
    }
}

/// Tabulated upper bound for `4m + 2 dim G` on `SL(n, R)`; `None` for `n = 2`
/// where the spectral-gap estimate does not apply.
pub fn tau1_table(n: usize) -> Option<i64> {
    match n {
        0..=2 => None,
        3 => Some(17),
        4 => Some(38),
        6 => Some(86),
        n => Some(3 * (n as i64) * (n as i64) - 1),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PositiveRoot {
    pub root: Weight,
    pub multiplicity: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct RootSystem {
    /// `n` for every `A_{n-1}` factor, in block order.
    factors: Vec<usize>,
    positive_roots: Vec<PositiveRoot>,
    simple_roots: Vec<Weight>,
    beta: Weight,
    dim_g: usize,
    compact: Vec<CompactData>,
    /// Half-sum of a maximal strongly orthogonal system of positive roots.
    l: Weight,
}

impl RootSystem {
    /// `A_{n-1}`, the root system of `SL(n, R)`.
    pub fn type_a(n: usize) -> Result<Self, RootSystemError> {
        if n < 2 {
            return Err(RootSystemError::TooSmall(n));
        }
        let unit = |i: usize| {
            let mut v = zeros(n);
            v[i] = Q::one();
            v
        };
        let root = |i: usize, j: usize| Weight(sub(&unit(i), &unit(j)));
        let mut positive_roots = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                positive_roots.push(PositiveRoot { root: root(i, j), multiplicity: 1 });
            }
        }
        let simple_roots = (0..n - 1).map(|i| root(i, i + 1)).collect();
        let beta = Weight((0..n).map(|i| q(n as i64 - 2 * i as i64 - 1)).collect());

        // sign pattern of the strongly orthogonal half-sum on the λ_i
        let half = n / 2;
        let l_coord = |i: usize| -> Q {
            if n % 2 == 0 {
                if i < half { qf(1, 2) } else { qf(-1, 2) }
            } else if i < half {
                qf(1, 2)
            } else if i == half {
                Q::zero()
            } else {
                qf(-1, 2)
            }
        };
        // Σ of the raw coefficients is zero in both parities, so no projection is needed
        let l = Weight((0..n).map(l_coord).collect());

        Ok(Self {
            factors: vec![n],
            positive_roots,
            simple_roots,
            beta,
            dim_g: n * n - 1,
            compact: vec![CompactData::for_sl(n)],
            l,
        })
    }

    /// Product root system; blocks are concatenated in order.
    pub fn product(&self, other: &RootSystem) -> RootSystem {
        let left = self.ambient_len();
        let right = other.ambient_len();
        let lift_left = |w: &Weight| {
            let mut v = w.0.clone();
            v.extend(zeros(right));
            Weight(v)
        };
        let lift_right = |w: &Weight| {
            let mut v = zeros(left);
            v.extend(w.0.iter().cloned());
            Weight(v)
        };
        let positive_roots = self
            .positive_roots
            .iter()
            .map(|p| PositiveRoot { root: lift_left(&p.root), multiplicity: p.multiplicity })
            .chain(other.positive_roots.iter().map(|p| PositiveRoot {
                root: lift_right(&p.root),
                multiplicity: p.multiplicity,
            }))
            .collect();
        let simple_roots = self
            .simple_roots
            .iter()
            .map(lift_left)
            .chain(other.simple_roots.iter().map(lift_right))
            .collect();
        RootSystem {
            factors: self.factors.iter().chain(&other.factors).copied().collect(),
            positive_roots,
            simple_roots,
            beta: lift_left(&self.beta).add(&lift_right(&other.beta)),
            dim_g: self.dim_g + other.dim_g,
            compact: self.compact.iter().chain(&other.compact).copied().collect(),
            l: lift_left(&self.l).add(&lift_right(&other.l)),
        }
    }

    /// Product of a nonempty list of type-A factors given by their `n`.
    pub fn product_of(ns: &[usize]) -> Result<RootSystem, RootSystemError> {
        let (first, rest) = ns.split_first().ok_or(RootSystemError::Empty)?;
        rest.iter().try_fold(Self::type_a(*first)?, |acc, &n| Ok(acc.product(&Self::type_a(n)?)))
    }

    pub fn factors(&self) -> &[usize] {
        &self.factors
    }

    pub fn is_simple(&self) -> bool {
        self.factors.len() == 1
    }

    /// Total number of coordinates.
    pub fn ambient_len(&self) -> usize {
        self.factors.iter().sum()
    }

    /// Real rank, the dimension of the Cartan subalgebra.
    pub fn rank(&self) -> usize {
        self.factors.iter().map(|n| n - 1).sum()
    }

    /// `(offset, n)` of every block.
    pub fn blocks(&self) -> Vec<(usize, usize)> {
        let mut offset = 0;
        self.factors
            .iter()
            .map(|&n| {
                let b = (offset, n);
                offset += n;
                b
            })
            .collect()
    }

    pub fn positive_roots(&self) -> &[PositiveRoot] {
        &self.positive_roots
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    pub fn beta(&self) -> &Weight {
        &self.beta
    }

    pub fn dim_g(&self) -> usize {
        self.dim_g
    }

    pub fn compact(&self) -> &[CompactData] {
        &self.compact
    }

    pub fn rank_k(&self) -> usize {
        self.compact.iter().map(|c| c.rank_k).sum()
    }

    pub fn num_pos_roots_k(&self) -> usize {
        self.compact.iter().map(|c| c.num_pos_roots_k).sum()
    }

    pub fn l(&self) -> &Weight {
        &self.l
    }

    /// Projects arbitrary coordinates to the sum-zero subspace of every block.
    pub fn normalize(&self, coords: &[Q]) -> QVec {
        assert_eq!(coords.len(), self.ambient_len(), "coordinate length mismatch");
        let mut out = coords.to_vec();
        for (off, n) in self.blocks() {
            let mean = out[off..off + n].iter().fold(Q::zero(), |a, x| a + x) / q(n as i64);
            for x in &mut out[off..off + n] {
                *x -= &mean;
            }
        }
        out
    }

    pub fn weight(&self, coords: &[Q]) -> Weight {
        Weight(self.normalize(coords))
    }

    pub fn chamber(&self, coords: &[Q]) -> ChamberVector {
        ChamberVector(self.normalize(coords))
    }

    pub fn zero_weight(&self) -> Weight {
        Weight(zeros(self.ambient_len()))
    }

    /// `λ_i` of the given factor (both 0-based).
    pub fn lambda(&self, factor: usize, i: usize) -> Weight {
        let (off, n) = self.blocks()[factor];
        assert!(i < n);
        let mut v = zeros(self.ambient_len());
        v[off + i] = Q::one();
        self.weight(&v)
    }

    /// Whether the coordinates already sum to zero on every block.
    pub fn is_normalized(&self, coords: &[Q]) -> bool {
        coords.len() == self.ambient_len()
            && self
                .blocks()
                .iter()
                .all(|&(off, n)| coords[off..off + n].iter().fold(Q::zero(), |a, x| a + x).is_zero())
    }

    /// Intrinsic coordinates of a weight: the first `n - 1` entries of every
    /// block, i.e. the coefficients on `λ_1, …, λ_{n-1}` up to the sum-zero
    /// relation. Paired with [`Self::coweight_coords`] by the dot product.
    pub fn weight_coords(&self, w: &Weight) -> QVec {
        self.blocks()
            .iter()
            .flat_map(|&(off, n)| w.0[off..off + n - 1].iter().cloned())
            .collect()
    }

    pub fn weight_from_coords(&self, c: &[Q]) -> Weight {
        assert_eq!(c.len(), self.rank());
        let mut out = Vec::with_capacity(self.ambient_len());
        let mut k = 0;
        for (_, n) in self.blocks() {
            let block = &c[k..k + n - 1];
            let last = -block.iter().fold(Q::zero(), |a, x| a + x);
            out.extend(block.iter().cloned());
            out.push(last);
            k += n - 1;
        }
        Weight(out)
    }

    /// Intrinsic coordinates of a chamber vector: `a_i - a_n` on every block.
    pub fn coweight_coords(&self, a: &ChamberVector) -> QVec {
        self.blocks()
            .iter()
            .flat_map(|&(off, n)| {
                let last = a.0[off + n - 1].clone();
                a.0[off..off + n - 1].iter().map(move |x| x - &last)
            })
            .collect()
    }

    pub fn chamber_from_coords(&self, b: &[Q]) -> ChamberVector {
        assert_eq!(b.len(), self.rank());
        let mut out = Vec::with_capacity(self.ambient_len());
        let mut k = 0;
        for (_, n) in self.blocks() {
            let block = &b[k..k + n - 1];
            let last = -block.iter().fold(Q::zero(), |a, x| a + x) / q(n as i64);
            out.extend(block.iter().map(|x| x + &last));
            out.push(last);
            k += n - 1;
        }
        ChamberVector(out)
    }

    /// Order of the Weyl group, the product of `n!` over the blocks.
    pub fn weyl_order(&self) -> u128 {
        self.factors.iter().map(|&n| (1..=n as u128).product::<u128>()).product()
    }

    /// Orbit of a weight under all blockwise coordinate permutations.
    pub fn weyl_orbit(&self, w: &Weight) -> BTreeSet<Weight> {
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::from([w.clone()]);
        seen.insert(w.clone());
        let transpositions: Vec<usize> = self
            .blocks()
            .iter()
            .flat_map(|&(off, n)| (off..off + n - 1).collect::<Vec<_>>())
            .collect();
        while let Some(cur) = queue.pop_front() {
            for &i in &transpositions {
                let mut next = cur.clone();
                next.0.swap(i, i + 1);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        seen
    }

    /// Membership of the closed positive Weyl chamber.
    pub fn in_positive_chamber(&self, a: &ChamberVector) -> bool {
        self.simple_roots.iter().all(|alpha| !alpha.pair(a).is_negative())
    }

    /// Extreme rays of the closed positive chamber (fundamental coweights):
    /// on each block, `(1, …, 1, 0, …, 0)` with `k` leading ones, projected.
    pub fn chamber_rays(&self) -> Vec<ChamberVector> {
        let mut rays = Vec::new();
        for (off, n) in self.blocks() {
            for k in 1..n {
                let mut v = zeros(self.ambient_len());
                for x in &mut v[off..off + k] {
                    *x = Q::one();
                }
                rays.push(self.chamber(&v));
            }
        }
        rays
    }

    /// `g1 ≤ g2` on the positive chamber.
    pub fn dominance_leq(&self, g1: &Weight, g2: &Weight) -> bool {
        let diff = g2.sub(g1);
        self.chamber_rays().iter().all(|ray| !diff.pair(ray).is_negative())
    }
}
