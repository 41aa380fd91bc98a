//! Haar volume of norm balls through the Cartan decomposition: the integral
//! of `∏ (2 sinh⟨α|a⟩)^{m_α}` over `ln(T) Δ`.
//!
//! `Δ` is triangulated exactly, each simplex is pulled back to the unit cube
//! by the collapsed-coordinate (Duffy) map, and the cube is integrated by
//! composite three-point Gauss-Legendre rules. Lebesgue measure on `𝔞` is
//! taken in the coordinates `a_1, …, a_{n-1}` of every block.

use num_traits::{Signed, Zero};

use super::HarnessError;
use crate::growth::{Geometry, GrowthError};
use crate::linalg::det;
use crate::polytope::Polytope;
use crate::rational::{dot, sub, to_f64, to_f64_vec, QVec};
use crate::repspace::Representation;

const GAUSS_NODES: [f64; 3] = [-0.774_596_669_241_483_4, 0.0, 0.774_596_669_241_483_4];
const GAUSS_WEIGHTS: [f64; 3] = [5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0];

/// Simplices (vertex lists) whose union is the polytope spanned by `points`,
/// with disjoint interiors.
pub fn triangulate(points: &[QVec], ambient_dim: usize) -> Vec<Vec<QVec>> {
    let p = Polytope::hull(points, ambient_dim).expect("nonempty point set");
    if p.dim() == 0 {
        return vec![vec![p.vertices()[0].clone()]];
    }
    let apex = p.vertices().iter().min().expect("nonempty").clone();
    let mut out = Vec::new();
    for facet in p.facets() {
        let slack = &facet.offset - dot(&facet.normal, &apex);
        if slack.is_zero() {
            continue;
        }
        let on: Vec<QVec> = p
            .vertices()
            .iter()
            .filter(|v| dot(&facet.normal, v) == facet.offset)
            .cloned()
            .collect();
        for mut simplex in triangulate(&on, ambient_dim) {
            simplex.insert(0, apex.clone());
            out.push(simplex);
        }
    }
    out
}

struct Simplex {
    origin: Vec<f64>,
    /// `p_i − p_{i−1}` for `i = 1..=k`.
    steps: Vec<Vec<f64>>,
    volume_factor: f64,
}

/// Precomputed triangulation of `Δ` and the root data of the density.
pub struct HaarIntegrator {
    rank: usize,
    simplices: Vec<Simplex>,
    /// Root coordinates paired with coweight coordinates, with multiplicity.
    roots: Vec<(Vec<f64>, i32)>,
    /// `1 / ∏ n` over the blocks, converting `db` to `da`.
    measure: f64,
}

impl HaarIntegrator {
    pub fn new(rep: &Representation) -> Result<Self, GrowthError> {
        let rs = rep.root_system();
        let geo = Geometry::new(rep)?;
        let r = geo.rank;
        let simplices = triangulate(geo.delta.vertices(), r)
            .into_iter()
            .map(|s| {
                let edges: Vec<QVec> = s[1..].iter().map(|p| sub(p, &s[0])).collect();
                let steps = (1..s.len()).map(|i| to_f64_vec(&sub(&s[i], &s[i - 1]))).collect();
                Simplex { origin: to_f64_vec(&s[0]), steps, volume_factor: to_f64(&det(&edges).abs()) }
            })
            .collect();
        let roots = rs
            .positive_roots()
            .iter()
            .map(|p| (to_f64_vec(&rs.weight_coords(&p.root)), p.multiplicity as i32))
            .collect();
        let measure = 1.0 / rs.factors().iter().map(|&n| n as f64).product::<f64>();
        Ok(HaarIntegrator { rank: r, simplices, roots, measure })
    }

    fn density(&self, b: &[f64]) -> f64 {
        self.roots
            .iter()
            .map(|(alpha, m)| {
                let x: f64 = alpha.iter().zip(b).map(|(u, v)| u * v).sum();
                (2.0 * x.sinh()).powi(*m)
            })
            .product()
    }

    /// Volume of `{ g : ‖ρ(g)‖ ≤ t }` up to the constant mass of `K × K`,
    /// with `resolution` Gauss cells per axis on every simplex.
    pub fn volume(&self, t: f64, resolution: usize) -> Result<f64, HarnessError> {
        if !(t > 1.0) {
            return Err(HarnessError::RadiusTooSmall(t));
        }
        if resolution == 0 {
            return Err(HarnessError::ZeroResolution);
        }
        let scale = t.ln();
        let r = self.rank;
        let h = 1.0 / resolution as f64;
        // 1-D composite rule on [0, 1]
        let mut nodes = Vec::with_capacity(3 * resolution);
        for cell in 0..resolution {
            let mid = (cell as f64 + 0.5) * h;
            for (x, w) in GAUSS_NODES.iter().zip(GAUSS_WEIGHTS) {
                nodes.push((mid + 0.5 * h * x, 0.5 * h * w));
            }
        }

        let mut total = 0.0;
        let mut idx = vec![0usize; r];
        let mut point = vec![0.0; r];
        for s in &self.simplices {
            let k = s.steps.len();
            if k < r {
                continue;
            }
            let mut sum = 0.0;
            idx.iter_mut().for_each(|i| *i = 0);
            'grid: loop {
                let mut weight = 1.0;
                let mut prod = 1.0;
                point.copy_from_slice(&s.origin);
                for (i, &j) in idx.iter().enumerate() {
                    let (u, w) = nodes[j];
                    prod *= u;
                    weight *= w * u.powi((k - 1 - i) as i32);
                    for (p, e) in point.iter_mut().zip(&s.steps[i]) {
                        *p += prod * e;
                    }
                }
                for p in point.iter_mut() {
                    *p *= scale;
                }
                sum += weight * self.density(&point);

                for i in (0..r).rev() {
                    idx[i] += 1;
                    if idx[i] < nodes.len() {
                        continue 'grid;
                    }
                    idx[i] = 0;
                }
                break;
            }
            total += sum * s.volume_factor;
        }
        Ok(total * scale.powi(r as i32) * self.measure)
    }
}

/// Haar volume of the norm ball of radius `t`; see [`HaarIntegrator`].
pub fn haar_ball_volume(rep: &Representation, t: f64, resolution: usize) -> Result<f64, HarnessError> {
    HaarIntegrator::new(rep)?.volume(t, resolution)
}
