//! Growth exponents `(d, e)` of Haar balls `{ g : ‖ρ(g)‖ ≤ T }` and the
//! constants of the remainder estimates.
//!
//! `C` and its faces live in weight coordinates, `C*` and `Δ` in coweight
//! coordinates; the dot product of the two is the duality pairing.

mod bound;
mod frame;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use bound::Bound;
pub use frame::{all_choices, canonical_choice, facets_through, AffineForm, Frame, FrameChoice};

use crate::polytope::{intersect_chamber, Face, Polytope, PolytopeError};
use crate::rational::{is_zero_vec, q, QVec, Q};
use crate::repspace::{RepError, Representation};
use crate::rootsys::{tau1_table, RootSystem, RootSystemError, Weight};
use crate::sinhsum::ExpSum;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GrowthError {
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
    #[error(transparent)]
    RootSystem(#[from] RootSystemError),
    #[error("the weights on F' do not contain a basis adapted to F_beta")]
    BasisSelection,
    #[error("the exponent e must be 0, got {0}")]
    NeedsEZero(usize),
    #[error("Hölder exponent must lie in (0, 1]")]
    BadHolderExponent,
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

/// The polytopes `C`, `C*` and `Δ = C* ∩ 𝔞⁺` of a representation.
#[derive(Clone, Debug)]
pub struct Geometry {
    pub rank: usize,
    pub c: Polytope,
    pub c_dual: Polytope,
    pub delta: Polytope,
}

impl Geometry {
    pub fn new(rep: &Representation) -> Result<Self, GrowthError> {
        rep.validate()?;
        let rs = rep.root_system();
        let c = rep.weight_polytope();
        let c_dual = c.dual()?;
        let delta = intersect_chamber(&c_dual, rs)?;
        Ok(Geometry { rank: rs.rank(), c, c_dual, delta })
    }

    /// `max_Δ γ`.
    pub fn max_over_delta(&self, rs: &RootSystem, gamma: &Weight) -> Q {
        self.delta.lp_max(&rs.weight_coords(gamma)).value
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Exponents {
    #[serde(with = "crate::rational::serde_q")]
    pub d: Q,
    pub e: usize,
    /// `dim F_β`.
    pub s: usize,
    pub face_beta: Face,
    pub face_beta_dual: Face,
}

/// `d = max_{C*} β`, `F_β` the minimal face of `C` through `β/d`, and
/// `e = dim F_β*`.
pub fn exponents(rep: &Representation, geo: &Geometry) -> Result<Exponents, GrowthError> {
    let rs = rep.root_system();
    let beta = rs.weight_coords(rs.beta());
    let best = geo.c_dual.lp_max(&beta);
    let d = best.value;
    if !d.is_positive() {
        return Err(GrowthError::Internal("max of beta over C* is not positive".into()));
    }
    let face_beta = geo.c.minimal_face(&rs.weight_coords(&rs.beta().scale(&(Q::one() / &d))))?;
    if !geo.c.is_proper(&face_beta) {
        return Err(GrowthError::Internal("beta/d is interior to C".into()));
    }
    let face_beta_dual = geo.c.dual_face(&face_beta, &geo.c_dual)?;
    let s = face_beta.dim;
    let e = face_beta_dual.dim;
    if s + e + 1 != geo.rank || best.argmax.dim != e {
        return Err(GrowthError::Internal(format!(
            "dim F_beta = {s}, dim F_beta* = {e}, dim argmax = {} in rank {}",
            best.argmax.dim, geo.rank
        )));
    }
    Ok(Exponents { d, e, s, face_beta, face_beta_dual })
}

/// Every vertex of `F_β*` lies in the closed positive chamber.
pub fn chamber_check(rs: &RootSystem, geo: &Geometry, ex: &Exponents) -> bool {
    geo.c_dual
        .face_points(&ex.face_beta_dual)
        .iter()
        .all(|v| rs.in_positive_chamber(&rs.chamber_from_coords(v)))
}

/// `F_β*` lies in no proper ideal: for every proper set of factors, some
/// vertex of `F_β*` has a nonzero block outside it.
pub fn normal_growth_strict(rs: &RootSystem, geo: &Geometry, ex: &Exponents) -> bool {
    let blocks: Vec<(usize, usize)> = {
        let mut off = 0;
        rs.factors()
            .iter()
            .map(|&n| {
                let b = (off, n - 1);
                off += n - 1;
                b
            })
            .collect()
    };
    let k = blocks.len();
    let verts = geo.c_dual.face_points(&ex.face_beta_dual);
    (0u64..(1 << k) - 1).all(|mask| {
        verts.iter().any(|v| {
            blocks
                .iter()
                .enumerate()
                .any(|(i, &(off, len))| mask & (1 << i) == 0 && !is_zero_vec(&v[off..off + len]))
        })
    })
}

/// `λ = max −1/l_i` over constant `l_i < 0`, and 0 if there is none.
pub fn lambda_const(frame: &Frame) -> Q {
    frame
        .weight_forms
        .iter()
        .filter(|f| f.is_constant() && f.constant.is_negative())
        .map(|f| -(Q::one() / &f.constant))
        .max()
        .unwrap_or_else(Q::zero)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TauXi {
    pub tau: Bound,
    pub xi: Bound,
}

/// `τ` and `ξ` over the pairs `(i, j)` with `l_i` a nonzero constant and
/// `⟨χ_i | χ_j*⟩ < 0`, using `τ_j + shift` in the numerators.
fn tau_xi_shifted(frame: &Frame, shift: &Q) -> TauXi {
    let s1 = frame.affine_len();
    let s1q = q(s1 as i64);
    let mut tau: Option<Q> = None;
    let mut xi: Option<Q> = None;
    for (form, row) in frame.weight_forms.iter().zip(&frame.pairings) {
        if !form.is_constant() || form.constant.is_zero() {
            continue;
        }
        for j in 0..s1 {
            let p = &row[j];
            if !p.is_negative() {
                continue;
            }
            let num = &frame.tau_exp[j] + shift;
            let t = -(&num / (&s1q * p));
            let x = &form.constant * &num / (&s1q * p);
            tau = Some(tau.map_or(t.clone(), |a| a.max(t)));
            xi = Some(xi.map_or(x.clone(), |a| a.min(x)));
        }
    }
    TauXi {
        tau: Bound::Finite(tau.unwrap_or_else(Q::zero)),
        xi: xi.map_or(Bound::Unconstrained, Bound::Finite),
    }
}

/// `τ = max −(τ_j + 1)/((s+1)⟨χ_i|χ_j*⟩)`, `ξ = min l_i(τ_j + 1)/((s+1)⟨χ_i|χ_j*⟩)`.
pub fn tau_xi(frame: &Frame) -> TauXi {
    tau_xi_shifted(frame, &Q::one())
}

/// The same expressions with `τ_j` in place of `τ_j + 1`.
pub fn tau_xi_unshifted(frame: &Frame) -> TauXi {
    tau_xi_shifted(frame, &Q::zero())
}

/// A supremum of admissible exponents; `strict` when the exponent itself is
/// excluded.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Supremum {
    pub value: Bound,
    pub strict: bool,
}

/// `d − max_{γ∈Ω₂} max_Δ γ`; unconstrained when `Ω₂` is empty.
pub fn xi_prime_sup(rs: &RootSystem, geo: &Geometry, ex: &Exponents, omega2: &[Weight]) -> Supremum {
    let worst = omega2.iter().map(|g| geo.max_over_delta(rs, g)).max();
    Supremum { value: worst.map_or(Bound::Unconstrained, |u| Bound::Finite(&ex.d - u)), strict: true }
}

fn simple_n(rs: &RootSystem) -> Result<usize, GrowthError> {
    match rs.factors() {
        [n] if *n >= 3 => Ok(*n),
        _ => Err(RootSystemError::NeedsHigherRankSimple.into()),
    }
}

/// Least `m` with `4m > rank K + 2 #Σ_K⁺`.
pub fn m_minimal(rs: &RootSystem) -> Result<u64, GrowthError> {
    simple_n(rs)?;
    Ok((rs.rank_k() as u64 + 2 * rs.num_pos_roots_k() as u64) / 4 + 1)
}

/// `4m + 2 dim G`.
pub fn tau1(rs: &RootSystem) -> Result<u64, GrowthError> {
    Ok(4 * m_minimal(rs)? + 2 * rs.dim_g() as u64)
}

/// `u = max_Δ(β − l)`; the admissible `ξ₁` are those below `d − u`.
pub fn xi1_data(rs: &RootSystem, geo: &Geometry, ex: &Exponents) -> Result<(Q, Q), GrowthError> {
    simple_n(rs)?;
    let u = geo.max_over_delta(rs, &rs.beta().sub(rs.l()));
    let sup = &ex.d - &u;
    if !sup.is_positive() {
        return Err(GrowthError::Internal("max of beta - l over Delta reaches d".into()));
    }
    Ok((sup, u))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Alpha0 {
    #[serde(with = "crate::rational::serde_q")]
    pub holder_exponent: Q,
    pub v: Bound,
    pub alpha0: Bound,
}

/// `v = min(1/λ, ξ/(α + τ))` and `α₀ = min(ξ − τv, ξ′, v)`.
pub fn alpha0(e: usize, lambda: &Q, txi: &TauXi, xi_prime: &Bound, alpha: &Q) -> Result<Alpha0, GrowthError> {
    if e != 0 {
        return Err(GrowthError::NeedsEZero(e));
    }
    if !alpha.is_positive() || alpha > &Q::one() {
        return Err(GrowthError::BadHolderExponent);
    }
    let tau = txi.tau.finite().cloned().unwrap_or_else(Q::zero);
    let inv_lambda = if lambda.is_zero() { Bound::Unconstrained } else { Bound::Finite(Q::one() / lambda) };
    let ratio = match &txi.xi {
        Bound::Finite(xi) => Bound::Finite(xi / (alpha + &tau)),
        Bound::Unconstrained => Bound::Unconstrained,
    };
    let v = inv_lambda.min(ratio);
    let first = match (&txi.xi, &v) {
        (Bound::Finite(xi), Bound::Finite(v)) => Bound::Finite(xi - &tau * v),
        (Bound::Finite(xi), Bound::Unconstrained) if tau.is_zero() => Bound::Finite(xi.clone()),
        _ => Bound::Unconstrained,
    };
    let alpha0 = first.min(xi_prime.clone()).min(v.clone());
    Ok(Alpha0 { holder_exponent: alpha.clone(), v, alpha0 })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct OmegaSummary {
    pub size: usize,
    pub omega1: Vec<Weight>,
    pub omega2: Vec<Weight>,
    /// `γ/d ∈ C` for every nonzero exponent.
    pub scaled_membership: bool,
}

/// Data attached to `4m > rank K + 2#Σ_K⁺`; present for simple factors of
/// rank at least 2.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct LatticeConstants {
    pub m_min: u64,
    pub tau1_formula: u64,
    pub tau1_table: Option<i64>,
    pub xi1_sup: Supremum,
    /// `max_Δ(β − l)`.
    #[serde(with = "crate::rational::serde_q")]
    pub xi1_max_delta: Q,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GrowthReport {
    pub factors: Vec<usize>,
    pub rank: usize,
    #[serde(with = "crate::rational::serde_q")]
    pub d: Q,
    pub e: usize,
    pub face_beta: Face,
    pub face_beta_dual: Face,
    /// Vertices of `F_β*` in coweight coordinates.
    #[serde(with = "crate::rational::serde_qmat")]
    pub face_beta_dual_vertices: Vec<QVec>,
    #[serde(rename = "chamberOK")]
    pub chamber_ok: bool,
    pub normal_growth_strict: bool,
    #[serde(with = "crate::rational::serde_q")]
    pub lambda: Q,
    pub tau: Bound,
    pub xi: Bound,
    /// `τ, ξ` with `τ_j` in place of `τ_j + 1`.
    pub tau_xi_unshifted: TauXi,
    pub xi_prime_sup: Supremum,
    pub lattice: Option<LatticeConstants>,
    /// `v, α₀` at Hölder exponent 1, when `e = 0`.
    pub alpha0: Option<Alpha0>,
    pub frame: Frame,
    pub frame_optimized: bool,
    pub omega_summary: OmegaSummary,
}

#[derive(Clone, Debug, Default)]
pub struct AnalyzeOptions {
    /// Search every frame and keep the one with the best constants.
    pub optimize_frame: bool,
}

struct Constants {
    lambda: Q,
    txi: TauXi,
    alpha0: Option<Alpha0>,
}

fn constants(frame: &Frame, e: usize, xi_prime: &Bound) -> Result<Constants, GrowthError> {
    let lambda = lambda_const(frame);
    let txi = tau_xi(frame);
    let alpha0 = if e == 0 { Some(alpha0(e, &lambda, &txi, xi_prime, &Q::one())?) } else { None };
    Ok(Constants { lambda, txi, alpha0 })
}

/// Larger is better: `α₀` when defined, then `ξ`, then smaller `τ`, `λ`.
fn score(c: &Constants) -> (Bound, Bound, std::cmp::Reverse<Bound>, std::cmp::Reverse<Q>) {
    (
        c.alpha0.as_ref().map_or(Bound::Unconstrained, |a| a.alpha0.clone()),
        c.txi.xi.clone(),
        std::cmp::Reverse(c.txi.tau.clone()),
        std::cmp::Reverse(c.lambda.clone()),
    )
}

pub fn analyze(rep: &Representation, opts: &AnalyzeOptions) -> Result<GrowthReport, GrowthError> {
    let rs = rep.root_system();
    let geo = Geometry::new(rep)?;
    let ex = exponents(rep, &geo)?;

    let es = ExpSum::expand(rs);
    let (omega1, omega2) = es.split(rs, &geo.c, &ex.face_beta, &ex.d);
    if !omega1.contains(rs.beta()) {
        return Err(GrowthError::Internal("beta is not in Omega_1".into()));
    }
    let scaled_membership = es.audit_scaled_membership(rs, &geo.c, &ex.d);
    let xi_prime = xi_prime_sup(rs, &geo, &ex, &omega2);

    let mut frame = Frame::build(rep, &geo, &ex, &omega1, &canonical_choice(rep, &geo, &ex)?)?;
    let mut consts = constants(&frame, ex.e, &xi_prime.value)?;
    if opts.optimize_frame {
        for choice in all_choices(rep, &geo, &ex) {
            let f = Frame::build(rep, &geo, &ex, &omega1, &choice)?;
            let c = constants(&f, ex.e, &xi_prime.value)?;
            if score(&c) > score(&consts) {
                frame = f;
                consts = c;
            }
        }
    }

    let lattice = match (m_minimal(rs), tau1(rs), xi1_data(rs, &geo, &ex)) {
        (Ok(m_min), Ok(tau1_formula), Ok((sup, u))) => Some(LatticeConstants {
            m_min,
            tau1_formula,
            tau1_table: tau1_table(rs.factors()[0]),
            xi1_sup: Supremum { value: Bound::Finite(sup), strict: true },
            xi1_max_delta: u,
        }),
        _ => None,
    };

    Ok(GrowthReport {
        factors: rs.factors().to_vec(),
        rank: geo.rank,
        d: ex.d.clone(),
        e: ex.e,
        face_beta_dual_vertices: geo.c_dual.face_points(&ex.face_beta_dual),
        chamber_ok: chamber_check(rs, &geo, &ex),
        normal_growth_strict: normal_growth_strict(rs, &geo, &ex),
        face_beta: ex.face_beta,
        face_beta_dual: ex.face_beta_dual,
        lambda: consts.lambda,
        tau: consts.txi.tau,
        xi: consts.txi.xi,
        tau_xi_unshifted: tau_xi_unshifted(&frame),
        xi_prime_sup: xi_prime,
        lattice,
        alpha0: consts.alpha0,
        frame,
        frame_optimized: opts.optimize_frame,
        omega_summary: OmegaSummary { size: es.len(), omega1, omega2, scaled_membership },
    })
}
