use growth_core::growth::{
    alpha0, all_choices, analyze, canonical_choice, chamber_check, exponents, lambda_const, m_minimal,
    normal_growth_strict, tau1, tau_xi, xi1_data, AnalyzeOptions, Bound, Frame, Geometry, GrowthReport,
};
use growth_core::polytope::convex_coefficients;
use growth_core::rational::{dot, q, qf, QVec, Q};
use growth_core::repspace::Representation;
use growth_core::rootsys::{RootSystem, Weight};
use growth_core::sinhsum::ExpSum;
use proptest::prelude::*;

fn a(n: usize) -> RootSystem {
    RootSystem::type_a(n).unwrap()
}

fn std_rep(n: usize) -> Representation {
    Representation::standard(&a(n)).unwrap()
}

fn std_dual_a2() -> Representation {
    let s = std_rep(3);
    s.direct_sum(&s.dual()).unwrap()
}

fn product_rep() -> Representation {
    let a1 = a(2);
    Representation::standard(&a1).unwrap().external_tensor(&Representation::adjoint(&a1))
}

fn report(rep: &Representation) -> GrowthReport {
    analyze(rep, &AnalyzeOptions::default()).unwrap()
}

fn fin(x: Q) -> Bound {
    Bound::Finite(x)
}

#[test]
fn standard_exponents() {
    for n in 2..=6 {
        let r = report(&std_rep(n));
        assert_eq!(r.d, q((n * (n - 1)) as i64), "n = {n}");
        assert_eq!(r.e, 0);
        assert!(r.chamber_ok);
        assert!(r.normal_growth_strict);
    }
}

#[test]
fn adjoint_a2_exponents() {
    let r = report(&Representation::adjoint(&a(3)));
    assert_eq!(r.d, q(2));
    assert_eq!(r.e, 1);
    assert_eq!(r.face_beta.dim, 0);
    assert!(r.chamber_ok);
}

#[test]
fn std_plus_dual_exponents() {
    let r = report(&std_dual_a2());
    assert_eq!(r.d, q(4));
    assert_eq!(r.e, 0);
    assert!(r.chamber_ok);
    assert!(r.normal_growth_strict);
}

#[test]
fn product_counterexample() {
    let rep = product_rep();
    let r = report(&rep);
    assert_eq!(r.d, q(2));
    assert_eq!(r.e, 0);
    assert!(r.chamber_ok);
    assert!(!r.normal_growth_strict);
    // F_β* is the point with coweight coordinates (2, 0)
    assert_eq!(r.face_beta_dual_vertices, vec![vec![q(2), q(0)]]);
    assert!(r.lattice.is_none());
}

#[test]
fn standard_frame_and_constants() {
    for n in 2..=6 {
        let rep = std_rep(n);
        let rs = rep.root_system().clone();
        let r = report(&rep);
        let lambdas: Vec<Weight> = (0..n - 1).map(|i| rs.lambda(0, i)).collect();
        assert_eq!(r.frame.basis, lambdas);
        let expected_tau: Vec<Q> = (1..n).map(|i| q(2 * (n - i) as i64 - 1)).collect();
        assert_eq!(r.frame.tau_exp, expected_tau);
        for f in &r.frame.weight_forms {
            let expected = if f.label == rs.lambda(0, n - 1) { q(-(n as i64)) } else { q(0) };
            assert_eq!(f.constant, expected, "n = {n}, {}", f.label);
        }
        assert_eq!(r.lambda, qf(1, n as i64));
        // literal form with τ_j + 1
        assert_eq!(r.tau, fin(q(2)));
        assert_eq!(r.xi, fin(qf(2 * n as i64, n as i64 - 1)));
        // printed variant with τ_j
        assert_eq!(r.tau_xi_unshifted.tau, fin(qf(2 * n as i64 - 3, n as i64 - 1)));
        assert_eq!(r.tau_xi_unshifted.xi, fin(qf(n as i64, n as i64 - 1)));
        assert_eq!(r.xi_prime_sup.value, fin(q(n as i64)));
        assert!(r.xi_prime_sup.strict);
    }
}

#[test]
fn std_plus_dual_frame_and_constants() {
    let rep = std_dual_a2();
    let rs = rep.root_system().clone();
    let r = report(&rep);
    let (l1, l3) = (rs.lambda(0, 0), rs.lambda(0, 2));
    assert_eq!(r.frame.basis, vec![l1.clone(), l3.neg()]);
    assert_eq!(r.frame.tau_exp, vec![q(1), q(1)]);
    let (c1, c2) = (l1.clone(), l3.neg());
    let expected = [
        (c1.sub(&c2), -1),
        (c2.neg(), -2),
        (c1.neg(), -2),
        (c2.sub(&c1), -1),
    ];
    for (w, l) in expected {
        let form = r.frame.weight_forms.iter().find(|f| f.label == w).unwrap();
        assert_eq!(form.constant, q(l), "{w}");
    }
    assert_eq!(r.lambda, q(1));
    assert_eq!(r.tau, fin(q(1)));
    assert_eq!(r.xi, fin(q(1)));
    assert_eq!(r.xi_prime_sup.value, fin(q(1)));
    let lat = r.lattice.as_ref().unwrap();
    assert_eq!(lat.xi1_sup.value, fin(q(1)));
    assert_eq!(lat.xi1_max_delta, q(3));
    assert_eq!(lat.tau1_table, Some(17));
    assert_eq!(lat.tau1_formula, 20);
    let a0 = r.alpha0.as_ref().unwrap();
    assert_eq!(a0.v, fin(qf(1, 2)));
    assert_eq!(a0.alpha0, fin(qf(1, 2)));
}

#[test]
fn max_over_delta_examples() {
    let rep = std_dual_a2();
    let rs = rep.root_system().clone();
    let geo = Geometry::new(&rep).unwrap();
    assert_eq!(geo.max_over_delta(&rs, rs.beta()), q(4));
    assert_eq!(geo.max_over_delta(&rs, &rs.beta().neg()), q(0));
    let es = ExpSum::expand(&rs);
    let best = es
        .exponents()
        .iter()
        .filter(|g| *g != rs.beta())
        .map(|g| geo.max_over_delta(&rs, g))
        .max()
        .unwrap();
    assert_eq!(best, q(3));
}

#[test]
fn a1_secondary_exponent() {
    let r = report(&std_rep(2));
    assert_eq!(r.omega_summary.omega2.len(), 1);
    assert_eq!(r.xi_prime_sup.value, fin(q(2)));
    assert_eq!(r.lambda, qf(1, 2));
}

#[test]
fn lattice_constants() {
    assert_eq!(m_minimal(&a(3)).unwrap(), 1);
    assert_eq!(m_minimal(&a(4)).unwrap(), 2);
    assert_eq!(m_minimal(&a(6)).unwrap(), 4);
    assert_eq!(tau1(&a(3)).unwrap(), 20);
    assert_eq!(tau1(&a(4)).unwrap(), 38);
    assert_eq!(tau1(&a(6)).unwrap(), 86);
    assert!(m_minimal(&a(2)).is_err());
    assert!(m_minimal(&a(3).product(&a(3))).is_err());

    for n in 3..=6 {
        let rep = std_rep(n);
        let rs = rep.root_system().clone();
        let geo = Geometry::new(&rep).unwrap();
        let ex = exponents(&rep, &geo).unwrap();
        let (sup, _) = xi1_data(&rs, &geo, &ex).unwrap();
        // every ξ₁ < n/2 is admissible for the standard representation
        assert!(sup >= qf(n as i64, 2), "n = {n}: {sup}");
    }
}

#[test]
fn alpha0_requires_e_zero() {
    let t = tau_xi_fixture();
    assert!(alpha0(1, &q(1), &t, &fin(q(1)), &q(1)).is_err());
    assert!(alpha0(0, &q(1), &t, &fin(q(1)), &q(2)).is_err());
    // α → 0⁺: v → min(1/λ, ξ/τ)
    let a = alpha0(0, &q(1), &t, &fin(q(1)), &qf(1, 1_000_000)).unwrap();
    assert_eq!(a.v, fin(q(1) / (q(1) + qf(1, 1_000_000))));
}

fn tau_xi_fixture() -> growth_core::growth::TauXi {
    let rep = std_dual_a2();
    let geo = Geometry::new(&rep).unwrap();
    let ex = exponents(&rep, &geo).unwrap();
    let omega1 = vec![rep.root_system().beta().clone()];
    let f = Frame::build(&rep, &geo, &ex, &omega1, &canonical_choice(&rep, &geo, &ex).unwrap()).unwrap();
    tau_xi(&f)
}

#[test]
fn standard_a2_alpha0_is_positive() {
    let r = report(&std_rep(3));
    match &r.alpha0.as_ref().unwrap().alpha0 {
        Bound::Finite(x) => assert!(*x > q(0)),
        Bound::Unconstrained => panic!("expected a finite value"),
    }
}

#[test]
fn empty_pair_set_sentinel() {
    let r = report(&std_dual_a2());
    let mut toy = r.frame.clone();
    let keep: Vec<usize> = (0..toy.weight_forms.len()).filter(|&i| toy.weight_forms[i].constant == q(0)).collect();
    toy.weight_forms = keep.iter().map(|&i| toy.weight_forms[i].clone()).collect();
    toy.pairings = keep.iter().map(|&i| toy.pairings[i].clone()).collect();
    let t = tau_xi(&toy);
    assert_eq!(t.tau, fin(q(0)));
    assert_eq!(t.xi, Bound::Unconstrained);
    assert_eq!(lambda_const(&toy), q(0));
    let a = alpha0(0, &q(0), &t, &fin(q(1)), &q(1)).unwrap();
    assert_eq!(a.v, Bound::Unconstrained);
    assert_eq!(a.alpha0, fin(q(1)));
}

fn frame_invariants(rep: &Representation) {
    let rs = rep.root_system().clone();
    let geo = Geometry::new(rep).unwrap();
    let ex = exponents(rep, &geo).unwrap();
    let r = analyze(rep, &AnalyzeOptions::default()).unwrap();
    let f = &r.frame;
    for row in &f.mu {
        assert_eq!(row.len(), f.omega1.len());
    }
    for j in 0..f.omega1.len() {
        let col: Q = f.mu.iter().map(|row| row[j].clone()).sum();
        assert_eq!(col, q(1));
    }
    assert!(f.tau_exp.iter().all(|t| *t > q(-1)));
    let sum: QVec = f.dual_basis.iter().fold(vec![q(0); rs.rank()], |acc, b| {
        let c = rs.coweight_coords(b);
        acc.iter().zip(&c).map(|(x, y)| x + y).collect()
    });
    assert!(geo.c_dual.contains(&sum));
    assert!(r.lambda >= q(0));
    if let Bound::Finite(t) = &r.tau {
        assert!(*t >= q(0));
    }
    if let Bound::Finite(x) = &r.xi {
        assert!(*x > q(0));
    }
    // three computations of e agree
    assert_eq!(ex.e, geo.rank - 1 - ex.face_beta.dim);
    assert_eq!(ex.e, ex.face_beta_dual.dim);
    assert!(chamber_check(&rs, &geo, &ex));
    assert!(r.omega_summary.scaled_membership);
    // the pairing is the duality: ⟨χ_i|χ_j*⟩ = δ_ij on the basis
    for (k, &i) in f.basis_idx.iter().enumerate() {
        for j in 0..rs.rank() {
            assert_eq!(f.pairings[i][j], if j == k { q(1) } else { q(0) });
        }
    }
}

#[test]
fn frame_invariants_on_fixtures() {
    let mut reps: Vec<Representation> = (2..=6).map(std_rep).collect();
    reps.push(Representation::adjoint(&a(3)));
    reps.push(Representation::adjoint(&a(4)));
    reps.push(std_dual_a2());
    reps.push(product_rep());
    for rep in &reps {
        frame_invariants(rep);
    }
}

#[test]
fn optimized_frame_is_no_worse() {
    for rep in [std_dual_a2(), std_rep(4), Representation::adjoint(&a(3))] {
        let base = analyze(&rep, &AnalyzeOptions::default()).unwrap();
        let best = analyze(&rep, &AnalyzeOptions { optimize_frame: true }).unwrap();
        assert!(best.frame_optimized);
        assert_eq!(best.d, base.d);
        match (&best.alpha0, &base.alpha0) {
            (Some(x), Some(y)) => assert!(x.alpha0 >= y.alpha0),
            _ => assert!(best.xi >= base.xi),
        }
        let geo = Geometry::new(&rep).unwrap();
        let ex = exponents(&rep, &geo).unwrap();
        let choices = all_choices(&rep, &geo, &ex);
        assert!(choices.contains(&canonical_choice(&rep, &geo, &ex).unwrap()));
    }
}

#[test]
fn invalid_reps_are_refused() {
    let rs = a(3);
    let l1 = rs.lambda(0, 0);
    let bad = Representation::from_weights(&rs, &[l1.clone(), l1.neg()]).unwrap();
    assert!(analyze(&bad, &AnalyzeOptions::default()).is_err());
}

#[test]
fn report_json_round_trip() {
    let r = report(&std_dual_a2());
    let text = serde_json::to_string(&r).unwrap();
    let back: GrowthReport = serde_json::from_str(&text).unwrap();
    assert_eq!(back, r);
    assert_eq!(serde_json::to_string(&back).unwrap(), text);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["d"], serde_json::json!({"num": 4, "den": 1}));
    assert_eq!(v["lambda"], serde_json::json!({"num": 1, "den": 1}));
}

/// Restriction to a set of factors: weights projected blockwise.
fn restrict(rep: &Representation, factor: usize) -> Representation {
    let rs = rep.root_system();
    let (off, n) = rs.blocks()[factor];
    let sub = a(n);
    let ws: Vec<Weight> = rep.weights().iter().map(|w| Weight(w.0[off..off + n].to_vec())).collect();
    Representation::from_weights(&sub, &ws).unwrap()
}

#[test]
fn product_growth_dominates_factors() {
    let a1 = a(2);
    let reps = [
        product_rep(),
        Representation::standard(&a1).unwrap().external_tensor(&Representation::standard(&a(3)).unwrap()),
        Representation::adjoint(&a(3)).external_tensor(&Representation::standard(&a1).unwrap()),
    ];
    for rep in &reps {
        let whole = report(rep);
        for k in 0..rep.root_system().factors().len() {
            let part = report(&restrict(rep, k));
            assert!((whole.d.clone(), whole.e) >= (part.d.clone(), part.e));
        }
    }
}

fn convex_point(k: usize) -> impl Strategy<Value = Vec<u32>> {
    proptest::collection::vec(0u32..5, k)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn dominated_weights_scale_into_c(which in 0usize..4, raw in convex_point(24)) {
        let reps = [std_rep(3), std_rep(4), Representation::adjoint(&a(3)), std_dual_a2()];
        let rep = &reps[which];
        let rs = rep.root_system().clone();
        let geo = Geometry::new(rep).unwrap();
        let ex = exponents(rep, &geo).unwrap();
        let orbit: Vec<Weight> = rs.weyl_orbit(rs.beta()).into_iter().collect();
        let weights: Vec<u32> = raw.iter().take(orbit.len()).copied().collect();
        let total: u32 = weights.iter().sum();
        prop_assume!(total > 0);
        let mut g = rs.zero_weight();
        for (w, &c) in orbit.iter().zip(&weights) {
            g = g.add(&w.scale(&qf(c as i64, total as i64)));
        }
        let x = rs.weight_coords(&g.scale(&(q(1) / &ex.d)));
        prop_assert!(geo.c.contains(&x));
        let verts: Vec<QVec> = geo.c.vertices().to_vec();
        prop_assert!(convex_coefficients(&x, &verts).unwrap().is_some());
    }

    #[test]
    fn beta_over_d_is_on_the_boundary(n in 2usize..=5) {
        let rep = std_rep(n);
        let rs = rep.root_system().clone();
        let geo = Geometry::new(&rep).unwrap();
        let ex = exponents(&rep, &geo).unwrap();
        let x = rs.weight_coords(&rs.beta().scale(&(q(1) / &ex.d)));
        prop_assert!(geo.c.facets().iter().any(|h| dot(&h.normal, &x) == h.offset));
        prop_assert!(normal_growth_strict(&rs, &geo, &ex));
    }
}
