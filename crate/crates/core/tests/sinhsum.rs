use std::collections::BTreeSet;

use growth_core::rational::{q, qf, Q};
use growth_core::repspace::Representation;
use growth_core::rootsys::{RootSystem, Weight};
use growth_core::sinhsum::{sinh_product, ExpSum};
use proptest::prelude::*;

fn a(n: usize) -> RootSystem {
    RootSystem::type_a(n).unwrap()
}

fn lam(rs: &RootSystem, i: usize) -> Weight {
    rs.lambda(0, i)
}

#[test]
fn a1_expansion() {
    let rs = a(2);
    let es = ExpSum::expand(&rs);
    let alpha = rs.positive_roots()[0].root.clone();
    assert_eq!(es.len(), 2);
    assert_eq!(es.coefficient(&alpha), 1);
    assert_eq!(es.coefficient(&alpha.neg()), -1);
    let x = 1.0;
    // ⟨α|a⟩ = 1 at a = (1/2, -1/2)
    let v = es.eval(&[x / 2.0, -x / 2.0]);
    assert!((v - 2.0 * 1f64.sinh()).abs() < 1e-12);
}

#[test]
fn a2_expansion_cancels_constant_term() {
    let rs = a(3);
    let es = ExpSum::expand(&rs);
    let beta = rs.beta().clone();
    let g1 = lam(&rs, 0).scale(&q(2)).add(&lam(&rs, 1).scale(&q(4)));
    let g2 = lam(&rs, 0).scale(&q(2)).sub(&lam(&rs, 1).scale(&q(2)));
    let expected = [
        (beta.clone(), 1),
        (beta.neg(), -1),
        (g1.clone(), -1),
        (g1.neg(), 1),
        (g2.clone(), -1),
        (g2.neg(), 1),
        // the two constant terms of the uncollected product have opposite signs
        (rs.zero_weight(), 0),
    ];
    assert_eq!(es.len(), 6);
    for (w, h) in expected {
        assert_eq!(es.coefficient(&w), h, "{w}");
    }
}

#[test]
fn product_expansion_is_blockwise() {
    let a1 = a(2);
    let rs = a1.product(&a1);
    let es = ExpSum::expand(&rs);
    assert_eq!(es.len(), 4);
    let f = ExpSum::expand(&a1);
    for (w1, h1) in f.iter() {
        for (w2, h2) in f.iter() {
            let mut v = w1.0.clone();
            v.extend(w2.0.iter().cloned());
            assert_eq!(es.coefficient(&Weight(v)), h1 * h2);
        }
    }
}

#[test]
fn expansion_structure() {
    for n in 2..=5 {
        let rs = a(n);
        let es = ExpSum::expand(&rs);
        let total: i64 = es.iter().map(|(_, h)| h).sum();
        assert_eq!(total, 0);
        assert_eq!(es.coefficient(rs.beta()), 1);
        let npos: u32 = rs.positive_roots().iter().map(|p| p.multiplicity).sum();
        assert!(es.len() <= 1 << npos);
        let sign = if npos % 2 == 0 { 1 } else { -1 };
        for (g, h) in es.iter() {
            assert_eq!(es.coefficient(&g.neg()), sign * h);
            // integer combination of roots: integer entries after scaling by n
            assert!(g.0.iter().all(|x| (x * Q::from_integer((n as i64).into())).is_integer()));
        }
    }
}

fn scaled_face(rs: &RootSystem, rep: &Representation, es: &ExpSum) -> (Vec<Weight>, Vec<Weight>, Q) {
    let c = rep.weight_polytope();
    let dual = c.dual().unwrap();
    let d = dual.lp_max(&rs.weight_coords(rs.beta())).value;
    let x = rs.weight_coords(&rs.beta().scale(&(Q::from_integer(1.into()) / &d)));
    let face = c.minimal_face(&x).unwrap();
    let (o1, o2) = es.split(rs, &c, &face, &d);
    (o1, o2, d)
}

/// Exponents of the sign choices with `+` on every root `λ_i − λ_n`.
fn last_column_positive(rs: &RootSystem, n: usize) -> BTreeSet<Weight> {
    let roots: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << roots.len()) {
        let mut g = rs.zero_weight();
        let mut ok = true;
        for (k, &(i, j)) in roots.iter().enumerate() {
            let positive = mask & (1 << k) != 0;
            if j == n - 1 && !positive {
                ok = false;
            }
            let r = lam(rs, i).sub(&lam(rs, j));
            g = if positive { g.add(&r) } else { g.sub(&r) };
        }
        if ok {
            out.insert(g);
        }
    }
    out
}

#[test]
fn split_for_standard_representations() {
    for n in 2..=4 {
        let rs = a(n);
        let rep = Representation::standard(&rs).unwrap();
        let es = ExpSum::expand(&rs);
        let (o1, o2, d) = scaled_face(&rs, &rep, &es);
        assert_eq!(d, q((n * (n - 1)) as i64));
        assert!(o1.contains(rs.beta()));
        assert!(o2.contains(&rs.beta().neg()));
        let allowed = last_column_positive(&rs, n);
        for g in es.exponents() {
            assert_eq!(o1.contains(&g), allowed.contains(&g), "n = {n}, γ = {g}");
        }
    }
}

#[test]
fn split_for_adjoint_a2() {
    let rs = a(3);
    let rep = Representation::adjoint(&rs);
    let es = ExpSum::expand(&rs);
    let (o1, o2, d) = scaled_face(&rs, &rep, &es);
    assert_eq!(d, q(2));
    assert_eq!(o1, vec![rs.beta().clone()]);
    assert_eq!(o2.len(), 5);
}

#[test]
fn scaled_exponents_lie_in_weight_polytope() {
    let rs = a(3);
    let es = ExpSum::expand(&rs);
    let std = Representation::standard(&rs).unwrap();
    let fixtures = [
        (std.clone(), q(6)),
        (std.direct_sum(&std.dual()).unwrap(), q(4)),
        (Representation::adjoint(&rs), q(2)),
    ];
    for (rep, d) in &fixtures {
        let c = rep.weight_polytope();
        assert!(es.audit_scaled_membership(&rs, &c, d));
        assert!(!es.audit_scaled_membership(&rs, &c.scaled(&qf(1, 2)), d));
    }
}

#[test]
fn json_round_trip() {
    let es = ExpSum::expand(&a(3));
    let text = serde_json::to_string(&es).unwrap();
    let back: ExpSum = serde_json::from_str(&text).unwrap();
    assert_eq!(back, es);
    assert!(serde_json::from_str::<ExpSum>(r#"[{"weight":[],"coefficient":0}]"#).is_err());
}

#[test]
fn eval_vanishes_at_origin() {
    for n in 2..=5 {
        let rs = a(n);
        assert_eq!(ExpSum::expand(&rs).eval(&vec![0.0; n]), 0.0);
    }
}

fn point(n: usize) -> impl Strategy<Value = Vec<f64>> {
    proptest::collection::vec(-1.5f64..1.5, n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn eval_matches_product_a2(a0 in point(3)) {
        let rs = a(3);
        let es = ExpSum::expand(&rs);
        let lhs = es.eval(&a0);
        let rhs = sinh_product(&rs, &a0);
        prop_assert!((lhs - rhs).abs() <= 1e-9 * rhs.abs().max(1.0), "{lhs} vs {rhs}");
    }

    #[test]
    fn eval_matches_product_products(a0 in point(5)) {
        let rs = a(2).product(&a(3));
        let es = ExpSum::expand(&rs);
        let lhs = es.eval(&a0);
        let rhs = sinh_product(&rs, &a0);
        prop_assert!((lhs - rhs).abs() <= 1e-9 * rhs.abs().max(1.0), "{lhs} vs {rhs}");
    }
}
