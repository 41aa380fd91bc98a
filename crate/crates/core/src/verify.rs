//! Built-in self-check: the worked fixtures and the structural invariants,
//! each reported as a named pass/fail line.

use serde::Serialize;

use crate::growth::{analyze, AnalyzeOptions, Bound, Geometry, GrowthReport};
use crate::harness::{count_sl2z, density_cor13, HaarIntegrator, Sl2Norm};
use crate::rational::{q, qf, Q};
use crate::repexpr::parse_rep_expr;
use crate::repspace::Representation;
use crate::sinhsum::{sinh_product, ExpSum};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn check(out: &mut Vec<Check>, name: &str, passed: bool, detail: String) {
    out.push(Check { name: name.to_string(), passed, detail });
}

fn report(expr: &str) -> Result<GrowthReport, String> {
    let rep = parse_rep_expr(expr).map_err(|e| e.to_string())?;
    analyze(&rep, &AnalyzeOptions::default()).map_err(|e| e.to_string())
}

fn run_fixture(out: &mut Vec<Check>, name: &str, expr: &str, f: impl FnOnce(&GrowthReport) -> (bool, String)) {
    match report(expr) {
        Ok(r) => {
            let (ok, detail) = f(&r);
            check(out, name, ok, detail);
        }
        Err(e) => check(out, name, false, e),
    }
}

fn finite(b: &Bound) -> Option<&Q> {
    match b {
        Bound::Finite(x) => Some(x),
        Bound::Unconstrained => None,
    }
}

/// Runs every check; the suite passes when every entry does.
pub fn run_all() -> Vec<Check> {
    let mut out = Vec::new();

    for n in 2..=6usize {
        let expr = format!("A{n}: std");
        run_fixture(&mut out, &format!("standard A{n}: d, e, lambda"), &expr, |r| {
            let d = q((n * (n - 1)) as i64);
            let ok = r.d == d && r.e == 0 && r.lambda == qf(1, n as i64) && r.chamber_ok;
            (ok, format!("d = {}, e = {}, lambda = {}", r.d, r.e, r.lambda))
        });
        run_fixture(&mut out, &format!("standard A{n}: tau, xi"), &expr, |r| {
            let xi = qf(2 * n as i64, n as i64 - 1);
            let ok = finite(&r.tau) == Some(&q(2)) && finite(&r.xi) == Some(&xi);
            (ok, format!("tau = {}, xi = {}", r.tau, r.xi))
        });
    }
    run_fixture(&mut out, "adjoint A3: d, e", "A3: adj", |r| {
        (r.d == q(2) && r.e == 1, format!("d = {}, e = {}", r.d, r.e))
    });
    run_fixture(&mut out, "std + dual A3: exponents and constants", "A3: std + dual(std)", |r| {
        let one = Some(&Q::from_integer(1.into()));
        let ok = r.d == q(4)
            && r.e == 0
            && r.lambda == q(1)
            && finite(&r.tau) == one
            && finite(&r.xi) == one
            && finite(&r.xi_prime_sup.value) == one;
        (ok, format!("d = {}, lambda = {}, tau = {}, xi = {}, xi' = {}", r.d, r.lambda, r.tau, r.xi, r.xi_prime_sup.value))
    });
    run_fixture(&mut out, "std + dual A3: alpha0", "A3: std + dual(std)", |r| {
        let a = r.alpha0.as_ref();
        let half = qf(1, 2);
        let ok = a.is_some_and(|a| finite(&a.alpha0) == Some(&half) && finite(&a.v) == Some(&half));
        (ok, format!("{:?}", a.map(|a| a.alpha0.to_string())))
    });
    for (n, m) in [(3usize, 1u64), (4, 2), (6, 4)] {
        run_fixture(&mut out, &format!("standard A{n}: minimal m"), &format!("A{n}: std"), |r| {
            let got = r.lattice.as_ref().map(|l| l.m_min);
            (got == Some(m), format!("m = {got:?}"))
        });
    }
    run_fixture(&mut out, "product A2 x A2: d, e, normal growth", "A2: std x A2: adj", |r| {
        let ok = r.d == q(2) && r.e == 0 && !r.normal_growth_strict;
        (ok, format!("d = {}, e = {}, strict = {}", r.d, r.e, r.normal_growth_strict))
    });

    for expr in ["A3: std", "A3: adj", "A3: std + dual(std)", "A4: std + adj", "A2: std x A2: adj"] {
        run_fixture(&mut out, &format!("{expr}: frame invariants"), expr, |r| {
            let ok = r.chamber_ok && r.omega_summary.scaled_membership;
            (ok, format!("chamber = {}, scaled membership = {}", r.chamber_ok, r.omega_summary.scaled_membership))
        });
        match parse_rep_expr(expr) {
            Ok(rep) => geometry_checks(&mut out, expr, &rep),
            Err(e) => check(&mut out, &format!("{expr}: geometry"), false, e.to_string()),
        }
    }

    sinh_checks(&mut out);
    numeric_checks(&mut out);
    out
}

fn geometry_checks(out: &mut Vec<Check>, expr: &str, rep: &Representation) {
    let name = format!("{expr}: double dual and face duality");
    let geo = match Geometry::new(rep) {
        Ok(g) => g,
        Err(e) => return check(out, &name, false, e.to_string()),
    };
    let back = geo.c_dual.dual().map(|p| p.same_set(&geo.c)).unwrap_or(false);
    let r = geo.rank;
    let mut faces_ok = true;
    for v in geo.c.vertices() {
        if let Ok(face) = geo.c.minimal_face(v) {
            faces_ok &= geo.c.dual_face(&face, &geo.c_dual).is_ok_and(|f| face.dim + f.dim + 1 == r);
        }
    }
    check(out, &name, back && faces_ok, format!("double dual = {back}, dims = {faces_ok}"));
}

fn sinh_checks(out: &mut Vec<Check>) {
    for n in 2..=5 {
        let Ok(rep) = parse_rep_expr(&format!("A{n}: std")) else { continue };
        let rs = rep.root_system();
        let es = ExpSum::expand(rs);
        let mut worst: f64 = 0.0;
        for k in 0..50 {
            let a: Vec<f64> = (0..n).map(|i| ((k * 7 + i * 13) % 29) as f64 / 10.0 - 1.4).collect();
            let (lhs, rhs) = (es.eval(&a), sinh_product(rs, &a));
            worst = worst.max((lhs - rhs).abs() / rhs.abs().max(1.0));
        }
        let sum: i64 = es.iter().map(|(_, h)| h).sum();
        check(
            out,
            &format!("sinh expansion A{n}: product form and zero sum"),
            worst < 1e-9 && sum == 0,
            format!("{} terms, max relative error {worst:.2e}", es.len()),
        );
    }
}

fn numeric_checks(out: &mut Vec<Check>) {
    if let Ok(rep) = parse_rep_expr("A2: std") {
        let v = HaarIntegrator::new(&rep).ok().and_then(|h| h.volume(1e3, 64).ok());
        let exact = (2.0 * 1e3f64.ln()).cosh() - 1.0;
        let err = v.map_or(f64::INFINITY, |v| (v - exact).abs() / exact);
        check(out, "Haar volume A2: closed form", err < 1e-4, format!("relative error {err:.2e}"));
    }
    let counts = [count_sl2z(2f64.sqrt(), Sl2Norm::Frobenius), count_sl2z(2.0, Sl2Norm::Frobenius)];
    check(out, "SL(2,Z) small counts", counts == [4, 20], format!("{counts:?}"));
    let n = 4000;
    let mass: f64 = (0..n)
        .map(|i| {
            let s = (i as f64 + 0.5) / n as f64;
            let rho = 1.0 - s * s;
            density_cor13([1.0, 0.0], [rho, 0.0]) * rho * 2.0 * s / n as f64
        })
        .sum::<f64>()
        * 2.0
        * std::f64::consts::PI;
    check(out, "orbit density mass", (mass - 1.0).abs() < 1e-4, format!("{mass}"));
}
