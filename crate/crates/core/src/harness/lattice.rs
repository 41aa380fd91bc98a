//! Exact enumeration of `SL(2, Z)` in norm balls.

use num_integer::{Integer, Roots};
use serde::{Deserialize, Serialize};

/// Norms on `SL(2, R)` used for counting.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Sl2Norm {
    /// `sqrt(a² + b² + c² + d²)`.
    Frobenius,
    /// `max(|a|, |b|, |c|, |d|)`.
    SupEntry,
    /// Largest matrix coefficient of `Ad γ` in the basis `(E, F, H)`.
    AdjointSup,
}

impl std::str::FromStr for Sl2Norm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "frobenius" => Ok(Sl2Norm::Frobenius),
            "supEntry" | "sup-entry" | "sup" => Ok(Sl2Norm::SupEntry),
            "adjointSup" | "adjoint-sup" => Ok(Sl2Norm::AdjointSup),
            other => Err(format!("unknown norm {other:?} (expected frobenius, supEntry or adjointSup)")),
        }
    }
}

/// Largest integer not above `x`, robust to the rounding of `x` itself.
fn floor_bound(x: f64) -> i64 {
    if x < 0.0 {
        return -1;
    }
    (x * (1.0 + 1e-12)).floor() as i64
}

/// `(a0, b0)` with `a0 d − b0 c = 1` for coprime `(c, d)`.
fn particular(c: i64, d: i64) -> (i64, i64) {
    let g = d.extended_gcd(&c);
    debug_assert_eq!(g.gcd.abs(), 1);
    // x d + y c = gcd = ±1
    let s = g.gcd.signum();
    (s * g.x, -s * g.y)
}

/// Integers `k` with `lo ≤ a0 + k c ≤ hi`, as an inclusive range.
fn progression_range(a0: i64, c: i64, lo: i64, hi: i64) -> Option<(i64, i64)> {
    if c == 0 {
        return (lo <= a0 && a0 <= hi).then_some((i64::MIN / 4, i64::MAX / 4));
    }
    let (c, a0, lo, hi) = if c < 0 { (-c, -a0, -hi, -lo) } else { (c, a0, lo, hi) };
    let k_lo = -(Integer::div_floor(&(a0 - lo), &c));
    let k_hi = Integer::div_floor(&(hi - a0), &c);
    (k_lo <= k_hi).then_some((k_lo, k_hi))
}

fn intersect(x: Option<(i64, i64)>, y: Option<(i64, i64)>) -> Option<(i64, i64)> {
    let ((a, b), (c, d)) = (x?, y?);
    let (lo, hi) = (a.max(c), b.min(d));
    (lo <= hi).then_some((lo, hi))
}

/// Calls `f(a, b, c, d)` for every matrix of `SL(2, Z)` with all entries in
/// `[−n, n]`.
pub fn for_each_in_box(n: i64, mut f: impl FnMut(i64, i64, i64, i64)) {
    for c in -n..=n {
        for d in -n..=n {
            if c.gcd(&d) != 1 {
                continue;
            }
            let (a0, b0) = particular(c, d);
            if let Some((k0, k1)) = intersect(progression_range(a0, c, -n, n), progression_range(b0, d, -n, n)) {
                for k in k0..=k1 {
                    f(a0 + k * c, b0 + k * d, c, d);
                }
            }
        }
    }
}

/// Calls `f(a, b, c, d)` for every matrix of `SL(2, Z)` with
/// `a² + b² + c² + d² ≤ t²`.
pub fn for_each_frobenius(t: f64, mut f: impl FnMut(i64, i64, i64, i64)) {
    let bound = floor_bound(t * t);
    frobenius_rows(bound, |c, d, a0, b0, k0, k1| {
        for k in k0..=k1 {
            f(a0 + k * c, b0 + k * d, c, d);
        }
    });
}

/// For every coprime row `(c, d)`, the range of `k` with
/// `(a0 + kc)² + (b0 + kd)² ≤ bound − c² − d²`.
fn frobenius_rows(bound: i64, mut f: impl FnMut(i64, i64, i64, i64, i64, i64)) {
    if bound < 2 {
        return;
    }
    let n = (bound as u64).sqrt() as i64;
    for c in -n..=n {
        let rest = bound - c * c;
        let m = (rest as u64).sqrt() as i64;
        for d in -m..=m {
            if c.gcd(&d) != 1 {
                continue;
            }
            let r2 = (rest - d * d) as i128;
            let (a0, b0) = particular(c, d);
            let (a0, b0, c1, d1) = (a0 as i128, b0 as i128, c as i128, d as i128);
            // (A k + B)² ≤ B² − A (C − r²)
            let big_a = c1 * c1 + d1 * d1;
            let big_b = a0 * c1 + b0 * d1;
            let disc = big_b * big_b - big_a * (a0 * a0 + b0 * b0 - r2);
            if disc < 0 {
                continue;
            }
            let s = (disc as u128).sqrt() as i128;
            let k0 = -(Integer::div_floor(&(big_b + s), &big_a));
            let k1 = Integer::div_floor(&(s - big_b), &big_a);
            if k0 <= k1 {
                f(c, d, a0 as i64, b0 as i64, k0 as i64, k1 as i64);
            }
        }
    }
}

/// `‖Ad γ‖` for the sup norm of coefficients in the basis `(E, F, H)`.
pub fn adjoint_sup(a: i64, b: i64, c: i64, d: i64) -> i64 {
    [a * a, b * b, c * c, d * d, (a * c).abs(), (b * d).abs(), (a * d + b * c).abs(), 2 * (a * b).abs(), 2 * (c * d).abs()]
        .into_iter()
        .max()
        .expect("nonempty")
}

pub fn sup_entry(a: i64, b: i64, c: i64, d: i64) -> i64 {
    a.abs().max(b.abs()).max(c.abs()).max(d.abs())
}

/// Exact number of `γ ∈ SL(2, Z)` with `‖γ‖ ≤ t`.
pub fn count_sl2z(t: f64, norm: Sl2Norm) -> u64 {
    match norm {
        Sl2Norm::Frobenius => {
            let mut total = 0u64;
            frobenius_rows(floor_bound(t * t), |_, _, _, _, k0, k1| total += (k1 - k0 + 1) as u64);
            total
        }
        Sl2Norm::SupEntry => {
            let n = floor_bound(t);
            let mut total = 0u64;
            for c in -n..=n {
                for d in -n..=n {
                    if c.gcd(&d) != 1 {
                        continue;
                    }
                    let (a0, b0) = particular(c, d);
                    if let Some((k0, k1)) =
                        intersect(progression_range(a0, c, -n, n), progression_range(b0, d, -n, n))
                    {
                        total += (k1 - k0 + 1) as u64;
                    }
                }
            }
            total
        }
        Sl2Norm::AdjointSup => {
            let bound = floor_bound(t);
            if bound < 1 {
                return 0;
            }
            let mut total = 0u64;
            for_each_in_box((bound as u64).sqrt() as i64, |a, b, c, d| {
                if adjoint_sup(a, b, c, d) <= bound {
                    total += 1;
                }
            });
            total
        }
    }
}

/// `h[k] = #{γ : ‖γ‖ = k}` for `k ≤ n`, for an integer-valued norm.
pub fn norm_histogram(n: i64, norm: Sl2Norm) -> Vec<u64> {
    let mut h = vec![0u64; n.max(0) as usize + 1];
    match norm {
        Sl2Norm::SupEntry => for_each_in_box(n, |a, b, c, d| h[sup_entry(a, b, c, d) as usize] += 1),
        Sl2Norm::AdjointSup => for_each_in_box((n.max(0) as u64).sqrt() as i64, |a, b, c, d| {
            let v = adjoint_sup(a, b, c, d);
            if v <= n {
                h[v as usize] += 1;
            }
        }),
        Sl2Norm::Frobenius => panic!("the Frobenius norm is not integer valued"),
    }
    h
}

/// `#{(γ₁, γ₂) : ‖γ₁‖_sup · ‖Ad γ₂‖_sup ≤ t}` from exact norm histograms.
pub fn count_product_sl2z(t: f64) -> u64 {
    let n = floor_bound(t);
    if n < 1 {
        return 0;
    }
    let h1 = norm_histogram(n, Sl2Norm::SupEntry);
    let mut cumulative = Vec::with_capacity(h1.len());
    let mut acc = 0u64;
    for x in &h1 {
        acc += x;
        cumulative.push(acc);
    }
    let h2 = norm_histogram(n, Sl2Norm::AdjointSup);
    (1..=n as usize).map(|k| h2[k] * cumulative[n as usize / k]).sum()
}

/// Partial sums of `Σ 1/‖Ad γ‖²` over `‖Ad γ‖ ≤ k`, for `k ≤ n`.
pub fn adjoint_inverse_square_sums(n: i64) -> Vec<f64> {
    let h = norm_histogram(n, Sl2Norm::AdjointSup);
    let mut acc = 0.0;
    h.iter()
        .enumerate()
        .map(|(k, &c)| {
            if k > 0 {
                acc += c as f64 / (k * k) as f64;
            }
            acc
        })
        .collect()
}
