//! Distribution of the orbit `{ γv/T : ‖γ‖ ≤ T }` of `SL(2, Z)` in the plane,
//! against its limiting density on the disk of radius `‖v‖`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::lattice::for_each_frobenius;
use super::HarnessError;

/// `(2/π²) √(R² − ρ²) / (R² ρ)` with `R = ‖v‖`, `ρ = ‖y‖`; zero outside the
/// punctured open disk.
pub fn density_cor13(v: [f64; 2], y: [f64; 2]) -> f64 {
    let r = v[0].hypot(v[1]);
    let rho = y[0].hypot(y[1]);
    if rho <= 0.0 || rho >= r {
        return 0.0;
    }
    2.0 / (PI * PI) * (r * r - rho * rho).sqrt() / (r * r * rho)
}

/// Mass of the density on the polar cell `[ρ0, ρ1] × [θ0, θ1]`.
pub fn predicted_cell_mass(r: f64, rho0: f64, rho1: f64, dtheta: f64) -> f64 {
    let antiderivative = |p: f64| {
        let p = p.clamp(0.0, r);
        0.5 * (p * (r * r - p * p).max(0.0).sqrt() + r * r * (p / r).asin())
    };
    2.0 / (PI * PI) * dtheta / (r * r) * (antiderivative(rho1) - antiderivative(rho0))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct HistogramBin {
    pub bin_center_radius: f64,
    pub bin_center_angle: f64,
    pub empirical_mass: f64,
    pub predicted_mass: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct OrbitHistogram {
    pub count: u64,
    /// Radial bins times angular bins, radius-major.
    pub bins: Vec<HistogramBin>,
    pub radial_bins: usize,
    pub angular_bins: usize,
    pub total_variation: f64,
    /// `max ‖γv‖ / (T ‖v‖)`.
    pub max_radius_ratio: f64,
}

/// Histogram of `γv/T` over `‖γ‖_Frobenius ≤ T` on a polar grid with `bins`
/// radial and `bins` angular cells.
pub fn orbit_distribution(v: [f64; 2], t: f64, bins: usize) -> Result<OrbitHistogram, HarnessError> {
    let r = v[0].hypot(v[1]);
    if !(r > 0.0) {
        return Err(HarnessError::ZeroVector);
    }
    if !(t >= 10.0) {
        return Err(HarnessError::RadiusTooSmall(t));
    }
    if bins == 0 {
        return Err(HarnessError::ZeroResolution);
    }
    let (nr, na) = (bins, bins);
    let dtheta = 2.0 * PI / na as f64;
    let mut counts = vec![0u64; nr * na];
    let mut total = 0u64;
    let mut max_ratio = 0.0f64;
    for_each_frobenius(t, |a, b, c, d| {
        let x = (a as f64 * v[0] + b as f64 * v[1]) / t;
        let y = (c as f64 * v[0] + d as f64 * v[1]) / t;
        let rho = x.hypot(y);
        max_ratio = max_ratio.max(rho / r);
        let ri = ((rho / r * nr as f64) as usize).min(nr - 1);
        let theta = y.atan2(x).rem_euclid(2.0 * PI);
        let ai = ((theta / dtheta) as usize).min(na - 1);
        counts[ri * na + ai] += 1;
        total += 1;
    });

    let mut bins_out = Vec::with_capacity(nr * na);
    let mut tv = 0.0;
    for ri in 0..nr {
        let (rho0, rho1) = (r * ri as f64 / nr as f64, r * (ri + 1) as f64 / nr as f64);
        let predicted = predicted_cell_mass(r, rho0, rho1, dtheta);
        for ai in 0..na {
            let empirical = if total == 0 { 0.0 } else { counts[ri * na + ai] as f64 / total as f64 };
            tv += (empirical - predicted).abs();
            bins_out.push(HistogramBin {
                bin_center_radius: 0.5 * (rho0 + rho1),
                bin_center_angle: (ai as f64 + 0.5) * dtheta,
                empirical_mass: empirical,
                predicted_mass: predicted,
            });
        }
    }
    Ok(OrbitHistogram {
        count: total,
        bins: bins_out,
        radial_bins: nr,
        angular_bins: na,
        total_variation: 0.5 * tv,
        max_radius_ratio: max_ratio,
    })
}
