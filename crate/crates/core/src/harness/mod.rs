//! Floating-point checks of the exact predictions: Haar-ball quadrature,
//! lattice point counts, growth-law regression and orbit statistics.

mod fit;
mod lattice;
mod orbit;
mod quadrature;

use thiserror::Error;

pub use fit::{fit_growth, log_grid, CountSeries, FitResult, SeriesKind};
pub use lattice::{
    adjoint_inverse_square_sums, adjoint_sup, count_product_sl2z, count_sl2z, for_each_frobenius, for_each_in_box,
    norm_histogram, sup_entry, Sl2Norm,
};
pub use orbit::{density_cor13, orbit_distribution, predicted_cell_mass, HistogramBin, OrbitHistogram};
pub use quadrature::{haar_ball_volume, triangulate, HaarIntegrator};

use crate::growth::GrowthError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HarnessError {
    #[error("radius T = {0} is outside the admissible range")]
    RadiusTooSmall(f64),
    #[error("resolution must be positive")]
    ZeroResolution,
    #[error("the vector v must be nonzero")]
    ZeroVector,
    #[error("need at least 8 rows spanning a decade of T inside the fit window")]
    InsufficientData,
    #[error("invalid series: {0}")]
    BadSeries(String),
    #[error(transparent)]
    Growth(#[from] GrowthError),
}
