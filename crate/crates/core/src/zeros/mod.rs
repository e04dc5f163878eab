//! Zeros of orthonormal polynomials and their statistics.

mod inverse;
mod matching;
mod stats;
mod svg;
mod zeroset;

pub use inverse::{inverse_points, inverse_points_complex, InversePair, InverseResiduals};
pub use matching::min_cost_assignment;
pub use stats::{
    circle_grid, equilibrium_circle_compare, ks_uniform, potential, potential_identity_gap, zero_stats, ZeroStats,
    ANGLE_EXCLUSION_RADIUS,
};
pub use svg::{scatter_svg, Series};
pub use zeroset::{conjugation_gap, hull_check, matched_gap, zeros_of, ZeroSet, CROSS_CHECK_MAX_DEGREE};
