//! Planar regions, curves, and convex hulls in f64 geometry.

mod curve;
mod hull;
mod region;

pub use curve::Curve;
pub use hull::{convex_hull, Hull};
pub use region::{
    lake_margin, require_lake, separation, validate_lake, Region, DEFAULT_MARGIN, DEFAULT_SAMPLES,
};
