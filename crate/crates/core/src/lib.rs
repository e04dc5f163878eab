//! Orthonormal polynomials for planar measures at extended precision.
//!
//! Measures are built from area, arclength, and point-mass terms; every inner
//! product reduces to an exact table of complex moments. On top of that the
//! crate builds orthonormal families by an Arnoldi-type Gram–Schmidt process,
//! Christoffel functions, comparison diagnostics for a measure and its
//! perturbation, and zero statistics.

pub mod error;
pub mod geometry;
pub mod measures;
pub mod numerics;
pub mod orthopoly;
pub mod perturbation;
pub mod zeros;

pub use error::{Error, Result};
