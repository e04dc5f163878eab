//! Orthonormal polynomial families, kernels, and Christoffel functions.

mod family;

pub use family::{christoffel_oracle, christoffel_oracle_table, orthonormalize, orthonormalize_table, OrthoFamily};
