//! Extended-precision scalars, polynomials, and root extraction.

mod complex;
mod linalg;
mod poly;
mod precision;
mod qr;
mod quadrature;
mod roots;

pub use complex::Complex;
pub use linalg::hermitian_solve;
pub use poly::{eval_poly, Polynomial};
pub use precision::{PrecisionContext, DEFAULT_BITS, DEFAULT_MAX_SWEEPS};
pub use qr::hessenberg_section_eigen;
pub use quadrature::GaussLegendre;
pub use roots::{poly_roots, poly_roots_report, RootReport};
