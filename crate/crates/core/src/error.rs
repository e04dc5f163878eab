use thiserror::Error;

/// Failure modes of the numerical pipeline.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid precision context: {0}")]
    InvalidPrecision(String),
    #[error("iteration did not converge after {iterations} sweeps (worst residual ratio {worst:.3e})")]
    NonConvergence { iterations: usize, worst: f64 },
    #[error("polynomial must have degree at least 1 with nonzero leading coefficient")]
    DegeneratePolynomial,
    #[error("matrix is not square upper Hessenberg: {0}")]
    NotHessenberg(String),
    #[error("invalid geometry: {0}")]
    GeometryInvalid(String),
    #[error("lake is not compactly contained in the outer region (margin {margin:.3e})")]
    InvalidLake { margin: f64 },
    #[error("ellipse arclength quadrature did not converge after {panels} panels")]
    QuadratureNonConvergence { panels: usize },
    #[error("moment index ({m}, {n}) exceeds capacity {cap}")]
    CapacityExceeded { m: usize, n: usize, cap: usize },
    #[error("self inner product has negative real part {0:.3e}; moment table is broken")]
    NegativeSelfProduct(f64),
    #[error("measure is purely atomic with {atoms} atoms; cannot orthonormalize to degree {degree}")]
    FiniteSupport { atoms: usize, degree: usize },
    #[error("precision exhausted at degree {degree}: {detail}")]
    PrecisionExhausted { degree: usize, detail: String },
    #[error("Gram matrix is not positive definite (pivot {pivot} of {size})")]
    SingularGram { pivot: usize, size: usize },
    #[error("degree {degree} is outside the family range 0..={max}")]
    DegreeOutOfRange { degree: usize, max: usize },
    #[error("{identity} violated at n = {n}: deviation {deviation:.3e} exceeds {tolerance:.3e}")]
    IdentityViolated {
        identity: &'static str,
        n: usize,
        deviation: f64,
        tolerance: f64,
    },
    #[error("bound violated at n = {n}: {detail}")]
    BoundViolated { n: usize, detail: String },
    #[error("p_n(mu0, z) vanishes to working precision at n = {n}")]
    ZeroDenominator { n: usize },
    #[error("potential evaluated on a zero of the polynomial")]
    PotentialAtZero,
    #[error("root solver and Hessenberg eigenvalues disagree by {gap:.3e} (tolerance {tolerance:.3e})")]
    CrossCheckFailed { gap: f64, tolerance: f64 },
    #[error("invalid measure: {0}")]
    InvalidMeasure(String),
}

pub type Result<T> = std::result::Result<T, Error>;
