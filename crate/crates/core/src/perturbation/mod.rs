//! Comparison of the orthonormal families of a measure and its perturbation.

mod report;
mod setup;

pub use report::{decimal, default_probes, perturbation_report, PerturbationReport, ProbeSeries};
pub use setup::{
    beta_bounds, beta_sequence, christoffel_ratio, christoffel_ratios, christoffel_sandwich, diff_norms,
    epsilon_tail, max_step, ps_norms, ratio_at, toeplitz_diagnostic, DiffNorms, PerturbationSetup, RatioSample, Sandwich,
};
