//! Residual certificates, brute-force oracles and test statistics.

mod certificate;
mod enumerate;
mod moments;
pub mod stats;
pub mod thresholds;

pub use certificate::{
    certify, certify_sample, certify_with, form_residual, orthogonality_residual, Certificate,
};
pub use enumerate::{enumerate_finite_stabilizer, match_element};
pub use moments::{moment_stats, MomentSummary};
