//! Fixed statistical settings shared by the randomized tests.
//!
//! Every randomized check runs on a pinned seed, so these bands decide the
//! outcome deterministically.

/// Width of Monte-Carlo confidence bands, in standard errors.
pub const SIGMA_BAND: f64 = 5.0;
/// Significance level of chi-square uniformity tests.
pub const CHI_SQUARE_ALPHA: f64 = 0.01;
/// Significance level of Kolmogorov–Smirnov uniformity tests.
pub const KS_ALPHA: f64 = 0.01;

/// Samples for Haar moment checks.
pub const HAAR_MOMENT_SAMPLES: usize = 10_000;
/// Samples for the finite-group uniformity check.
pub const FINITE_GROUP_SAMPLES: usize = 4_000;
/// Samples for the 2×2 symplectic rotation check.
pub const ROTATION_SAMPLES: usize = 1_000;
