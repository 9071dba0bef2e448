//! Numerical tolerances.
//!
//! All thresholds are relative unless noted. The defaults are collected in
//! [`Tolerances`] so callers (and the CLI, through environment variables)
//! can override any of them in one place.

/// Orthogonality budget for a factorization of size `n`.
pub fn tol_orth(n: usize) -> f64 {
    1e-13 * n as f64
}

/// Reconstruction budget for a factorization of size `n`, relative to `‖S‖_F`.
pub fn tol_fact(n: usize) -> f64 {
    1e-12 * (n as f64).sqrt()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// `‖S ∓ Sᵀ‖_F ≤ sym_tol·‖S‖_F` classifies a form.
    pub sym_tol: f64,
    /// Smallest eigenvalue magnitude must exceed `inv_tol` times the largest.
    pub inv_tol: f64,
    /// Eigenvalues closer than `cluster_tol·max(1, ‖λ‖∞)` share a block.
    pub cluster_tol: f64,
    /// Residual budget per dimension: `gen_tol(N) = gen_tol·N`.
    pub gen_tol: f64,
    /// Determinant budget per dimension: `||det| − 1| ≤ det_tol·N`.
    pub det_tol: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            sym_tol: 1e-12,
            inv_tol: 1e-10,
            cluster_tol: 1e-8,
            gen_tol: 1e-11,
            det_tol: 1e-9,
        }
    }
}

impl Tolerances {
    pub fn gen_tol(&self, n: usize) -> f64 {
        self.gen_tol * n as f64
    }

    pub fn det_tol(&self, n: usize) -> f64 {
        self.det_tol * n as f64
    }

    /// Absolute clustering threshold for a spectrum whose largest magnitude is `max_abs`.
    pub fn cluster_threshold(&self, max_abs: f64) -> f64 {
        self.cluster_tol * max_abs.max(1.0)
    }
}
