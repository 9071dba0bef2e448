//! Factorizations used by the generators: sign-normalized QR, the symmetric
//! eigendecomposition and the canonical form of a skew-symmetric matrix.

mod eigh;
mod qr;
mod skew;

pub use eigh::{eigh_symmetric, eigh_symmetric_with, SymmetricFactorization};
pub use qr::{qr_positive, qr_positive_with, PositiveQr, QrPair};
pub use skew::{skew_canonical, skew_canonical_with, SkewCanonicalFactorization};

use crate::matcore::RealMatrix;

/// `‖S − Sᵀ‖_F` (sign = −1) or `‖S + Sᵀ‖_F` (sign = +1).
pub(crate) fn transpose_residual(s: &RealMatrix, sign: f64) -> f64 {
    let n = s.rows();
    let mut acc = 0.0;
    for i in 0..n {
        for j in 0..n {
            let d = s[(i, j)] + sign * s[(j, i)];
            acc += d * d;
        }
    }
    acc.sqrt()
}
