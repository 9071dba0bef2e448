//! Haar-distributed orthogonal and unitary matrices.
//!
//! A Ginibre matrix factored by the positive-diagonal QR has a Haar
//! distributed `Q`. Sampling is retried once on a singular draw.

use crate::error::{Error, Result};
use crate::factor::{qr_positive, PositiveQr, QrPair};
use crate::matcore::{
    complex_gaussian_matrix, gaussian_matrix, ComplexMatrix, RealMatrix, RngStream,
};

fn sample_with_retry<M: PositiveQr>(
    n: usize,
    rng: &mut RngStream,
    draw: fn(usize, &mut RngStream) -> Result<M>,
) -> Result<QrPair<M>> {
    match qr_positive(&draw(n, rng)?) {
        Err(Error::Singular(_)) => qr_positive(&draw(n, rng)?),
        other => other,
    }
}

/// Haar orthogonal `n×n` matrix.
pub fn haar_orthogonal(n: usize, rng: &mut RngStream) -> Result<RealMatrix> {
    Ok(haar_orthogonal_with_det(n, rng)?.0)
}

/// Haar orthogonal matrix together with its determinant (`±1`), read off the QR.
pub fn haar_orthogonal_with_det(n: usize, rng: &mut RngStream) -> Result<(RealMatrix, f64)> {
    let qr = sample_with_retry(n, rng, gaussian_matrix)?;
    Ok((qr.q, qr.q_det))
}

/// Haar unitary `n×n` matrix.
pub fn haar_unitary(n: usize, rng: &mut RngStream) -> Result<ComplexMatrix> {
    Ok(sample_with_retry(n, rng, complex_gaussian_matrix)?.q)
}
