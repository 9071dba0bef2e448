use std::fmt::Debug;

use num_complex::Complex64;

use crate::error::{dim_err, Error, Result};
use crate::matcore::{ComplexMatrix, RealMatrix};
use crate::tolerance::Tolerances;

/// `M = Q·R` with `Q` orthogonal (unitary) and `R` upper triangular with a
/// real, strictly positive diagonal.
#[derive(Clone, Debug, PartialEq)]
pub struct QrPair<M: PositiveQr> {
    pub q: M,
    pub r: M,
    /// `det(Q)`: a sign for real input, a unit-modulus phase for complex input.
    pub q_det: M::Scalar,
}

/// Matrices that admit the sign-normalized Householder QR.
pub trait PositiveQr: Sized + Clone + Debug + PartialEq {
    type Scalar: Copy + Debug + PartialEq;

    fn qr_positive_impl(&self, inv_tol: f64) -> Result<QrPair<Self>>;
}

/// Unique QR factorization with `diag(R) > 0`, using the default invertibility threshold.
pub fn qr_positive<M: PositiveQr>(m: &M) -> Result<QrPair<M>> {
    qr_positive_with(m, Tolerances::default().inv_tol)
}

/// As [`qr_positive`]; fails with [`Error::Singular`] when some `|r_ii| ≤ inv_tol·‖M‖_F`.
pub fn qr_positive_with<M: PositiveQr>(m: &M, inv_tol: f64) -> Result<QrPair<M>> {
    m.qr_positive_impl(inv_tol)
}

fn singular_diag(pos: usize, value: f64, scale: f64) -> Error {
    Error::Singular(format!(
        "R[{pos},{pos}] = {value:e} is negligible against ‖M‖_F = {scale:e}"
    ))
}

impl PositiveQr for RealMatrix {
    type Scalar = f64;

    fn qr_positive_impl(&self, inv_tol: f64) -> Result<QrPair<Self>> {
        if !self.is_square() {
            return Err(dim_err!("QR of a {}x{} matrix", self.rows(), self.cols()));
        }
        let n = self.rows();
        let scale = self.frobenius_norm();
        let mut r = self.clone();
        let mut q = RealMatrix::identity(n);
        let mut det = 1.0;

        for k in 0..n.saturating_sub(1) {
            let norm = (k..n).map(|i| r[(i, k)] * r[(i, k)]).sum::<f64>().sqrt();
            if norm == 0.0 {
                continue;
            }
            let x0 = r[(k, k)];
            let alpha = if x0 < 0.0 { norm } else { -norm };
            let mut v: Vec<f64> = (k..n).map(|i| r[(i, k)]).collect();
            v[0] -= alpha;
            let vtv: f64 = v.iter().map(|x| x * x).sum();
            if vtv == 0.0 {
                continue;
            }
            let beta = 2.0 / vtv;
            for j in k + 1..n {
                let s: f64 = v.iter().enumerate().map(|(i, vi)| vi * r[(k + i, j)]).sum();
                let f = beta * s;
                for (i, vi) in v.iter().enumerate() {
                    r[(k + i, j)] -= f * vi;
                }
            }
            r[(k, k)] = alpha;
            for i in k + 1..n {
                r[(i, k)] = 0.0;
            }
            for row in 0..n {
                let s: f64 = v
                    .iter()
                    .enumerate()
                    .map(|(i, vi)| q[(row, k + i)] * vi)
                    .sum();
                let f = beta * s;
                for (i, vi) in v.iter().enumerate() {
                    q[(row, k + i)] -= f * vi;
                }
            }
            det = -det;
        }

        for i in 0..n {
            let d = r[(i, i)];
            if d == 0.0 || d.abs() <= inv_tol * scale {
                return Err(singular_diag(i, d, scale));
            }
            if d < 0.0 {
                for j in i..n {
                    r[(i, j)] = -r[(i, j)];
                }
                for row in 0..n {
                    q[(row, i)] = -q[(row, i)];
                }
                det = -det;
            }
        }
        Ok(QrPair { q, r, q_det: det })
    }
}

impl PositiveQr for ComplexMatrix {
    type Scalar = Complex64;

    fn qr_positive_impl(&self, inv_tol: f64) -> Result<QrPair<Self>> {
        if !self.is_square() {
            return Err(dim_err!("QR of a {}x{} matrix", self.rows(), self.cols()));
        }
        let n = self.rows();
        let scale = self.frobenius_norm();
        let at = |m: &[Complex64], i: usize, j: usize| m[i * n + j];
        let mut r: Vec<Complex64> = (0..n * n).map(|p| self.get(p / n, p % n)).collect();
        let mut q: Vec<Complex64> = (0..n * n)
            .map(|p| {
                if p / n == p % n {
                    Complex64::new(1.0, 0.0)
                } else {
                    Complex64::new(0.0, 0.0)
                }
            })
            .collect();
        let mut det = Complex64::new(1.0, 0.0);

        for k in 0..n.saturating_sub(1) {
            let norm = (k..n).map(|i| at(&r, i, k).norm_sqr()).sum::<f64>().sqrt();
            if norm == 0.0 {
                continue;
            }
            let x0 = at(&r, k, k);
            let phase = if x0.norm() == 0.0 {
                Complex64::new(1.0, 0.0)
            } else {
                x0 / x0.norm()
            };
            let alpha = -phase * norm;
            let mut v: Vec<Complex64> = (k..n).map(|i| at(&r, i, k)).collect();
            v[0] -= alpha;
            let vtv: f64 = v.iter().map(Complex64::norm_sqr).sum();
            if vtv == 0.0 {
                continue;
            }
            let beta = 2.0 / vtv;
            for j in k + 1..n {
                let s: Complex64 = v
                    .iter()
                    .enumerate()
                    .map(|(i, vi)| vi.conj() * at(&r, k + i, j))
                    .sum();
                let f = s * beta;
                for (i, vi) in v.iter().enumerate() {
                    r[(k + i) * n + j] -= f * vi;
                }
            }
            r[k * n + k] = alpha;
            for i in k + 1..n {
                r[i * n + k] = Complex64::new(0.0, 0.0);
            }
            for row in 0..n {
                let s: Complex64 = v
                    .iter()
                    .enumerate()
                    .map(|(i, vi)| at(&q, row, k + i) * vi)
                    .sum();
                let f = s * beta;
                for (i, vi) in v.iter().enumerate() {
                    q[row * n + k + i] -= f * vi.conj();
                }
            }
            det = -det;
        }

        for i in 0..n {
            let d = at(&r, i, i);
            let mag = d.norm();
            if mag == 0.0 || mag <= inv_tol * scale {
                return Err(singular_diag(i, mag, scale));
            }
            let lambda = d / mag;
            for j in i + 1..n {
                r[i * n + j] *= lambda.conj();
            }
            r[i * n + i] = Complex64::new(mag, 0.0);
            for row in 0..n {
                q[row * n + i] *= lambda;
            }
            det *= lambda;
        }

        let split = |m: &[Complex64]| {
            let re = m.iter().map(|z| z.re).collect();
            let im = m.iter().map(|z| z.im).collect();
            ComplexMatrix::from_parts(
                RealMatrix::from_row_major(n, n, re)?,
                RealMatrix::from_row_major(n, n, im)?,
            )
        };
        Ok(QrPair {
            q: split(&q)?,
            r: split(&r)?,
            q_det: det,
        })
    }
}
