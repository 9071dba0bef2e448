use super::transpose_residual;
use crate::error::{dim_err, Error, Result};
use crate::matcore::RealMatrix;
use crate::tolerance::Tolerances;

const MAX_SWEEPS: usize = 100;

/// `S = U·diag(λ)·Uᵀ` with `U` orthogonal and `λ` ascending.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetricFactorization {
    pub u: RealMatrix,
    pub lambda: Vec<f64>,
}

impl SymmetricFactorization {
    pub fn reconstruct(&self) -> RealMatrix {
        let scaled = RealMatrix::from_fn(self.u.rows(), self.u.cols(), |i, j| {
            self.u[(i, j)] * self.lambda[j]
        });
        scaled.matmul(&self.u.transpose())
    }
}

pub fn eigh_symmetric(s: &RealMatrix) -> Result<SymmetricFactorization> {
    eigh_symmetric_with(s, Tolerances::default().sym_tol)
}

/// Cyclic Jacobi eigensolver.
///
/// The input is symmetrized as `(S + Sᵀ)/2` after the check
/// `‖S − Sᵀ‖_F ≤ sym_tol·‖S‖_F`. Eigenvalues are returned ascending; equal
/// values keep the order in which they sit on the converged diagonal.
pub fn eigh_symmetric_with(s: &RealMatrix, sym_tol: f64) -> Result<SymmetricFactorization> {
    if !s.is_square() {
        return Err(dim_err!(
            "eigendecomposition of a {}x{} matrix",
            s.rows(),
            s.cols()
        ));
    }
    let asym = transpose_residual(s, -1.0);
    if asym > sym_tol * s.frobenius_norm() {
        return Err(Error::FormKind(format!(
            "matrix is not symmetric: ‖S − Sᵀ‖_F = {asym:e}"
        )));
    }
    let n = s.rows();
    let mut a = RealMatrix::from_fn(n, n, |i, j| 0.5 * (s[(i, j)] + s[(j, i)]));
    let mut v = RealMatrix::identity(n);
    jacobi(&mut a, &mut v)?;

    let diag = a.diagonal();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| diag[x].total_cmp(&diag[y]));
    let lambda = order.iter().map(|&k| diag[k]).collect();
    let u = RealMatrix::from_fn(n, n, |i, j| v[(i, order[j])]);
    Ok(SymmetricFactorization { u, lambda })
}

fn jacobi(a: &mut RealMatrix, v: &mut RealMatrix) -> Result<()> {
    let n = a.rows();
    for sweep in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|p| (p + 1..n).map(move |q| (p, q)))
            .map(|(p, q)| a[(p, q)] * a[(p, q)])
            .sum();
        if off == 0.0 {
            return Ok(());
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let g = 100.0 * apq.abs();
                let (app, aqq) = (a[(p, p)], a[(q, q)]);
                if sweep > 3 && app.abs() + g == app.abs() && aqq.abs() + g == aqq.abs() {
                    a[(p, q)] = 0.0;
                    a[(q, p)] = 0.0;
                    continue;
                }
                let h = aqq - app;
                let t = if h.abs() + g == h.abs() {
                    apq / h
                } else {
                    let theta = 0.5 * h / apq;
                    let t = 1.0 / (theta.abs() + (1.0 + theta * theta).sqrt());
                    if theta < 0.0 {
                        -t
                    } else {
                        t
                    }
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                rotate_columns(a, p, q, c, s);
                rotate_rows(a, p, q, c, s);
                a[(p, q)] = 0.0;
                a[(q, p)] = 0.0;
                rotate_columns(v, p, q, c, s);
            }
        }
    }
    Err(Error::Convergence(format!(
        "Jacobi iteration did not converge in {MAX_SWEEPS} sweeps"
    )))
}

fn rotate_columns(m: &mut RealMatrix, p: usize, q: usize, c: f64, s: f64) {
    for k in 0..m.rows() {
        let (x, y) = (m[(k, p)], m[(k, q)]);
        m[(k, p)] = c * x - s * y;
        m[(k, q)] = s * x + c * y;
    }
}

fn rotate_rows(m: &mut RealMatrix, p: usize, q: usize, c: f64, s: f64) {
    for k in 0..m.cols() {
        let (x, y) = (m[(p, k)], m[(q, k)]);
        m[(p, k)] = c * x - s * y;
        m[(q, k)] = s * x + c * y;
    }
}
