//! Canonical form of an invertible skew-symmetric matrix.
//!
//! `iS` is Hermitian with eigenvalues `±λ_j`. Its real form
//! `K = [[0, −S], [S, 0]]` is symmetric, and a unit eigenvector `[x; y]`
//! of `K` for `λ > 0` satisfies `S·x = λ·y`, `S·y = −λ·x`. So the plane
//! spanned by `x` and `y` is `S`-invariant and carries one canonical block.
//! Working with `K` instead of `SᵀS = −S²` keeps the residual proportional
//! to `‖S‖` rather than to `‖S‖²/λ`.
//!
//! Positive eigenvectors of `K` are consumed in ascending order. Each one,
//! projected against the complex lines already taken, seeds a new pair
//! unless the projection has collapsed. Inside the plane, `v` is the
//! projection of the coordinate axis carrying the most weight (the later
//! axis on ties), so canonical input comes back with `U = I`.

use super::{eigh_symmetric_with, transpose_residual};
use crate::error::{dim_err, Error, Result};
use crate::matcore::RealMatrix;
use crate::tolerance::Tolerances;

/// Projected candidates at least this long are taken in eigenvalue order.
const ACCEPT_RESIDUAL: f64 = 0.5;
/// Below this, a candidate is numerically inside the span already built.
const COLLAPSED_RESIDUAL: f64 = 1e-6;

/// `S = U·T·Uᵀ` where `T = diag([0 λ₁; −λ₁ 0], …, [0 λ_N; −λ_N 0])`.
#[derive(Clone, Debug, PartialEq)]
pub struct SkewCanonicalFactorization {
    pub u: RealMatrix,
    /// Strictly positive, ascending.
    pub lambda: Vec<f64>,
}

impl SkewCanonicalFactorization {
    /// The quasi-diagonal canonical matrix `T`.
    pub fn canonical(&self) -> RealMatrix {
        let n = 2 * self.lambda.len();
        let mut t = RealMatrix::zeros(n, n);
        for (j, &l) in self.lambda.iter().enumerate() {
            t[(2 * j, 2 * j + 1)] = l;
            t[(2 * j + 1, 2 * j)] = -l;
        }
        t
    }

    pub fn reconstruct(&self) -> RealMatrix {
        self.u.matmul(&self.canonical()).matmul(&self.u.transpose())
    }
}

pub fn skew_canonical(s: &RealMatrix) -> Result<SkewCanonicalFactorization> {
    skew_canonical_with(s, &Tolerances::default())
}

pub fn skew_canonical_with(s: &RealMatrix, tol: &Tolerances) -> Result<SkewCanonicalFactorization> {
    if !s.is_square() {
        return Err(dim_err!(
            "skew factorization of a {}x{} matrix",
            s.rows(),
            s.cols()
        ));
    }
    let sym = transpose_residual(s, 1.0);
    if sym > tol.sym_tol * s.frobenius_norm() {
        return Err(Error::FormKind(format!(
            "matrix is not skew-symmetric: ‖S + Sᵀ‖_F = {sym:e}"
        )));
    }
    let n = s.rows();
    if n % 2 == 1 {
        return Err(dim_err!(
            "skew-symmetric matrix of odd size {n} is never invertible"
        ));
    }
    let s = RealMatrix::from_fn(n, n, |i, j| 0.5 * (s[(i, j)] - s[(j, i)]));
    if s.frobenius_norm() == 0.0 {
        return Err(Error::Singular("zero matrix".into()));
    }

    let k = RealMatrix::from_fn(2 * n, 2 * n, |i, j| match (i < n, j < n) {
        (true, false) => -s[(i, j - n)],
        (false, true) => s[(i - n, j)],
        _ => 0.0,
    });
    let eig = eigh_symmetric_with(&k, tol.sym_tol)?;
    let lambda_max = eig.lambda[2 * n - 1].max(0.0);

    let mut candidates: Vec<Vec<f64>> = (n..2 * n).map(|j| eig.u.column(j)).collect();
    let mut used = vec![false; n];
    let mut lines: Vec<Vec<f64>> = Vec::with_capacity(n);
    let mut basis: Vec<Vec<f64>> = Vec::with_capacity(n);
    let mut pairs: Vec<(f64, Vec<f64>, Vec<f64>)> = Vec::with_capacity(n / 2);

    while pairs.len() < n / 2 {
        let norms: Vec<f64> = candidates.iter().map(|c| norm(c)).collect();
        let pick = (0..n)
            .filter(|&i| !used[i])
            .find(|&i| norms[i] >= ACCEPT_RESIDUAL)
            .or_else(|| {
                (0..n)
                    .filter(|&i| !used[i])
                    .max_by(|&a, &b| norms[a].total_cmp(&norms[b]))
            })
            .filter(|&i| norms[i] > COLLAPSED_RESIDUAL)
            .ok_or_else(|| {
                Error::Convergence(
                    "eigenvectors of the embedding exhausted before pairing completed".into(),
                )
            })?;
        used[pick] = true;

        let mut q = candidates[pick].clone();
        orthogonalize(&mut q, &lines);
        normalize(&mut q);
        let mut jq: Vec<f64> = q[n..]
            .iter()
            .map(|y| -y)
            .chain(q[..n].iter().copied())
            .collect();
        orthogonalize(&mut jq, &lines);
        project_out(&mut jq, &q);
        normalize(&mut jq);

        let mut x = q[..n].to_vec();
        let mut y = q[n..].to_vec();
        if norm(&x) <= COLLAPSED_RESIDUAL || norm(&y) <= COLLAPSED_RESIDUAL {
            return Err(Error::Singular("canonical value is negligible".into()));
        }
        normalize(&mut x);
        project_out(&mut y, &x);
        normalize(&mut y);

        // Axis with the most weight in span{x, y}; later axis on ties.
        let mass: Vec<f64> = (0..n).map(|i| x[i] * x[i] + y[i] * y[i]).collect();
        let top = mass.iter().cloned().fold(0.0, f64::max);
        let axis = (0..n)
            .rev()
            .find(|&i| mass[i] >= top * (1.0 - 1e-9))
            .unwrap_or(0);
        let (a, b) = (x[axis], y[axis]);
        let r = a.hypot(b);
        let (a, b) = (a / r, b / r);
        let mut v: Vec<f64> = x.iter().zip(&y).map(|(xi, yi)| a * xi + b * yi).collect();
        let mut w: Vec<f64> = x.iter().zip(&y).map(|(xi, yi)| -b * xi + a * yi).collect();

        orthogonalize(&mut v, &basis);
        normalize(&mut v);
        orthogonalize(&mut w, &basis);
        project_out(&mut w, &v);
        normalize(&mut w);
        // λ = wᵀ·S·v
        let lam = dot(&w, &s.mul_vec(&v));
        if lam <= tol.inv_tol * lambda_max {
            return Err(Error::Singular(format!(
                "canonical value {lam:e} is negligible against {lambda_max:e}"
            )));
        }

        for (i, c) in candidates.iter_mut().enumerate() {
            if !used[i] {
                project_out(c, &q);
                project_out(c, &jq);
            }
        }
        lines.push(q);
        lines.push(jq);
        basis.push(v.clone());
        basis.push(w.clone());
        pairs.push((lam, w, v));
    }

    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut u = RealMatrix::zeros(n, n);
    let mut lambda = Vec::with_capacity(n / 2);
    for (j, (lam, w, v)) in pairs.into_iter().enumerate() {
        u.set_column(2 * j, &w);
        u.set_column(2 * j + 1, &v);
        lambda.push(lam);
    }
    Ok(SkewCanonicalFactorization { u, lambda })
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

fn normalize(a: &mut [f64]) {
    let n = norm(a);
    a.iter_mut().for_each(|x| *x /= n);
}

fn project_out(a: &mut [f64], u: &[f64]) {
    let d = dot(a, u);
    a.iter_mut().zip(u).for_each(|(x, y)| *x -= d * y);
}

/// Two passes of Gram–Schmidt against an orthonormal list.
fn orthogonalize(a: &mut [f64], basis: &[Vec<f64>]) {
    for _ in 0..2 {
        for b in basis {
            project_out(a, b);
        }
    }
}
