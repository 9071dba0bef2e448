use num_complex::Complex64;

use super::RealMatrix;
use crate::error::{dim_err, Result};

/// Complex matrix stored as separate real and imaginary parts of identical shape.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMatrix {
    re: RealMatrix,
    im: RealMatrix,
}

impl ComplexMatrix {
    pub fn from_parts(re: RealMatrix, im: RealMatrix) -> Result<Self> {
        if re.shape() != im.shape() {
            return Err(dim_err!(
                "real part {:?} and imaginary part {:?} differ in shape",
                re.shape(),
                im.shape()
            ));
        }
        Ok(Self { re, im })
    }

    pub fn from_real(re: RealMatrix) -> Self {
        let im = RealMatrix::zeros(re.rows(), re.cols());
        Self { re, im }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            re: RealMatrix::zeros(rows, cols),
            im: RealMatrix::zeros(rows, cols),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_real(RealMatrix::identity(n))
    }

    pub fn from_diag(diag: &[Complex64]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m.set(i, i, d);
        }
        m
    }

    pub fn block_diag(blocks: &[ComplexMatrix]) -> Self {
        let re: Vec<_> = blocks.iter().map(|b| b.re.clone()).collect();
        let im: Vec<_> = blocks.iter().map(|b| b.im.clone()).collect();
        Self {
            re: RealMatrix::block_diag(&re),
            im: RealMatrix::block_diag(&im),
        }
    }

    pub fn re(&self) -> &RealMatrix {
        &self.re
    }

    pub fn im(&self) -> &RealMatrix {
        &self.im
    }

    pub fn into_parts(self) -> (RealMatrix, RealMatrix) {
        (self.re, self.im)
    }

    pub fn rows(&self) -> usize {
        self.re.rows()
    }

    pub fn cols(&self) -> usize {
        self.re.cols()
    }

    pub fn shape(&self) -> (usize, usize) {
        self.re.shape()
    }

    pub fn is_square(&self) -> bool {
        self.re.is_square()
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        Complex64::new(self.re[(i, j)], self.im[(i, j)])
    }

    pub fn set(&mut self, i: usize, j: usize, z: Complex64) {
        self.re[(i, j)] = z.re;
        self.im[(i, j)] = z.im;
    }

    /// Conjugate transpose `M*`.
    pub fn adjoint(&self) -> Self {
        Self {
            re: self.re.transpose(),
            im: self.im.transpose().scale(-1.0),
        }
    }

    /// `(A + iB)(C + iD) = (AC − BD) + i(AD + BC)`.
    pub fn matmul(&self, rhs: &ComplexMatrix) -> ComplexMatrix {
        let re = self.re.matmul(&rhs.re).sub(&self.im.matmul(&rhs.im));
        let im = self.re.matmul(&rhs.im).add(&self.im.matmul(&rhs.re));
        Self { re, im }
    }

    pub fn frobenius_norm(&self) -> f64 {
        let r = self.re.frobenius_norm();
        let i = self.im.frobenius_norm();
        r.hypot(i)
    }

    pub fn distance(&self, rhs: &ComplexMatrix) -> f64 {
        self.re.distance(&rhs.re).hypot(self.im.distance(&rhs.im))
    }

    pub fn max_abs_diff(&self, rhs: &ComplexMatrix) -> f64 {
        let mut m: f64 = 0.0;
        for i in 0..self.rows() {
            for j in 0..self.cols() {
                m = m.max((self.get(i, j) - rhs.get(i, j)).norm());
            }
        }
        m
    }

    /// Determinant by complex LU with partial pivoting.
    pub fn determinant(&self) -> Result<Complex64> {
        if !self.is_square() {
            return Err(dim_err!(
                "determinant of a {}x{} matrix",
                self.rows(),
                self.cols()
            ));
        }
        let n = self.rows();
        let mut lu: Vec<Complex64> = (0..n * n).map(|p| self.get(p / n, p % n)).collect();
        let mut det = Complex64::new(1.0, 0.0);
        for k in 0..n {
            let pivot = (k..n)
                .max_by(|&a, &b| lu[a * n + k].norm().total_cmp(&lu[b * n + k].norm()))
                .unwrap_or(k);
            if lu[pivot * n + k] == Complex64::new(0.0, 0.0) {
                return Ok(Complex64::new(0.0, 0.0));
            }
            if pivot != k {
                for j in 0..n {
                    lu.swap(k * n + j, pivot * n + j);
                }
                det = -det;
            }
            let p = lu[k * n + k];
            det *= p;
            for i in k + 1..n {
                let f = lu[i * n + k] / p;
                for j in k + 1..n {
                    let u = lu[k * n + j];
                    lu[i * n + j] -= f * u;
                }
            }
        }
        Ok(det)
    }
}
