//! Validated bilinear forms and the classical built-in forms.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{dim_err, Error, Result};
use crate::factor::{
    eigh_symmetric_with, skew_canonical_with, transpose_residual, SkewCanonicalFactorization,
    SymmetricFactorization,
};
use crate::matcore::RealMatrix;
use crate::tolerance::Tolerances;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FormKind {
    Symmetric,
    Skew,
}

impl fmt::Display for FormKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FormKind::Symmetric => "symmetric",
            FormKind::Skew => "skew",
        })
    }
}

/// The factorization computed while validating a form.
#[derive(Clone, Debug, PartialEq)]
pub enum Spectrum {
    Symmetric(SymmetricFactorization),
    Skew(SkewCanonicalFactorization),
}

/// An invertible matrix that is exactly symmetric or exactly skew-symmetric.
///
/// Construction goes through [`validate_form`], which snaps the input to
/// `(S ± Sᵀ)/2` and keeps the factorization it used to test invertibility.
#[derive(Clone, Debug, PartialEq)]
pub struct BilinearForm {
    s: RealMatrix,
    kind: FormKind,
    min_singular_estimate: f64,
    max_singular_estimate: f64,
    spectrum: Spectrum,
}

impl BilinearForm {
    pub fn matrix(&self) -> &RealMatrix {
        &self.s
    }

    pub fn kind(&self) -> FormKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.s.rows()
    }

    /// Smallest eigenvalue magnitude (symmetric) or canonical value (skew).
    pub fn min_singular_estimate(&self) -> f64 {
        self.min_singular_estimate
    }

    pub fn max_singular_estimate(&self) -> f64 {
        self.max_singular_estimate
    }

    pub fn spectrum(&self) -> &Spectrum {
        &self.spectrum
    }
}

pub fn validate_form(s: &RealMatrix) -> Result<BilinearForm> {
    validate_form_with(s, &Tolerances::default())
}

pub fn validate_form_with(s: &RealMatrix, tol: &Tolerances) -> Result<BilinearForm> {
    if !s.is_square() {
        return Err(dim_err!(
            "form must be square, got {}x{}",
            s.rows(),
            s.cols()
        ));
    }
    let n = s.rows();
    let norm = s.frobenius_norm();
    let sym_res = transpose_residual(s, -1.0);
    let skew_res = transpose_residual(s, 1.0);
    if sym_res.min(skew_res) > tol.sym_tol * norm {
        return Err(Error::FormKind(format!(
            "neither symmetric nor skew-symmetric: ‖S − Sᵀ‖_F = {sym_res:e}, ‖S + Sᵀ‖_F = {skew_res:e}"
        )));
    }
    let kind = if sym_res <= skew_res {
        FormKind::Symmetric
    } else {
        FormKind::Skew
    };
    if kind == FormKind::Skew && n % 2 == 1 {
        return Err(dim_err!(
            "skew-symmetric form of odd dimension {n} is singular"
        ));
    }
    if norm == 0.0 {
        return Err(Error::Singular("zero form".into()));
    }

    let sign = match kind {
        FormKind::Symmetric => 1.0,
        FormKind::Skew => -1.0,
    };
    let exact = RealMatrix::from_fn(n, n, |i, j| 0.5 * (s[(i, j)] + sign * s[(j, i)]));

    let (spectrum, min, max) = match kind {
        FormKind::Symmetric => {
            let f = eigh_symmetric_with(&exact, tol.sym_tol)?;
            let max = f.lambda.iter().fold(0.0f64, |m, l| m.max(l.abs()));
            let min = f.lambda.iter().fold(f64::INFINITY, |m, l| m.min(l.abs()));
            if min <= tol.inv_tol * max {
                return Err(Error::Singular(format!(
                    "smallest eigenvalue magnitude {min:e} is negligible against {max:e}"
                )));
            }
            (Spectrum::Symmetric(f), min, max)
        }
        FormKind::Skew => {
            let f = skew_canonical_with(&exact, tol)?;
            let min = f.lambda[0];
            let max = f.lambda[f.lambda.len() - 1];
            (Spectrum::Skew(f), min, max)
        }
    };
    Ok(BilinearForm {
        s: exact,
        kind,
        min_singular_estimate: min,
        max_singular_estimate: max,
        spectrum,
    })
}

/// `Ω = [[0, I_n], [−I_n, 0]]` of size `2n`.
pub fn symplectic_form(n: usize) -> Result<BilinearForm> {
    if n == 0 {
        return Err(dim_err!("symplectic form needs n ≥ 1"));
    }
    validate_form(&symplectic_matrix(n))
}

pub(crate) fn symplectic_matrix(n: usize) -> RealMatrix {
    RealMatrix::from_fn(2 * n, 2 * n, |i, j| {
        if j == i + n {
            1.0
        } else if i == j + n {
            -1.0
        } else {
            0.0
        }
    })
}

/// `g = diag(1, …, 1, −1, …, −1)` with `p` plus signs and `q` minus signs.
pub fn indefinite_form(p: usize, q: usize) -> Result<BilinearForm> {
    if p + q == 0 {
        return Err(dim_err!("indefinite form needs p + q ≥ 1"));
    }
    let diag: Vec<f64> = (0..p + q).map(|i| if i < p { 1.0 } else { -1.0 }).collect();
    validate_form(&RealMatrix::from_diag(&diag))
}

/// The Lorentz form `diag(1, −1, −1, −1)`.
pub fn minkowski_form() -> BilinearForm {
    indefinite_form(1, 3).expect("signature (1, 3) is valid")
}

pub fn identity_form(n: usize) -> Result<BilinearForm> {
    if n == 0 {
        return Err(dim_err!("identity form needs n ≥ 1"));
    }
    validate_form(&RealMatrix::identity(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classifies_small_forms() {
        assert_eq!(
            validate_form(&RealMatrix::identity(3)).unwrap().kind(),
            FormKind::Symmetric
        );
        let omega = RealMatrix::from_rows(&[vec![0.0, 1.0], vec![-1.0, 0.0]]).unwrap();
        assert_eq!(validate_form(&omega).unwrap().kind(), FormKind::Skew);
        let neither = RealMatrix::from_rows(&[vec![1.0, 2.0], vec![3.0, 4.0]]).unwrap();
        assert!(matches!(validate_form(&neither), Err(Error::FormKind(_))));
    }

    #[test]
    fn rejects_singular_and_odd_skew() {
        let singular = RealMatrix::from_diag(&[1.0, 0.0, 2.0]);
        assert!(matches!(validate_form(&singular), Err(Error::Singular(_))));
        let odd = RealMatrix::from_rows(&[
            vec![0.0, 1.0, -2.0],
            vec![-1.0, 0.0, 0.5],
            vec![2.0, -0.5, 0.0],
        ])
        .unwrap();
        assert!(matches!(
            validate_form(&odd),
            Err(Error::InvalidDimension(_))
        ));
        assert!(matches!(
            validate_form(&RealMatrix::zeros(2, 3)),
            Err(Error::InvalidDimension(_))
        ));
        assert!(matches!(
            validate_form(&RealMatrix::zeros(2, 2)),
            Err(Error::Singular(_))
        ));
    }

    #[test]
    fn snaps_to_exact_symmetry() {
        let s = RealMatrix::from_rows(&[vec![2.0, 1.0 + 1e-14], vec![1.0, 3.0]]).unwrap();
        let f = validate_form(&s).unwrap();
        assert_eq!(f.matrix()[(0, 1)], f.matrix()[(1, 0)]);
        let again = validate_form(f.matrix()).unwrap();
        assert_eq!(again.matrix(), f.matrix());
    }

    #[test]
    fn symplectic_layout() {
        assert_eq!(
            symplectic_form(1).unwrap().matrix().to_rows(),
            vec![vec![0.0, 1.0], vec![-1.0, 0.0]]
        );
        let o2 = symplectic_form(2).unwrap();
        assert_eq!(
            o2.matrix().to_rows(),
            vec![
                vec![0.0, 0.0, 1.0, 0.0],
                vec![0.0, 0.0, 0.0, 1.0],
                vec![-1.0, 0.0, 0.0, 0.0],
                vec![0.0, -1.0, 0.0, 0.0],
            ]
        );
        for n in 1..=16 {
            let o = symplectic_form(n).unwrap();
            let m = o.matrix();
            assert_eq!(o.kind(), FormKind::Skew);
            assert_eq!(m.transpose(), m.scale(-1.0));
            assert_eq!(m.matmul(m), RealMatrix::identity(2 * n).scale(-1.0));
            assert_eq!(validate_form(m).unwrap().matrix(), m);
        }
        assert!(symplectic_form(0).is_err());
    }

    #[test]
    fn indefinite_layout() {
        let lorentz = indefinite_form(1, 3).unwrap();
        assert_eq!(
            lorentz.matrix(),
            &RealMatrix::from_diag(&[1.0, -1.0, -1.0, -1.0])
        );
        assert_eq!(minkowski_form(), lorentz);
        assert_eq!(
            indefinite_form(3, 0).unwrap().matrix(),
            &RealMatrix::identity(3)
        );
        let g = indefinite_form(2, 3).unwrap();
        assert_eq!(g.matrix().matmul(g.matrix()), RealMatrix::identity(5));
        assert!(matches!(
            indefinite_form(0, 0),
            Err(Error::InvalidDimension(_))
        ));
    }
}
