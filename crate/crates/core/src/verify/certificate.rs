use serde::{Deserialize, Serialize};

use crate::error::{dim_err, Result};
use crate::forms::BilinearForm;
use crate::matcore::RealMatrix;
use crate::stabilizer::StabilizerSample;
use crate::tolerance::Tolerances;

/// Numerical evidence that `A` is orthogonal and preserves `S`.
///
/// Serializes to a flat object with the fields `residual_s`,
/// `residual_orth`, `det_value`, `passed` and `warnings`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    /// `‖AᵀSA − S‖_F / ‖S‖_F`
    pub residual_s: f64,
    /// `‖AᵀA − I‖_F`
    pub residual_orth: f64,
    pub det_value: f64,
    pub passed: bool,
    pub warnings: Vec<String>,
    #[serde(skip)]
    pub residual_tol: f64,
    #[serde(skip)]
    pub det_tol: f64,
}

/// `‖AᵀSA − S‖_F / ‖S‖_F`.
pub fn form_residual(a: &RealMatrix, s: &RealMatrix) -> f64 {
    a.tr_matmul(&s.matmul(a)).distance(s) / s.frobenius_norm()
}

/// `‖AᵀA − I‖_F`.
pub fn orthogonality_residual(a: &RealMatrix) -> f64 {
    a.tr_matmul(a).distance(&RealMatrix::identity(a.cols()))
}

/// Certificate with residual tolerance `tol` and the default determinant tolerance.
pub fn certify(a: &RealMatrix, form: &BilinearForm, tol: f64) -> Result<Certificate> {
    let det_tol = Tolerances::default().det_tol(form.dim());
    build(a, form, tol, det_tol)
}

/// Certificate with `gen_tol(N)` and `det_tol(N)` taken from `tol`.
pub fn certify_with(a: &RealMatrix, form: &BilinearForm, tol: &Tolerances) -> Result<Certificate> {
    let n = form.dim();
    build(a, form, tol.gen_tol(n), tol.det_tol(n))
}

/// Recomputes the certificate of a generated sample and carries over its warnings.
pub fn certify_sample(
    sample: &StabilizerSample,
    form: &BilinearForm,
    tol: &Tolerances,
) -> Result<Certificate> {
    let mut cert = certify_with(&sample.a, form, tol)?;
    cert.warnings.extend(sample.warnings.iter().cloned());
    Ok(cert)
}

fn build(a: &RealMatrix, form: &BilinearForm, tol: f64, det_tol: f64) -> Result<Certificate> {
    let n = form.dim();
    if a.shape() != (n, n) {
        return Err(dim_err!(
            "matrix is {}x{} but the form is {n}x{n}",
            a.rows(),
            a.cols()
        ));
    }
    let residual_s = form_residual(a, form.matrix());
    let residual_orth = orthogonality_residual(a);
    let det_value = a.determinant()?;
    let passed =
        residual_s <= tol && residual_orth <= tol && (det_value.abs() - 1.0).abs() <= det_tol;
    Ok(Certificate {
        residual_s,
        residual_orth,
        det_value,
        passed,
        warnings: Vec::new(),
        residual_tol: tol,
        det_tol,
    })
}
