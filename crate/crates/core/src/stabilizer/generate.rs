use rayon::prelude::*;
use serde::Serialize;

use super::{cluster_eigenvalues, interleave_permutation, mu_embed, EigenClustering};
use crate::error::{Error, Result};
use crate::forms::{BilinearForm, FormKind, Spectrum};
use crate::haar::{haar_orthogonal_with_det, haar_unitary};
use crate::matcore::{
    conjugate_by_permutation, conjugate_complex_by_permutation, ComplexMatrix, RealMatrix,
    RngStream,
};
use crate::tolerance::Tolerances;
use crate::verify::{form_residual, orthogonality_residual};

pub(crate) const NEAR_DEGENERATE_WARNING: &str =
    "near-degenerate spectrum: adjacent eigenvalue clusters are closer than 10·cluster_tol";

/// A generated stabilizer element with its residual certificate.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StabilizerSample {
    #[serde(skip)]
    pub a: RealMatrix,
    pub form_kind: FormKind,
    /// Seed of the stream the sample was drawn from.
    pub seed: u64,
    /// `‖AᵀSA − S‖_F / ‖S‖_F`
    pub residual_s: f64,
    /// `‖AᵀA − I‖_F`
    pub residual_orth: f64,
    /// Product of the block determinants; always `+1` for skew forms.
    pub det_sign: f64,
    pub gen_tol: f64,
    pub warnings: Vec<String>,
}

impl StabilizerSample {
    pub fn within_tolerance(&self) -> bool {
        self.residual_s <= self.gen_tol && self.residual_orth <= self.gen_tol
    }
}

/// `diag(B₁, …, B_M)` with independent Haar orthogonal blocks sized by the clustering.
pub fn sample_block_diagonal_orthogonal(
    clusters: &EigenClustering,
    rng: &mut RngStream,
) -> Result<RealMatrix> {
    Ok(block_diagonal_orthogonal_with_det(clusters, rng)?.0)
}

fn block_diagonal_orthogonal_with_det(
    clusters: &EigenClustering,
    rng: &mut RngStream,
) -> Result<(RealMatrix, f64)> {
    let mut det = 1.0;
    let blocks = clusters
        .multiplicities
        .iter()
        .map(|&k| {
            let (b, d) = haar_orthogonal_with_det(k, rng)?;
            det *= d;
            Ok(b)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((RealMatrix::block_diag(&blocks), det))
}

/// `diag(V₁, …, V_M)` with independent Haar unitary blocks sized by the clustering.
pub fn sample_block_diagonal_unitary(
    clusters: &EigenClustering,
    rng: &mut RngStream,
) -> Result<ComplexMatrix> {
    let blocks = clusters
        .multiplicities
        .iter()
        .map(|&k| haar_unitary(k, rng))
        .collect::<Result<Vec<_>>>()?;
    Ok(ComplexMatrix::block_diag(&blocks))
}

fn cluster_spectrum(lambda: &[f64], tol: &Tolerances) -> EigenClustering {
    let max_abs = lambda.iter().fold(0.0f64, |m, l| m.max(l.abs()));
    cluster_eigenvalues(lambda, tol.cluster_threshold(max_abs))
}

fn finish(
    form: &BilinearForm,
    a: RealMatrix,
    seed: u64,
    det_sign: f64,
    clusters: &EigenClustering,
    tol: &Tolerances,
) -> StabilizerSample {
    let mut warnings = Vec::new();
    if clusters.near_degenerate {
        warnings.push(NEAR_DEGENERATE_WARNING.to_string());
    }
    StabilizerSample {
        residual_s: form_residual(&a, form.matrix()),
        residual_orth: orthogonality_residual(&a),
        a,
        form_kind: form.kind(),
        seed,
        det_sign,
        gen_tol: tol.gen_tol(form.dim()),
        warnings,
    }
}

/// Sampler for symmetric forms: `A = U·B·Uᵀ`, `B` block diagonal over the eigenvalue clusters.
pub fn generate_symmetric(
    form: &BilinearForm,
    rng: &mut RngStream,
    tol: &Tolerances,
) -> Result<StabilizerSample> {
    let Spectrum::Symmetric(f) = form.spectrum() else {
        return Err(Error::FormKind(
            "generate_symmetric needs a symmetric form".into(),
        ));
    };
    let seed = rng.seed();
    let clusters = cluster_spectrum(&f.lambda, tol);
    let (grouped, det_sign) = block_diagonal_orthogonal_with_det(&clusters, rng)?;
    let b = conjugate_by_permutation(&clusters.grouping.inverse(), &grouped)?;
    let a = f.u.matmul(&b).matmul(&f.u.transpose());
    Ok(finish(form, a, seed, det_sign, &clusters, tol))
}

/// Sampler for skew forms: `A = U·Pᵀ·μ(W*·V·W)·P·Uᵀ`.
pub fn generate_skew(
    form: &BilinearForm,
    rng: &mut RngStream,
    tol: &Tolerances,
) -> Result<StabilizerSample> {
    let Spectrum::Skew(f) = form.spectrum() else {
        return Err(Error::FormKind(
            "generate_skew needs a skew-symmetric form".into(),
        ));
    };
    let seed = rng.seed();
    let half = f.lambda.len();
    let interleave = interleave_permutation(half);
    let clusters = cluster_spectrum(&f.lambda, tol);
    let v = sample_block_diagonal_unitary(&clusters, rng)?;
    // W*·V·W as a relabeling: Q[i, j] = V[w(i), w(j)].
    let q = conjugate_complex_by_permutation(&clusters.grouping.inverse(), &v)?;
    let c = mu_embed(&q);
    let b = conjugate_by_permutation(&interleave.inverse(), &c)?;
    let a = f.u.matmul(&b).matmul(&f.u.transpose());
    Ok(finish(form, a, seed, 1.0, &clusters, tol))
}

pub fn generate(form: &BilinearForm, rng: &mut RngStream) -> Result<StabilizerSample> {
    generate_with(form, rng, &Tolerances::default())
}

pub fn generate_with(
    form: &BilinearForm,
    rng: &mut RngStream,
    tol: &Tolerances,
) -> Result<StabilizerSample> {
    match form.kind() {
        FormKind::Symmetric => generate_symmetric(form, rng, tol),
        FormKind::Skew => generate_skew(form, rng, tol),
    }
}

/// `count` samples in parallel; sample `i` is drawn from child stream `i` of `master_seed`.
pub fn generate_batch(
    form: &BilinearForm,
    master_seed: u64,
    count: usize,
    tol: &Tolerances,
) -> Result<Vec<StabilizerSample>> {
    let master = RngStream::new(master_seed);
    (0..count)
        .into_par_iter()
        .map(|i| generate_with(form, &mut master.child(i as u64), tol))
        .collect()
}
