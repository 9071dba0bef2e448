//! The real embedding μ(X + iY) = [[X, −Y], [Y, X]] and the skew sampler's building blocks.

use formstab::haar::haar_unitary;
use formstab::matcore::conjugate_by_permutation;
use formstab::stabilizer::{cluster_eigenvalues, interleave_permutation, mu_embed};
use formstab::verify::orthogonality_residual;
use formstab::{RealMatrix, RngStream};

fn main() -> formstab::Result<()> {
    let mut rng = RngStream::new(3);
    let u = haar_unitary(3, &mut rng)?;
    let v = haar_unitary(3, &mut rng)?;

    let lhs = mu_embed(&u.matmul(&v));
    let rhs = mu_embed(&u).matmul(&mu_embed(&v));
    println!("‖μ(uv) − μ(u)μ(v)‖ = {:.2e}", lhs.distance(&rhs));
    println!(
        "‖μ(u)ᵀμ(u) − I‖   = {:.2e}",
        orthogonality_residual(&mu_embed(&u))
    );

    // The interleave permutation turns canonical blocks into [[0, D], [−D, 0]].
    let lambda = [1.0, 2.0, 1.0];
    let mut t = RealMatrix::zeros(6, 6);
    for (j, &l) in lambda.iter().enumerate() {
        t[(2 * j, 2 * j + 1)] = l;
        t[(2 * j + 1, 2 * j)] = -l;
    }
    let p = interleave_permutation(3);
    println!("P·T·Pᵀ = {:?}", conjugate_by_permutation(&p, &t)?);

    // Repeated canonical values are grouped before block sampling.
    let clusters = cluster_eigenvalues(&lambda, 1e-8);
    println!(
        "clusters: values {:?}, multiplicities {:?}, grouping {:?}",
        clusters.values,
        clusters.multiplicities,
        clusters.grouping.image()
    );
    Ok(())
}
