//! Haar-random orthogonal and unitary matrices from sign-fixed QR of Gaussian matrices.

use formstab::haar::{haar_orthogonal_with_det, haar_unitary};
use formstab::verify::orthogonality_residual;
use formstab::{ComplexMatrix, RngStream};

fn main() -> formstab::Result<()> {
    let mut rng = RngStream::new(2024);

    let (q, det) = haar_orthogonal_with_det(4, &mut rng)?;
    println!(
        "Q ∈ O(4), det {det:+}, ‖QᵀQ − I‖ = {:.2e}",
        orthogonality_residual(&q)
    );
    for row in q.to_rows() {
        println!(
            "  {}",
            row.iter()
                .map(|x| format!("{x:+.4}"))
                .collect::<Vec<_>>()
                .join(" ")
        );
    }

    let u = haar_unitary(3, &mut rng)?;
    let gram = u.adjoint().matmul(&u);
    println!(
        "U ∈ U(3), ‖U*U − I‖ = {:.2e}, |det U| = {:.15}",
        gram.distance(&ComplexMatrix::identity(3)),
        u.determinant()?.norm()
    );

    // The sign of det is a fair coin for Haar O(N).
    let positive = (0..2000)
        .filter(|_| {
            haar_orthogonal_with_det(3, &mut rng)
                .map(|(_, d)| d > 0.0)
                .unwrap_or(false)
        })
        .count();
    println!("det > 0 in {positive} of 2000 draws from O(3)");
    Ok(())
}
