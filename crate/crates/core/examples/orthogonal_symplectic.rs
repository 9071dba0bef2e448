//! Random elements of Sp(2n) ∩ O(2n), the matrices preserving Ω = [[0, I], [−I, 0]].

use formstab::forms::symplectic_form;
use formstab::stabilizer::generate;
use formstab::RngStream;

fn main() -> formstab::Result<()> {
    let n = 2;
    let form = symplectic_form(n)?;
    let mut rng = RngStream::new(7);
    let sample = generate(&form, &mut rng)?;

    println!("A ∈ Sp({}) ∩ O({}):", 2 * n, 2 * n);
    for row in sample.a.to_rows() {
        println!(
            "  {}",
            row.iter()
                .map(|x| format!("{x:+.5}"))
                .collect::<Vec<_>>()
                .join(" ")
        );
    }
    // Every such A has the form [[X, −Y], [Y, X]] with X + iY unitary.
    let a = &sample.a;
    let mut defect = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            defect = defect
                .max((a[(i, j)] - a[(i + n, j + n)]).abs())
                .max((a[(i, j + n)] + a[(i + n, j)]).abs());
        }
    }
    println!("block-structure defect {defect:.2e}");
    println!(
        "‖AᵀΩA − Ω‖/‖Ω‖ = {:.2e}, ‖AᵀA − I‖ = {:.2e}, det = {:+}",
        sample.residual_s, sample.residual_orth, sample.det_sign
    );
    Ok(())
}
