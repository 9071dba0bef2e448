//! Orthogonal elements of the Lorentz group O(1, 3) and of O(p, q) in general.
//!
//! The stabilizer of diag(I_p, −I_q) inside O(p+q) is O(p) × O(q), so the
//! samples are block diagonal with independent Haar blocks.

use formstab::forms::{indefinite_form, minkowski_form};
use formstab::stabilizer::generate;
use formstab::RngStream;

fn main() -> formstab::Result<()> {
    let mut rng = RngStream::new(1);
    let eta = minkowski_form();
    let a = generate(&eta, &mut rng)?;
    println!("A ∈ O(1,3) ∩ O(4), det {:+}:", a.det_sign);
    for row in a.a.to_rows() {
        println!(
            "  {}",
            row.iter()
                .map(|x| format!("{x:+.5}"))
                .collect::<Vec<_>>()
                .join(" ")
        );
    }
    println!("‖AᵀηA − η‖/‖η‖ = {:.2e}", a.residual_s);

    let form = indefinite_form(2, 3)?;
    let b = generate(&form, &mut rng)?;
    let off_block = (0..2)
        .flat_map(|i| (2..5).map(move |j| (i, j)))
        .map(|(i, j)| b.a[(i, j)].abs().max(b.a[(j, i)].abs()))
        .fold(0.0, f64::max);
    println!("O(2,3) sample: largest entry coupling the two blocks {off_block:.2e}");
    Ok(())
}
