//! Residual certificates for candidate stabilizer elements.

use formstab::forms::{identity_form, symplectic_form, validate_form};
use formstab::verify::{certify_with, enumerate_finite_stabilizer};
use formstab::{RealMatrix, Tolerances};

fn main() -> formstab::Result<()> {
    let tol = Tolerances::default();

    let omega = symplectic_form(1)?;
    let (c, s) = (0.3f64.cos(), 0.3f64.sin());
    let rotation = RealMatrix::from_rows(&[vec![c, -s], vec![s, c]])?;
    let cert = certify_with(&rotation, &omega, &tol)?;
    println!(
        "rotation(0.3) vs Ω(1): {}",
        serde_json::to_string(&cert).unwrap()
    );

    let shear = RealMatrix::from_rows(&[vec![1.0, 1.0], vec![0.0, 1.0]])?;
    let cert = certify_with(&shear, &identity_form(2)?, &tol)?;
    println!(
        "shear vs I₂:           {}",
        serde_json::to_string(&cert).unwrap()
    );

    // All-distinct spectrum: the stabilizer is finite, 2^N sign patterns.
    let form = validate_form(&RealMatrix::from_diag(&[1.0, 2.0, 3.0]))?;
    let group = enumerate_finite_stabilizer(&form)?;
    let all_pass = group.iter().all(|g| {
        certify_with(g, &form, &tol)
            .map(|c| c.passed)
            .unwrap_or(false)
    });
    println!(
        "diag(1,2,3): {} elements, all certified: {all_pass}",
        group.len()
    );
    Ok(())
}
