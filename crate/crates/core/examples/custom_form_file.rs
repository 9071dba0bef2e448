//! Loads a form from a matrix file and samples its orthogonal stabilizer.
//!
//! `cargo run --example custom_form_file -- path/to/form.mtx` reads the given
//! file (Matrix Market, CSV or JSON by extension). Without an argument a
//! small form with a repeated eigenvalue is written to a temporary file first.

use std::path::PathBuf;

use formstab::forms::{validate_form, Spectrum};
use formstab::io::{read_matrix_file, write_matrix_file, MatrixFormat};
use formstab::stabilizer::generate;
use formstab::{RealMatrix, RngStream};

fn main() -> formstab::Result<()> {
    let path = match std::env::args_os().nth(1) {
        Some(p) => PathBuf::from(p),
        None => {
            let path = std::env::temp_dir().join("formstab_custom_form.csv");
            // Eigenvalues 3, 1, 1: the stabilizer is O(1) × O(2).
            let s = RealMatrix::from_rows(&[
                vec![2.0, 1.0, 0.0],
                vec![1.0, 2.0, 0.0],
                vec![0.0, 0.0, 1.0],
            ])?;
            write_matrix_file(&path, &s, MatrixFormat::Csv)?;
            path
        }
    };
    let form = validate_form(&read_matrix_file(&path)?)?;
    println!(
        "{}: {} form of size {}",
        path.display(),
        form.kind(),
        form.dim()
    );
    match form.spectrum() {
        Spectrum::Symmetric(f) => println!("eigenvalues {:?}", f.lambda),
        Spectrum::Skew(f) => println!("canonical values {:?}", f.lambda),
    }

    let mut rng = RngStream::new(99);
    for _ in 0..3 {
        let s = generate(&form, &mut rng)?;
        println!(
            "residual_s {:.2e}  residual_orth {:.2e}  det {:+}  warnings {:?}",
            s.residual_s, s.residual_orth, s.det_sign, s.warnings
        );
    }
    Ok(())
}
