#![allow(dead_code)]

use std::path::Path;
use std::process::{Command, Output};

use formstab::forms::{validate_form, BilinearForm};
use formstab::haar::haar_orthogonal;
use formstab::{RealMatrix, RngStream};

/// `Q·diag(λ)·Qᵀ` with Haar `Q`, random signs and `|λ| ∈ [0.1, 10]`.
pub fn random_symmetric_form(n: usize, rng: &mut RngStream) -> BilinearForm {
    let lambda: Vec<f64> = (0..n)
        .map(|_| {
            let sign = if rng.next_uniform() < 0.5 { -1.0 } else { 1.0 };
            sign * rng.uniform_in(0.1, 10.0)
        })
        .collect();
    conjugated_form(&RealMatrix::from_diag(&lambda), rng)
}

/// `Q·T·Qᵀ` with Haar `Q` of size `2·half` and canonical values in `[0.1, 10]`.
pub fn random_skew_form(half: usize, rng: &mut RngStream) -> BilinearForm {
    let values: Vec<f64> = (0..half).map(|_| rng.uniform_in(0.1, 10.0)).collect();
    conjugated_form(&canonical_skew(&values), rng)
}

pub fn canonical_skew(values: &[f64]) -> RealMatrix {
    let n = 2 * values.len();
    let mut t = RealMatrix::zeros(n, n);
    for (j, &l) in values.iter().enumerate() {
        t[(2 * j, 2 * j + 1)] = l;
        t[(2 * j + 1, 2 * j)] = -l;
    }
    t
}

pub fn conjugated_form(core: &RealMatrix, rng: &mut RngStream) -> BilinearForm {
    let q = haar_orthogonal(core.rows(), rng).unwrap();
    let s = q.matmul(core).matmul(&q.transpose());
    validate_form(&s).unwrap()
}

pub fn formstab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_formstab"))
        .args(args)
        .env_remove("FORMSTAB_GEN_TOL")
        .env_remove("FORMSTAB_SYM_TOL")
        .env_remove("FORMSTAB_INV_TOL")
        .env_remove("FORMSTAB_CLUSTER_TOL")
        .env_remove("FORMSTAB_DET_TOL")
        .output()
        .expect("run formstab")
}

pub fn write_rows(path: &Path, rows: &[Vec<f64>]) {
    let m = RealMatrix::from_rows(rows).unwrap();
    formstab::io::write_matrix_file(path, &m, formstab::io::MatrixFormat::Mm).unwrap();
}

pub const GOLDEN_ARGS: [&str; 9] = [
    "gen",
    "--form",
    "symplectic",
    "--n",
    "2",
    "--seed",
    "7",
    "--count",
    "3",
];
pub const GOLDEN_FILE: &str = "tests/golden/gen_symplectic_n2_seed7_count3.mtx";
