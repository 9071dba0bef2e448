use crate::matcore::{ComplexMatrix, Permutation, RealMatrix};

/// Permutation of `2n` indices sending `2j ↦ j` and `2j + 1 ↦ n + j`.
///
/// Conjugating `diag([0 λ₁; −λ₁ 0], …)` by it yields `[[0, D], [−D, 0]]`.
pub fn interleave_permutation(n: usize) -> Permutation {
    let mut image = vec![0; 2 * n];
    for j in 0..n {
        image[2 * j] = j;
        image[2 * j + 1] = n + j;
    }
    Permutation::new(image).expect("interleave is a bijection")
}

/// `A + iB ↦ [[A, −B], [B, A]]`.
///
/// # Panics
/// If `u` is not square.
pub fn mu_embed(u: &ComplexMatrix) -> RealMatrix {
    assert!(u.is_square(), "mu_embed needs a square matrix");
    let n = u.rows();
    let (re, im) = (u.re(), u.im());
    RealMatrix::from_fn(2 * n, 2 * n, |i, j| match (i < n, j < n) {
        (true, true) => re[(i, j)],
        (true, false) => -im[(i, j - n)],
        (false, true) => im[(i - n, j)],
        (false, false) => re[(i - n, j - n)],
    })
}
