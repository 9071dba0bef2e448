//! Dense matrices, permutations and seeded random streams.

mod complex;
mod perm;
mod real;
mod rng;

pub use complex::ComplexMatrix;
pub(crate) use perm::conjugate_complex_by_permutation;
pub use perm::{conjugate_by_permutation, permutation_to_matrix, Permutation};
pub use real::RealMatrix;
pub use rng::{complex_gaussian_matrix, gaussian_matrix, RngStream};
