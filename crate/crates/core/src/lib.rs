//! Random orthogonal matrices that preserve a bilinear form.
//!
//! Given an invertible real matrix `S` that is either symmetric or
//! skew-symmetric, this crate samples orthogonal matrices `A` with
//! `AᵀSA = S`, i.e. elements of the stabilizer `O_S(N) ∩ O(N)`.
//!
//! * Symmetric `S = U·diag(λ)·Uᵀ`: the stabilizer is `U·diag(B₁, …, B_m)·Uᵀ`
//!   with one Haar orthogonal block per distinct eigenvalue.
//! * Skew `S = U·T·Uᵀ` with `T` built from `[0 λ; −λ 0]` blocks: after the
//!   interleaving permutation `J = P·T·Pᵀ = [[0, D], [−D, 0]]` and the
//!   stabilizer is the real image `[[Re u, −Im u], [Im u, Re u]]` of the
//!   unitary matrices `u` commuting with `D`.
//!
//! ```
//! use formstab::{forms, stabilizer, RngStream};
//!
//! let omega = forms::symplectic_form(2).unwrap();
//! let mut rng = RngStream::new(7);
//! let sample = stabilizer::generate(&omega, &mut rng).unwrap();
//! assert!(sample.residual_s < 1e-12);
//! ```
//!
//! The `examples/` directory of the crate has one runnable program per
//! capability; the `formstab` binary wraps generation, verification and
//! statistics for the command line.

pub mod cli;
pub mod error;
pub mod factor;
pub mod forms;
pub mod haar;
pub mod io;
pub mod matcore;
pub mod stabilizer;
pub mod tolerance;
pub mod verify;

pub use error::{Error, Result};
pub use forms::{BilinearForm, FormKind};
pub use matcore::{ComplexMatrix, Permutation, RealMatrix, RngStream};
pub use stabilizer::StabilizerSample;
pub use tolerance::Tolerances;
pub use verify::Certificate;
