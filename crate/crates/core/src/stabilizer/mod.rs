//! Sampling `A` with `AᵀSA = S` and `AᵀA = I`.
//!
//! Symmetric forms: with `S = U·diag(λ)·Uᵀ`, the orthogonal matrices that fix
//! `diag(λ)` are block diagonal, one block per distinct eigenvalue, so
//! `A = U·diag(B₁, …, B_m)·Uᵀ` with Haar blocks `B_i`.
//!
//! Skew forms: with `S = U·T·Uᵀ` in canonical form, the interleaving
//! permutation `P` gives `J = P·T·Pᵀ = [[0, D], [−D, 0]]`. Orthogonal
//! matrices fixing `J` are exactly `μ(Q)` for unitary `Q` commuting with `D`;
//! such `Q` are block diagonal (after grouping equal entries of `D` with `W`)
//! with Haar unitary blocks. Then `A = U·Pᵀ·μ(Q)·P·Uᵀ`.
//!
//! The induced law is Haar on each commutant block, conjugated by the fixed
//! `U`, `P` and `W`.

mod cluster;
mod embed;
mod generate;

pub use cluster::{cluster_eigenvalues, EigenClustering};
pub use embed::{interleave_permutation, mu_embed};
pub use generate::{
    generate, generate_batch, generate_skew, generate_symmetric, generate_with,
    sample_block_diagonal_orthogonal, sample_block_diagonal_unitary, StabilizerSample,
};
