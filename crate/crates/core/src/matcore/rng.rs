//! Seeded random streams.
//!
//! The generator is ChaCha20 keyed from a 64-bit seed through
//! `rand_core::SeedableRng::seed_from_u64`, whose expansion is fixed by the
//! rand_core stability policy. Uniforms in `[0, 1)` take the top 53 bits of
//! one `u64`. Normals use the Box–Muller transform with the `libm`
//! implementations of `log`, `sin` and `cos`, so the stream does not depend
//! on the platform math library. Each transform yields two normals; the
//! second is returned by the following draw.
//!
//! Child stream `i` of master seed `s` is seeded with
//! `splitmix64(s ^ splitmix64(i + 1))`.

use std::f64::consts::TAU;

use rand_chacha::ChaCha20Rng;
use rand_core::{RngCore, SeedableRng};

use super::{ComplexMatrix, RealMatrix};
use crate::error::{dim_err, Result};

/// A deterministic stream of uniform and standard normal draws.
#[derive(Clone, Debug)]
pub struct RngStream {
    seed: u64,
    inner: ChaCha20Rng,
    spare: Option<f64>,
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

impl RngStream {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            inner: ChaCha20Rng::seed_from_u64(seed),
            spare: None,
        }
    }

    /// Seed of child stream `index` of `master`.
    pub fn child_seed(master: u64, index: u64) -> u64 {
        splitmix64(master ^ splitmix64(index.wrapping_add(1)))
    }

    /// Independent stream number `index` derived from this stream's seed.
    pub fn child(&self, index: u64) -> Self {
        Self::new(Self::child_seed(self.seed, index))
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    /// Uniform on `[0, 1)` with 53 random bits.
    pub fn next_uniform(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform on `[lo, hi)`.
    pub fn uniform_in(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_uniform()
    }

    /// Standard normal draw.
    pub fn next_normal(&mut self) -> f64 {
        if let Some(z) = self.spare.take() {
            return z;
        }
        // 1 - u lies in (0, 1], keeping the logarithm finite.
        let u1 = 1.0 - self.next_uniform();
        let u2 = self.next_uniform();
        let r = (-2.0 * libm::log(u1)).sqrt();
        let theta = TAU * u2;
        self.spare = Some(r * libm::sin(theta));
        r * libm::cos(theta)
    }
}

/// `n×n` matrix of independent standard normals, filled in row-major order.
pub fn gaussian_matrix(n: usize, rng: &mut RngStream) -> Result<RealMatrix> {
    if n == 0 {
        return Err(dim_err!("gaussian matrix of size 0"));
    }
    let data = (0..n * n).map(|_| rng.next_normal()).collect();
    RealMatrix::from_row_major(n, n, data)
}

/// Complex Ginibre matrix `G₁ + i·G₂`; the real part takes the first `n²` draws.
pub fn complex_gaussian_matrix(n: usize, rng: &mut RngStream) -> Result<ComplexMatrix> {
    let re = gaussian_matrix(n, rng)?;
    let im = gaussian_matrix(n, rng)?;
    ComplexMatrix::from_parts(re, im)
}
