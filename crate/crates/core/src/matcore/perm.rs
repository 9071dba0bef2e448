use super::{ComplexMatrix, RealMatrix};
use crate::error::{dim_err, Error, Result};

/// A bijection on `0..size`; `image[i]` is where source index `i` lands.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        if image.is_empty() {
            return Err(dim_err!("permutation of size 0"));
        }
        let mut seen = vec![false; image.len()];
        for &d in &image {
            if d >= image.len() || std::mem::replace(&mut seen[d], true) {
                return Err(Error::InvalidArgument(format!(
                    "{image:?} is not a bijection on 0..{}",
                    image.len()
                )));
            }
        }
        Ok(Self { image })
    }

    pub fn identity(size: usize) -> Self {
        Self {
            image: (0..size).collect(),
        }
    }

    /// Transposition of `a` and `b` on `size` indices.
    pub fn swap(size: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(size);
        p.image.swap(a, b);
        p
    }

    pub fn size(&self) -> usize {
        self.image.len()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn apply(&self, i: usize) -> usize {
        self.image[i]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.image.len()];
        for (src, &dst) in self.image.iter().enumerate() {
            inv[dst] = src;
        }
        Self { image: inv }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Self {
        assert_eq!(self.size(), other.size(), "compose size mismatch");
        Self {
            image: other.image.iter().map(|&i| self.image[i]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &d)| i == d)
    }
}

/// The 0/1 matrix `P` with `P[image[j], j] = 1`, so that `(P·x)[image[j]] = x[j]`.
pub fn permutation_to_matrix(p: &Permutation) -> RealMatrix {
    let mut m = RealMatrix::zeros(p.size(), p.size());
    for (j, &i) in p.image.iter().enumerate() {
        m[(i, j)] = 1.0;
    }
    m
}

/// `P·M·Pᵀ` by relabeling: `result[image[i], image[j]] = M[i, j]`.
pub fn conjugate_by_permutation(p: &Permutation, m: &RealMatrix) -> Result<RealMatrix> {
    if !m.is_square() || m.rows() != p.size() {
        return Err(dim_err!(
            "cannot conjugate a {}x{} matrix by a permutation of size {}",
            m.rows(),
            m.cols(),
            p.size()
        ));
    }
    let mut out = RealMatrix::zeros(m.rows(), m.cols());
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            out[(p.image[i], p.image[j])] = m[(i, j)];
        }
    }
    Ok(out)
}

pub(crate) fn conjugate_complex_by_permutation(
    p: &Permutation,
    m: &ComplexMatrix,
) -> Result<ComplexMatrix> {
    ComplexMatrix::from_parts(
        conjugate_by_permutation(p, m.re())?,
        conjugate_by_permutation(p, m.im())?,
    )
}
