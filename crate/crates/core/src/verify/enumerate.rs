use crate::error::{Error, Result};
use crate::forms::{BilinearForm, Spectrum};
use crate::matcore::RealMatrix;
use crate::stabilizer::cluster_eigenvalues;
use crate::tolerance::Tolerances;

const MAX_ENUMERATION_DIM: usize = 8;

/// All of `O_S(N) ∩ O(N)` when the symmetric form `S` has a simple spectrum.
///
/// Every element is `U·diag(±1, …, ±1)·Uᵀ`; element `m` takes sign `−1` in
/// position `i` exactly when bit `i` of `m` is set.
pub fn enumerate_finite_stabilizer(form: &BilinearForm) -> Result<Vec<RealMatrix>> {
    let Spectrum::Symmetric(f) = form.spectrum() else {
        return Err(Error::InvalidArgument(
            "finite enumeration needs a symmetric form".into(),
        ));
    };
    let n = form.dim();
    if n > MAX_ENUMERATION_DIM {
        return Err(Error::InvalidArgument(format!(
            "enumeration limited to N ≤ {MAX_ENUMERATION_DIM}, got {n}"
        )));
    }
    let max_abs = f.lambda.iter().fold(0.0f64, |m, l| m.max(l.abs()));
    let clusters = cluster_eigenvalues(&f.lambda, Tolerances::default().cluster_threshold(max_abs));
    if clusters.multiplicities.iter().any(|&k| k > 1) {
        return Err(Error::InvalidArgument(
            "repeated eigenvalue: the stabilizer is infinite".into(),
        ));
    }
    Ok((0..1usize << n)
        .map(|mask| {
            let signs: Vec<f64> = (0..n)
                .map(|i| if mask >> i & 1 == 1 { -1.0 } else { 1.0 })
                .collect();
            f.u.matmul(&RealMatrix::from_diag(&signs))
                .matmul(&f.u.transpose())
        })
        .collect())
}

/// Index of the element within `tol` of `a` entrywise.
pub fn match_element(a: &RealMatrix, elements: &[RealMatrix], tol: f64) -> Option<usize> {
    elements.iter().position(|e| e.max_abs_diff(a) <= tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::{symplectic_form, validate_form};
    use crate::matcore::RngStream;
    use crate::stabilizer::generate;
    use crate::verify::certify;

    #[test]
    fn two_distinct_eigenvalues() {
        let form = validate_form(&RealMatrix::from_diag(&[1.0, 2.0])).unwrap();
        let group = enumerate_finite_stabilizer(&form).unwrap();
        assert_eq!(group.len(), 4);
        for (a, b) in [(1.0, 1.0), (-1.0, 1.0), (1.0, -1.0), (-1.0, -1.0)] {
            assert!(match_element(&RealMatrix::from_diag(&[a, b]), &group, 0.0).is_some());
        }
    }

    #[test]
    fn three_distinct_eigenvalues_certify() {
        let form = validate_form(&RealMatrix::from_diag(&[1.0, 2.0, 3.0])).unwrap();
        let group = enumerate_finite_stabilizer(&form).unwrap();
        assert_eq!(group.len(), 8);
        for g in &group {
            assert!(certify(g, &form, 1e-11).unwrap().passed);
        }
    }

    #[test]
    fn infinite_or_unsupported_groups() {
        let id = validate_form(&RealMatrix::identity(2)).unwrap();
        assert!(matches!(
            enumerate_finite_stabilizer(&id),
            Err(Error::InvalidArgument(_))
        ));
        let omega = symplectic_form(1).unwrap();
        assert!(matches!(
            enumerate_finite_stabilizer(&omega),
            Err(Error::InvalidArgument(_))
        ));
        let big = validate_form(&RealMatrix::from_diag(
            &(1..=9).map(f64::from).collect::<Vec<_>>(),
        ))
        .unwrap();
        assert!(enumerate_finite_stabilizer(&big).is_err());
    }

    #[test]
    fn samples_land_on_group_elements() {
        let mut rng = RngStream::new(101);
        let g = crate::matcore::gaussian_matrix(5, &mut rng).unwrap();
        let form = validate_form(&g.add(&g.transpose())).unwrap();
        let group = enumerate_finite_stabilizer(&form).unwrap();
        for _ in 0..200 {
            let s = generate(&form, &mut rng).unwrap();
            assert!(match_element(&s.a, &group, 1e-10).is_some());
        }
    }
}
