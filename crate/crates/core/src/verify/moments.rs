use serde::Serialize;

use crate::error::{Error, Result};
use crate::matcore::RealMatrix;

/// Empirical moments of a sequence of equally shaped matrices.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MomentSummary {
    pub count: usize,
    pub rows: usize,
    pub cols: usize,
    /// Per-entry arithmetic mean.
    pub mean: Vec<Vec<f64>>,
    /// Per-entry mean of the squared entry.
    pub second_moment: Vec<Vec<f64>>,
    /// Fraction of samples with positive determinant (square samples only).
    pub det_positive_fraction: Option<f64>,
    pub det_negative_fraction: Option<f64>,
}

pub fn moment_stats(samples: &[RealMatrix]) -> Result<MomentSummary> {
    let first = samples
        .first()
        .ok_or_else(|| Error::InvalidArgument("moment_stats needs at least one sample".into()))?;
    let (rows, cols) = first.shape();
    if let Some(bad) = samples.iter().find(|m| m.shape() != (rows, cols)) {
        return Err(Error::InvalidDimension(format!(
            "sample shape {:?} differs from {:?}",
            bad.shape(),
            (rows, cols)
        )));
    }
    let count = samples.len() as f64;
    let mut sum = RealMatrix::zeros(rows, cols);
    let mut sum_sq = RealMatrix::zeros(rows, cols);
    for m in samples {
        sum = sum.add(m);
        sum_sq = sum_sq.add(&m.map(|x| x * x));
    }
    let (det_positive_fraction, det_negative_fraction) = if rows == cols {
        let mut pos = 0usize;
        let mut neg = 0usize;
        for m in samples {
            let d = m.determinant()?;
            if d > 0.0 {
                pos += 1;
            } else if d < 0.0 {
                neg += 1;
            }
        }
        (Some(pos as f64 / count), Some(neg as f64 / count))
    } else {
        (None, None)
    };
    Ok(MomentSummary {
        count: samples.len(),
        rows,
        cols,
        mean: sum.scale(1.0 / count).to_rows(),
        second_moment: sum_sq.scale(1.0 / count).to_rows(),
        det_positive_fraction,
        det_negative_fraction,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::identity_form;
    use crate::haar::haar_orthogonal;
    use crate::matcore::RngStream;
    use crate::stabilizer::generate;
    use crate::verify::thresholds::SIGMA_BAND;

    #[test]
    fn constant_sequence() {
        let s = moment_stats(&vec![RealMatrix::identity(2); 5]).unwrap();
        assert_eq!(s.mean, RealMatrix::identity(2).to_rows());
        assert_eq!(s.second_moment, RealMatrix::identity(2).to_rows());
        assert_eq!(s.det_positive_fraction, Some(1.0));
    }

    #[test]
    fn empty_and_ragged_inputs() {
        assert!(matches!(moment_stats(&[]), Err(Error::InvalidArgument(_))));
        assert!(moment_stats(&[RealMatrix::identity(2), RealMatrix::identity(3)]).is_err());
    }

    #[test]
    fn haar_four_by_four_means() {
        let n = 10_000;
        let mut rng = RngStream::new(91);
        let samples: Vec<_> = (0..n)
            .map(|_| haar_orthogonal(4, &mut rng).unwrap())
            .collect();
        let s = moment_stats(&samples).unwrap();
        let band = SIGMA_BAND * (0.25 / n as f64).sqrt();
        assert!(s.mean.iter().flatten().all(|m| m.abs() < band));
    }

    #[test]
    fn det_signs_balance_for_identity_form() {
        let n = 10_000;
        let form = identity_form(3).unwrap();
        let mut rng = RngStream::new(92);
        let samples: Vec<_> = (0..n)
            .map(|_| generate(&form, &mut rng).unwrap().a)
            .collect();
        let s = moment_stats(&samples).unwrap();
        let band = SIGMA_BAND * (0.25 / n as f64).sqrt();
        assert!((s.det_positive_fraction.unwrap() - 0.5).abs() < band);
        assert!((s.det_negative_fraction.unwrap() - 0.5).abs() < band);
    }
}
