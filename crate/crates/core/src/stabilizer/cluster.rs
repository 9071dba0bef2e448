use crate::matcore::Permutation;

/// Partition of a spectrum into groups of (numerically) equal values.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenClustering {
    /// Mean of each cluster, ascending. Diagnostic only: the commutant depends on the partition.
    pub values: Vec<f64>,
    pub multiplicities: Vec<usize>,
    /// Sends an index of the input spectrum to its position in grouped order.
    pub grouping: Permutation,
    /// Two adjacent clusters are closer than ten times the clustering tolerance.
    pub near_degenerate: bool,
}

impl EigenClustering {
    pub fn dim(&self) -> usize {
        self.multiplicities.iter().sum()
    }

    pub fn num_clusters(&self) -> usize {
        self.multiplicities.len()
    }

    /// Start offset of each cluster in grouped order.
    pub fn offsets(&self) -> Vec<usize> {
        self.multiplicities
            .iter()
            .scan(0, |acc, &k| {
                let start = *acc;
                *acc += k;
                Some(start)
            })
            .collect()
    }
}

/// Greedy left-to-right grouping of a spectrum.
///
/// Values are ordered first (stably), then a new cluster starts whenever the
/// gap to the previous value exceeds `cluster_tol`, so chains of small gaps
/// merge. Sorted input yields the identity grouping.
///
/// # Panics
/// If `lambda` is empty.
pub fn cluster_eigenvalues(lambda: &[f64], cluster_tol: f64) -> EigenClustering {
    assert!(!lambda.is_empty(), "cannot cluster an empty spectrum");
    let mut order: Vec<usize> = (0..lambda.len()).collect();
    order.sort_by(|&a, &b| lambda[a].total_cmp(&lambda[b]));
    let mut image = vec![0; lambda.len()];
    for (pos, &src) in order.iter().enumerate() {
        image[src] = pos;
    }

    let mut values = Vec::new();
    let mut multiplicities = Vec::new();
    let mut near_degenerate = false;
    let mut sum = lambda[order[0]];
    let mut count = 1;
    for w in order.windows(2) {
        let gap = lambda[w[1]] - lambda[w[0]];
        if gap > cluster_tol {
            values.push(sum / count as f64);
            multiplicities.push(count);
            near_degenerate |= gap < 10.0 * cluster_tol;
            sum = 0.0;
            count = 0;
        }
        sum += lambda[w[1]];
        count += 1;
    }
    values.push(sum / count as f64);
    multiplicities.push(count);

    EigenClustering {
        values,
        multiplicities,
        grouping: Permutation::new(image).expect("sort order is a bijection"),
        near_degenerate,
    }
}
