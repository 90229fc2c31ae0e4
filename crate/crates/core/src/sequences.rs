//! The three invariant arrays of a network (degree, distance frequency and
//! neighboring) and the scalar indices derived from them.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{distance_histogram, Graph};
use crate::stats::{median_sorted, Fraction};

fn check_decreasing(values: &[u64]) -> Result<()> {
    if values.windows(2).all(|w| w[0] >= w[1]) {
        Ok(())
    } else {
        Err(Error::NotDecreasing)
    }
}

/// Node degrees, sorted decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct DeltaArray(Vec<u64>);

impl DeltaArray {
    pub fn new(values: Vec<u64>) -> Result<Self> {
        check_decreasing(&values)?;
        Ok(DeltaArray(values))
    }

    pub fn from_unsorted(mut values: Vec<u64>) -> Self {
        values.sort_unstable_by(|a, b| b.cmp(a));
        DeltaArray(values)
    }

    pub fn values(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Total degree, twice the edge count.
    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    /// Running sums `S_1..S_N`.
    pub fn cumulative(&self) -> Vec<u64> {
        cumulative(&self.0)
    }
}

/// Entry `j - 1` counts unordered node pairs at distance `j`; length `N - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct AlphaArray(Vec<u64>);

impl AlphaArray {
    pub fn new(values: Vec<u64>) -> Self {
        AlphaArray(values)
    }

    pub fn values(&self) -> &[u64] {
        &self.0
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }
}

/// Closed-neighborhood degree sums, sorted decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct GammaArray(Vec<u64>);

impl GammaArray {
    pub fn new(values: Vec<u64>) -> Result<Self> {
        check_decreasing(&values)?;
        Ok(GammaArray(values))
    }

    pub fn from_unsorted(mut values: Vec<u64>) -> Self {
        values.sort_unstable_by(|a, b| b.cmp(a));
        GammaArray(values)
    }

    pub fn values(&self) -> &[u64] {
        &self.0
    }

    /// The neighboring index.
    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }
}

pub(crate) fn cumulative(values: &[u64]) -> Vec<u64> {
    values
        .iter()
        .scan(0u64, |acc, &x| {
            *acc += x;
            Some(*acc)
        })
        .collect()
}

pub use crate::graph::degree_array;

/// Distance frequencies over unordered pairs.
pub fn alpha_array(g: &Graph) -> Result<AlphaArray> {
    distance_histogram(g).map(AlphaArray)
}

/// Per-node closed-neighborhood degree sums, in node order.
pub fn gamma_per_node(g: &Graph) -> Vec<u64> {
    (0..g.node_count())
        .map(|v| {
            g.degree(v) as u64
                + g.neighbors(v)
                    .iter()
                    .map(|&w| g.degree(w) as u64)
                    .sum::<u64>()
        })
        .collect()
}

pub fn gamma_array(g: &Graph) -> GammaArray {
    GammaArray::from_unsorted(gamma_per_node(g))
}

/// The neighboring array as the row vector `e (A^2 + A)`, computed by dense
/// matrix products. Kept independent of [`gamma_array`] so the two can be
/// checked against each other.
pub fn gamma_via_adjacency(g: &Graph) -> GammaArray {
    GammaArray::from_unsorted(gamma_via_adjacency_per_node(g))
}

#[allow(clippy::needless_range_loop)]
pub(crate) fn gamma_via_adjacency_per_node(g: &Graph) -> Vec<u64> {
    let a = g.adjacency_matrix();
    let n = a.len();
    let mut m = vec![vec![0u64; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == 0 {
                continue;
            }
            for j in 0..n {
                m[i][j] += a[i][k] * a[k][j];
            }
        }
        for j in 0..n {
            m[i][j] += a[i][j];
        }
    }
    (0..n).map(|j| (0..n).map(|i| m[i][j]).sum()).collect()
}

/// `sum_j d_j (d_j + 1)` over all node degrees.
pub fn neighboring_index(g: &Graph) -> u64 {
    g.degrees()
        .into_iter()
        .map(|d| d as u64 * (d as u64 + 1))
        .sum()
}

/// Total degree over `N(N-1)`.
pub fn density(g: &Graph) -> Result<Fraction> {
    let n = g.node_count() as u64;
    if n < 2 {
        return Err(Error::TooFewNodes {
            needed: 2,
            actual: n as usize,
        });
    }
    Ok(Fraction::new(2 * g.edge_count() as u64, n * (n - 1)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeStats {
    pub max: u64,
    pub mean: Fraction,
    pub median: Fraction,
}

/// Largest, mean and median degree; the median averages the two middle
/// entries for even `N`.
pub fn degree_stats(d: &DeltaArray) -> Result<DegreeStats> {
    let median = median_sorted(d.values()).ok_or(Error::EmptyGraph)?;
    Ok(DegreeStats {
        max: d.values()[0],
        mean: Fraction::new(d.total(), d.len() as u64),
        median,
    })
}
