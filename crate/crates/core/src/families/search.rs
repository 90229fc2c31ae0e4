//! Exhaustive search for small connected graphs with prescribed invariant
//! arrays, one representative per isomorphism class.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::enumerate::{graph_from_mask, mask_rows, pairs};
use crate::graph::{connected_masks, Graph, MAX_ENUM_GRAPH_NODES};
use crate::par;
use crate::sequences::{alpha_array, AlphaArray, DeltaArray, GammaArray};

/// Invariant arrays a graph must reproduce exactly. Unset fields are free.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Constraints {
    pub delta: Option<DeltaArray>,
    pub alpha: Option<AlphaArray>,
    pub gamma: Option<GammaArray>,
}

impl Constraints {
    pub fn is_empty(&self) -> bool {
        self.delta.is_none() && self.alpha.is_none() && self.gamma.is_none()
    }

    pub fn delta(mut self, values: &[u64]) -> Self {
        self.delta = Some(DeltaArray::from_unsorted(values.to_vec()));
        self
    }

    pub fn alpha(mut self, values: &[u64]) -> Self {
        self.alpha = Some(AlphaArray::new(values.to_vec()));
        self
    }

    pub fn gamma(mut self, values: &[u64]) -> Self {
        self.gamma = Some(GammaArray::from_unsorted(values.to_vec()));
        self
    }
}

/// Smallest edge mask over all relabelings of the graph given by `mask`.
/// Two graphs on `n` nodes are isomorphic iff their canonical masks agree.
pub fn canonical_mask(n: usize, mask: u64) -> u64 {
    let pairs = pairs(n);
    let rows = mask_rows(n, &pairs, mask);
    let mut best = u64::MAX;
    for perm in (0..n).permutations(n) {
        let mut m = 0u64;
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if rows[perm[i]] >> perm[j] & 1 == 1 {
                m |= 1 << k;
            }
            if m >= best {
                break;
            }
        }
        best = best.min(m);
    }
    best
}

/// Edge mask of an arbitrary graph on at most 11 nodes (55 pair bits).
pub fn edge_mask(g: &Graph) -> u64 {
    let n = g.node_count();
    assert!(n * (n - 1) / 2 <= 64, "edge mask needs n <= 11");
    pairs(n)
        .iter()
        .enumerate()
        .filter(|(_, &(i, j))| g.has_edge(i, j))
        .fold(0u64, |m, (k, _)| m | 1 << k)
}

/// True iff `g` and `h` are isomorphic. Brute force; `n <= 9`.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.node_count() == h.node_count()
        && g.edge_count() == h.edge_count()
        && canonical_mask(g.node_count(), edge_mask(g))
            == canonical_mask(h.node_count(), edge_mask(h))
}

fn sorted_desc(mut v: Vec<u64>) -> Vec<u64> {
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// All connected graphs on `n <= 7` nodes whose arrays equal every supplied
/// constraint, deduplicated up to isomorphism. Each class is represented by
/// its canonically labeled graph; results are sorted by canonical mask.
pub fn find_graphs_matching(n: usize, constraints: &Constraints) -> Result<Vec<Graph>> {
    if constraints.is_empty() {
        return Err(Error::NoConstraint);
    }
    if n > MAX_ENUM_GRAPH_NODES {
        return Err(Error::EnumerationBound {
            n,
            min: 2,
            max: MAX_ENUM_GRAPH_NODES,
        });
    }
    let masks = connected_masks(n)?;
    let pairs = pairs(n);
    let matching = par::map_vec(&masks, |&mask| {
        let rows = mask_rows(n, &pairs, mask);
        let deg: Vec<u64> = rows[..n].iter().map(|r| r.count_ones() as u64).collect();
        if let Some(d) = &constraints.delta {
            if sorted_desc(deg.clone()) != d.values() {
                return None;
            }
        }
        if let Some(gm) = &constraints.gamma {
            let gamma: Vec<u64> = (0..n)
                .map(|v| {
                    deg[v]
                        + (0..n)
                            .filter(|&w| rows[v] >> w & 1 == 1)
                            .map(|w| deg[w])
                            .sum::<u64>()
                })
                .collect();
            if sorted_desc(gamma) != gm.values() {
                return None;
            }
        }
        if let Some(a) = &constraints.alpha {
            let g = graph_from_mask(n, &pairs, mask);
            if alpha_array(&g).ok().as_ref() != Some(a) {
                return None;
            }
        }
        Some(canonical_mask(n, mask))
    });
    let mut classes: Vec<u64> = matching.into_iter().flatten().collect();
    classes.sort_unstable();
    classes.dedup();
    Ok(classes
        .into_iter()
        .map(|m| graph_from_mask(n, &pairs, m))
        .collect())
}
