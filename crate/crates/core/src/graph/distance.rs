//! Hop distances via one breadth-first traversal per source node.

use std::collections::VecDeque;

use super::Graph;
use crate::error::{Error, Result};
use crate::par;
use crate::stats::{median_of_histogram, Fraction};

/// Diameter, mean and median of the pairwise distance multiset of a
/// connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceStats {
    pub diameter: u64,
    pub mean_distance: Fraction,
    pub median_distance: Fraction,
    /// Number of unordered pairs, `n(n-1)/2`.
    pub pair_count: u64,
}

/// All-pairs hop distances. Errors if some pair is unreachable.
pub fn distance_matrix(g: &Graph) -> Result<Vec<Vec<u32>>> {
    par::map_indices(0..g.node_count(), |s| bfs_row(g, s))
        .into_iter()
        .collect()
}

pub fn distance_matrix_sequential(g: &Graph) -> Result<Vec<Vec<u32>>> {
    (0..g.node_count()).map(|s| bfs_row(g, s)).collect()
}

fn bfs_row(g: &Graph, source: usize) -> Result<Vec<u32>> {
    let mut dist = vec![u32::MAX; g.node_count()];
    dist[source] = 0;
    let mut queue = VecDeque::from([source]);
    let mut reached = 1;
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if dist[w] == u32::MAX {
                dist[w] = dist[v] + 1;
                reached += 1;
                queue.push_back(w);
            }
        }
    }
    if reached == g.node_count() {
        Ok(dist)
    } else {
        Err(Error::Disconnected)
    }
}

/// Number of ordered `(source, target)` pairs at each distance `1..`, for a
/// single source. Frontiers are bitsets, so each level costs `O(n/64)` per
/// frontier node regardless of edge density.
fn level_sizes(bits: &[u64], words: usize, n: usize, source: usize) -> Option<Vec<u64>> {
    let mut visited = vec![0u64; words];
    let mut frontier = vec![0u64; words];
    let mut next = vec![0u64; words];
    visited[source / 64] |= 1 << (source % 64);
    frontier[source / 64] |= 1 << (source % 64);
    let mut reached = 1usize;
    let mut sizes = Vec::new();
    while reached < n {
        next.iter_mut().for_each(|w| *w = 0);
        for (wi, &word) in frontier.iter().enumerate() {
            let mut word = word;
            while word != 0 {
                let v = wi * 64 + word.trailing_zeros() as usize;
                word &= word - 1;
                let row = &bits[v * words..(v + 1) * words];
                for (acc, &r) in next.iter_mut().zip(row) {
                    *acc |= r;
                }
            }
        }
        let mut added = 0u64;
        for (acc, seen) in next.iter_mut().zip(visited.iter_mut()) {
            *acc &= !*seen;
            *seen |= *acc;
            added += acc.count_ones() as u64;
        }
        if added == 0 {
            return None;
        }
        reached += added as usize;
        sizes.push(added);
        std::mem::swap(&mut frontier, &mut next);
    }
    Some(sizes)
}

fn merge_histogram(n: usize, per_source: Vec<Option<Vec<u64>>>) -> Result<Vec<u64>> {
    let mut hist = vec![0u64; n.saturating_sub(1)];
    for sizes in per_source {
        let sizes = sizes.ok_or(Error::Disconnected)?;
        for (j, c) in sizes.into_iter().enumerate() {
            hist[j] += c;
        }
    }
    // every unordered pair was seen from both ends
    hist.iter_mut().for_each(|c| *c /= 2);
    Ok(hist)
}

/// Entry `j` counts unordered node pairs at distance `j + 1`; length
/// `n - 1`, trailing zeros included.
pub fn distance_histogram(g: &Graph) -> Result<Vec<u64>> {
    let n = g.node_count();
    let (bits, words) = g.adjacency_bits();
    let per_source = par::map_indices(0..n, |s| level_sizes(&bits, words, n, s));
    merge_histogram(n, per_source)
}

pub fn distance_histogram_sequential(g: &Graph) -> Result<Vec<u64>> {
    let n = g.node_count();
    let (bits, words) = g.adjacency_bits();
    let per_source = (0..n).map(|s| level_sizes(&bits, words, n, s)).collect();
    merge_histogram(n, per_source)
}

/// Diameter, mean and median distance over all unordered pairs.
pub fn distance_stats(g: &Graph) -> Result<DistanceStats> {
    let n = g.node_count();
    if n < 2 {
        return Err(Error::TooFewNodes {
            needed: 2,
            actual: n,
        });
    }
    let hist = distance_histogram(g)?;
    Ok(stats_from_histogram(&hist))
}

pub(crate) fn stats_from_histogram(hist: &[u64]) -> DistanceStats {
    let pair_count: u64 = hist.iter().sum();
    let weighted: u64 = hist
        .iter()
        .enumerate()
        .map(|(j, &c)| (j as u64 + 1) * c)
        .sum();
    let diameter = hist
        .iter()
        .rposition(|&c| c > 0)
        .map_or(0, |j| j as u64 + 1);
    DistanceStats {
        diameter,
        mean_distance: Fraction::new(weighted, pair_count),
        median_distance: median_of_histogram(hist).expect("non-empty"),
        pair_count,
    }
}
