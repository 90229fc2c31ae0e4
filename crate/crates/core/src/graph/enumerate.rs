//! Exhaustive enumeration of small labeled graphs and trees.

use super::Graph;
use crate::error::{Error, Result};
use crate::par;

/// Largest node count for connected-graph enumeration (2^21 edge subsets).
pub const MAX_ENUM_GRAPH_NODES: usize = 7;
/// Largest node count for labeled-tree enumeration (9^7 Prüfer sequences).
pub const MAX_ENUM_TREE_NODES: usize = 9;

/// Node pairs `(i, j)`, `i < j`, in lexicographic order. Bit `k` of an edge
/// mask selects `pairs(n)[k]`.
pub(crate) fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect()
}

pub(crate) fn mask_rows(n: usize, pairs: &[(usize, usize)], mask: u64) -> [u16; 16] {
    let mut rows = [0u16; 16];
    debug_assert!(n <= 16);
    for (k, &(i, j)) in pairs.iter().enumerate() {
        if mask >> k & 1 == 1 {
            rows[i] |= 1 << j;
            rows[j] |= 1 << i;
        }
    }
    rows
}

pub(crate) fn rows_connected(n: usize, rows: &[u16]) -> bool {
    let full: u16 = if n == 16 { u16::MAX } else { (1 << n) - 1 };
    let mut seen: u16 = 1;
    let mut frontier: u16 = 1;
    while frontier != 0 {
        let mut next = 0u16;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= rows[v];
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen == full
}

pub(crate) fn graph_from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    Graph::new(
        n,
        pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &p)| p),
    )
    .expect("pairs are valid")
}

fn check_bound(n: usize, min: usize, max: usize) -> Result<()> {
    if (min..=max).contains(&n) {
        Ok(())
    } else {
        Err(Error::EnumerationBound { n, min, max })
    }
}

/// Edge masks of every connected labeled graph on `n` nodes, ascending.
pub(crate) fn connected_masks(n: usize) -> Result<Vec<u64>> {
    check_bound(n, 2, MAX_ENUM_GRAPH_NODES)?;
    let pairs = pairs(n);
    Ok(par::filter_map_masks(0..1u64 << pairs.len(), |mask| {
        rows_connected(n, &mask_rows(n, &pairs, mask)).then_some(mask)
    }))
}

/// Every connected labeled simple graph on `n` nodes, `2 <= n <= 7`.
pub fn enumerate_connected_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    check_bound(n, 2, MAX_ENUM_GRAPH_NODES)?;
    let pairs = pairs(n);
    let masks = pairs.clone();
    Ok((0..1u64 << pairs.len())
        .filter(move |&mask| rows_connected(n, &mask_rows(n, &masks, mask)))
        .map(move |mask| graph_from_mask(n, &pairs, mask)))
}

/// Tree encoded by a Prüfer sequence over `0..n`, with `n = seq.len() + 2`.
pub fn prufer_decode(seq: &[usize]) -> Graph {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf exists");
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let mut rest = (0..n).filter(|&v| degree[v] == 1);
    let (u, v) = (rest.next().unwrap(), rest.next().unwrap());
    edges.push((u, v));
    Graph::new(n, edges).expect("Prüfer decoding yields a simple graph")
}

/// All `n^(n-2)` labeled trees on `n` nodes, `2 <= n <= 9`.
pub fn enumerate_labeled_trees(n: usize) -> Result<impl Iterator<Item = Graph>> {
    check_bound(n, 2, MAX_ENUM_TREE_NODES)?;
    let total = tree_count(n);
    Ok((0..total).map(move |code| tree_from_code(n, code)))
}

/// Number of labeled trees on `n` nodes.
pub(crate) fn tree_count(n: usize) -> u64 {
    (n as u64).pow(n as u32 - 2)
}

/// The tree whose Prüfer sequence is `code` written in base `n`.
pub(crate) fn tree_from_code(n: usize, mut code: u64) -> Graph {
    let mut seq = vec![0usize; n - 2];
    for slot in seq.iter_mut().rev() {
        *slot = (code % n as u64) as usize;
        code /= n as u64;
    }
    prufer_decode(&seq)
}
