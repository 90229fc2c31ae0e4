//! Finite simple undirected graphs and the structural queries the rest of
//! the crate builds on.

mod distance;
pub(crate) mod enumerate;
mod parse;

pub use distance::{
    distance_histogram, distance_histogram_sequential, distance_matrix, distance_matrix_sequential,
    distance_stats, DistanceStats,
};
pub(crate) use enumerate::connected_masks;
pub use enumerate::{
    enumerate_connected_graphs, enumerate_labeled_trees, prufer_decode, MAX_ENUM_GRAPH_NODES,
    MAX_ENUM_TREE_NODES,
};
pub use parse::parse_edge_list;

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::sequences::DeltaArray;

/// Simple undirected graph on nodes `0..n`.
///
/// Edges are stored once, as `(u, v)` with `u < v`, sorted. The adjacency
/// lists are kept alongside and are sorted by neighbor index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph from an edge iterator. Duplicate edges collapse;
    /// self-loops and out-of-range endpoints are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::NodeOutOfRange(u, v, n));
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        list.dedup();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &list {
            adj[u].push(v);
            adj[v].push(u);
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: list,
            adj,
            labels: None,
        })
    }

    /// Attaches external node names. `labels.len()` must equal `n`.
    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n, "one label per node");
        self.labels = Some(labels);
        self
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// External name of `v`, or its index when the graph is unlabeled.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    /// Per-node degrees in node order (unsorted).
    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    /// Dense 0/1 adjacency matrix.
    pub fn adjacency_matrix(&self) -> Vec<Vec<u64>> {
        let mut a = vec![vec![0u64; self.n]; self.n];
        for &(u, v) in &self.edges {
            a[u][v] = 1;
            a[v][u] = 1;
        }
        a
    }

    /// Renders the graph in the edge-list text format accepted by
    /// [`parse_edge_list`]. Isolated nodes get a `node` line.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for v in 0..self.n {
            if self.adj[v].is_empty() {
                out.push_str(&format!("node {}\n", self.label(v)));
            }
        }
        for &(u, v) in &self.edges {
            out.push_str(&format!("{} {}\n", self.label(u), self.label(v)));
        }
        out
    }

    /// Row-major adjacency bitsets, `words_per_row` u64 words per node.
    pub(crate) fn adjacency_bits(&self) -> (Vec<u64>, usize) {
        let words = self.n.div_ceil(64);
        let mut bits = vec![0u64; self.n * words];
        for &(u, v) in &self.edges {
            bits[u * words + v / 64] |= 1 << (v % 64);
            bits[v * words + u / 64] |= 1 << (u % 64);
        }
        (bits, words)
    }
}

/// Degrees sorted in decreasing order.
pub fn degree_array(g: &Graph) -> DeltaArray {
    DeltaArray::from_unsorted(g.degrees().into_iter().map(|d| d as u64).collect())
}

pub fn is_connected(g: &Graph) -> bool {
    bfs_order(g, 0).len() == g.n
}

/// Connected with exactly `n - 1` edges.
pub fn is_tree(g: &Graph) -> bool {
    g.edge_count() + 1 == g.n && is_connected(g)
}

fn bfs_order(g: &Graph, root: usize) -> Vec<(usize, Option<usize>)> {
    let mut seen = vec![false; g.n];
    let mut order = Vec::with_capacity(g.n);
    let mut queue = VecDeque::from([(root, None)]);
    seen[root] = true;
    while let Some((v, parent)) = queue.pop_front() {
        order.push((v, parent));
        for &w in &g.adj[v] {
            if !seen[w] {
                seen[w] = true;
                queue.push_back((w, Some(v)));
            }
        }
    }
    order
}

/// Breadth-first spanning tree rooted at node 0, neighbors visited in index
/// order. Labels carry over.
pub fn spanning_tree(g: &Graph) -> Result<Graph> {
    let order = bfs_order(g, 0);
    if order.len() != g.n {
        return Err(Error::Disconnected);
    }
    let tree = Graph::new(
        g.n,
        order.into_iter().filter_map(|(v, p)| p.map(|p| (p, v))),
    )?;
    Ok(match &g.labels {
        Some(l) => tree.with_labels(l.clone()),
        None => tree,
    })
}

/// Number of 3-cliques.
pub fn triangle_count(g: &Graph) -> u64 {
    let mut count = 0;
    for &(u, v) in &g.edges {
        // common neighbors w > v, so each triangle is counted once at its
        // lexicographically smallest edge
        let (a, b) = (&g.adj[u], &g.adj[v]);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    if a[i] > v {
                        count += 1;
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
    }
    count
}
