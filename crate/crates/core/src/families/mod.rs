//! Parametric network families, the figure catalog, and the invariant
//! search used to pin figure graphs that are only described by their arrays.

mod catalog;
mod search;

pub use catalog::{catalog_figure, catalog_ids, CatalogEntry, Expected, Origin};
pub use search::{are_isomorphic, canonical_mask, edge_mask, find_graphs_matching, Constraints};

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::sequences::DeltaArray;

/// A named family of networks indexed by one size parameter.
///
/// `Spider`, `Kite`, `S1` and `S2` are indexed by their clique parameter
/// `M`; the rest by the node count `N`. For `S1`/`S2` the offsets `a`, `b`
/// stay fixed while `M` grows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FamilySpec {
    Complete,
    Star,
    Chain,
    Polygon,
    /// Complete `M`-graph, two pendant nodes on every clique node; `N = 3M`.
    Spider,
    /// Complete `M`-graph with a pendant chain of `M - 1` nodes; `N = 2M - 1`.
    Kite,
    /// Complete `(M+a)`-graph, one pendant on `M+b` of its nodes; `b < a`.
    S1 {
        a: usize,
        b: usize,
    },
    /// Complete `(M+a)`-graph, one pendant on every node and a second one on
    /// `b-a` of them; `a < b`.
    S2 {
        a: usize,
        b: usize,
    },
    /// Chain of `floor(ln N)` nodes grown level by level, each node sprouting
    /// `floor(ln N)` children, cut at exactly `N` nodes.
    LnTree,
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::S1 { a, b } => write!(f, "s1(a={a},b={b})"),
            FamilySpec::S2 { a, b } => write!(f, "s2(a={a},b={b})"),
            other => f.write_str(other.name()),
        }
    }
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Complete => "complete",
            FamilySpec::Star => "star",
            FamilySpec::Chain => "chain",
            FamilySpec::Polygon => "polygon",
            FamilySpec::Spider => "spider",
            FamilySpec::Kite => "kite",
            FamilySpec::S1 { .. } => "s1",
            FamilySpec::S2 { .. } => "s2",
            FamilySpec::LnTree => "lntree",
        }
    }

    /// Parses a family name; `a`/`b` are required for `s1`/`s2` only.
    pub fn from_name(name: &str, a: Option<usize>, b: Option<usize>) -> Result<Self> {
        let offsets = || {
            a.zip(b)
                .ok_or_else(|| Error::InvalidFamily(format!("{name} needs both a and b")))
        };
        let spec = match name.to_ascii_lowercase().as_str() {
            "complete" => FamilySpec::Complete,
            "star" => FamilySpec::Star,
            "chain" => FamilySpec::Chain,
            "polygon" => FamilySpec::Polygon,
            "spider" => FamilySpec::Spider,
            "kite" => FamilySpec::Kite,
            "lntree" => FamilySpec::LnTree,
            "s1" => {
                let (a, b) = offsets()?;
                FamilySpec::S1 { a, b }
            }
            "s2" => {
                let (a, b) = offsets()?;
                FamilySpec::S2 { a, b }
            }
            other => return Err(Error::InvalidFamily(format!("unknown family `{other}`"))),
        };
        spec.check_offsets()?;
        Ok(spec)
    }

    /// Every family kind, with the figure parameters for `S1`/`S2`.
    pub fn builtins() -> [FamilySpec; 9] {
        [
            FamilySpec::Complete,
            FamilySpec::Star,
            FamilySpec::Chain,
            FamilySpec::Polygon,
            FamilySpec::Spider,
            FamilySpec::Kite,
            FamilySpec::S1 { a: 3, b: 1 },
            FamilySpec::S2 { a: 1, b: 3 },
            FamilySpec::LnTree,
        ]
    }

    /// Whether the size parameter is the clique size `M` rather than `N`.
    pub fn indexed_by_m(&self) -> bool {
        matches!(
            self,
            FamilySpec::Spider | FamilySpec::Kite | FamilySpec::S1 { .. } | FamilySpec::S2 { .. }
        )
    }

    fn check_offsets(&self) -> Result<()> {
        match *self {
            FamilySpec::S1 { a, b } if !(b >= 1 && b < a) => Err(Error::InvalidFamily(format!(
                "s1 needs 0 < b < a, got a={a}, b={b}"
            ))),
            FamilySpec::S2 { a, b } if !(a >= 1 && a < b) => Err(Error::InvalidFamily(format!(
                "s2 needs 0 < a < b, got a={a}, b={b}"
            ))),
            _ => Ok(()),
        }
    }

    fn min_size(&self) -> usize {
        match *self {
            FamilySpec::Complete => 1,
            FamilySpec::Star | FamilySpec::Chain => 2,
            FamilySpec::Polygon => 3,
            FamilySpec::Spider | FamilySpec::Kite => 2,
            FamilySpec::S1 { .. } => 1,
            // M + 2a - b >= 0
            FamilySpec::S2 { a, b } => (b.saturating_sub(2 * a)).max(1),
            FamilySpec::LnTree => 4,
        }
    }

    fn check_size(&self, size: usize) -> Result<()> {
        self.check_offsets()?;
        let min = self.min_size();
        if size < min {
            let what = if self.indexed_by_m() { "M" } else { "N" };
            return Err(Error::InvalidFamily(format!(
                "{self} needs {what} >= {min}, got {size}"
            )));
        }
        Ok(())
    }

    /// Node count of the member with size parameter `size`.
    pub fn node_count(&self, size: usize) -> Result<usize> {
        self.check_size(size)?;
        Ok(match *self {
            FamilySpec::Spider => 3 * size,
            FamilySpec::Kite => 2 * size - 1,
            FamilySpec::S1 { a, b } | FamilySpec::S2 { a, b } => 2 * size + a + b,
            _ => size,
        })
    }

    /// Size parameter producing exactly `n` nodes.
    pub fn size_for_nodes(&self, n: usize) -> Result<usize> {
        let unrealizable = |constraint: String| Error::Unrealizable {
            family: self.to_string(),
            n,
            constraint,
        };
        let size = match *self {
            FamilySpec::Spider if n.is_multiple_of(3) => n / 3,
            FamilySpec::Spider => return Err(unrealizable("N = 3M needs N divisible by 3".into())),
            FamilySpec::Kite if n % 2 == 1 => n.div_ceil(2),
            FamilySpec::Kite => return Err(unrealizable("N = 2M - 1 needs odd N".into())),
            FamilySpec::S1 { a, b } | FamilySpec::S2 { a, b } => {
                if n <= a + b || !(n - a - b).is_multiple_of(2) {
                    return Err(unrealizable(format!(
                        "N = 2M + {} needs N - {} positive and even",
                        a + b,
                        a + b
                    )));
                }
                (n - a - b) / 2
            }
            _ => n,
        };
        self.check_size(size)
            .map_err(|e| unrealizable(e.to_string()))?;
        Ok(size)
    }

    /// Size parameter whose node count is closest to `n` (ties go down).
    pub fn nearest_size(&self, n: usize) -> usize {
        let size = match *self {
            FamilySpec::Spider => (n + 1) / 3,
            FamilySpec::Kite => n.div_ceil(2),
            FamilySpec::S1 { a, b } | FamilySpec::S2 { a, b } => n.saturating_sub(a + b) / 2,
            _ => n,
        };
        size.max(self.min_size())
    }

    /// Degree array predicted by the family's closed form, where one exists.
    pub fn closed_form_delta(&self, size: usize) -> Result<Option<DeltaArray>> {
        let n = self.node_count(size)?;
        let rep = |v: usize, k: usize| std::iter::repeat_n(v as u64, k);
        let values: Vec<u64> = match *self {
            FamilySpec::Complete => rep(n - 1, n).collect(),
            FamilySpec::Star => rep(n - 1, 1).chain(rep(1, n - 1)).collect(),
            FamilySpec::Chain => rep(2, n - 2).chain(rep(1, 2)).collect(),
            FamilySpec::Polygon => rep(2, n).collect(),
            FamilySpec::Spider => rep(size + 1, size).chain(rep(1, 2 * size)).collect(),
            FamilySpec::Kite => rep(size, 1)
                .chain(rep(size - 1, size - 1))
                .chain(rep(2, size - 2))
                .chain(rep(1, 1))
                .collect(),
            FamilySpec::S1 { a, b } => rep(size + a, size + b)
                .chain(rep(size + a - 1, a - b))
                .chain(rep(1, size + b))
                .collect(),
            FamilySpec::S2 { a, b } => rep(size + a + 1, b - a)
                .chain(rep(size + a, size + 2 * a - b))
                .chain(rep(1, size + b))
                .collect(),
            FamilySpec::LnTree => return Ok(None),
        };
        Ok(Some(DeltaArray::from_unsorted(values)))
    }
}

fn clique_edges(k: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..k).flat_map(move |i| (i + 1..k).map(move |j| (i, j)))
}

/// Builds the member of `spec` with size parameter `size`.
pub fn make_family(spec: &FamilySpec, size: usize) -> Result<Graph> {
    let n = spec.node_count(size)?;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    match *spec {
        FamilySpec::Complete => edges.extend(clique_edges(n)),
        FamilySpec::Star => edges.extend((1..n).map(|v| (0, v))),
        FamilySpec::Chain => edges.extend((1..n).map(|v| (v - 1, v))),
        FamilySpec::Polygon => {
            edges.extend((1..n).map(|v| (v - 1, v)));
            edges.push((n - 1, 0));
        }
        FamilySpec::Spider => {
            let m = size;
            edges.extend(clique_edges(m));
            for i in 0..m {
                edges.push((i, m + 2 * i));
                edges.push((i, m + 2 * i + 1));
            }
        }
        FamilySpec::Kite => {
            let m = size;
            edges.extend(clique_edges(m));
            // tail hangs off clique node 0
            let mut prev = 0;
            for v in m..n {
                edges.push((prev, v));
                prev = v;
            }
        }
        FamilySpec::S1 { a, b } => {
            let k = size + a;
            edges.extend(clique_edges(k));
            edges.extend((0..size + b).map(|i| (i, k + i)));
        }
        FamilySpec::S2 { a, b } => {
            let k = size + a;
            edges.extend(clique_edges(k));
            edges.extend((0..k).map(|i| (i, k + i)));
            edges.extend((0..b - a).map(|i| (i, 2 * k + i)));
        }
        FamilySpec::LnTree => edges = ln_tree_edges(n),
    }
    Graph::new(n, edges)
}

/// `floor(ln n)` as an integer.
pub fn floor_ln(n: usize) -> usize {
    (n as f64).ln().floor() as usize
}

fn ln_tree_edges(n: usize) -> Vec<(usize, usize)> {
    let width = floor_ln(n).max(1);
    let spine = width.min(n);
    let mut edges: Vec<(usize, usize)> = (1..spine).map(|v| (v - 1, v)).collect();
    let mut level: Vec<usize> = (0..spine).collect();
    let mut next_id = spine;
    while next_id < n {
        let mut next_level = Vec::with_capacity(level.len() * width);
        'grow: for &parent in &level {
            for _ in 0..width {
                if next_id == n {
                    break 'grow;
                }
                edges.push((parent, next_id));
                next_level.push(next_id);
                next_id += 1;
            }
        }
        level = next_level;
    }
    edges
}
