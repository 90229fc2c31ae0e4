//! Fixed networks from the worked examples, each stored with the invariant
//! values it is expected to reproduce.
//!
//! Graphs whose structure is fully described are built directly. The others
//! were pinned by [`find_graphs_matching`](super::find_graphs_matching) on
//! the listed constraints (first class by canonical mask) and are frozen
//! here as explicit edge lists; `examples/freeze_catalog.rs` reruns those
//! searches.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{degree_array, triangle_count, Graph};
use crate::sequences::{alpha_array, gamma_array, neighboring_index};

/// How a catalog graph was obtained.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "origin", rename_all = "lowercase")]
pub enum Origin {
    /// Built from a complete structural description.
    Direct,
    /// Frozen output of an invariant search.
    Search {
        constraints: &'static str,
        classes: usize,
    },
}

/// Invariant values an entry must reproduce. Unset fields are not checked.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Expected {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nu: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub total_degree: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub triangles: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub id: &'static str,
    pub description: &'static str,
    pub graph: Graph,
    pub expected: Expected,
    pub origin: Origin,
}

impl CatalogEntry {
    /// Recomputes every expected field; returns one message per mismatch.
    pub fn mismatches(&self) -> Vec<String> {
        let g = &self.graph;
        let e = &self.expected;
        let mut out = Vec::new();
        let mut cmp = |name: &str, want: Option<Vec<u64>>, got: Option<Vec<u64>>| {
            if let Some(w) = want {
                if got.as_ref() != Some(&w) {
                    out.push(format!(
                        "{}: {name} expected {w:?}, computed {got:?}",
                        self.id
                    ));
                }
            }
        };
        cmp(
            "delta",
            e.delta.clone(),
            Some(degree_array(g).values().to_vec()),
        );
        cmp(
            "alpha",
            e.alpha.clone(),
            alpha_array(g).ok().map(|a| a.values().to_vec()),
        );
        cmp(
            "gamma",
            e.gamma.clone(),
            Some(gamma_array(g).values().to_vec()),
        );
        cmp(
            "nu",
            e.nu.map(|v| vec![v]),
            Some(vec![neighboring_index(g)]),
        );
        cmp(
            "total_degree",
            e.total_degree.map(|v| vec![v]),
            Some(vec![degree_array(g).total()]),
        );
        cmp(
            "triangles",
            e.triangles.map(|v| vec![v]),
            Some(vec![triangle_count(g)]),
        );
        out
    }
}

pub const CATALOG_IDS: &[&str] = &[
    "fig1_G", "fig1_H", "fig2_G1", "fig2_H1", "fig3_H1", "fig3_H2", "fig4_G1", "fig4_G2",
    "fig4_G3", "fig6_G1", "fig6_G2", "fig6_G3", "fig6_G4", "fig6_G5", "fig6_G6", "fig14_G",
    "fig14_Gp", "fig15a", "fig15b", "fig16_a", "fig16_b", "fig17_a", "fig17_b", "fig18_a",
    "fig18_b", "fig19_a", "fig19_b",
];

pub fn catalog_ids() -> &'static [&'static str] {
    CATALOG_IDS
}

fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::new(n, edges.iter().copied()).expect("catalog edge lists are valid")
}

fn chain(n: usize) -> Graph {
    g(n, &(1..n).map(|v| (v - 1, v)).collect::<Vec<_>>())
}

fn cycle(n: usize) -> Graph {
    let mut e: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    e.push((n - 1, 0));
    g(n, &e)
}

fn delta(v: &[u64]) -> Expected {
    Expected {
        delta: Some(v.to_vec()),
        ..Expected::default()
    }
}

/// Looks up a catalog entry by id.
pub fn catalog_figure(id: &str) -> Result<CatalogEntry> {
    use Origin::{Direct, Search};
    let (id, description, graph, expected, origin): (&'static str, _, _, _, _) = match id {
        "fig1_G" => (
            "fig1_G",
            "5-chain",
            chain(5),
            delta(&[2, 2, 2, 1, 1]),
            Direct,
        ),
        "fig1_H" => (
            "fig1_H",
            "5-node tree with degrees (3,2,1,1,1)",
            g(5, &[(0, 1), (0, 2), (0, 3), (1, 4)]),
            delta(&[3, 2, 1, 1, 1]),
            Direct,
        ),
        "fig2_G1" => (
            "fig2_G1",
            "5-node graph with degrees (3,3,2,2,2)",
            g(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]),
            delta(&[3, 3, 2, 2, 2]),
            Search {
                constraints: "n=5 delta=(3,3,2,2,2)",
                classes: 2,
            },
        ),
        "fig2_H1" => (
            "fig2_H1",
            "5-node graph with degrees (4,3,3,2,2)",
            g(5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 4), (2, 3)]),
            delta(&[4, 3, 3, 2, 2]),
            Search {
                constraints: "n=5 delta=(4,3,3,2,2)",
                classes: 1,
            },
        ),
        "fig3_H1" => (
            "fig3_H1",
            "5-wheel: hub joined to every node of a 5-cycle",
            g(
                6,
                &[
                    (0, 1),
                    (0, 2),
                    (0, 3),
                    (0, 4),
                    (0, 5),
                    (1, 2),
                    (2, 3),
                    (3, 4),
                    (4, 5),
                    (5, 1),
                ],
            ),
            delta(&[5, 3, 3, 3, 3, 3]),
            Direct,
        ),
        "fig3_H2" => (
            "fig3_H2",
            "6-node graph with degrees (4,4,4,3,3,2)",
            g(
                6,
                &[
                    (0, 2),
                    (0, 3),
                    (0, 4),
                    (0, 5),
                    (1, 2),
                    (1, 3),
                    (1, 4),
                    (1, 5),
                    (2, 3),
                    (2, 4),
                ],
            ),
            delta(&[4, 4, 4, 3, 3, 2]),
            Search {
                constraints: "n=6 delta=(4,4,4,3,3,2)",
                classes: 3,
            },
        ),
        "fig4_G1" => (
            "fig4_G1",
            "5-node graph with degrees (3,3,3,2,1)",
            g(5, &[(0, 1), (0, 2), (0, 4), (1, 2), (1, 3), (2, 3)]),
            delta(&[3, 3, 3, 2, 1]),
            Search {
                constraints: "n=5 delta=(3,3,3,2,1)",
                classes: 1,
            },
        ),
        "fig4_G2" => (
            "fig4_G2",
            "5-node graph with degrees (4,2,2,1,1)",
            g(5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2)]),
            delta(&[4, 2, 2, 1, 1]),
            Search {
                constraints: "n=5 delta=(4,2,2,1,1)",
                classes: 1,
            },
        ),
        "fig4_G3" => (
            "fig4_G3",
            "5-node graph with degrees (4,2,2,2,2)",
            g(5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 4), (2, 3)]),
            delta(&[4, 2, 2, 2, 2]),
            Search {
                constraints: "n=5 delta=(4,2,2,2,2)",
                classes: 1,
            },
        ),
        "fig6_G1" => ("fig6_G1", "4-chain", chain(4), delta(&[2, 2, 1, 1]), Direct),
        "fig6_G2" => (
            "fig6_G2",
            "4-star",
            g(4, &[(0, 1), (0, 2), (0, 3)]),
            delta(&[3, 1, 1, 1]),
            Direct,
        ),
        "fig6_G3" => (
            "fig6_G3",
            "triangle with one pendant",
            g(4, &[(0, 1), (0, 2), (1, 2), (0, 3)]),
            delta(&[3, 2, 2, 1]),
            Direct,
        ),
        "fig6_G4" => ("fig6_G4", "4-cycle", cycle(4), delta(&[2, 2, 2, 2]), Direct),
        "fig6_G5" => (
            "fig6_G5",
            "complete 4-graph minus one edge",
            g(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]),
            delta(&[3, 3, 2, 2]),
            Direct,
        ),
        "fig6_G6" => (
            "fig6_G6",
            "complete 4-graph",
            g(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
            delta(&[3, 3, 3, 3]),
            Direct,
        ),
        "fig14_G" => (
            "fig14_G",
            "6-node graph separated from fig14_Gp by its neighboring array",
            g(
                6,
                &[
                    (0, 1),
                    (0, 3),
                    (0, 4),
                    (0, 5),
                    (1, 2),
                    (1, 4),
                    (1, 5),
                    (2, 3),
                    (2, 5),
                    (3, 4),
                ],
            ),
            Expected {
                delta: Some(vec![4, 4, 3, 3, 3, 3]),
                alpha: Some(vec![10, 5, 0, 0, 0]),
                gamma: Some(vec![17, 17, 14, 14, 13, 13]),
                nu: Some(88),
                ..Expected::default()
            },
            Search {
                constraints: "n=6 delta=(4,4,3,3,3,3) alpha=(10,5,0,0,0) gamma=(17,17,14,14,13,13)",
                classes: 1,
            },
        ),
        "fig14_Gp" => (
            "fig14_Gp",
            "6-node graph separated from fig14_G by its neighboring array",
            g(
                6,
                &[
                    (0, 2),
                    (0, 3),
                    (0, 4),
                    (0, 5),
                    (1, 2),
                    (1, 3),
                    (1, 4),
                    (1, 5),
                    (2, 5),
                    (3, 4),
                ],
            ),
            Expected {
                delta: Some(vec![4, 4, 3, 3, 3, 3]),
                alpha: Some(vec![10, 5, 0, 0, 0]),
                gamma: Some(vec![16, 16, 14, 14, 14, 14]),
                nu: Some(88),
                ..Expected::default()
            },
            Search {
                constraints: "n=6 delta=(4,4,3,3,3,3) alpha=(10,5,0,0,0) gamma=(16,16,14,14,14,14)",
                classes: 1,
            },
        ),
        "fig15a" => (
            "fig15a",
            "complete bipartite 3+3",
            g(
                6,
                &[
                    (0, 3),
                    (0, 4),
                    (0, 5),
                    (1, 3),
                    (1, 4),
                    (1, 5),
                    (2, 3),
                    (2, 4),
                    (2, 5),
                ],
            ),
            Expected {
                delta: Some(vec![3; 6]),
                alpha: Some(vec![9, 6, 0, 0, 0]),
                gamma: Some(vec![12; 6]),
                triangles: Some(0),
                ..Expected::default()
            },
            Direct,
        ),
        "fig15b" => (
            "fig15b",
            "triangular prism",
            g(
                6,
                &[
                    (0, 1),
                    (1, 2),
                    (0, 2),
                    (3, 4),
                    (4, 5),
                    (3, 5),
                    (0, 3),
                    (1, 4),
                    (2, 5),
                ],
            ),
            Expected {
                delta: Some(vec![3; 6]),
                alpha: Some(vec![9, 6, 0, 0, 0]),
                gamma: Some(vec![12; 6]),
                triangles: Some(2),
                ..Expected::default()
            },
            Direct,
        ),
        "fig16_a" => (
            "fig16_a",
            "5-chain",
            chain(5),
            Expected {
                nu: Some(22),
                total_degree: Some(8),
                ..Expected::default()
            },
            Direct,
        ),
        "fig16_b" => (
            "fig16_b",
            "5-node tree with degrees (3,2,1,1,1)",
            g(5, &[(0, 1), (0, 2), (0, 3), (1, 4)]),
            Expected {
                nu: Some(24),
                total_degree: Some(8),
                ..Expected::default()
            },
            Direct,
        ),
        "fig17_a" => (
            "fig17_a",
            "6-node graph with total degree 14 and neighboring index 48",
            g(6, &[(0, 3), (0, 4), (0, 5), (1, 2), (1, 4), (1, 5), (2, 3)]),
            Expected {
                nu: Some(48),
                total_degree: Some(14),
                ..Expected::default()
            },
            Search {
                constraints: "n=6 delta=(3,3,2,2,2,2)",
                classes: 4,
            },
        ),
        "fig17_b" => (
            "fig17_b",
            "6-node graph with total degree 12 and neighboring index 48",
            g(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2)]),
            Expected {
                nu: Some(48),
                total_degree: Some(12),
                ..Expected::default()
            },
            Search {
                constraints: "n=6 delta=(5,2,2,1,1,1)",
                classes: 1,
            },
        ),
        "fig18_a" => (
            "fig18_a",
            "complete 4-graph minus one edge, a pendant on each degree-2 node",
            g(6, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 5)]),
            Expected {
                delta: Some(vec![3, 3, 3, 3, 1, 1]),
                gamma: Some(vec![12, 12, 10, 10, 4, 4]),
                ..Expected::default()
            },
            Direct,
        ),
        "fig18_b" => (
            "fig18_b",
            "6-node graph with degrees (3,3,3,3,2,2)",
            g(
                6,
                &[
                    (0, 3),
                    (0, 4),
                    (0, 5),
                    (1, 3),
                    (1, 4),
                    (1, 5),
                    (2, 3),
                    (2, 4),
                ],
            ),
            Expected {
                delta: Some(vec![3, 3, 3, 3, 2, 2]),
                gamma: Some(vec![11, 11, 11, 11, 8, 8]),
                ..Expected::default()
            },
            Search {
                constraints: "n=6 delta=(3,3,3,3,2,2) gamma=(11,11,11,11,8,8)",
                classes: 2,
            },
        ),
        "fig19_a" => (
            "fig19_a",
            "4-star",
            g(4, &[(0, 1), (0, 2), (0, 3)]),
            Expected {
                delta: Some(vec![3, 1, 1, 1]),
                gamma: Some(vec![6, 4, 4, 4]),
                ..Expected::default()
            },
            Direct,
        ),
        "fig19_b" => (
            "fig19_b",
            "4-cycle",
            cycle(4),
            Expected {
                delta: Some(vec![2, 2, 2, 2]),
                gamma: Some(vec![6, 6, 6, 6]),
                ..Expected::default()
            },
            Direct,
        ),
        other => return Err(Error::UnknownCatalogId(other.to_string())),
    };
    Ok(CatalogEntry {
        id,
        description,
        graph,
        expected,
        origin,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{are_isomorphic, find_graphs_matching, Constraints};

    #[test]
    fn every_entry_reproduces_its_expected_values() {
        for id in catalog_ids() {
            let entry = catalog_figure(id).unwrap();
            assert_eq!(entry.id, *id);
            assert!(entry.mismatches().is_empty(), "{:?}", entry.mismatches());
        }
    }

    #[test]
    fn unknown_id() {
        assert_eq!(
            catalog_figure("nosuch"),
            Err(Error::UnknownCatalogId("nosuch".into()))
        );
    }

    #[test]
    fn figure_examples() {
        let f14 = catalog_figure("fig14_G").unwrap();
        assert_eq!(neighboring_index(&f14.graph), 88);
        let f19 = catalog_figure("fig19_a").unwrap();
        assert_eq!(degree_array(&f19.graph).values(), &[3, 1, 1, 1]);
        assert_eq!(gamma_array(&f19.graph).values(), &[6, 4, 4, 4]);
        assert_eq!(
            neighboring_index(&catalog_figure("fig16_a").unwrap().graph),
            22
        );
        assert_eq!(
            neighboring_index(&catalog_figure("fig16_b").unwrap().graph),
            24
        );
    }

    fn parse_constraints(text: &str) -> (usize, Constraints) {
        let mut n = 0;
        let mut c = Constraints::default();
        for part in text.split_whitespace() {
            let (key, value) = part.split_once('=').unwrap();
            if key == "n" {
                n = value.parse().unwrap();
                continue;
            }
            let vals: Vec<u64> = value
                .trim_matches(|ch| ch == '(' || ch == ')')
                .split(',')
                .map(|s| s.parse().unwrap())
                .collect();
            c = match key {
                "delta" => c.delta(&vals),
                "alpha" => c.alpha(&vals),
                "gamma" => c.gamma(&vals),
                _ => unreachable!(),
            };
        }
        (n, c)
    }

    #[test]
    fn frozen_graphs_are_the_first_search_results() {
        for id in catalog_ids() {
            let entry = catalog_figure(id).unwrap();
            if let Origin::Search {
                constraints,
                classes,
            } = entry.origin
            {
                let (n, c) = parse_constraints(constraints);
                let found = find_graphs_matching(n, &c).unwrap();
                assert_eq!(found.len(), classes, "{id}");
                assert!(are_isomorphic(&found[0], &entry.graph), "{id}");
            }
        }
    }
}
