//! Serializable analysis and comparison records.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::{degree_array, distance_stats, is_connected, is_tree, Graph};
use crate::lorenz::{gini_generalized, gini_standard, majorize_compare, power_measure, theil};
use crate::lorenz::{MajorizationVerdict, Relation};
use crate::sequences::{alpha_array, density, gamma_array, neighboring_index};
use crate::smallworld::{smaller_world_compare, SmallerWorld};
use crate::stats::{to_f64, Fraction};

fn exact(x: Fraction) -> String {
    if *x.denom() == 1 {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Measures {
    pub gini_generalized: u64,
    pub theil: f64,
    pub power2: f64,
    /// `None` when every degree is zero.
    pub gini_standard: Option<f64>,
}

impl Measures {
    pub fn of(values: &[u64]) -> Self {
        Measures {
            gini_generalized: gini_generalized(values).expect("sorted"),
            theil: theil(values).expect("sorted"),
            power2: power_measure(values, 2.0).expect("sorted"),
            gini_standard: gini_standard(values).ok(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DistanceSummary {
    pub diameter: u64,
    pub mean_distance: f64,
    pub mean_distance_exact: String,
    pub median_distance: f64,
    pub median_distance_exact: String,
}

/// Everything computable about one graph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub nodes: usize,
    pub edges: usize,
    pub connected: bool,
    pub is_tree: bool,
    pub delta: Vec<u64>,
    /// Absent for disconnected graphs.
    pub alpha: Option<Vec<u64>>,
    pub gamma: Vec<u64>,
    pub nu: u64,
    pub density: Option<f64>,
    pub density_exact: Option<String>,
    pub distance: Option<DistanceSummary>,
    pub measures: Measures,
}

impl AnalysisReport {
    pub fn of(g: &Graph) -> Self {
        let delta = degree_array(g);
        let connected = is_connected(g);
        let dens = density(g).ok();
        let distance = if connected {
            distance_stats(g).ok().map(|s| DistanceSummary {
                diameter: s.diameter,
                mean_distance: to_f64(s.mean_distance),
                mean_distance_exact: exact(s.mean_distance),
                median_distance: to_f64(s.median_distance),
                median_distance_exact: exact(s.median_distance),
            })
        } else {
            None
        };
        AnalysisReport {
            nodes: g.node_count(),
            edges: g.edge_count(),
            connected,
            is_tree: is_tree(g),
            alpha: if connected {
                alpha_array(g).ok().map(|a| a.values().to_vec())
            } else {
                None
            },
            gamma: gamma_array(g).values().to_vec(),
            nu: neighboring_index(g),
            density: dens.map(to_f64),
            density_exact: dens.map(exact),
            distance,
            measures: Measures::of(delta.values()),
            delta: delta.values().to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Side {
    pub delta: Vec<u64>,
    pub gamma: Vec<u64>,
    pub delta_measures: Measures,
    pub gamma_measures: Measures,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComparisonReport {
    pub first: Side,
    pub second: Side,
    /// `less` means the first array is majorized by the second.
    pub delta_verdict: MajorizationVerdict,
    pub gamma_verdict: MajorizationVerdict,
    pub smaller_world: SmallerWorld,
    pub statement: String,
}

impl ComparisonReport {
    pub fn of(g: &Graph, h: &Graph, first_name: &str, second_name: &str) -> Result<Self> {
        let side = |x: &Graph| {
            let d = degree_array(x);
            let gm = gamma_array(x);
            Side {
                delta_measures: Measures::of(d.values()),
                gamma_measures: Measures::of(gm.values()),
                delta: d.values().to_vec(),
                gamma: gm.values().to_vec(),
            }
        };
        let (first, second) = (side(g), side(h));
        let delta_verdict = majorize_compare(&first.delta, &second.delta)?;
        let gamma_verdict = majorize_compare(&first.gamma, &second.gamma)?;
        let smaller_world = smaller_world_compare(g, h)?;
        Ok(ComparisonReport {
            statement: smaller_world.statement(first_name, second_name),
            first,
            second,
            delta_verdict,
            gamma_verdict,
            smaller_world,
        })
    }

    pub fn delta_relation(&self) -> Relation {
        self.delta_verdict.relation
    }
}
