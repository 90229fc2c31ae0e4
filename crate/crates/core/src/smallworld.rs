//! Growth statistics of network families and their classification under
//! degree-based small-world notions (largest, mean and median degree
//! diverging faster than `ln N`) and distance-based ones (diameter, mean
//! and median distance bounded by a multiple of `ln N`).
//!
//! Limits cannot be decided from finitely many members. Built-in families
//! therefore carry closed-form verdicts, and the empirical trend classifier
//! is a heuristic over a report's ratio columns with fixed thresholds.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::families::{make_family, FamilySpec};
use crate::graph::{degree_array, distance_stats, Graph};
use crate::lorenz::{majorize_compare, Relation};
use crate::par;
use crate::sequences::degree_stats;
use crate::stats::{to_f64, Fraction};

/// Node-count targets of the default sweep; M-indexed families use the
/// nearest realizable node count.
pub const DEFAULT_GRID: [usize; 6] = [32, 64, 128, 256, 512, 1024];

pub const MIN_ROWS: usize = 4;
/// Smallest accepted ratio between the last and first node count.
pub const MIN_SPAN: usize = 10;

/// The six per-member statistics tracked by a growth report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Statistic {
    MaxDegree,
    MeanDegree,
    MedianDegree,
    Diameter,
    MeanDistance,
    MedianDistance,
}

impl Statistic {
    pub const ALL: [Statistic; 6] = [
        Statistic::MaxDegree,
        Statistic::MeanDegree,
        Statistic::MedianDegree,
        Statistic::Diameter,
        Statistic::MeanDistance,
        Statistic::MedianDistance,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Statistic::MaxDegree => "max_degree",
            Statistic::MeanDegree => "mean_degree",
            Statistic::MedianDegree => "median_degree",
            Statistic::Diameter => "diameter",
            Statistic::MeanDistance => "mean_distance",
            Statistic::MedianDistance => "median_distance",
        }
    }
}

/// Exact statistics of one family member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthRow {
    pub n: usize,
    /// The family's size parameter (`N` or `M`).
    pub size: usize,
    pub max_degree: u64,
    pub mean_degree: Fraction,
    pub median_degree: Fraction,
    pub diameter: u64,
    pub mean_distance: Fraction,
    pub median_distance: Fraction,
}

impl GrowthRow {
    pub fn from_graph(g: &Graph, size: usize) -> Result<Self> {
        let deg = degree_stats(&degree_array(g))?;
        let dist = distance_stats(g)?;
        Ok(GrowthRow {
            n: g.node_count(),
            size,
            max_degree: deg.max,
            mean_degree: deg.mean,
            median_degree: deg.median,
            diameter: dist.diameter,
            mean_distance: dist.mean_distance,
            median_distance: dist.median_distance,
        })
    }

    pub fn value(&self, stat: Statistic) -> f64 {
        match stat {
            Statistic::MaxDegree => self.max_degree as f64,
            Statistic::MeanDegree => to_f64(self.mean_degree),
            Statistic::MedianDegree => to_f64(self.median_degree),
            Statistic::Diameter => self.diameter as f64,
            Statistic::MeanDistance => to_f64(self.mean_distance),
            Statistic::MedianDistance => to_f64(self.median_distance),
        }
    }

    /// Statistic divided by `ln N`.
    pub fn ratio(&self, stat: Statistic) -> f64 {
        self.value(stat) / (self.n as f64).ln()
    }
}

impl Serialize for GrowthRow {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("GrowthRow", 14)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("size", &self.size)?;
        st.serialize_field("max_degree", &self.max_degree)?;
        st.serialize_field("mean_degree", &to_f64(self.mean_degree))?;
        st.serialize_field("median_degree", &to_f64(self.median_degree))?;
        st.serialize_field("diameter", &self.diameter)?;
        st.serialize_field("mean_distance", &to_f64(self.mean_distance))?;
        st.serialize_field("median_distance", &to_f64(self.median_distance))?;
        st.serialize_field("max_degree_ratio", &self.ratio(Statistic::MaxDegree))?;
        st.serialize_field("mean_degree_ratio", &self.ratio(Statistic::MeanDegree))?;
        st.serialize_field("median_degree_ratio", &self.ratio(Statistic::MedianDegree))?;
        st.serialize_field("diameter_ratio", &self.ratio(Statistic::Diameter))?;
        st.serialize_field("mean_distance_ratio", &self.ratio(Statistic::MeanDistance))?;
        st.serialize_field(
            "median_distance_ratio",
            &self.ratio(Statistic::MedianDistance),
        )?;
        st.end()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GrowthReport {
    pub family: FamilySpec,
    pub grid: Vec<usize>,
    pub rows: Vec<GrowthRow>,
}

impl GrowthReport {
    pub fn ratios(&self, stat: Statistic) -> Vec<f64> {
        self.rows.iter().map(|r| r.ratio(stat)).collect()
    }

    /// Last observed ratio per statistic, the empirical stand-in for the
    /// limit constant.
    pub fn last_ratio(&self, stat: Statistic) -> Option<f64> {
        self.rows.last().map(|r| r.ratio(stat))
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,size");
        for s in Statistic::ALL {
            out.push_str(&format!(",{}", s.name()));
        }
        for s in Statistic::ALL {
            out.push_str(&format!(",{}_ratio", s.name()));
        }
        out.push('\n');
        for r in &self.rows {
            out.push_str(&format!("{},{}", r.n, r.size));
            for s in Statistic::ALL {
                out.push_str(&format!(",{}", r.value(s)));
            }
            for s in Statistic::ALL {
                out.push_str(&format!(",{}", r.ratio(s)));
            }
            out.push('\n');
        }
        out
    }
}

/// Computes one row per node count in `grid`.
pub fn growth_report(spec: &FamilySpec, grid: &[usize]) -> Result<GrowthReport> {
    if grid.is_empty() {
        return Err(Error::InvalidGrid("grid is empty".into()));
    }
    if grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidGrid(
            "grid must be strictly increasing".into(),
        ));
    }
    if grid[0] < 3 {
        return Err(Error::InvalidGrid("grid values must be >= 3".into()));
    }
    let sizes: Vec<usize> = grid
        .iter()
        .map(|&n| spec.size_for_nodes(n))
        .collect::<Result<_>>()?;
    let rows = par::map_vec(&sizes, |&size| {
        let g = make_family(spec, size)?;
        GrowthRow::from_graph(&g, size)
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    Ok(GrowthReport {
        family: *spec,
        grid: grid.to_vec(),
        rows,
    })
}

/// Growth report over size parameters (`M` for M-indexed families).
pub fn growth_report_for_sizes(spec: &FamilySpec, sizes: &[usize]) -> Result<GrowthReport> {
    let grid = sizes
        .iter()
        .map(|&s| spec.node_count(s))
        .collect::<Result<Vec<_>>>()?;
    growth_report(spec, &grid)
}

/// [`DEFAULT_GRID`] mapped to node counts the family can realize.
pub fn default_grid(spec: &FamilySpec) -> Vec<usize> {
    DEFAULT_GRID
        .iter()
        .map(|&n| {
            spec.node_count(spec.nearest_size(n))
                .expect("nearest size is valid")
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    ClosedForm,
    EmpiricalTrend,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Flag {
    pub value: bool,
    pub provenance: Provenance,
}

impl Flag {
    fn closed(value: bool) -> Self {
        Flag {
            value,
            provenance: Provenance::ClosedForm,
        }
    }

    fn empirical(value: bool) -> Self {
        Flag {
            value,
            provenance: Provenance::EmpiricalTrend,
        }
    }
}

/// Degree small worlds: largest (`dswl`), mean (`dswa`) and median
/// (`dswmd`) degree over `ln N` diverge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DegreeFlags {
    pub dswl: Flag,
    pub dswa: Flag,
    pub dswmd: Flag,
}

/// Distance small worlds: diameter (`swd`), mean (`swa`) and median
/// (`swmd`) distance over `ln N` stay bounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DistanceFlags {
    pub swd: Flag,
    pub swa: Flag,
    pub swmd: Flag,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SWClassification {
    pub degree: DegreeFlags,
    pub distance: DistanceFlags,
}

impl DegreeFlags {
    /// median ⇒ mean ⇒ largest.
    pub fn is_consistent(&self) -> bool {
        (!self.dswmd.value || self.dswa.value) && (!self.dswa.value || self.dswl.value)
    }
}

impl DistanceFlags {
    /// diameter ⇒ mean and diameter ⇒ median.
    pub fn is_consistent(&self) -> bool {
        !self.swd.value || (self.swa.value && self.swmd.value)
    }
}

impl SWClassification {
    pub fn is_consistent(&self) -> bool {
        self.degree.is_consistent() && self.distance.is_consistent()
    }
}

/// Thresholds of the empirical trend classifier.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Thresholds {
    /// A degree ratio diverges when its last value is at least this
    /// multiple of its first and its tail is increasing.
    pub divergence_factor: f64,
    /// A distance ratio is bounded when its last value is below this
    /// multiple of its first.
    pub boundedness_factor: f64,
    /// ...and its final step grows by less than this factor.
    pub tail_growth_limit: f64,
}

impl Default for Thresholds {
    fn default() -> Self {
        Thresholds {
            divergence_factor: 4.0,
            boundedness_factor: 2.0,
            tail_growth_limit: 1.5,
        }
    }
}

fn check_report(report: &GrowthReport) -> Result<()> {
    let rows = &report.rows;
    if rows.len() < MIN_ROWS {
        return Err(Error::InvalidGrid(format!(
            "classification needs >= {MIN_ROWS} rows, report has {}",
            rows.len()
        )));
    }
    let (first, last) = (rows[0].n, rows[rows.len() - 1].n);
    if last < MIN_SPAN * first {
        return Err(Error::InvalidGrid(format!(
            "classification needs N to span a factor >= {MIN_SPAN}, got {first}..{last}"
        )));
    }
    Ok(())
}

fn diverges(r: &[f64], t: &Thresholds) -> bool {
    let steps = r.len() - 1;
    let tail = steps.div_ceil(2);
    let increasing = r[r.len() - 1 - tail..].windows(2).all(|w| w[1] > w[0]);
    increasing && r[r.len() - 1] >= t.divergence_factor * r[0]
}

fn bounded(r: &[f64], t: &Thresholds) -> bool {
    let (first, prev, last) = (r[0], r[r.len() - 2], r[r.len() - 1]);
    last < t.boundedness_factor * first && last <= t.tail_growth_limit * prev
}

pub fn empirical_degree_flags(report: &GrowthReport, t: &Thresholds) -> Result<DegreeFlags> {
    check_report(report)?;
    let f = |s| Flag::empirical(diverges(&report.ratios(s), t));
    Ok(DegreeFlags {
        dswl: f(Statistic::MaxDegree),
        dswa: f(Statistic::MeanDegree),
        dswmd: f(Statistic::MedianDegree),
    })
}

pub fn empirical_distance_flags(report: &GrowthReport, t: &Thresholds) -> Result<DistanceFlags> {
    check_report(report)?;
    let f = |s| Flag::empirical(bounded(&report.ratios(s), t));
    Ok(DistanceFlags {
        swd: f(Statistic::Diameter),
        swa: f(Statistic::MeanDistance),
        swmd: f(Statistic::MedianDistance),
    })
}

/// Degree flags for a report. Every family kind has a closed-form answer,
/// which takes precedence over the trend; the report is still validated.
pub fn classify_degree_smallworld(report: &GrowthReport) -> Result<DegreeFlags> {
    check_report(report)?;
    Ok(known_classification(&report.family).degree)
}

/// Distance flags for a report; closed form as for
/// [`classify_degree_smallworld`].
pub fn classify_distance_smallworld(report: &GrowthReport) -> Result<DistanceFlags> {
    check_report(report)?;
    Ok(known_classification(&report.family).distance)
}

/// Closed-form classification of each family kind.
pub fn known_classification(spec: &FamilySpec) -> SWClassification {
    // (dswl, dswa, dswmd, swd, swa, swmd)
    let (l, a, md, d, sa, smd) = match spec {
        // every degree is N-1, diameter 1
        FamilySpec::Complete => (true, true, true, true, true, true),
        // largest degree N-1, mean below 2, median 1; diameter 2
        FamilySpec::Star => (true, false, false, true, true, true),
        // degrees at most 2; diameter N-1 (chain), floor(N/2) (polygon)
        FamilySpec::Chain | FamilySpec::Polygon => (false, false, false, false, false, false),
        // mean (M+3)/3, median 1; diameter 3
        FamilySpec::Spider => (true, true, false, true, true, true),
        // median degree (N-1)/2; median distance grows linearly in N
        FamilySpec::Kite => (true, true, true, false, false, false),
        // median degree M+a-1; diameter 3
        FamilySpec::S1 { .. } => (true, true, true, true, true, true),
        // mean about M/2, median 1; diameter 3
        FamilySpec::S2 { .. } => (true, true, false, true, true, true),
        // degrees at most floor(ln N)+2; diameter O(ln N)
        FamilySpec::LnTree => (false, false, false, true, true, true),
    };
    SWClassification {
        degree: DegreeFlags {
            dswl: Flag::closed(l),
            dswa: Flag::closed(a),
            dswmd: Flag::closed(md),
        },
        distance: DistanceFlags {
            swd: Flag::closed(d),
            swa: Flag::closed(sa),
            swmd: Flag::closed(smd),
        },
    }
}

/// Outcome of comparing two equal-size networks in the degree
/// majorization sense.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SmallerWorld {
    /// `Δ_G ≺ Δ_H` strictly: the second network is the smaller world.
    SecondIsSmaller,
    /// `Δ_H ≺ Δ_G` strictly.
    FirstIsSmaller,
    Equal,
    Incomparable,
}

impl SmallerWorld {
    pub fn statement(self, first: &str, second: &str) -> String {
        match self {
            SmallerWorld::SecondIsSmaller => format!("{second} is a smaller world than {first}"),
            SmallerWorld::FirstIsSmaller => format!("{first} is a smaller world than {second}"),
            SmallerWorld::Equal => format!("{first} and {second} have equal degree arrays"),
            SmallerWorld::Incomparable => {
                format!("{first} and {second} are incomparable")
            }
        }
    }
}

pub fn smaller_world_compare(g: &Graph, h: &Graph) -> Result<SmallerWorld> {
    let v = majorize_compare(degree_array(g).values(), degree_array(h).values())?;
    Ok(match v.relation {
        Relation::Less => SmallerWorld::SecondIsSmaller,
        Relation::Greater => SmallerWorld::FirstIsSmaller,
        Relation::Equal => SmallerWorld::Equal,
        Relation::Incomparable => SmallerWorld::Incomparable,
    })
}
