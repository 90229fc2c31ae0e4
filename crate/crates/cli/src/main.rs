use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{ArgMatches, Args, CommandFactory, FromArgMatches, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use netorder::families::{catalog_figure, catalog_ids};
use netorder::graph::{parse_edge_list, MAX_ENUM_GRAPH_NODES};
use netorder::lorenz::lorenz_curve;
use netorder::report::{AnalysisReport, ComparisonReport};
use netorder::sequences::{degree_array, gamma_array};
use netorder::smallworld::{
    default_grid, empirical_degree_flags, empirical_distance_flags, growth_report,
    growth_report_for_sizes, known_classification, GrowthReport, SWClassification, Statistic,
    Thresholds,
};
use netorder::verify::{run_verify, summarize, Status, VerifyOptions};
use netorder::{make_family, Error, FamilySpec, Graph};

/// Degree, distance and neighboring arrays of networks, Lorenz
/// majorization and small-world classification.
#[derive(Parser)]
#[command(name = "netorder", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report every array, measure and distance statistic of one graph.
    Analyze {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Majorization verdicts and the smaller-world statement for two graphs
    /// of equal size. Sources are taken in command-line order.
    Compare {
        #[command(flatten)]
        source: Source,
    },
    /// Growth report and small-world classification of a family.
    Family {
        #[arg(long)]
        family: String,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        b: Option<usize>,
        /// Node counts: `32,64,128` or `32..1024` (doubling).
        #[arg(long, conflicts_with = "m_grid")]
        n_grid: Option<String>,
        /// Clique sizes for spider, kite, s1 and s2.
        #[arg(long)]
        m_grid: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Cumulative curve of the degree or neighboring array as CSV.
    Lorenz {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = ArrayKind::Delta)]
        array: ArrayKind,
    },
    /// Recompute every worked example and compare with its stated value.
    Verify {
        /// Run a single fixture group: gini, hasse, medians, incomparable,
        /// lowest_curve, families, gamma_tables, gamma_identity,
        /// nu_identity, statements, separations, kite_lntree, s1_s2,
        /// smallworld, tree_gamma (alias theorem6), discrepancies.
        #[arg(long)]
        only: Option<String>,
        /// Largest node count for the exhaustive tree and graph checks.
        #[arg(long)]
        n: Option<usize>,
        /// Machine-readable output instead of a table.
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// List or emit the built-in example graphs.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List {
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Print an entry as an edge list.
    Emit { id: String },
}

#[derive(Args)]
struct Source {
    /// Edge-list file.
    #[arg(long)]
    input: Vec<PathBuf>,
    /// Catalog id.
    #[arg(long)]
    catalog: Vec<String>,
    /// Family name.
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ArrayKind {
    Delta,
    Gamma,
}

/// A graph together with the name it is reported under.
struct Named {
    name: String,
    graph: Graph,
}

enum Input {
    File(PathBuf),
    Catalog(String),
    Family,
}

impl Source {
    /// Inputs in the order they appear on the command line.
    fn ordered(&self, matches: Option<&ArgMatches>) -> Vec<Input> {
        let idx = |id: &str| -> Vec<usize> {
            matches
                .and_then(|m| m.indices_of(id))
                .map(|i| i.collect())
                .unwrap_or_default()
        };
        let mut tagged: Vec<(usize, Input)> = Vec::new();
        let files = idx("input");
        for (k, p) in self.input.iter().enumerate() {
            tagged.push((files.get(k).copied().unwrap_or(k), Input::File(p.clone())));
        }
        let ids = idx("catalog");
        for (k, id) in self.catalog.iter().enumerate() {
            let at = ids.get(k).copied().unwrap_or(usize::MAX / 2 + k);
            tagged.push((at, Input::Catalog(id.clone())));
        }
        if self.family.is_some() {
            let at = idx("family").first().copied().unwrap_or(usize::MAX);
            tagged.push((at, Input::Family));
        }
        tagged.sort_by_key(|(at, _)| *at);
        tagged.into_iter().map(|(_, i)| i).collect()
    }

    fn load(&self, input: &Input) -> anyhow::Result<Named> {
        match input {
            Input::File(path) => {
                let text = fs::read_to_string(path)
                    .with_context(|| format!("cannot read {}", path.display()))?;
                let graph =
                    parse_edge_list(&text).with_context(|| format!("in {}", path.display()))?;
                Ok(Named {
                    name: path.display().to_string(),
                    graph,
                })
            }
            Input::Catalog(id) => Ok(Named {
                name: id.clone(),
                graph: catalog_figure(id)?.graph,
            }),
            Input::Family => {
                let name = self.family.as_deref().unwrap_or_default();
                let spec = FamilySpec::from_name(name, self.a, self.b)?;
                let size = match (self.n, self.m) {
                    (Some(_), Some(_)) => bail!("give either --n or --m, not both"),
                    (None, Some(m)) if spec.indexed_by_m() => m,
                    (None, Some(_)) => bail!("{spec} is sized by --n"),
                    (Some(n), None) => spec.size_for_nodes(n)?,
                    (None, None) => bail!("--family needs --n or --m"),
                };
                let graph = make_family(&spec, size)?;
                Ok(Named {
                    name: format!("{spec} (N={})", graph.node_count()),
                    graph,
                })
            }
        }
    }

    fn single(&self) -> anyhow::Result<Named> {
        match self.ordered(None).as_slice() {
            [one] => self.load(one),
            [] => bail!("no graph given: use --input, --catalog or --family"),
            _ => bail!("expected exactly one graph"),
        }
    }

    fn pair(&self, matches: Option<&ArgMatches>) -> anyhow::Result<(Named, Named)> {
        match self.ordered(matches).as_slice() {
            [x, y] => Ok((self.load(x)?, self.load(y)?)),
            other => bail!("compare needs exactly two graphs, got {}", other.len()),
        }
    }
}

/// `32,64,128` or `lo..hi` doubling from `lo` up to `hi`.
fn parse_grid(text: &str) -> anyhow::Result<Vec<usize>> {
    if let Some((lo, hi)) = text.split_once("..") {
        let lo: usize = lo.trim().parse().context("grid range start")?;
        let hi: usize = hi.trim().parse().context("grid range end")?;
        if lo == 0 || lo > hi {
            bail!("grid range `{text}` must satisfy 0 < start <= end");
        }
        let mut out = Vec::new();
        let mut v = lo;
        while v <= hi {
            out.push(v);
            v *= 2;
        }
        return Ok(out);
    }
    text.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| anyhow!("bad grid value `{}`", t.trim()))
        })
        .collect()
}

fn print_json<T: Serialize>(value: &T) -> anyhow::Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

fn analyze(source: &Source, format: Format) -> anyhow::Result<()> {
    if format == Format::Csv {
        bail!("analyze writes JSON only");
    }
    let g = source.single()?;
    print_json(&AnalysisReport::of(&g.graph))
}

fn compare(source: &Source, matches: Option<&ArgMatches>) -> anyhow::Result<ExitCode> {
    let (g, h) = source.pair(matches)?;
    match ComparisonReport::of(&g.graph, &h.graph, &g.name, &h.name) {
        Ok(report) => {
            print_json(&json!({
                "first_name": g.name,
                "second_name": h.name,
                "comparison": report,
            }))?;
            Ok(ExitCode::SUCCESS)
        }
        Err(Error::LengthMismatch(a, b)) => {
            print_json(&json!({
                "error": {
                    "kind": "node_count_mismatch",
                    "message": "majorization compares networks with the same number of nodes",
                    "first": { "name": g.name, "nodes": a },
                    "second": { "name": h.name, "nodes": b },
                }
            }))?;
            Ok(ExitCode::from(2))
        }
        Err(e) => Err(e.into()),
    }
}

#[derive(Serialize)]
struct Classifications {
    closed_form: SWClassification,
    empirical: Option<SWClassification>,
    #[serde(skip_serializing_if = "Option::is_none")]
    empirical_error: Option<String>,
}

#[derive(Serialize)]
struct FamilyOutput {
    #[serde(flatten)]
    report: GrowthReport,
    last_ratios: serde_json::Map<String, serde_json::Value>,
    classification: Classifications,
}

fn family(
    name: &str,
    a: Option<usize>,
    b: Option<usize>,
    n_grid: Option<&str>,
    m_grid: Option<&str>,
    format: Format,
) -> anyhow::Result<()> {
    let spec = FamilySpec::from_name(name, a, b)?;
    let report = match (n_grid, m_grid) {
        (Some(g), _) => growth_report(&spec, &parse_grid(g)?)?,
        (None, Some(g)) => {
            if !spec.indexed_by_m() {
                bail!("{spec} is sized by node count; use --n-grid");
            }
            growth_report_for_sizes(&spec, &parse_grid(g)?)?
        }
        (None, None) => growth_report(&spec, &default_grid(&spec))?,
    };
    if format == Format::Csv {
        print!("{}", report.to_csv());
        return Ok(());
    }
    let t = Thresholds::default();
    let empirical = empirical_degree_flags(&report, &t).and_then(|degree| {
        Ok(SWClassification {
            degree,
            distance: empirical_distance_flags(&report, &t)?,
        })
    });
    let last_ratios = Statistic::ALL
        .iter()
        .map(|&s| (format!("{}_ratio", s.name()), json!(report.last_ratio(s))))
        .collect();
    print_json(&FamilyOutput {
        classification: Classifications {
            closed_form: known_classification(&spec),
            empirical_error: empirical.as_ref().err().map(ToString::to_string),
            empirical: empirical.ok(),
        },
        last_ratios,
        report,
    })
}

fn lorenz(source: &Source, array: ArrayKind) -> anyhow::Result<()> {
    let g = source.single()?;
    let values = match array {
        ArrayKind::Delta => degree_array(&g.graph).values().to_vec(),
        ArrayKind::Gamma => gamma_array(&g.graph).values().to_vec(),
    };
    print!("{}", lorenz_curve(&values)?.to_csv());
    Ok(())
}

fn verify(
    only: Option<String>,
    n: Option<usize>,
    format: Option<Format>,
) -> anyhow::Result<ExitCode> {
    let mut opts = VerifyOptions {
        only,
        ..VerifyOptions::default()
    };
    if let Some(n) = n {
        opts.tree_max_n = n;
        opts.graph_max_n = n.min(MAX_ENUM_GRAPH_NODES);
    }
    let rows = run_verify(&opts)?;
    let summary = summarize(&rows);
    match format {
        Some(Format::Json) => print_json(&json!({ "summary": summary, "rows": rows }))?,
        Some(Format::Csv) => {
            let mut w = csv::Writer::from_writer(io::stdout().lock());
            for r in &rows {
                w.serialize(r)?;
            }
            w.flush()?;
        }
        None => {
            let mut out = io::stdout().lock();
            for r in &rows {
                writeln!(
                    out,
                    "{:<8} {:<14} {}\n         expected {}  computed {}",
                    r.status, r.group, r.name, r.expected, r.computed
                )?;
            }
            writeln!(
                out,
                "{} passed, {} failed, {} flagged",
                summary.pass, summary.fail, summary.flagged
            )?;
        }
    }
    Ok(if rows.iter().any(|r| r.status == Status::Fail) {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

#[derive(Serialize)]
struct Listing {
    id: &'static str,
    description: &'static str,
    nodes: usize,
    edges: usize,
    expected: netorder::families::Expected,
    #[serde(flatten)]
    origin: netorder::families::Origin,
}

fn catalog(action: &CatalogAction) -> anyhow::Result<()> {
    match action {
        CatalogAction::Emit { id } => {
            print!("{}", catalog_figure(id)?.graph.to_edge_list());
        }
        CatalogAction::List { format } => {
            let entries: Vec<Listing> = catalog_ids()
                .iter()
                .map(|id| {
                    let e = catalog_figure(id).expect("listed ids exist");
                    Listing {
                        id: e.id,
                        description: e.description,
                        nodes: e.graph.node_count(),
                        edges: e.graph.edge_count(),
                        expected: e.expected,
                        origin: e.origin,
                    }
                })
                .collect();
            match format {
                Some(Format::Json) => print_json(&entries)?,
                Some(Format::Csv) => bail!("catalog list writes a table or JSON"),
                None => {
                    let mut out = io::stdout().lock();
                    for e in &entries {
                        let arr = |v: &Option<Vec<u64>>| match v {
                            Some(v) => format!("{v:?}"),
                            None => "-".into(),
                        };
                        writeln!(
                            out,
                            "{:<9} N={:<2} E={:<2} Δ={} AF={} Γ={}  {}",
                            e.id,
                            e.nodes,
                            e.edges,
                            arr(&e.expected.delta),
                            arr(&e.expected.alpha),
                            arr(&e.expected.gamma),
                            e.description
                        )?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn run(matches: &ArgMatches) -> anyhow::Result<ExitCode> {
    let cli = Cli::from_arg_matches(matches)?;
    match &cli.command {
        Command::Analyze { source, format } => analyze(source, *format)?,
        Command::Compare { source } => {
            return compare(source, matches.subcommand_matches("compare"));
        }
        Command::Family {
            family: name,
            a,
            b,
            n_grid,
            m_grid,
            format,
        } => family(name, *a, *b, n_grid.as_deref(), m_grid.as_deref(), *format)?,
        Command::Lorenz { source, array } => lorenz(source, *array)?,
        Command::Verify { only, n, format } => return verify(only.clone(), *n, *format),
        Command::Catalog { action } => catalog(action)?,
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let matches = Cli::command().get_matches();
    match run(&matches) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
