//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails.

use std::collections::{HashMap, HashSet};
use std::panic::{self, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use netorder::families::{catalog_figure, catalog_ids, floor_ln, make_family, FamilySpec};
use netorder::graph::{distance_stats, enumerate_labeled_trees, triangle_count, Graph};
use netorder::lorenz::{gini_generalized, gini_standard, majorize_compare, power_measure, theil};
use netorder::sequences::{
    alpha_array, degree_array, degree_stats, gamma_array, gamma_via_adjacency, neighboring_index,
    DeltaArray,
};
use netorder::smallworld::{
    default_grid, empirical_degree_flags, empirical_distance_flags, growth_report,
    known_classification, Thresholds,
};
use netorder::stats::Fraction;
use netorder::Relation;

// Oracles, written against plain vectors and edge lists only.

fn sorted_desc(mut v: Vec<u64>) -> Vec<u64> {
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

fn prefix(v: &[u64]) -> Vec<u64> {
    v.iter()
        .scan(0, |s, &x| {
            *s += x;
            Some(*s)
        })
        .collect()
}

/// `x ≺ y` as a prefix-sum comparison.
fn oracle_majorized(x: &[u64], y: &[u64]) -> bool {
    prefix(x).iter().zip(prefix(y)).all(|(a, b)| *a <= b)
}

fn oracle_relation(x: &[u64], y: &[u64]) -> Relation {
    match (oracle_majorized(x, y), oracle_majorized(y, x)) {
        (true, true) => Relation::Equal,
        (true, false) => Relation::Less,
        (false, true) => Relation::Greater,
        (false, false) => Relation::Incomparable,
    }
}

/// `Σ_i (n - i) x_i` over 0-based `i`.
fn oracle_gini(x: &[u64]) -> u64 {
    let n = x.len() as u64;
    x.iter().enumerate().map(|(i, &v)| (n - i as u64) * v).sum()
}

fn oracle_degrees(n: usize, edges: &[(usize, usize)]) -> Vec<u64> {
    let mut d = vec![0u64; n];
    for &(u, v) in edges {
        d[u] += 1;
        d[v] += 1;
    }
    d
}

/// Own degree plus the neighbors' degrees, per node, sorted.
fn oracle_gamma(n: usize, edges: &[(usize, usize)]) -> Vec<u64> {
    let d = oracle_degrees(n, edges);
    let mut g = d.clone();
    for &(u, v) in edges {
        g[u] += d[v];
        g[v] += d[u];
    }
    sorted_desc(g)
}

fn oracle_triangles(n: usize, edges: &[(usize, usize)]) -> u64 {
    let set: HashSet<(usize, usize)> = edges.iter().copied().collect();
    let has = |a: usize, b: usize| set.contains(&(a.min(b), a.max(b)));
    let mut t = 0;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if has(a, b) && has(b, c) && has(a, c) {
                    t += 1;
                }
            }
        }
    }
    t
}

fn oracle_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    let mut parts = n;
    for &(u, v) in edges {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
            parts -= 1;
        }
    }
    parts == 1
}

fn ratio(x: Fraction) -> (u64, u64) {
    (*x.numer(), *x.denom())
}

fn oracle_median(sorted: &[u64]) -> (u64, u64) {
    let n = sorted.len();
    if n % 2 == 1 {
        (sorted[n / 2], 1)
    } else {
        let s = sorted[n / 2 - 1] + sorted[n / 2];
        if s.is_multiple_of(2) {
            (s / 2, 1)
        } else {
            (s, 2)
        }
    }
}

/// Random spanning tree on `0..n` plus random extra edges.
fn random_connected(rng: &mut ChaCha8Rng, n: usize) -> Vec<(usize, usize)> {
    let mut set = HashSet::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        set.insert((u, v));
    }
    let p: f64 = rng.gen_range(0.0..0.6);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                set.insert((u, v));
            }
        }
    }
    let mut edges: Vec<_> = set.into_iter().collect();
    edges.sort_unstable();
    edges
}

fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::new(n, edges.iter().copied()).expect("valid edges")
}

fn fig(id: &str) -> Graph {
    catalog_figure(id).expect("catalog id").graph
}

fn delta(g: &Graph) -> Vec<u64> {
    degree_array(g).values().to_vec()
}

fn fam(spec: FamilySpec, size: usize) -> Graph {
    make_family(&spec, size).expect("valid family")
}

// Criteria.

const FOUR_NODE: [&[u64]; 6] = [
    &[2, 2, 1, 1],
    &[3, 1, 1, 1],
    &[3, 2, 2, 2],
    &[2, 2, 2, 2],
    &[3, 3, 2, 2],
    &[3, 3, 3, 3],
];

fn c1_gini() {
    let got: Vec<u64> = FOUR_NODE
        .iter()
        .map(|x| gini_generalized(x).unwrap())
        .collect();
    assert_eq!(got, [17, 18, 24, 20, 27, 30]);
    let oracle: Vec<u64> = FOUR_NODE.iter().map(|x| oracle_gini(x)).collect();
    assert_eq!(got, oracle);
    // the drawn graphs G1, G2, G4, G5, G6 have exactly these arrays
    for (id, i) in [
        ("fig6_G1", 0),
        ("fig6_G2", 1),
        ("fig6_G4", 3),
        ("fig6_G5", 4),
        ("fig6_G6", 5),
    ] {
        assert_eq!(delta(&fig(id)), FOUR_NODE[i], "{id}");
    }
}

fn c2_hasse() {
    let cumulative: [&[u64]; 6] = [
        &[2, 4, 5, 6],
        &[3, 4, 5, 6],
        &[3, 5, 7, 9],
        &[2, 4, 6, 8],
        &[3, 6, 8, 10],
        &[3, 6, 9, 12],
    ];
    for (x, want) in FOUR_NODE.iter().zip(cumulative) {
        assert_eq!(DeltaArray::new(x.to_vec()).unwrap().cumulative(), want);
    }
    let rel = |i: usize, j: usize| {
        majorize_compare(FOUR_NODE[i], FOUR_NODE[j])
            .unwrap()
            .relation
    };
    for (i, j) in [(0, 1), (0, 3), (1, 2), (3, 2), (2, 4), (4, 5)] {
        assert_eq!(rel(i, j), Relation::Less, "G{} vs G{}", i + 1, j + 1);
    }
    assert_eq!(rel(1, 3), Relation::Incomparable);
    for (i, x) in FOUR_NODE.iter().enumerate() {
        for (j, y) in FOUR_NODE.iter().enumerate() {
            assert_eq!(rel(i, j), oracle_relation(x, y));
        }
    }
    // the drawn triangle-with-pendant keeps the same place in the order
    let g3 = delta(&fig("fig6_G3"));
    assert_eq!(oracle_relation(FOUR_NODE[1], &g3), Relation::Less);
    assert_eq!(oracle_relation(FOUR_NODE[3], &g3), Relation::Less);
    assert_eq!(oracle_relation(&g3, FOUR_NODE[4]), Relation::Less);
}

fn c3_medians() {
    let stats = |id: &str| degree_stats(&degree_array(&fig(id))).unwrap();
    let (g, h) = (stats("fig1_G"), stats("fig1_H"));
    assert_eq!(ratio(g.median), (2, 1));
    assert_eq!(ratio(h.median), (1, 1));
    assert_eq!(
        majorize_compare(&delta(&fig("fig1_G")), &delta(&fig("fig1_H")))
            .unwrap()
            .relation,
        Relation::Less
    );
    let (g1, h1) = (stats("fig2_G1"), stats("fig2_H1"));
    assert_eq!(ratio(g1.median), (2, 1));
    assert_eq!(ratio(h1.median), (3, 1));
    assert_eq!(
        majorize_compare(&delta(&fig("fig2_G1")), &delta(&fig("fig2_H1")))
            .unwrap()
            .relation,
        Relation::Less
    );
    let (a, b) = (stats("fig3_H1"), stats("fig3_H2"));
    assert_eq!(ratio(a.mean), (10, 3));
    assert_eq!(ratio(b.mean), (10, 3));
    assert_eq!(ratio(a.median), (3, 1));
    assert_eq!(ratio(b.median), (7, 2));
    let (da, db) = (delta(&fig("fig3_H1")), delta(&fig("fig3_H2")));
    assert_eq!(
        majorize_compare(&da, &db).unwrap().relation,
        Relation::Incomparable
    );
    assert_eq!(oracle_relation(&da, &db), Relation::Incomparable);
    for id in [
        "fig1_G", "fig1_H", "fig2_G1", "fig2_H1", "fig3_H1", "fig3_H2",
    ] {
        assert_eq!(
            ratio(stats(id).median),
            oracle_median(&delta(&fig(id))),
            "{id}"
        );
    }
}

fn c4_lowest_curve() {
    let start = Instant::now();
    for (n, count) in [(3usize, 4usize), (4, 38), (5, 728), (6, 26704)] {
        let chain: Vec<u64> = std::iter::repeat_n(2, n - 2).chain([1, 1]).collect();
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        let mut connected = 0;
        for mask in 0u64..1 << pairs.len() {
            let edges: Vec<_> = (0..pairs.len())
                .filter(|k| mask >> k & 1 == 1)
                .map(|k| pairs[k])
                .collect();
            if !oracle_connected(n, &edges) {
                continue;
            }
            connected += 1;
            let d = sorted_desc(oracle_degrees(n, &edges));
            assert!(oracle_majorized(&chain, &d), "n={n} {edges:?}");
            assert!(majorize_compare(&chain, &d).unwrap().is_majorized());
        }
        assert_eq!(connected, count, "connected graphs on {n} nodes");
    }
    assert!(
        start.elapsed() < Duration::from_secs(30),
        "took {:?}",
        start.elapsed()
    );
}

fn c5_gamma_tables() {
    for n in 4..=10usize {
        let n64 = n as u64;
        let star = fam(FamilySpec::Star, n);
        let mut want = vec![2 * (n64 - 1)];
        want.extend(std::iter::repeat_n(n64, n - 1));
        assert_eq!(gamma_array(&star).values(), want);
        assert_eq!(neighboring_index(&star), (n64 + 2) * (n64 - 1));
        assert_eq!(neighboring_index(&fam(FamilySpec::Chain, n)), 6 * n64 - 8);
        assert_eq!(neighboring_index(&fam(FamilySpec::Polygon, n)), 6 * n64);
        assert_eq!(
            neighboring_index(&fam(FamilySpec::Complete, n)),
            n64 * n64 * (n64 - 1)
        );
    }
}

fn corpus() -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut out: Vec<Graph> = (0..200)
        .map(|_| {
            let n = rng.gen_range(2..=12);
            graph(n, &random_connected(&mut rng, n))
        })
        .collect();
    out.extend(catalog_ids().iter().map(|id| fig(id)));
    out
}

fn c6_gamma_identity() {
    let corpus = corpus();
    assert_eq!(corpus.len(), 200 + catalog_ids().len());
    for g in &corpus {
        let a = gamma_array(g);
        assert_eq!(a, gamma_via_adjacency(g), "{:?}", g.edges());
        assert_eq!(a.values(), oracle_gamma(g.node_count(), g.edges()));
    }
}

fn c7_nu_identity() {
    for g in corpus() {
        let d = oracle_degrees(g.node_count(), g.edges());
        let want: u64 = d.iter().map(|x| x * (x + 1)).sum();
        assert_eq!(gamma_array(&g).total(), want);
        assert_eq!(neighboring_index(&g), want);
    }
    let totals = |id: &str| {
        let g = fig(id);
        (degree_array(&g).total(), gamma_array(&g).total())
    };
    assert_eq!(totals("fig16_a"), (8, 22));
    assert_eq!(totals("fig16_b"), (8, 24));
    assert_eq!(totals("fig17_a"), (14, 48));
    assert_eq!(totals("fig17_b"), (12, 48));
}

fn c8_statements() {
    let check = |a: &str, b: &str, ga: &[u64], gb: &[u64], dv: Relation, gv: Relation| {
        let (x, y) = (fig(a), fig(b));
        assert_eq!(gamma_array(&x).values(), ga);
        assert_eq!(gamma_array(&y).values(), gb);
        assert_eq!(
            majorize_compare(&delta(&x), &delta(&y)).unwrap().relation,
            dv
        );
        assert_eq!(oracle_relation(&delta(&x), &delta(&y)), dv);
        assert_eq!(majorize_compare(ga, gb).unwrap().relation, gv);
        assert_eq!(oracle_relation(ga, gb), gv);
    };
    check(
        "fig18_a",
        "fig18_b",
        &[12, 12, 10, 10, 4, 4],
        &[11, 11, 11, 11, 8, 8],
        Relation::Less,
        Relation::Incomparable,
    );
    check(
        "fig19_a",
        "fig19_b",
        &[6, 4, 4, 4],
        &[6, 6, 6, 6],
        Relation::Incomparable,
        Relation::Less,
    );
}

fn c9_separations() {
    let (g, gp) = (fig("fig14_G"), fig("fig14_Gp"));
    for x in [&g, &gp] {
        assert_eq!(delta(x), [4, 4, 3, 3, 3, 3]);
        assert_eq!(alpha_array(x).unwrap().values(), [10, 5, 0, 0, 0]);
        assert_eq!(neighboring_index(x), 88);
    }
    assert_eq!(gamma_array(&g).values(), [17, 17, 14, 14, 13, 13]);
    assert_eq!(gamma_array(&gp).values(), [16, 16, 14, 14, 14, 14]);
    let (a, b) = (fig("fig15a"), fig("fig15b"));
    for x in [&a, &b] {
        assert_eq!(delta(x), [3; 6]);
        assert_eq!(alpha_array(x).unwrap().values(), [9, 6, 0, 0, 0]);
        assert_eq!(gamma_array(x).values(), [12; 6]);
    }
    assert_eq!(triangle_count(&a), 0);
    assert_eq!(triangle_count(&b), 2);
    assert_eq!(oracle_triangles(6, a.edges()), 0);
    assert_eq!(oracle_triangles(6, b.edges()), 2);
}

fn c10_tree_gamma() {
    let start = Instant::now();
    for n in 4..=8usize {
        let mut groups: HashMap<Vec<u64>, HashSet<Vec<u64>>> = HashMap::new();
        let mut count = 0u64;
        for t in enumerate_labeled_trees(n).unwrap() {
            count += 1;
            groups
                .entry(gamma_array(&t).values().to_vec())
                .or_default()
                .insert(delta(&t));
        }
        assert_eq!(count, (n as u64).pow(n as u32 - 2));
        assert!(groups.values().all(|d| d.len() == 1), "n={n}");
    }
    assert!(
        start.elapsed() < Duration::from_secs(60),
        "took {:?}",
        start.elapsed()
    );
}

fn c11_measures() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut pairs: Vec<(Vec<u64>, Vec<u64>)> = Vec::new();
    while pairs.len() < 500 {
        let n = rng.gen_range(3..=12);
        let edges = random_connected(&mut rng, n);
        let x = sorted_desc(oracle_degrees(n, &edges));
        let y = if pairs.len().is_multiple_of(2) {
            // a supergraph
            let mut more = edges.clone();
            for _ in 0..rng.gen_range(1..=3) {
                let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
                if u != v && !more.contains(&(u.min(v), u.max(v))) {
                    more.push((u.min(v), u.max(v)));
                }
            }
            sorted_desc(oracle_degrees(n, &more))
        } else {
            // an unrelated graph of the same order
            sorted_desc(oracle_degrees(n, &random_connected(&mut rng, n)))
        };
        if oracle_relation(&x, &y) == Relation::Less {
            pairs.push((x, y));
        }
    }
    for (x, y) in &pairs {
        let v = majorize_compare(x, y).unwrap();
        assert_eq!(v.relation, Relation::Less);
        assert!(v.strict);
        assert!(gini_generalized(x).unwrap() <= gini_generalized(y).unwrap());
        let tol = |a: f64| 1e-9 * a.abs().max(1.0);
        let (tx, ty) = (theil(x).unwrap(), theil(y).unwrap());
        assert!(tx <= ty + tol(ty), "theil {x:?} {y:?}");
        for p in [1.5, 2.0, 3.0] {
            let (px, py) = (power_measure(x, p).unwrap(), power_measure(y, p).unwrap());
            assert!(px <= py + tol(py), "p={p} {x:?} {y:?}");
        }
    }
    for n in [4usize, 10, 100] {
        let got = gini_standard(&delta(&fam(FamilySpec::Star, n))).unwrap();
        let want = (n as f64 - 2.0) / (2.0 * n as f64);
        assert!((got - want).abs() < 1e-12, "star {n}: {got} vs {want}");
    }
}

fn c12_smallworld() {
    let table: [(FamilySpec, [bool; 6]); 9] = [
        (FamilySpec::Complete, [true; 6]),
        (FamilySpec::Star, [true, false, false, true, true, true]),
        (FamilySpec::Chain, [false; 6]),
        (FamilySpec::Polygon, [false; 6]),
        (FamilySpec::Spider, [true, true, false, true, true, true]),
        (FamilySpec::Kite, [true, true, true, false, false, false]),
        (FamilySpec::S1 { a: 3, b: 1 }, [true; 6]),
        (
            FamilySpec::S2 { a: 1, b: 3 },
            [true, true, false, true, true, true],
        ),
        (FamilySpec::LnTree, [false, false, false, true, true, true]),
    ];
    let t = Thresholds::default();
    for (spec, want) in table {
        let k = known_classification(&spec);
        let closed = [
            k.degree.dswl.value,
            k.degree.dswa.value,
            k.degree.dswmd.value,
            k.distance.swd.value,
            k.distance.swa.value,
            k.distance.swmd.value,
        ];
        assert_eq!(closed, want, "{spec} closed form");
        let report = growth_report(&spec, &default_grid(&spec)).unwrap();
        let (d, s) = (
            empirical_degree_flags(&report, &t).unwrap(),
            empirical_distance_flags(&report, &t).unwrap(),
        );
        let empirical = [
            d.dswl.value,
            d.dswa.value,
            d.dswmd.value,
            s.swd.value,
            s.swa.value,
            s.swmd.value,
        ];
        assert_eq!(empirical, want, "{spec} empirical");
        if spec == FamilySpec::Star {
            assert!(report.rows.iter().all(|r| r.diameter == 2));
        }
    }
    for m in [10usize, 20, 50, 100] {
        let kite = fam(FamilySpec::Kite, m);
        let n = kite.node_count();
        assert_eq!(n, 2 * m - 1);
        let med = degree_stats(&degree_array(&kite)).unwrap().median;
        assert_eq!(ratio(med), (((n - 1) / 2) as u64, 1));
        let md = distance_stats(&kite).unwrap().median_distance;
        let s3 = 3f64.sqrt();
        let bound = (2.0 - s3) / 2.0 * n as f64 - (1.0 + s3) / 2.0;
        let md = *md.numer() as f64 / *md.denom() as f64;
        assert!(md > bound - 1.0, "kite M={m}: {md} vs {bound}");
    }
    for n in [8usize, 32, 100, 256, 1024, 3000] {
        let tree = fam(FamilySpec::LnTree, n);
        let l = (n as f64).ln().floor();
        assert_eq!(floor_ln(n) as f64, l);
        assert_eq!(tree.edge_count(), n - 1);
        let diameter = distance_stats(&tree).unwrap().diameter as f64;
        assert!(diameter <= l + 2.0 * (n as f64).ln() / l.ln(), "N={n}");
        assert!(delta(&tree)[0] as f64 <= l + 2.0, "N={n}");
    }
}

fn c13_verify() {
    let out = Command::new(env!("CARGO_BIN_EXE_netorder"))
        .args(["verify", "--format", "json"])
        .output()
        .expect("runs the binary");
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["summary"]["fail"], 0);
    assert_eq!(v["summary"]["flagged"], 3);
    let rows = v["rows"].as_array().unwrap();
    assert!(rows.iter().all(|r| r["status"] != "fail"));
    let flagged: Vec<&str> = rows
        .iter()
        .filter(|r| r["status"] == "flagged")
        .map(|r| r["name"].as_str().unwrap())
        .collect();
    assert_eq!(flagged.len(), 3);
    assert!(flagged[0].starts_with("chain running sums"));
    assert!(flagged[1].contains("S1") && flagged[1].contains("S2"));
    assert!(flagged[2].starts_with("AF(fig15a)"));
}

fn main() {
    let criteria: [(&str, fn()); 13] = [
        ("generalized Gini of the six four-node arrays", c1_gini),
        (
            "Hasse order and cumulative arrays of the four-node graphs",
            c2_hasse,
        ),
        ("median counterexamples to degree majorization", c3_medians),
        (
            "chain lies below every connected graph, n = 3..6",
            c4_lowest_curve,
        ),
        (
            "neighboring arrays of star, chain, polygon, complete",
            c5_gamma_tables,
        ),
        (
            "neighboring array equals column sums of A² + A",
            c6_gamma_identity,
        ),
        ("neighboring index equals Σδ(δ+1)", c7_nu_identity),
        (
            "degree and neighboring orders disagree both ways",
            c8_statements,
        ),
        (
            "equal degree/distance arrays with different neighbors or triangles",
            c9_separations,
        ),
        (
            "neighboring array of a tree fixes its degree array, n = 4..8",
            c10_tree_gamma,
        ),
        (
            "acceptable measures are monotone; standard Gini of the star",
            c11_measures,
        ),
        (
            "small-world classification of the built-in families",
            c12_smallworld,
        ),
        ("verify exits 0 with three flagged rows", c13_verify),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(f));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("PASS  {:>2}  {name} ({secs:.2}s)", i + 1),
            Err(e) => {
                failed += 1;
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                println!("FAIL  {:>2}  {name} ({secs:.2}s): {msg}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
