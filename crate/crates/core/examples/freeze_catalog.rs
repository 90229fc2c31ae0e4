//! Re-runs the invariant searches that pin the catalog's figure graphs and
//! prints the first class found for each, as a frozen edge list.

use netorder::families::{find_graphs_matching, Constraints};
use netorder::sequences::{alpha_array, degree_array, gamma_array};

fn main() {
    let searches: Vec<(&str, usize, Constraints)> = vec![
        ("fig2_G1", 5, Constraints::default().delta(&[3, 3, 2, 2, 2])),
        ("fig2_H1", 5, Constraints::default().delta(&[4, 3, 3, 2, 2])),
        (
            "fig3_H2",
            6,
            Constraints::default().delta(&[4, 4, 4, 3, 3, 2]),
        ),
        ("fig4_G1", 5, Constraints::default().delta(&[3, 3, 3, 2, 1])),
        ("fig4_G2", 5, Constraints::default().delta(&[4, 2, 2, 1, 1])),
        ("fig4_G3", 5, Constraints::default().delta(&[4, 2, 2, 2, 2])),
        (
            "fig14_G",
            6,
            Constraints::default()
                .delta(&[4, 4, 3, 3, 3, 3])
                .alpha(&[10, 5, 0, 0, 0])
                .gamma(&[17, 17, 14, 14, 13, 13]),
        ),
        (
            "fig14_Gp",
            6,
            Constraints::default()
                .delta(&[4, 4, 3, 3, 3, 3])
                .alpha(&[10, 5, 0, 0, 0])
                .gamma(&[16, 16, 14, 14, 14, 14]),
        ),
        (
            "fig17_a",
            6,
            Constraints::default().delta(&[3, 3, 2, 2, 2, 2]),
        ),
        (
            "fig17_b",
            6,
            Constraints::default().delta(&[5, 2, 2, 1, 1, 1]),
        ),
        (
            "fig18_b",
            6,
            Constraints::default()
                .delta(&[3, 3, 3, 3, 2, 2])
                .gamma(&[11, 11, 11, 11, 8, 8]),
        ),
    ];
    for (id, n, c) in searches {
        let found = find_graphs_matching(n, &c).expect("valid search");
        let g = &found[0];
        println!(
            "{id}: {} class(es); first = {:?}\n    delta {:?} alpha {:?} gamma {:?}",
            found.len(),
            g.edges(),
            degree_array(g).values(),
            alpha_array(g).unwrap().values(),
            gamma_array(g).values(),
        );
    }
}
