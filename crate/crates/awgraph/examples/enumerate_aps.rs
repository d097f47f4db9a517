//! Lists every k-term progression of a graph: k distinct vertices whose
//! consecutive graph distances all equal some d >= 1, deduplicated as
//! vertex sets.
//!
//!     cargo run --example enumerate_aps -- [family [k]]

use std::env;

use awgraph::ap::enumerate_k_aps;
use awgraph::generators::{generate, FamilySpec};
use awgraph::graph::distance_matrix;

fn main() {
    let args: Vec<String> = env::args().skip(1).collect();
    let family = args.first().map(String::as_str).unwrap_or("cycle:8");
    let k: usize = args
        .get(1)
        .map(|s| s.parse().expect("k must be an integer"))
        .unwrap_or(3);

    let spec = FamilySpec::parse(family).expect("family spec");
    let g = generate(&spec).expect("family generates");
    let dm = distance_matrix(&g);
    let idx = enumerate_k_aps(&g, &dm, k).expect("k >= 2");

    println!("{family} has {} {k}-APs (difference, vertices):", idx.len());
    print!("{}", idx.dump());

    if g.n() > 0 && !idx.is_empty() {
        let busiest = (0..g.n())
            .max_by_key(|&v| idx.incidence(v).len())
            .expect("nonempty graph");
        println!(
            "vertex {busiest} lies on {} of them, the most of any vertex",
            idx.incidence(busiest).len()
        );
    }
}
