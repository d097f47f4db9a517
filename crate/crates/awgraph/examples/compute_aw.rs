//! Computes aw(G,k) for one graph and prints the certifying coloring.
//!
//!     cargo run --release --example compute_aw -- [family [k]]
//!
//! `family` is a spec such as `path:9`, `cycle:12`, `hypercube:3`,
//! `kbipartite:4,4`, or `product:(path:3)x(path:3)`; the default is
//! `path:9` with k = 3.

use std::env;

use awgraph::generators::{generate, FamilySpec};
use awgraph::solver::{aw, SearchConfig};

fn main() {
    let args: Vec<String> = env::args().skip(1).collect();
    let family = args.first().map(String::as_str).unwrap_or("path:9");
    let k: usize = args
        .get(1)
        .map(|s| s.parse().expect("k must be an integer"))
        .unwrap_or(3);

    let spec = FamilySpec::parse(family).expect("family spec");
    let g = generate(&spec).expect("family generates");
    println!("graph {family}: n = {}, m = {}", g.n(), g.m());

    let res = aw(&g, k, &SearchConfig::default()).expect("search fits the default budget");
    println!("aw(G,{k}) = {}", res.aw);
    match &res.extremal {
        Some(w) => {
            println!("extremal {}-coloring: {}", w.r(), w.to_line());
            println!("(an exact coloring one color short of aw with no rainbow {k}-AP)");
        }
        None => println!("no extremal coloring: every exact coloring below aw is degenerate"),
    }
    println!(
        "search: {} nodes, {} prunes, {} ms",
        res.stats.nodes, res.stats.prunes, res.stats.elapsed_ms
    );
}
