//! The explicit rainbow-free colorings behind the lower bounds. Every
//! constructor re-checks its output against the progression enumerator, so
//! each printed line is a machine-verified certificate, not a formula.

use awgraph::colorings::{
    binary_tree_coloring, bipartite_split_coloring, hypercube_extremal_coloring,
    odd_diameter_tree_coloring, star_coloring,
};
use awgraph::generators::{generate, FamilySpec};

fn main() {
    println!("odd hypercubes: poles in their own colors, bulk in the third");
    for dim in [3usize, 5] {
        let (g, c) = hypercube_extremal_coloring(dim).expect("odd dimension");
        println!("  Q_{dim} (n = {:3}): {}", g.n(), c.to_line());
    }

    println!("complete binary trees: one marked level per subtree of the root");
    for height in 2..=4usize {
        let (g, c) = binary_tree_coloring(height).expect("height >= 2");
        println!("  height {height} (n = {:2}): {}", g.n(), c.to_line());
    }

    println!("stars: distinct colors run out, the last one floods the tail");
    for (leaves, k) in [(4usize, 4usize), (6, 5), (7, 8)] {
        let (_, c) = star_coloring(leaves, k).expect("4 <= k <= leaves + 1");
        println!("  {leaves} leaves, k = {k}: {}", c.to_line());
    }

    println!("complete bipartite: each side cycles through its own palette");
    for (m, n, k) in [(4usize, 4usize, 4usize), (5, 6, 5)] {
        let (_, c) = bipartite_split_coloring(m, n, k).expect("m, n >= k >= 4");
        println!(
            "  K_{{{m},{n}}}, k = {k}: {} colors, {}",
            c.r(),
            c.to_line()
        );
    }

    println!("odd-diameter trees: the two diametral distance shells");
    for family in ["path:4", "path:8", "comb:4"] {
        let g =
            generate(&FamilySpec::parse(family).expect("family spec")).expect("family generates");
        let c = odd_diameter_tree_coloring(&g).expect("odd diameter >= 3");
        println!("  {family}: {}", c.to_line());
    }
}
