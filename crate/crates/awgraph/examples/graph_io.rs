//! The interchange formats: plain text (`n m` header, one edge per line,
//! `#` comments, `# name:` preserved) and the JSON equivalent, plus the
//! one-line coloring format. Pass a path to parse a file instead of the
//! built-in sample.

use std::env;
use std::fs;

use awgraph::coloring::Coloring;
use awgraph::graph::{distance_matrix, Graph};

const SAMPLE: &str = "\
# name: bull
5 5
0 1
0 2
1 2
1 3
2 4
";

fn main() {
    let text = match env::args().nth(1) {
        Some(path) => fs::read_to_string(&path).expect("readable graph file"),
        None => SAMPLE.to_string(),
    };
    let g = Graph::parse_text(&text).expect("text format: 'n m' header then edges");
    println!(
        "parsed {}: n = {}, m = {}, connected: {}",
        g.name().unwrap_or("unnamed"),
        g.n(),
        g.m(),
        g.is_connected()
    );

    println!("text form:\n{}", g.to_text());
    println!("json form:\n{}", g.to_json_string());

    let back = Graph::from_json_str(&g.to_json_string()).expect("round trip");
    assert_eq!(back, g);
    println!("json round trip preserves the graph");

    let dm = distance_matrix(&g);
    if let Some(d) = dm.get(3, 4) {
        println!("distance between vertices 3 and 4: {d}");
    }

    // Colorings travel as one line of colors, vertex by vertex.
    let c = Coloring::parse_line("1 2 3 1 1").expect("five colors");
    println!(
        "coloring {}: r = {}, exact: {}",
        c.to_line(),
        c.r(),
        c.is_exact()
    );
}
