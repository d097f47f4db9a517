//! The bridge from colorings to path Ramsey theory: pick one representative
//! per color class, build the complete graph on them with edges colored by
//! graph distance, and hunt for a monochromatic path. Its vertices form a
//! progression in distinct classes, hence a rainbow one.

use awgraph::coloring::Coloring;
use awgraph::formulas::ramsey_paths;
use awgraph::generators::{generate, FamilySpec};
use awgraph::graph::distance_matrix;
use awgraph::ramsey::{build_distance_complete, rainbow_via_bridge, RepMode};

fn main() {
    for (m, n) in [(3u64, 3u64), (3, 5), (4, 6)] {
        println!(
            "two-coloring K_N forces a monochromatic P_{m} or P_{n} from N = {}",
            ramsey_paths(m, n).expect("m, n >= 2")
        );
    }

    // A 5-cycle with one vertex per color: the distance-colored complete
    // graph on the representatives.
    let g =
        generate(&FamilySpec::parse("cycle:5").expect("family spec")).expect("family generates");
    let dm = distance_matrix(&g);
    let c = Coloring::new(vec![1, 2, 3, 4, 5], 5).expect("valid coloring");
    let complete = build_distance_complete(&dm, &[0, 1, 2, 3, 4]).expect("connected");
    println!("distance-complete graph on C_5, one vertex per class:");
    print!("{}", complete.dump());
    let path = complete
        .find_monochromatic_path(3)
        .expect("5 classes at diameter 2 always yield one");
    println!("monochromatic path through class indices {path:?}");

    // The same engine end to end: lowest-index representatives first, then
    // exhaustive over all choices.
    let quick = rainbow_via_bridge(&g, &dm, &c, 3, RepMode::LowestIndex)
        .expect("exact coloring on a connected graph");
    match quick {
        Some(ap) => println!(
            "lowest-index bridge found rainbow vertices {:?} (difference {})",
            ap.vertices(),
            ap.diff()
        ),
        None => {
            println!("lowest-index bridge found nothing; trying every representative");
            let full = rainbow_via_bridge(&g, &dm, &c, 3, RepMode::Exhaustive { budget: 1 << 16 })
                .expect("budget suffices");
            println!(
                "exhaustive bridge: {:?}",
                full.map(|ap| ap.vertices().to_vec())
            );
        }
    }
}
