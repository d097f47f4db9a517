//! Budgeted scans of the open conjectures. Scans never assert; they sweep a
//! corpus, report the empirical extremes, and print concrete
//! counterexamples if any turn up.
//!
//!     cargo run --release --example scan_conjectures -- [scan] [instances [seed]]
//!
//! Available scans: `tree_log3` (how close tree values get to the
//! logarithmic bound) and `dominating` (whether a dominating vertex keeps
//! aw(G,k) at k + 1 for k >= 4).

use std::env;

use awgraph::scan::{run_scan, ScanOptions, SCANS};

fn main() {
    let args: Vec<String> = env::args().skip(1).collect();
    let which: Vec<&str> = if let Some(name) = args.first() {
        vec![name.as_str()]
    } else {
        SCANS.to_vec()
    };
    let mut opts = ScanOptions {
        instances: 20,
        ..ScanOptions::default()
    };
    if let Some(v) = args.get(1) {
        opts.instances = v.parse().expect("instances must be an integer");
    }
    if let Some(v) = args.get(2) {
        opts.seed = v.parse().expect("seed must be an integer");
    }

    for name in which {
        let report = run_scan(name, &opts).expect("known scan");
        println!("scan {} ({} cases):", report.scan, report.cases);
        for note in &report.notes {
            println!("  {note}");
        }
        if report.counterexamples.is_empty() {
            println!("  no counterexamples");
        } else {
            for cx in &report.counterexamples {
                println!("  COUNTEREXAMPLE {cx}");
            }
        }
    }
}
