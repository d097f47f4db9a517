//! Runs the verification suites: each replays one published claim family
//! against exhaustive corpora and the exact search, and reports pass/fail
//! per claim. The full corpora take minutes; by default this example runs a
//! reduced sweep, pass --full for the real thing (use --release).
//!
//!     cargo run --release --example verify_suite -- [--full] [suite]

use std::env;

use awgraph::verify::{run_all, run_suite, VerifyOptions, SUITES};

fn main() {
    let args: Vec<String> = env::args().skip(1).collect();
    let full = args.iter().any(|a| a == "--full");
    let chosen: Vec<&str> = args
        .iter()
        .filter(|a| !a.starts_with("--"))
        .map(String::as_str)
        .collect();

    let mut opts = VerifyOptions::default();
    if !full {
        opts.nmax = 4;
        opts.tree_nmax = 6;
        opts.brute_nmax = 4;
        opts.oracle_nmax = 5;
    }

    let reports = if chosen.is_empty() {
        run_all(&opts).expect("corpus limits respected")
    } else {
        chosen
            .iter()
            .map(|name| run_suite(name, &opts).expect("known suite within corpus limits"))
            .collect()
    };

    let mut failed = 0usize;
    for report in &reports {
        println!("suite: {}", report.suite);
        for c in &report.claims {
            let status = if c.pass { "PASS" } else { "FAIL" };
            println!("  {status} {}: {}", c.id, c.detail);
            if !c.pass {
                failed += 1;
            }
        }
    }
    if failed == 0 {
        println!("ok: every claim verified across {} suite(s)", reports.len());
    } else {
        println!("FAILED: {failed} claim(s)");
        std::process::exit(1);
    }
    if chosen.is_empty() && !full {
        println!("(reduced corpora; suites available: {})", SUITES.join(", "));
    }
}
