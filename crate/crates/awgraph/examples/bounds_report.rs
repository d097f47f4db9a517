//! Prints every bound rule that fires for a graph, the best bracket they
//! give, and the exact value when one of them pins it down. None of the
//! rules run the search engine, except cycle lengths whose prime
//! classification is not already in the bundled table.
//!
//!     cargo run --example bounds_report -- [family [k]]

use std::env;

use awgraph::formulas::{bound_report, BoundContext, PrimeCache};
use awgraph::generators::{generate, FamilySpec};
use awgraph::solver::SearchConfig;

fn main() {
    let args: Vec<String> = env::args().skip(1).collect();
    let family = args.first().map(String::as_str).unwrap_or("cycle:18");
    let k: usize = args
        .get(1)
        .map(|s| s.parse().expect("k must be an integer"))
        .unwrap_or(3);

    let spec = FamilySpec::parse(family).expect("family spec");
    let g = generate(&spec).expect("family generates");
    let primes = PrimeCache::bundled();
    let ctx = BoundContext::default()
        .with_family(&spec)
        .with_primes(&primes);
    let report = bound_report(&g, k, &ctx, &SearchConfig::default()).expect("connected graph");

    println!("bounds on aw({family},{k}):");
    for e in &report.lower {
        println!("  lower {:>2}   {}", e.value, e.rule);
    }
    for e in &report.upper {
        println!("  upper {:>2}   {}", e.value, e.rule);
    }
    match report.best_upper() {
        Some(hi) => println!(
            "bracket from the bounds: {} <= aw <= {hi}",
            report.best_lower()
        ),
        None => println!("bracket from the bounds: {} <= aw", report.best_lower()),
    }
    match &report.exact {
        Some(e) => println!("exact value {} ({})", e.value, e.rule),
        None => println!("no rule pins down the exact value"),
    }
}
