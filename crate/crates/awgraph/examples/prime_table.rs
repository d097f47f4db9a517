//! Regenerates the cycle prime classification table bundled with the crate.
//!
//! Every odd prime below 50 is classified by the exact search: aw(C_p,3) is
//! 3 or 4, and the value feeds the closed form for aw(C_n,3) through the
//! prime factorization of n. The table is printed to stdout; pass --write to
//! replace data/cycle_prime_aw3.txt in the source tree.
//!
//!     cargo run --release --example prime_table -- --write

use std::env;
use std::fs;
use std::path::Path;
use std::time::Instant;

use awgraph::formulas::{is_prime, PrimeCache};
use awgraph::solver::SearchConfig;

fn main() {
    let write = env::args().any(|a| a == "--write");
    let cache = PrimeCache::empty();
    let cfg = SearchConfig::default();
    for p in (3..50u64).step_by(2).filter(|&p| is_prime(p)) {
        let start = Instant::now();
        let v = cache
            .classify(p, &cfg)
            .expect("classification stays within the node budget");
        eprintln!("aw(C_{p},3) = {v}   [{} ms]", start.elapsed().as_millis());
    }
    let table = cache.to_table_string();
    print!("{table}");
    if write {
        let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/cycle_prime_aw3.txt");
        fs::write(&path, table).expect("table file is writable");
        eprintln!("wrote {}", path.display());
    }
}
