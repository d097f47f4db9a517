//! Acceptance gate: one test per headline capability, each replaying a
//! verification suite at its full corpus size and enforcing a wall-clock
//! budget. Every test prints a single PASS/FAIL line (visible under
//! `--nocapture`); the harness result line carries the same verdict.

use std::time::{Duration, Instant};

use awgraph::verify::{run_suite, VerifyOptions};

/// Runs `suite` with the default (full-size) corpora and asserts that every
/// claim passes and the run fits in `cap`. `cap = None` means no time budget.
fn gate(label: &str, suite: &str, cap: Option<Duration>) {
    let opts = VerifyOptions::default();
    let start = Instant::now();
    let report = run_suite(suite, &opts).expect("suite should run to completion");
    let elapsed = start.elapsed();

    let ok = report.pass() && cap.is_none_or(|c| elapsed <= c);
    let budget = match cap {
        Some(c) => format!("budget {:.0} s", c.as_secs_f64()),
        None => "no budget".to_string(),
    };
    println!(
        "{}: {} ({} claims, {:.2} s, {budget})",
        label,
        if ok { "PASS" } else { "FAIL" },
        report.claims.len(),
        elapsed.as_secs_f64(),
    );

    let mut failures = Vec::new();
    for claim in &report.claims {
        if !claim.pass {
            failures.push(format!("  claim {} failed: {}", claim.id, claim.detail));
        }
    }
    if let Some(c) = cap {
        if elapsed > c {
            failures.push(format!(
                "  ran {:.2} s, over the {:.0} s budget",
                elapsed.as_secs_f64(),
                c.as_secs_f64()
            ));
        }
    }
    assert!(ok, "{label}\n{}", failures.join("\n"));
}

const fn secs(s: u64) -> Option<Duration> {
    Some(Duration::from_secs(s))
}

#[test]
fn gate_01_path_values_match_closed_form() {
    gate("01 paths n=3..27", "paths", secs(120));
}

#[test]
fn gate_02_cycle_values_and_prime_classes() {
    gate("02 cycles n=3..24, primes to 23", "cycles", secs(300));
}

#[test]
fn gate_03_hypercube_values_and_unique_extremal() {
    gate("03 hypercubes Q2 Q3 Q4", "hypercube", secs(60));
}

#[test]
fn gate_04_binary_tree_values_and_certificates() {
    gate("04 binary trees", "binary-trees", secs(60));
}

#[test]
fn gate_05_star_values() {
    gate("05 stars n<=7, k=4..n+1", "stars", secs(60));
}

#[test]
fn gate_06_balanced_bipartite_values() {
    gate("06 complete bipartite K44 K55", "bipartite", secs(300));
}

#[test]
fn gate_07_diameter_two_sweep() {
    gate("07 diameter-2 graphs n<=6", "diameter-two", secs(600));
}

#[test]
fn gate_08_radius_and_tree_bounds() {
    gate(
        "08 bound rules, graphs n<=6 and trees n<=9",
        "bounds",
        secs(600),
    );
}

#[test]
fn gate_09_product_bounds() {
    gate("09 cartesian products", "products", secs(600));
}

#[test]
fn gate_10_dominating_vertex_sweep() {
    gate(
        "10 dominating-vertex apexes over n<=6",
        "dominating",
        secs(900),
    );
}

#[test]
fn gate_11_cross_check_properties() {
    gate("11 cross-checks and invariances", "properties", None);
}
