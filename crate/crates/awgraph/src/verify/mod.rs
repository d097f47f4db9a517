//! Verification suites. Each suite replays a set of published statements
//! about anti-van der Waerden numbers (closed-form family values, structural
//! bounds, extremal colorings) on a concrete corpus and reports one claim
//! per statement: the statement text, a pass/fail flag, and a detail line
//! recording what was swept and any violations found.
//!
//! Suites are deterministic. Corpora are enumerated in a fixed order, random
//! cases use a fixed seed, and parallel sweeps reduce to order-independent
//! aggregates (violation lists are sorted before reporting), so two runs at
//! any thread count produce identical reports.

pub mod oracle;

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::ap::{enumerate_k_aps, find_rainbow_k_ap};
use crate::coloring::Coloring;
use crate::colorings::{
    binary_tree_coloring, bipartite_split_coloring, hypercube_extremal_coloring,
    odd_diameter_tree_coloring, star_coloring,
};
use crate::error::{Error, Result};
use crate::formulas::{aw_cyclic_3, aw_interval_3, bound_report, BoundContext, PrimeCache};
use crate::generators::{
    automorphism_generators, cartesian_product, edge_mask_total, generate, graph_from_edge_mask,
    labeled_tree_count, tree_from_index, FamilySpec,
};
use crate::graph::{distance_matrix, distance_profile, Graph};
use crate::solver::{aw, enumerate_extremal, EnumOptions, SearchConfig};
use crate::tree::{tree_canonical_key, tree_facts};

/// One verified statement: `cite` is the statement itself, `detail` records
/// the corpus swept and, on failure, the first violations found.
#[derive(Debug, Clone, Serialize)]
pub struct Claim {
    pub id: String,
    pub cite: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub claims: Vec<Claim>,
}

impl SuiteReport {
    pub fn pass(&self) -> bool {
        self.claims.iter().all(|c| c.pass)
    }
}

/// Corpus sizes and search budget for the suites. `nmax` caps the labeled
/// graph sweeps (at most 7), `tree_nmax` the tree sweeps (at most 10),
/// `brute_nmax` the solver-versus-brute-force sweep (at most 6), and
/// `oracle_nmax` the progression-enumerator cross-check (at most 7).
#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub nmax: usize,
    pub tree_nmax: usize,
    pub brute_nmax: usize,
    pub oracle_nmax: usize,
    pub config: SearchConfig,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            nmax: 6,
            tree_nmax: 9,
            brute_nmax: 5,
            oracle_nmax: 7,
            config: SearchConfig::default(),
        }
    }
}

pub const SUITES: &[&str] = &[
    "paths",
    "cycles",
    "hypercube",
    "binary-trees",
    "stars",
    "bipartite",
    "diameter-two",
    "bounds",
    "products",
    "dominating",
    "properties",
];

pub fn run_suite(name: &str, opts: &VerifyOptions) -> Result<SuiteReport> {
    if opts.nmax > 7 {
        return Err(Error::CorpusTooLarge(opts.nmax, 7));
    }
    if opts.tree_nmax > 10 {
        return Err(Error::CorpusTooLarge(opts.tree_nmax, 10));
    }
    if opts.brute_nmax > 6 {
        return Err(Error::CorpusTooLarge(opts.brute_nmax, 6));
    }
    if opts.oracle_nmax > 7 {
        return Err(Error::CorpusTooLarge(opts.oracle_nmax, 7));
    }
    let claims = match name {
        "paths" => verify_paths(opts),
        "cycles" => verify_cycles(opts),
        "hypercube" => verify_hypercube(opts),
        "binary-trees" => verify_binary_trees(opts),
        "stars" => verify_stars(opts),
        "bipartite" => verify_bipartite(opts),
        "diameter-two" => verify_diameter_two(opts),
        "bounds" => verify_bounds(opts),
        "products" => verify_products(opts),
        "dominating" => verify_dominating(opts),
        "properties" => verify_properties(opts),
        other => {
            return Err(Error::Unsupported(format!(
                "unknown suite {other:?}; expected one of: {}",
                SUITES.join(", ")
            )))
        }
    };
    Ok(SuiteReport {
        suite: name.to_string(),
        claims,
    })
}

pub fn run_all(opts: &VerifyOptions) -> Result<Vec<SuiteReport>> {
    SUITES.iter().map(|s| run_suite(s, opts)).collect()
}

fn claim(id: &str, cite: &str, checked: String, mut violations: Vec<String>) -> Claim {
    violations.sort();
    let pass = violations.is_empty();
    let detail = if pass {
        checked
    } else {
        let shown: Vec<String> = violations.iter().take(3).cloned().collect();
        let more = violations.len() - shown.len();
        let suffix = if more > 0 {
            format!(" (+{more} more)")
        } else {
            String::new()
        };
        format!(
            "{checked}; {} violation(s): {}{suffix}",
            violations.len(),
            shown.join("; ")
        )
    };
    Claim {
        id: id.into(),
        cite: cite.into(),
        pass,
        detail,
    }
}

fn fam(s: &str) -> Graph {
    generate(&FamilySpec::parse(s).expect("valid family spec")).expect("valid family")
}

fn solve(
    g: &Graph,
    k: usize,
    cfg: &SearchConfig,
    label: &str,
    out: &mut Vec<String>,
) -> Option<u32> {
    match aw(g, k, cfg) {
        Ok(res) => Some(res.aw),
        Err(e) => {
            out.push(format!("{label}: solver failed: {e}"));
            None
        }
    }
}

fn merge_tallies(mut a: (u64, Vec<String>), b: (u64, Vec<String>)) -> (u64, Vec<String>) {
    a.0 += b.0;
    a.1.extend(b.1);
    a
}

// ---------------------------------------------------------------------------
// Family value suites
// ---------------------------------------------------------------------------

fn verify_paths(opts: &VerifyOptions) -> Vec<Claim> {
    let cfg = &opts.config;
    let mut mismatches = Vec::new();
    let mut values: BTreeMap<u64, u32> = BTreeMap::new();
    for n in 3..=27u64 {
        let g = fam(&format!("path:{n}"));
        let solver = solve(&g, 3, cfg, &format!("P_{n}"), &mut mismatches);
        let formula = aw_interval_3(n).expect("n >= 1");
        if let Some(s) = solver {
            values.insert(n, s);
            if s != formula {
                mismatches.push(format!("P_{n}: solver {s}, closed form {formula}"));
            }
        }
    }

    let mut dips = Vec::new();
    for p in [9u64, 27] {
        match (values.get(&(p - 1)), values.get(&p)) {
            (Some(&before), Some(&at)) => {
                if at + 1 != before {
                    dips.push(format!("P_{p}: value {at} next to {before} at n={}", p - 1));
                }
            }
            _ => dips.push(format!("P_{p}: missing solver value")),
        }
    }
    if values.get(&3) != Some(&3) {
        dips.push(format!("P_3: expected aw 3, got {:?}", values.get(&3)));
    }

    vec![
        claim(
            "path-closed-form",
            "aw(P_n,3) = m+2 when n = 3^m, otherwise m+3 where m is least with n <= 21*3^(m-2)",
            format!(
                "solver agreed with the closed form on all {} path lengths n = 3..=27",
                values.len()
            ),
            mismatches,
        ),
        claim(
            "path-power-of-three-dip",
            "aw(P_n,3) drops by one exactly at the powers of three",
            "aw dips at n = 9 and n = 27; n = 3 = 3^1 sits below the first interval with aw(P_3,3) = 3"
                .to_string(),
            dips,
        ),
    ]
}

fn verify_cycles(opts: &VerifyOptions) -> Vec<Claim> {
    let cfg = &opts.config;
    // An empty cache forces the suite to classify every prime factor with the
    // search engine instead of trusting the bundled table.
    let primes = PrimeCache::empty();
    let mut mismatches = Vec::new();
    let mut path_cmp = Vec::new();
    let mut checked = 0u64;
    for n in 3..=24u64 {
        let g = fam(&format!("cycle:{n}"));
        let solver = match solve(&g, 3, cfg, &format!("C_{n}"), &mut mismatches) {
            Some(s) => s,
            None => continue,
        };
        checked += 1;
        match aw_cyclic_3(n, &primes, cfg) {
            Ok(f) if f == solver => {}
            Ok(f) => mismatches.push(format!("C_{n}: solver {solver}, closed form {f}")),
            Err(e) => mismatches.push(format!("C_{n}: closed form failed: {e}")),
        }
        let path = aw_interval_3(n).expect("n >= 1");
        if solver > path {
            path_cmp.push(format!("C_{n}: {solver} exceeds aw(P_{n},3) = {path}"));
        }
    }

    // Only the bound "class 4 implies p >= 17" is a stated fact; the classes
    // themselves are search results, so assert the bound and the values that
    // it forces (every prime below 17 is class 3) and report the rest.
    let mut class_viol = Vec::new();
    let mut classified = Vec::new();
    for p in [3u64, 5, 7, 11, 13, 17, 19, 23] {
        match primes.lookup(p) {
            Some(v @ 3) | Some(v @ 4) => classified.push(format!("{p}:{v}")),
            got => class_viol.push(format!("p={p}: classified {got:?}, expected 3 or 4")),
        }
    }
    for (p, v) in primes.snapshot() {
        if v == 4 && p < 17 {
            class_viol.push(format!("p={p}: class 4 below 17"));
        }
    }
    if primes.lookup(17) != Some(4) {
        class_viol.push("p=17: expected the first class-4 prime".to_string());
    }

    vec![
        claim(
            "cycle-closed-form",
            "aw(C_n,3) = 3 [n even] or 2 [n odd], plus e for every odd prime factor p^e with aw(C_p,3) = 3 and 2e for those with aw(C_p,3) = 4",
            format!("solver agreed with the factorization formula on all {checked} cycle lengths n = 3..=24"),
            mismatches,
        ),
        claim(
            "cycle-at-most-path",
            "aw(C_n,3) <= aw(P_n,3)",
            format!("held on all {checked} cycle lengths n = 3..=24"),
            path_cmp,
        ),
        claim(
            "cycle-prime-classes",
            "aw(C_p,3) is 3 or 4 for every odd prime p, and any prime of class 4 satisfies p >= 17",
            format!("search classified p:class {}", classified.join(", ")),
            class_viol,
        ),
    ]
}

fn verify_hypercube(opts: &VerifyOptions) -> Vec<Claim> {
    let cfg = &opts.config;
    let mut claims = Vec::new();

    let mut value_viol = Vec::new();
    let mut seen = Vec::new();
    for (dim, want) in [(2usize, 3u32), (3, 4), (4, 3)] {
        let g = fam(&format!("hypercube:{dim}"));
        if let Some(s) = solve(&g, 3, cfg, &format!("Q_{dim}"), &mut value_viol) {
            if s == want {
                seen.push(format!("aw(Q_{dim},3) = {s}"));
            } else {
                value_viol.push(format!("Q_{dim}: solver {s}, expected {want}"));
            }
        }
    }
    claims.push(claim(
        "hypercube-parity-values",
        "aw(Q_n,3) = 3 for even n >= 2 and 4 for odd n",
        seen.join(", "),
        value_viol,
    ));

    let mut uniq_viol = Vec::new();
    let spec = FamilySpec::parse("hypercube:3").expect("valid family spec");
    let g3 = generate(&spec).expect("valid family");
    let dm3 = distance_matrix(&g3);
    let idx3 = enumerate_k_aps(&g3, &dm3, 3).expect("k >= 2");
    let opts3 = EnumOptions::quotient(automorphism_generators(&spec), cfg.node_budget);
    let mut class_count = 0usize;
    match enumerate_extremal(&g3, &idx3, 3, &opts3) {
        Ok(reps) => {
            class_count = reps.len();
            if reps.len() != 1 {
                uniq_viol.push(format!(
                    "expected exactly 1 orbit class, found {}",
                    reps.len()
                ));
            }
            for c in &reps {
                let classes = c.classes();
                let mut sizes: Vec<usize> = classes.iter().map(Vec::len).collect();
                sizes.sort_unstable();
                if sizes != vec![1, 1, 6] {
                    uniq_viol.push(format!("color class sizes {sizes:?}, expected [1, 1, 6]"));
                    continue;
                }
                let singles: Vec<usize> = classes
                    .iter()
                    .filter(|cl| cl.len() == 1)
                    .map(|cl| cl[0])
                    .collect();
                if singles[0] ^ singles[1] != 0b111 {
                    uniq_viol.push(format!(
                        "singleton classes at {} and {} are not antipodal",
                        singles[0], singles[1]
                    ));
                }
            }
        }
        Err(e) => uniq_viol.push(format!("enumeration failed: {e}")),
    }
    claims.push(claim(
        "odd-hypercube-extremal-unique",
        "for odd n, every rainbow-free exact 3-coloring of Q_n gives one vertex and its antipode their own colors; it is unique up to symmetry",
        format!(
            "{class_count} orbit class of rainbow-free exact 3-colorings of Q_3 under color permutations and cube symmetries; the class isolates an antipodal pair"
        ),
        uniq_viol,
    ));

    let mut even_viol = Vec::new();
    let g4 = fam("hypercube:4");
    let dm4 = distance_matrix(&g4);
    let idx4 = enumerate_k_aps(&g4, &dm4, 3).expect("k >= 2");
    let mut colors = vec![3u32; 16];
    colors[0] = 1;
    colors[15] = 2;
    let c4 = Coloring::new(colors, 3).expect("valid coloring");
    match find_rainbow_k_ap(&idx4, &c4) {
        Some(ap) => {
            let verts = ap.vertices();
            let middle: Vec<usize> = verts
                .iter()
                .copied()
                .filter(|&v| v != 0 && v != 15)
                .collect();
            if !verts.contains(&0) || !verts.contains(&15) || middle.len() != 1 {
                even_viol.push(format!("unexpected rainbow witness {verts:?}"));
            } else if middle[0].count_ones() != 2 {
                even_viol.push(format!(
                    "middle vertex {} is not on the middle layer",
                    middle[0]
                ));
            }
        }
        None => even_viol.push("antipodal 3-coloring of Q_4 is rainbow-free".to_string()),
    }
    if hypercube_extremal_coloring(4).is_ok() {
        even_viol.push("three-class construction accepted an even dimension".to_string());
    }
    claims.push(claim(
        "even-hypercube-antipodal-refusal",
        "for even n, coloring the two antipodes of Q_n with unique colors leaves a rainbow progression 0^n, x, 1^n with |x| = n/2",
        "the antipodal 3-coloring of Q_4 has a rainbow 3-AP through the middle layer, so the odd-dimension construction cannot extend".to_string(),
        even_viol,
    ));

    let mut cert_viol = Vec::new();
    for dim in [3usize, 5] {
        match hypercube_extremal_coloring(dim) {
            Ok((_, c)) => {
                if c.r() != 3 {
                    cert_viol.push(format!("dim {dim}: coloring uses {} colors", c.r()));
                }
            }
            Err(e) => cert_viol.push(format!("dim {dim}: construction failed: {e}")),
        }
    }
    claims.push(claim(
        "odd-hypercube-lower-certificates",
        "for odd n >= 3, the coloring isolating one vertex and its antipode is rainbow-free, so aw(Q_n,3) >= 4",
        "certified rainbow-free exact 3-colorings of Q_3 and Q_5 without solving".to_string(),
        cert_viol,
    ));

    claims
}

fn verify_binary_trees(opts: &VerifyOptions) -> Vec<Claim> {
    let cfg = &opts.config;
    let mut value_viol = Vec::new();
    let mut seen = Vec::new();
    for (h, want) in [(0usize, 2u32), (1, 3), (2, 4), (3, 4)] {
        let g = fam(&format!("btree:{h}"));
        if let Some(s) = solve(&g, 3, cfg, &format!("B_{h}"), &mut value_viol) {
            if s == want {
                seen.push(format!("aw(B_{h},3) = {s}"));
            } else {
                value_viol.push(format!("B_{h}: solver {s}, expected {want}"));
            }
        }
    }

    let mut cert_viol = Vec::new();
    let mut certified = Vec::new();
    for h in 2..=6usize {
        match binary_tree_coloring(h) {
            Ok((_, c)) => {
                if c.r() == 3 {
                    certified.push(h.to_string());
                } else {
                    cert_viol.push(format!("height {h}: coloring uses {} colors", c.r()));
                }
            }
            Err(e) => cert_viol.push(format!("height {h}: construction failed: {e}")),
        }
    }

    vec![
        claim(
            "binary-tree-values",
            "aw(B_0,3) = 2, aw(B_1,3) = 3, and aw(B_h,3) = 4 for every h >= 2",
            seen.join(", "),
            value_viol,
        ),
        claim(
            "binary-tree-lower-certificates",
            "complete binary trees of height >= 2 admit a rainbow-free exact 3-coloring, so aw(B_h,3) >= 4",
            format!(
                "certified rainbow-free 3-colorings at heights {}",
                certified.join(", ")
            ),
            cert_viol,
        ),
    ]
}

fn verify_stars(opts: &VerifyOptions) -> Vec<Claim> {
    let cfg = &opts.config;
    let mut value_viol = Vec::new();
    let mut cert_viol = Vec::new();
    let mut checked = 0u64;
    for leaves in 3..=7usize {
        let g = fam(&format!("star:{leaves}"));
        for k in 4..=leaves + 1 {
            checked += 1;
            let label = format!("K_(1,{leaves}) k={k}");
            if let Some(s) = solve(&g, k, cfg, &label, &mut value_viol) {
                if s != k as u32 + 1 {
                    value_viol.push(format!("{label}: solver {s}, expected {}", k + 1));
                }
            }
            match star_coloring(leaves, k) {
                Ok((_, c)) => {
                    if c.r() != k as u32 {
                        cert_viol.push(format!("{label}: coloring uses {} colors", c.r()));
                    }
                }
                Err(e) => cert_viol.push(format!("{label}: construction failed: {e}")),
            }
        }
    }

    vec![
        claim(
            "star-values",
            "aw(K_(1,n),k) = k+1 for 4 <= k <= n+1",
            format!("solver returned k+1 on all {checked} cases with 3 <= n <= 7 leaves"),
            value_viol,
        ),
        claim(
            "star-lower-certificates",
            "coloring the center 1 and leaf i with min(i+1,k) is exact in k colors and rainbow-free, so aw(K_(1,n),k) >= k+1",
            format!("certified all {checked} cases"),
            cert_viol,
        ),
    ]
}

fn verify_bipartite(opts: &VerifyOptions) -> Vec<Claim> {
    let cfg = &opts.config;
    let mut value_viol = Vec::new();
    let mut cert_viol = Vec::new();
    let mut seen = Vec::new();
    for (m, n, k, want) in [(4usize, 4usize, 4usize, 5u32), (5, 5, 5, 6)] {
        let g = fam(&format!("kbipartite:{m},{n}"));
        let label = format!("K_({m},{n}) k={k}");
        if let Some(s) = solve(&g, k, cfg, &label, &mut value_viol) {
            if s == want {
                seen.push(format!("aw(K_({m},{n}),{k}) = {s}"));
            } else {
                value_viol.push(format!("{label}: solver {s}, expected {want}"));
            }
        }
        match bipartite_split_coloring(m, n, k) {
            Ok((_, c)) => {
                if c.r() + 1 != want {
                    cert_viol.push(format!(
                        "{label}: split coloring uses {} colors, expected {}",
                        c.r(),
                        want - 1
                    ));
                }
            }
            Err(e) => cert_viol.push(format!("{label}: construction failed: {e}")),
        }
    }

    vec![
        claim(
            "bipartite-values",
            "aw(K_(m,n),k) = k + floor(k/2) - 1 for m, n >= k",
            seen.join(", "),
            value_viol,
        ),
        claim(
            "bipartite-split-certificates",
            "splitting floor(k/2)-1 colors across one side and the remaining k-1 across the other is rainbow-free and exact in k+floor(k/2)-2 colors",
            "certified the lower bound for K_(4,4) at k=4 and K_(5,5) at k=5".to_string(),
            cert_viol,
        ),
    ]
}

// ---------------------------------------------------------------------------
// Corpus sweep suites
// ---------------------------------------------------------------------------

fn verify_diameter_two(opts: &VerifyOptions) -> Vec<Claim> {
    let cfg = &opts.config;
    let mut total = 0u64;
    let mut viol3 = Vec::new();
    let mut viol4 = Vec::new();
    let mut per_n = Vec::new();
    for n in 3..=opts.nmax {
        let (count, (v3, v4)) = (0..edge_mask_total(n))
            .into_par_iter()
            .map(|mask| {
                let g = graph_from_edge_mask(n, mask);
                if !g.is_connected() {
                    return (0u64, (Vec::new(), Vec::new()));
                }
                let dm = distance_matrix(&g);
                let prof = distance_profile(&g, &dm).expect("connected");
                if prof.diameter != 2 {
                    return (0, (Vec::new(), Vec::new()));
                }
                let label = format!("n={n} mask={mask}");
                let mut v3 = Vec::new();
                let mut v4 = Vec::new();
                match solve(&g, 3, cfg, &label, &mut v3) {
                    Some(3) | None => {}
                    Some(s) => v3.push(format!("{label}: aw3 = {s}")),
                }
                match solve(&g, 4, cfg, &label, &mut v4) {
                    Some(s) if s > 5 => v4.push(format!("{label}: aw4 = {s}")),
                    _ => {}
                }
                (1, (v3, v4))
            })
            .reduce(
                || (0, (Vec::new(), Vec::new())),
                |mut a, b| {
                    a.0 += b.0;
                    a.1 .0.extend(b.1 .0);
                    a.1 .1.extend(b.1 .1);
                    a
                },
            );
        total += count;
        per_n.push(format!("n={n}: {count}"));
        viol3.extend(v3);
        viol4.extend(v4);
    }
    let swept = format!(
        "swept {total} labeled connected diameter-2 graphs on 3..={} vertices ({})",
        opts.nmax,
        per_n.join(", ")
    );

    vec![
        claim(
            "diameter-two-k3",
            "every connected graph of diameter 2 has aw(G,3) = 3",
            swept.clone(),
            viol3,
        ),
        claim(
            "diameter-two-k4",
            "every connected graph of diameter 2 has aw(G,k) <= k + floor(k/2) - 1; at k = 4 the bound is 5",
            swept,
            viol4,
        ),
    ]
}

/// One representative labeled tree per isomorphism class, keyed by the
/// canonical form and tagged with its index in the labeled enumeration.
/// Sweeping representatives is sound for label-invariant statements;
/// invariance itself is checked in the properties suite.
pub fn tree_class_representatives(n: usize) -> Vec<(u64, Graph)> {
    let total = labeled_tree_count(n);
    let chunk = 1u64 << 14;
    let chunks = total.div_ceil(chunk);
    let classes: BTreeMap<Vec<u8>, u64> = (0..chunks)
        .into_par_iter()
        .map(|ci| {
            let mut local: BTreeMap<Vec<u8>, u64> = BTreeMap::new();
            let start = ci * chunk;
            for index in start..(start + chunk).min(total) {
                let t = tree_from_index(n, index);
                let key = tree_canonical_key(&t).expect("decoded trees are trees");
                local.entry(key).or_insert(index);
            }
            local
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (key, index) in b {
                a.entry(key)
                    .and_modify(|cur| *cur = (*cur).min(index))
                    .or_insert(index);
            }
            a
        });
    classes
        .into_values()
        .map(|index| (index, tree_from_index(n, index)))
        .collect()
}

fn verify_bounds(opts: &VerifyOptions) -> Vec<Claim> {
    let cfg = &opts.config;

    // Labeled connected sweep: every rule the report emits must bracket the
    // solver value, and the explicit radius rule is recomputed from scratch.
    let mut graphs = 0u64;
    let mut rule_viol = Vec::new();
    let mut radius_viol = Vec::new();
    for n in 1..=opts.nmax {
        let (count, (rv, dv)) = (0..edge_mask_total(n))
            .into_par_iter()
            .map(|mask| {
                let g = graph_from_edge_mask(n, mask);
                if !g.is_connected() {
                    return (0u64, (Vec::new(), Vec::new()));
                }
                let label = format!("n={n} mask={mask}");
                let mut rv = Vec::new();
                let mut dv = Vec::new();
                let awv = match solve(&g, 3, cfg, &label, &mut rv) {
                    Some(s) => s,
                    None => return (1, (rv, dv)),
                };
                match bound_report(&g, 3, &BoundContext::default(), cfg) {
                    Ok(report) => {
                        if !report.is_consistent() {
                            rv.push(format!("{label}: inconsistent report"));
                        }
                        for e in &report.lower {
                            if e.value > awv {
                                rv.push(format!(
                                    "{label}: lower rule {} gives {} above aw {awv}",
                                    e.rule, e.value
                                ));
                            }
                        }
                        for e in &report.upper {
                            if e.value < awv {
                                rv.push(format!(
                                    "{label}: upper rule {} gives {} below aw {awv}",
                                    e.rule, e.value
                                ));
                            }
                        }
                        if let Some(e) = &report.exact {
                            if e.value != awv {
                                rv.push(format!(
                                    "{label}: exact rule {} gives {} but aw is {awv}",
                                    e.rule, e.value
                                ));
                            }
                        }
                    }
                    Err(e) => rv.push(format!("{label}: report failed: {e}")),
                }
                let dm = distance_matrix(&g);
                let prof = distance_profile(&g, &dm).expect("connected");
                let bound = if prof.radius <= 2 {
                    prof.radius + 2
                } else {
                    prof.radius + 1
                };
                if awv > bound {
                    dv.push(format!(
                        "{label}: aw {awv} exceeds radius bound {bound} (rad {})",
                        prof.radius
                    ));
                }
                (1, (rv, dv))
            })
            .reduce(
                || (0, (Vec::new(), Vec::new())),
                |mut a, b| {
                    a.0 += b.0;
                    a.1 .0.extend(b.1 .0);
                    a.1 .1.extend(b.1 .1);
                    a
                },
            );
        graphs += count;
        rule_viol.extend(rv);
        radius_viol.extend(dv);
    }

    // Tree sweep over isomorphism class representatives.
    let mut labeled = 0u64;
    let mut reps = Vec::new();
    for n in 2..=opts.tree_nmax {
        labeled += labeled_tree_count(n);
        for (index, t) in tree_class_representatives(n) {
            reps.push((n, index, t));
        }
    }
    let (diam_viol, (log_viol, odd_viol)) = reps
        .par_iter()
        .map(|(n, index, t)| {
            let label = format!("tree n={n} index={index}");
            let mut diam_v = Vec::new();
            let mut log_v = Vec::new();
            let mut odd_v = Vec::new();
            let awv = match solve(t, 3, cfg, &label, &mut diam_v) {
                Some(s) => s,
                None => return (diam_v, (log_v, odd_v)),
            };
            match bound_report(t, 3, &BoundContext::default(), cfg) {
                Ok(report) => {
                    for (rule, out) in [
                        ("tree-diameter", &mut diam_v),
                        ("bijacent-count", &mut log_v),
                    ] {
                        match report.upper.iter().find(|e| e.rule == rule) {
                            Some(e) if e.value >= awv => {}
                            Some(e) => out
                                .push(format!("{label}: {rule} bound {} below aw {awv}", e.value)),
                            None => out.push(format!("{label}: {rule} rule missing")),
                        }
                    }
                }
                Err(e) => diam_v.push(format!("{label}: report failed: {e}")),
            }
            let facts = tree_facts(t);
            if facts.diameter >= 3 && facts.diameter % 2 == 1 {
                if awv < 4 {
                    odd_v.push(format!("{label}: odd diameter but aw {awv} < 4"));
                }
                if let Err(e) = odd_diameter_tree_coloring(t) {
                    odd_v.push(format!("{label}: three-color construction failed: {e}"));
                }
                if facts.bijacent.is_empty() && awv != 4 {
                    odd_v.push(format!("{label}: no bijacent vertices but aw {awv} != 4"));
                }
            }
            (diam_v, (log_v, odd_v))
        })
        .reduce(
            || (Vec::new(), (Vec::new(), Vec::new())),
            |mut a, b| {
                a.0.extend(b.0);
                a.1 .0.extend(b.1 .0);
                a.1 .1.extend(b.1 .1);
                a
            },
        );
    let tree_swept = format!(
        "swept {} isomorphism classes of trees on 2..={} vertices (from {labeled} labeled trees)",
        reps.len(),
        opts.tree_nmax
    );

    vec![
        claim(
            "bound-rule-soundness",
            "every reported lower bound is at most aw, every upper bound at least aw, and a reported exact value equals aw",
            format!(
                "audited reports against the solver on {graphs} labeled connected graphs with 1..={} vertices",
                opts.nmax
            ),
            rule_viol,
        ),
        claim(
            "radius-bound",
            "a connected graph has aw(G,3) <= rad(G) + 2 when rad(G) <= 2 and aw(G,3) <= rad(G) + 1 when rad(G) >= 3",
            format!(
                "recomputed from eccentricities on {graphs} labeled connected graphs with 1..={} vertices",
                opts.nmax
            ),
            radius_viol,
        ),
        claim(
            "tree-diameter-bound",
            "a tree with diameter d has aw(T,3) <= aw(P_(d+1),3), plus one more when d is a power of three",
            tree_swept.clone(),
            diam_viol,
        ),
        claim(
            "tree-bijacent-log-bound",
            "a tree with l bijacent vertices has aw(T,3) <= 4 when l = 0 and aw(T,3) <= floor(log2(l)) + 4 otherwise",
            tree_swept.clone(),
            log_viol,
        ),
        claim(
            "tree-odd-diameter",
            "a tree with odd diameter d >= 3 has aw(T,3) >= 4, with equality when no vertex is bijacent",
            tree_swept,
            odd_viol,
        ),
    ]
}

fn verify_products(opts: &VerifyOptions) -> Vec<Claim> {
    let cfg = &opts.config;
    let mut factors: Vec<(String, Graph)> = Vec::new();
    for n in 1..=4usize {
        for mask in 0..edge_mask_total(n) {
            let g = graph_from_edge_mask(n, mask);
            if g.is_connected() {
                factors.push((format!("n={n},mask={mask}"), g));
            }
        }
    }
    let pairs: Vec<(usize, usize)> = (0..factors.len())
        .flat_map(|i| (i..factors.len()).map(move |j| (i, j)))
        .collect();
    let (count, bound_viol) = pairs
        .par_iter()
        .map(|&(i, j)| {
            let prod = cartesian_product(&factors[i].1, &factors[j].1).expect("nonempty factors");
            let label = format!("({}) x ({})", factors[i].0, factors[j].0);
            let mut v = Vec::new();
            if let Some(s) = solve(&prod, 3, cfg, &label, &mut v) {
                if s > 4 {
                    v.push(format!("{label}: aw = {s}"));
                }
            }
            (1u64, v)
        })
        .reduce(|| (0, Vec::new()), merge_tallies);

    let mut claims = vec![claim(
        "product-upper-bound",
        "the Cartesian product of two connected graphs on at least 2 vertices has aw(G x H, 3) <= 4",
        format!(
            "solved all {count} unordered products of the {} connected labeled graphs on up to 4 vertices (single-vertex factors included; those products collapse to the other factor)",
            factors.len()
        ),
        bound_viol,
    )];

    // Color spread across factor copies, exhaustively on two small products.
    // Vertex (u, j) of A x B is numbered j*|A| + u, so copy j of A is a
    // consecutive block and copy u of B is a stride-|A| slice.
    let mut spread_viol = Vec::new();
    let mut counts = Vec::new();
    for (a_spec, b_spec) in [("path:3", "path:3"), ("path:2", "path:4")] {
        let ga = fam(a_spec);
        let gb = fam(b_spec);
        let (an, bn) = (ga.n(), gb.n());
        let label = format!("{a_spec} x {b_spec}");
        let prod = cartesian_product(&ga, &gb).expect("valid product");
        let dm = distance_matrix(&prod);
        let idx = enumerate_k_aps(&prod, &dm, 3).expect("k >= 2");
        let awv = match aw(&prod, 3, cfg) {
            Ok(res) => res.aw,
            Err(e) => {
                spread_viol.push(format!("solver failed on {label}: {e}"));
                0
            }
        };
        for r in 1..awv {
            let reps = match enumerate_extremal(
                &prod,
                &idx,
                r,
                &EnumOptions::quotient(Vec::new(), cfg.node_budget),
            ) {
                Ok(reps) => reps,
                Err(e) => {
                    spread_viol.push(format!("{label}: enumeration failed at r={r}: {e}"));
                    continue;
                }
            };
            counts.push(format!("{label} r={r}: {}", reps.len()));
            for c in &reps {
                let a_copies: Vec<u64> = (0..bn)
                    .map(|j| (0..an).fold(0u64, |m, u| m | 1 << c.color(j * an + u)))
                    .collect();
                let b_copies: Vec<u64> = (0..an)
                    .map(|u| (0..bn).fold(0u64, |m, j| m | 1 << c.color(j * an + u)))
                    .collect();
                for masks in [&a_copies, &b_copies] {
                    for i in 0..masks.len() {
                        for j in 0..masks.len() {
                            if i != j && (masks[j] & !masks[i]).count_ones() > 1 {
                                spread_viol.push(format!(
                                    "{label} r={r} coloring {:?}: copy {j} has two colors missing from copy {i}",
                                    c.colors()
                                ));
                            }
                        }
                    }
                }
            }
        }
    }
    claims.push(claim(
        "product-copy-color-spread",
        "in any rainbow-free coloring of a Cartesian product of connected graphs, each copy of a factor contains at most one color absent from any other copy",
        format!(
            "checked every rainbow-free exact coloring of P_3 x P_3 and P_2 x P_4 up to color renaming ({}) in both factor directions",
            counts.join(", ")
        ),
        spread_viol,
    ));

    claims
}

fn verify_dominating(opts: &VerifyOptions) -> Vec<Claim> {
    let cfg = &opts.config;
    let mut total = 0u64;
    let mut viol3 = Vec::new();
    let mut viol45 = Vec::new();
    let mut max_seen = [0u32; 2];
    for base_n in 1..=opts.nmax {
        let (count, ((v3, v45), maxes)) = (0..edge_mask_total(base_n))
            .into_par_iter()
            .map(|mask| {
                let base = graph_from_edge_mask(base_n, mask);
                let mut edges = base.edges();
                for v in 0..base_n {
                    edges.push((v, base_n));
                }
                let g = Graph::new(base_n + 1, &edges).expect("apex edges are valid");
                debug_assert_eq!(g.degree(base_n), base_n);
                debug_assert!(g.dominating_vertex().is_some());
                let label = format!("base n={base_n} mask={mask}");
                let mut v3 = Vec::new();
                let mut v45 = Vec::new();
                let mut maxes = [0u32; 2];
                match solve(&g, 3, cfg, &label, &mut v3) {
                    Some(3) | None => {}
                    Some(s) => v3.push(format!("{label}: aw3 = {s}")),
                }
                for (slot, k) in [(0usize, 4usize), (1, 5)] {
                    if let Some(s) = solve(&g, k, cfg, &label, &mut v45) {
                        maxes[slot] = s;
                        if s > k as u32 + 1 {
                            v45.push(format!("{label}: aw{k} = {s} exceeds {}", k + 1));
                        }
                    }
                }
                (1u64, ((v3, v45), maxes))
            })
            .reduce(
                || (0, ((Vec::new(), Vec::new()), [0u32; 2])),
                |mut a, b| {
                    a.0 += b.0;
                    a.1 .0 .0.extend(b.1 .0 .0);
                    a.1 .0 .1.extend(b.1 .0 .1);
                    a.1 .1[0] = a.1 .1[0].max(b.1 .1[0]);
                    a.1 .1[1] = a.1 .1[1].max(b.1 .1[1]);
                    a
                },
            );
        total += count;
        viol3.extend(v3);
        viol45.extend(v45);
        max_seen[0] = max_seen[0].max(maxes[0]);
        max_seen[1] = max_seen[1].max(maxes[1]);
    }

    vec![
        claim(
            "dominating-k3",
            "a graph on at least 2 vertices with a dominating vertex has aw(G,3) = 3",
            format!(
                "solved every apex over the {total} labeled base graphs on 1..={} vertices, connected or not",
                opts.nmax
            ),
            viol3,
        ),
        claim(
            "dominating-k45",
            "a graph with a dominating vertex has aw(G,k) <= k+1 for k = 4 and k = 5",
            format!(
                "same apex corpus of {total} graphs; largest values seen: aw4 = {}, aw5 = {}",
                max_seen[0], max_seen[1]
            ),
            viol45,
        ),
    ]
}

// ---------------------------------------------------------------------------
// Cross-validation of the machinery itself
// ---------------------------------------------------------------------------

fn verify_properties(opts: &VerifyOptions) -> Vec<Claim> {
    let cfg = &opts.config;

    // Search engine vs. definitional brute force, plus merge monotonicity on
    // every extremal witness the search returns.
    let mut brute_checked = 0u64;
    let mut brute_viol = Vec::new();
    let mut merges = 0u64;
    let mut merge_viol = Vec::new();
    for n in 1..=opts.brute_nmax {
        let (count, ((bv, mv), merged)) = (0..edge_mask_total(n))
            .into_par_iter()
            .map(|mask| {
                let g = graph_from_edge_mask(n, mask);
                if !g.is_connected() {
                    return (0u64, ((Vec::new(), Vec::new()), 0u64));
                }
                let dm = distance_matrix(&g);
                let mut bv = Vec::new();
                let mut mv = Vec::new();
                let mut merged = 0u64;
                for k in [3usize, 4] {
                    let label = format!("n={n} mask={mask} k={k}");
                    let res = match aw(&g, k, cfg) {
                        Ok(res) => res,
                        Err(e) => {
                            bv.push(format!("{label}: solver failed: {e}"));
                            continue;
                        }
                    };
                    let brute = oracle::brute_force_aw(&g, k);
                    if res.aw != brute {
                        bv.push(format!("{label}: solver {} brute {brute}", res.aw));
                    }
                    if let Some(c) = &res.extremal {
                        let idx = enumerate_k_aps(&g, &dm, k).expect("k >= 2");
                        for keep in 1..=c.r() {
                            for absorb in 1..=c.r() {
                                if keep == absorb {
                                    continue;
                                }
                                let m = c.merge_colors(keep, absorb).expect("colors in range");
                                merged += 1;
                                if find_rainbow_k_ap(&idx, &m).is_some() {
                                    mv.push(format!(
                                        "{label}: merging {absorb} into {keep} exposed a rainbow"
                                    ));
                                }
                            }
                        }
                    }
                }
                (1, ((bv, mv), merged))
            })
            .reduce(
                || (0, ((Vec::new(), Vec::new()), 0)),
                |mut a, b| {
                    a.0 += b.0;
                    a.1 .0 .0.extend(b.1 .0 .0);
                    a.1 .0 .1.extend(b.1 .0 .1);
                    a.1 .1 += b.1 .1;
                    a
                },
            );
        brute_checked += count;
        brute_viol.extend(bv);
        merge_viol.extend(mv);
        merges += merged;
    }

    // Progression enumerator vs. a definitional enumerator over every
    // labeled graph, connected or not.
    let mut ap_graphs = 0u64;
    let mut ap_viol = Vec::new();
    for n in 1..=opts.oracle_nmax {
        let (count, av) = (0..edge_mask_total(n))
            .into_par_iter()
            .map(|mask| {
                let g = graph_from_edge_mask(n, mask);
                let dm = distance_matrix(&g);
                let fw = oracle::floyd_warshall(&g);
                let mut av = Vec::new();
                for k in 2..=5usize {
                    let idx = enumerate_k_aps(&g, &dm, k).expect("k >= 2");
                    let naive = oracle::naive_k_ap_sets_from(&fw, k);
                    let agree = naive.len() == idx.len()
                        && idx.aps().iter().all(|ap| naive.contains(ap.vertices()));
                    if !agree {
                        av.push(format!(
                            "n={n} mask={mask} k={k}: {} vs {} progressions",
                            idx.len(),
                            naive.len()
                        ));
                    }
                }
                (1u64, av)
            })
            .reduce(|| (0, Vec::new()), merge_tallies);
        ap_graphs += count;
        ap_viol.extend(av);
    }

    // Relabeling invariance on seeded random graphs.
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut perm_viol = Vec::new();
    let perm_nmax = opts.oracle_nmax.max(2);
    for case in 0..100u32 {
        let n = rng.gen_range(2..=perm_nmax);
        let mask = rng.gen_range(0..edge_mask_total(n));
        let g = graph_from_edge_mask(n, mask);
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);
        let h = g.permuted(&perm).expect("permutation is valid");
        let k = if case % 2 == 0 { 3 } else { 4 };
        let label = format!("case {case}: n={n} mask={mask} k={k}");
        let a = solve(&g, k, cfg, &label, &mut perm_viol);
        let b = solve(&h, k, cfg, &label, &mut perm_viol);
        if let (Some(a), Some(b)) = (a, b) {
            if a != b {
                perm_viol.push(format!("{label}: aw {a} became {b} after relabeling"));
            }
        }
    }

    vec![
        claim(
            "solver-matches-brute-force",
            "the search engine returns the definitional anti-van der Waerden number",
            format!(
                "agreed with the color-by-color sweep on {brute_checked} labeled connected graphs with 1..={} vertices at k = 3 and k = 4",
                opts.brute_nmax
            ),
            brute_viol,
        ),
        claim(
            "merge-preserves-rainbow-free",
            "merging two color classes of a rainbow-free coloring leaves it rainbow-free",
            format!("checked {merges} class merges on the extremal witnesses from the same sweep"),
            merge_viol,
        ),
        claim(
            "progression-enumerator-matches-definition",
            "the progression index lists exactly the k-term progressions given by the distance definition, one per vertex set",
            format!(
                "compared both enumerations on {ap_graphs} labeled graphs with 1..={} vertices for k = 2..=5",
                opts.oracle_nmax
            ),
            ap_viol,
        ),
        claim(
            "relabeling-invariance",
            "aw is invariant under relabeling of the vertices",
            format!(
                "100 seeded random graphs on 2..={perm_nmax} vertices, each solved before and after a random permutation"
            ),
            perm_viol,
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn unknown_suite_is_rejected() {
        let opts = VerifyOptions::default();
        assert!(matches!(
            run_suite("paths-and-cycles", &opts),
            Err(Error::Unsupported(_))
        ));
        assert!(matches!(
            run_suite(
                "paths",
                &VerifyOptions {
                    nmax: 9,
                    ..VerifyOptions::default()
                }
            ),
            Err(Error::CorpusTooLarge(9, 7))
        ));
    }

    #[test]
    fn path_suite_passes_and_serializes() {
        let report = run_suite("paths", &VerifyOptions::default()).unwrap();
        assert_eq!(report.suite, "paths");
        assert!(report.pass(), "{report:?}");
        assert_eq!(report.claims.len(), 2);
        let json = serde_json::to_string(&report).unwrap();
        assert!(json.contains("\"suite\":\"paths\""));
        assert!(json.contains("\"pass\":true"));
    }

    #[test]
    fn star_suite_passes() {
        let report = run_suite("stars", &VerifyOptions::default()).unwrap();
        assert!(report.pass(), "{report:?}");
        assert!(report.claims.iter().all(|c| !c.detail.is_empty()));
    }

    #[test]
    fn binary_tree_suite_passes() {
        let report = run_suite("binary-trees", &VerifyOptions::default()).unwrap();
        assert!(report.pass(), "{report:?}");
    }

    #[test]
    fn small_corpus_suites_pass_with_reduced_nmax() {
        // nmax = 4 keeps the sweeps tiny; the full-size runs live in the
        // acceptance tests.
        let opts = VerifyOptions {
            nmax: 4,
            tree_nmax: 5,
            brute_nmax: 4,
            oracle_nmax: 5,
            ..VerifyOptions::default()
        };
        for suite in ["diameter-two", "bounds", "dominating", "properties"] {
            let report = run_suite(suite, &opts).unwrap();
            assert!(report.pass(), "{suite}: {report:?}");
        }
    }

    #[test]
    fn claims_carry_violations_verbatim() {
        let c = claim(
            "sample",
            "statement",
            "checked 3 things".into(),
            vec!["b failed".into(), "a failed".into()],
        );
        assert!(!c.pass);
        assert!(c.detail.contains("2 violation(s)"));
        assert!(c.detail.contains("a failed; b failed"));
    }

    #[test]
    fn tree_representatives_cover_all_classes() {
        let reps = tree_class_representatives(6);
        assert_eq!(reps.len(), 6);
        let mut keys = BTreeSet::new();
        for (_, t) in &reps {
            assert_eq!(t.n(), 6);
            keys.insert(tree_canonical_key(t).unwrap());
        }
        assert_eq!(keys.len(), 6);
    }
}
