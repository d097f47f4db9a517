//! Closed-form values and bound rules for anti-van der Waerden numbers.
//!
//! Paths follow a base-3 interval law. Cycles factor through the primes: the
//! value of aw(C_n, 3) is determined by the exponents of the odd primes in
//! n, where each prime contributes according to its own cycle value (3 or
//! 4). Prime classes are not hardcoded; they are computed by the search
//! engine on demand and memoized in a [`PrimeCache`], optionally preloaded
//! from a bundled table.

use std::collections::BTreeMap;
use std::sync::RwLock;

use serde::Serialize;

use crate::ap::enumerate_k_aps;
use crate::error::{Error, Result};
use crate::generators::FamilySpec;
use crate::graph::{distance_matrix, distance_profile, Graph};
use crate::solver::{aw, SearchConfig};
use crate::tree::tree_facts;

/// aw(P_n, 3), equivalently the value for the integer interval {1..n}:
/// with m chosen so that n lies in (7*3^(m-2), 21*3^(m-2)], the value is
/// m+2 when n is exactly 3^m and m+3 otherwise. Extends down to n = 1 and
/// n = 2, where there are no 3-term progressions and the value is n+1.
pub fn aw_interval_3(n: u64) -> Result<u32> {
    if n == 0 {
        return Err(Error::OutOfRange("interval value needs n >= 1".into()));
    }
    if let Some(m) = log3_exact(n) {
        return Ok(m + 2);
    }
    if n == 2 {
        return Ok(3);
    }
    let mut m = 1u32;
    let mut hi = 7u64;
    while n > hi {
        m += 1;
        hi *= 3;
    }
    Ok(m + 3)
}

fn log3_exact(n: u64) -> Option<u32> {
    let mut p = 1u64;
    let mut m = 0u32;
    while p < n {
        p = p.checked_mul(3)?;
        m += 1;
    }
    (p == n).then_some(m)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorization as (prime, exponent) pairs in ascending order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Memoized cycle values aw(C_p, 3) for odd primes p. Every value is either
/// 3 or 4; misses are resolved by running the exact solver on C_p.
#[derive(Debug, Default)]
pub struct PrimeCache {
    table: RwLock<BTreeMap<u64, u32>>,
}

impl PrimeCache {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Cache preloaded from the table shipped with the crate. The table is
    /// produced by this crate's own solver; regenerate it with the
    /// `prime_table` example.
    pub fn bundled() -> Self {
        Self::from_table_str(include_str!("../data/cycle_prime_aw3.txt"))
            .expect("bundled table parses")
    }

    pub fn from_table_str(text: &str) -> Result<Self> {
        let mut table = BTreeMap::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut parts = line.split_whitespace();
            let p: u64 = parts
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::Parse(format!("line {}: expected prime", lineno + 1)))?;
            let v: u32 = parts
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::Parse(format!("line {}: expected value", lineno + 1)))?;
            if parts.next().is_some() {
                return Err(Error::Parse(format!(
                    "line {}: trailing tokens",
                    lineno + 1
                )));
            }
            if p < 3 || p.is_multiple_of(2) || !is_prime(p) {
                return Err(Error::Parse(format!(
                    "line {}: {p} is not an odd prime",
                    lineno + 1
                )));
            }
            if !(3..=4).contains(&v) {
                return Err(Error::Parse(format!(
                    "line {}: cycle value must be 3 or 4, got {v}",
                    lineno + 1
                )));
            }
            table.insert(p, v);
        }
        Ok(Self {
            table: RwLock::new(table),
        })
    }

    pub fn to_table_string(&self) -> String {
        let mut out = String::new();
        out.push_str(
            "# Cycle classification table for odd primes p: each line is \"p aw\" where aw\n",
        );
        out.push_str(
            "# is the anti-van der Waerden number of the p-cycle with k = 3 (always 3 or\n",
        );
        out.push_str("# 4). Regenerate with: cargo run --example prime_table\n");
        out.push_str(&format!(
            "# solver: awgraph {}\n",
            env!("CARGO_PKG_VERSION")
        ));
        for (p, v) in self.table.read().expect("lock").iter() {
            out.push_str(&format!("{p} {v}\n"));
        }
        out
    }

    pub fn lookup(&self, p: u64) -> Option<u32> {
        self.table.read().expect("lock").get(&p).copied()
    }

    pub fn snapshot(&self) -> Vec<(u64, u32)> {
        self.table
            .read()
            .expect("lock")
            .iter()
            .map(|(&p, &v)| (p, v))
            .collect()
    }

    /// The cycle value of an odd prime, solving C_p exactly on a cache miss.
    pub fn classify(&self, p: u64, cfg: &SearchConfig) -> Result<u32> {
        if p < 3 || p.is_multiple_of(2) || !is_prime(p) {
            return Err(Error::OutOfRange(format!("{p} is not an odd prime")));
        }
        if let Some(v) = self.lookup(p) {
            return Ok(v);
        }
        let g = crate::generators::generate(&FamilySpec::Cycle { n: p as usize })?;
        let value = match aw(&g, 3, cfg) {
            Ok(res) => res.aw,
            Err(Error::BudgetExceeded(_)) => return Err(Error::PrimeBudget(p)),
            Err(e) => return Err(e),
        };
        assert!(
            (3..=4).contains(&value),
            "odd prime cycles have value 3 or 4, got {value} for p = {p}"
        );
        assert!(value == 3 || p >= 17, "values of 4 require p >= 17");
        self.table.write().expect("lock").insert(p, value);
        Ok(value)
    }
}

/// aw(C_n, 3) by prime factorization: 2 for odd n (3 for even), plus each
/// odd prime's exponent, doubled for primes whose own cycle value is 4.
pub fn aw_cyclic_3(n: u64, primes: &PrimeCache, cfg: &SearchConfig) -> Result<u32> {
    if n == 0 {
        return Err(Error::OutOfRange("cyclic value needs n >= 1".into()));
    }
    let base = if n.is_multiple_of(2) { 3 } else { 2 };
    let mut total = base;
    for (p, e) in factorize(n) {
        if p == 2 {
            continue;
        }
        let weight = match primes.classify(p, cfg)? {
            3 => 1,
            _ => 2,
        };
        total += weight * e;
    }
    Ok(total)
}

/// Two-color path Ramsey number R(P_m, P_n) = n + floor(m/2) - 1 for
/// n >= m >= 2.
pub fn ramsey_paths(m: u64, n: u64) -> Result<u32> {
    if m < 2 || n < m {
        return Err(Error::OutOfRange(
            "path Ramsey values need n >= m >= 2".into(),
        ));
    }
    Ok((n + m / 2 - 1) as u32)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundEntry {
    pub value: u32,
    pub rule: String,
}

impl BoundEntry {
    fn new(value: u32, rule: &str) -> Self {
        Self {
            value,
            rule: rule.into(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    pub lower: Vec<BoundEntry>,
    pub upper: Vec<BoundEntry>,
    pub exact: Option<BoundEntry>,
}

impl BoundReport {
    pub fn best_lower(&self) -> u32 {
        self.lower.iter().map(|e| e.value).max().unwrap_or(1)
    }

    pub fn best_upper(&self) -> Option<u32> {
        self.upper.iter().map(|e| e.value).min()
    }

    pub fn is_consistent(&self) -> bool {
        let lo = self.best_lower();
        let hi = match self.best_upper() {
            Some(h) => h,
            None => return false,
        };
        if lo > hi {
            return false;
        }
        match &self.exact {
            Some(e) => lo <= e.value && e.value <= hi,
            None => true,
        }
    }
}

/// Optional knowledge about the graph that unlocks additional rules.
#[derive(Debug, Clone, Copy, Default)]
pub struct BoundContext<'a> {
    pub family: Option<&'a FamilySpec>,
    pub primes: Option<&'a PrimeCache>,
}

impl<'a> BoundContext<'a> {
    pub fn with_family(mut self, family: &'a FamilySpec) -> Self {
        self.family = Some(family);
        self
    }

    pub fn with_primes(mut self, primes: &'a PrimeCache) -> Self {
        self.primes = Some(primes);
        self
    }
}

/// Collects every bound rule that applies to a connected graph, plus an
/// exact value when some rule pins one down. Rules never consult the
/// search engine except for cycle prime classification.
pub fn bound_report(
    g: &Graph,
    k: usize,
    ctx: &BoundContext,
    cfg: &SearchConfig,
) -> Result<BoundReport> {
    if k < 2 {
        return Err(Error::KOutOfRange(k));
    }
    if !g.is_connected() || g.n() == 0 {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let n1 = n as u32 + 1;
    let ku = k as u32;
    let dm = distance_matrix(g);
    let profile = distance_profile(g, &dm)?;
    let idx = enumerate_k_aps(g, &dm, k)?;
    let facts = tree_facts(g);

    let mut lower = vec![BoundEntry::new(ku.min(n1), "pigeonhole")];
    let mut upper = vec![BoundEntry::new(n1, "vertex-count")];
    let mut exacts: Vec<BoundEntry> = Vec::new();

    if idx.is_empty() {
        exacts.push(BoundEntry::new(n1, "no-progressions"));
    }
    if profile.diameter <= 1 && n >= k {
        exacts.push(BoundEntry::new(ku, "complete"));
    }
    if profile.diameter == 2 && !idx.is_empty() {
        upper.push(BoundEntry::new(ku + ku / 2 - 1, "ramsey-diameter-two"));
    }
    if k == 3 {
        if profile.diameter == 2 {
            exacts.push(BoundEntry::new(3, "diameter-two"));
        }
        let rad = profile.radius;
        upper.push(BoundEntry::new(
            rad + if rad <= 2 { 2 } else { 1 },
            "radius",
        ));
        if g.dominating_vertex().is_some() {
            exacts.push(BoundEntry::new(3, "dominating-vertex"));
        }
        if facts.is_tree {
            let d = facts.diameter as u64;
            let base = aw_interval_3(d + 1)?;
            let bump = u32::from(log3_exact(d).is_some());
            upper.push(BoundEntry::new(base + bump, "tree-diameter"));
            let ell = facts.bijacent.len() as u32;
            let bij_bound = if ell == 0 { 4 } else { ell.ilog2() + 4 };
            upper.push(BoundEntry::new(bij_bound, "bijacent-count"));
            if facts.diameter >= 3 && facts.diameter % 2 == 1 {
                lower.push(BoundEntry::new(4, "odd-diameter"));
                if ell == 0 {
                    exacts.push(BoundEntry::new(4, "odd-diameter-no-bijacent"));
                }
            }
        }
    }
    if let (4..=5, Some(_)) = (k, g.dominating_vertex()) {
        upper.push(BoundEntry::new(ku + 1, "dominating-vertex-small-k"));
    }

    if let Some(family) = ctx.family {
        apply_family_rules(family, k, ctx, cfg, &mut upper, &mut exacts)?;
    }

    let priority = [
        "no-progressions",
        "complete",
        "path-formula",
        "cycle-formula",
        "hypercube-parity",
        "binary-tree",
        "star-formula",
        "bipartite-ramsey",
        "diameter-two",
        "dominating-vertex",
        "odd-diameter-no-bijacent",
    ];
    let exact = priority
        .iter()
        .find_map(|&rule| exacts.iter().find(|e| e.rule == rule))
        .cloned();
    if let Some(e) = &exact {
        debug_assert!(
            exacts.iter().all(|other| other.value == e.value),
            "exact rules disagree: {exacts:?}"
        );
    }
    let report = BoundReport {
        lower,
        upper,
        exact,
    };
    debug_assert!(report.is_consistent(), "inconsistent report: {report:?}");
    Ok(report)
}

fn apply_family_rules(
    family: &FamilySpec,
    k: usize,
    ctx: &BoundContext,
    cfg: &SearchConfig,
    upper: &mut Vec<BoundEntry>,
    exacts: &mut Vec<BoundEntry>,
) -> Result<()> {
    let ku = k as u32;
    match family {
        FamilySpec::Path { n } if k == 3 => {
            exacts.push(BoundEntry::new(aw_interval_3(*n as u64)?, "path-formula"));
        }
        FamilySpec::Cycle { n } if k == 3 => {
            if let Some(primes) = ctx.primes {
                exacts.push(BoundEntry::new(
                    aw_cyclic_3(*n as u64, primes, cfg)?,
                    "cycle-formula",
                ));
            }
        }
        FamilySpec::Hypercube { dim } if k == 3 && *dim >= 2 => {
            let v = if dim % 2 == 0 { 3 } else { 4 };
            exacts.push(BoundEntry::new(v, "hypercube-parity"));
        }
        FamilySpec::CompleteBinaryTree { height } if k == 3 => {
            let v = match height {
                0 => 2,
                1 => 3,
                _ => 4,
            };
            exacts.push(BoundEntry::new(v, "binary-tree"));
        }
        FamilySpec::Star { leaves } if k >= 4 && k <= leaves + 1 => {
            exacts.push(BoundEntry::new(ku + 1, "star-formula"));
        }
        FamilySpec::CompleteBipartite { m, n } if *m >= k && *n >= k => {
            exacts.push(BoundEntry::new(ku + ku / 2 - 1, "bipartite-ramsey"));
        }
        FamilySpec::Product(a, b) if k == 3 => {
            let ga = crate::generators::generate(a)?;
            let gb = crate::generators::generate(b)?;
            if ga.n() >= 2 && gb.n() >= 2 && ga.is_connected() && gb.is_connected() {
                upper.push(BoundEntry::new(4, "cartesian-product"));
            }
        }
        _ => {}
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::generate;

    #[test]
    fn interval_values() {
        let expected = [
            (1, 2),
            (2, 3),
            (3, 3),
            (4, 4),
            (7, 4),
            (8, 5),
            (9, 4),
            (10, 5),
            (21, 5),
            (22, 6),
            (26, 6),
            (27, 5),
            (28, 6),
            (63, 6),
            (64, 7),
            (81, 6),
        ];
        for (n, want) in expected {
            assert_eq!(aw_interval_3(n).unwrap(), want, "n = {n}");
        }
        assert!(aw_interval_3(0).is_err());
    }

    #[test]
    fn interval_dips_exactly_at_powers_of_three() {
        let mut prev = aw_interval_3(3).unwrap();
        for n in 4..=200u64 {
            let cur = aw_interval_3(n).unwrap();
            if log3_exact(n).is_some() {
                assert_eq!(cur, prev - 1, "n = {n}");
            } else {
                assert!(cur >= prev && cur - prev <= 1, "n = {n}");
            }
            prev = cur;
        }
    }

    #[test]
    fn primality_and_factorization() {
        assert!(is_prime(2));
        assert!(is_prime(17));
        assert!(!is_prime(1));
        assert!(!is_prime(49));
        assert_eq!(factorize(1), vec![]);
        assert_eq!(factorize(12), vec![(2, 2), (3, 1)]);
        assert_eq!(factorize(17 * 17 * 5), vec![(5, 1), (17, 2)]);
    }

    #[test]
    fn prime_cache_rejects_bad_input() {
        let cache = PrimeCache::empty();
        let cfg = SearchConfig::default();
        assert!(cache.classify(2, &cfg).is_err());
        assert!(cache.classify(9, &cfg).is_err());
        assert!(PrimeCache::from_table_str("4 3\n").is_err());
        assert!(PrimeCache::from_table_str("5 7\n").is_err());
        assert!(PrimeCache::from_table_str("5 3 9\n").is_err());
    }

    #[test]
    fn prime_cache_computes_and_memoizes() {
        let cache = PrimeCache::empty();
        let cfg = SearchConfig::default();
        assert_eq!(cache.classify(3, &cfg).unwrap(), 3);
        assert_eq!(cache.classify(5, &cfg).unwrap(), 3);
        assert_eq!(cache.lookup(3), Some(3));
        assert_eq!(cache.lookup(7), None);
        let text = cache.to_table_string();
        let reloaded = PrimeCache::from_table_str(&text).unwrap();
        assert_eq!(reloaded.snapshot(), cache.snapshot());
    }

    #[test]
    fn seventeen_is_the_first_exceptional_prime() {
        let cache = PrimeCache::empty();
        let cfg = SearchConfig::default();
        for p in [3u64, 5, 7, 11, 13] {
            assert_eq!(cache.classify(p, &cfg).unwrap(), 3, "p = {p}");
        }
        assert_eq!(cache.classify(17, &cfg).unwrap(), 4);
    }

    #[test]
    fn bundled_table_covers_primes_below_fifty() {
        let cache = PrimeCache::bundled();
        let cfg = SearchConfig::default();
        for p in [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
            let stored = cache.lookup(p);
            assert!(stored.is_some(), "bundled table misses p = {p}");
            if p <= 23 {
                let fresh = PrimeCache::empty().classify(p, &cfg).unwrap();
                assert_eq!(stored, Some(fresh), "bundled value disagrees at p = {p}");
            }
        }
    }

    #[test]
    fn cyclic_values_from_factorization() {
        let cache = PrimeCache::empty();
        let cfg = SearchConfig::default();
        let expected = [
            (1, 2),
            (2, 3),
            (3, 3),
            (4, 3),
            (5, 3),
            (6, 4),
            (8, 3),
            (9, 4),
            (12, 4),
            (15, 4),
            (17, 4),
            (18, 5),
            (34, 5),
        ];
        for (n, want) in expected {
            assert_eq!(aw_cyclic_3(n, &cache, &cfg).unwrap(), want, "n = {n}");
        }
        assert!(aw_cyclic_3(0, &cache, &cfg).is_err());
    }

    #[test]
    fn path_ramsey_values() {
        assert_eq!(ramsey_paths(2, 2).unwrap(), 2);
        assert_eq!(ramsey_paths(3, 3).unwrap(), 3);
        assert_eq!(ramsey_paths(3, 4).unwrap(), 4);
        assert_eq!(ramsey_paths(4, 4).unwrap(), 5);
        assert_eq!(ramsey_paths(5, 5).unwrap(), 6);
        assert!(ramsey_paths(1, 5).is_err());
        assert!(ramsey_paths(4, 3).is_err());
    }

    fn report_for(spec: &str, k: usize) -> BoundReport {
        let family = FamilySpec::parse(spec).unwrap();
        let g = generate(&family).unwrap();
        let cache = PrimeCache::empty();
        let ctx = BoundContext::default()
            .with_family(&family)
            .with_primes(&cache);
        bound_report(&g, k, &ctx, &SearchConfig::default()).unwrap()
    }

    fn exact_rule(report: &BoundReport) -> (&str, u32) {
        let e = report.exact.as_ref().expect("exact value");
        (e.rule.as_str(), e.value)
    }

    #[test]
    fn reports_for_structured_families() {
        let r = report_for("path:9", 3);
        assert_eq!(exact_rule(&r), ("path-formula", 4));
        assert!(r
            .upper
            .iter()
            .any(|e| e.rule == "tree-diameter" && e.value == 4));
        assert!(r
            .upper
            .iter()
            .any(|e| e.rule == "bijacent-count" && e.value == 6));
        assert!(r.upper.iter().any(|e| e.rule == "radius" && e.value == 5));
        assert!(r.is_consistent());

        let r = report_for("cycle:6", 3);
        assert_eq!(exact_rule(&r), ("cycle-formula", 4));

        let r = report_for("hypercube:3", 3);
        assert_eq!(exact_rule(&r), ("hypercube-parity", 4));

        let r = report_for("hypercube:4", 3);
        assert_eq!(exact_rule(&r), ("hypercube-parity", 3));

        let r = report_for("complete:5", 4);
        assert_eq!(exact_rule(&r), ("complete", 4));

        let r = report_for("kbipartite:4,4", 4);
        assert_eq!(exact_rule(&r), ("bipartite-ramsey", 5));
        assert!(r
            .upper
            .iter()
            .any(|e| e.rule == "ramsey-diameter-two" && e.value == 5));

        let r = report_for("star:5", 4);
        assert_eq!(exact_rule(&r), ("star-formula", 5));
        assert!(r
            .upper
            .iter()
            .any(|e| e.rule == "dominating-vertex-small-k"));

        let r = report_for("star:5", 3);
        assert_eq!(exact_rule(&r), ("diameter-two", 3));

        let r = report_for("btree:2", 3);
        assert_eq!(exact_rule(&r), ("binary-tree", 4));

        let r = report_for("product:(path:4)x(path:4)", 3);
        assert!(r.exact.is_none());
        assert!(r
            .upper
            .iter()
            .any(|e| e.rule == "cartesian-product" && e.value == 4));
        assert_eq!(r.best_lower(), 3);
    }

    #[test]
    fn odd_diameter_tree_rules() {
        let r = report_for("path:4", 3);
        assert_eq!(exact_rule(&r), ("path-formula", 4));
        assert!(r
            .lower
            .iter()
            .any(|e| e.rule == "odd-diameter" && e.value == 4));
        // Diameter 3 is a power of three, so the path transfer pays a +1.
        assert!(r
            .upper
            .iter()
            .any(|e| e.rule == "tree-diameter" && e.value == 5));

        let comb = FamilySpec::parse("comb:2").unwrap();
        let g = generate(&comb).unwrap();
        let r = bound_report(&g, 3, &BoundContext::default(), &SearchConfig::default()).unwrap();
        assert_eq!(exact_rule(&r), ("odd-diameter-no-bijacent", 4));
    }

    #[test]
    fn trivial_graph_reports() {
        let k1 = Graph::new(1, &[]).unwrap();
        let r = bound_report(&k1, 3, &BoundContext::default(), &SearchConfig::default()).unwrap();
        assert_eq!(exact_rule(&r), ("no-progressions", 2));
        assert_eq!(r.best_lower(), 2);

        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        let r = bound_report(&k2, 3, &BoundContext::default(), &SearchConfig::default()).unwrap();
        assert_eq!(exact_rule(&r), ("no-progressions", 3));

        let disconnected = Graph::new(3, &[(0, 1)]).unwrap();
        assert!(bound_report(
            &disconnected,
            3,
            &BoundContext::default(),
            &SearchConfig::default()
        )
        .is_err());
    }
}
