//! Exact computation of anti-van der Waerden numbers by backtracking over
//! exact colorings.
//!
//! `aw(g, k)` is the least r such that every exact (surjective) r-coloring of
//! `g` contains a rainbow k-AP; it equals `n + 1` when the graph has no k-AP
//! at all. Because merging two color classes of a rainbow-free coloring
//! leaves it rainbow-free, rainbow-free exact colorings exist for every r
//! below the threshold, so the solver ascends r from k and returns at the
//! first unsatisfiable level.
//!
//! The search assigns vertices in descending order of AP incidence (ties by
//! index), breaks color-permutation symmetry by canonical color numbering
//! (color j+1 is available only once 1..j appear), and propagates a
//! forbidden-color mask: when an AP has k-1 distinctly colored vertices and
//! one uncolored vertex, that vertex must repeat one of the k-1 colors. A
//! subtree dies as soon as some still-unused color is forbidden on every
//! uncolored vertex, since no completion can then be exact.

use std::time::Instant;

use crate::ap::{find_rainbow_k_ap, ApIndex};
use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::{connected_components, distance_matrix, Graph};

/// Node budget for one search. The count is deterministic for a given graph
/// and k, independent of thread count.
#[derive(Debug, Clone, Copy)]
pub struct SearchConfig {
    pub node_budget: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            node_budget: 100_000_000,
        }
    }
}

impl SearchConfig {
    pub fn with_budget(node_budget: u64) -> Self {
        Self { node_budget }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    pub prunes: u64,
    pub elapsed_ms: u64,
}

/// Result of an `aw` computation. `extremal` is a rainbow-free exact
/// (aw-1)-coloring; it is absent exactly when aw equals k, since only then is
/// there nothing to exhibit above the trivial (k-1)-coloring level.
#[derive(Debug, Clone)]
pub struct AwResult {
    pub aw: u32,
    pub extremal: Option<Coloring>,
    pub stats: SearchStats,
}

struct Searcher<'a> {
    n: usize,
    r: u32,
    order: Vec<u32>,
    colors: Vec<u32>,
    allowed: Vec<u64>,
    members: Vec<&'a [usize]>,
    /// For each assignment position, the APs whose final uncolored vertex
    /// becomes constrained once this position is colored.
    penult: Vec<Vec<(u32, u32)>>,
    trail: Vec<(u32, u64)>,
    /// How many uncolored vertices still allow each color. A color that is
    /// unused and no longer takeable anywhere kills the subtree, which is
    /// what makes r-exhaustion tractable: without it the search walks every
    /// completion that never introduces the missing color.
    can_take: Vec<u64>,
    nodes: u64,
    prunes: u64,
    budget: u64,
    enumerating: bool,
}

impl<'a> Searcher<'a> {
    fn new(n: usize, idx: &'a ApIndex, r: u32, budget: u64, enumerating: bool) -> Result<Self> {
        if n > 63 {
            return Err(Error::Unsupported(
                "search supports at most 63 vertices".into(),
            ));
        }
        let mut order: Vec<u32> = (0..n as u32).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(idx.incidence(v as usize).len()), v));
        let mut pos_of = vec![0u32; n];
        for (p, &v) in order.iter().enumerate() {
            pos_of[v as usize] = p as u32;
        }
        let members: Vec<&[usize]> = idx.aps().iter().map(|ap| ap.vertices()).collect();
        let mut penult: Vec<Vec<(u32, u32)>> = vec![Vec::new(); n];
        for (i, ap) in members.iter().enumerate() {
            let mut last_pos = 0u32;
            let mut second_pos = 0u32;
            for &m in ap.iter() {
                let p = pos_of[m];
                if p > last_pos {
                    second_pos = last_pos;
                    last_pos = p;
                } else if p > second_pos {
                    second_pos = p;
                }
            }
            let last_vertex = order[last_pos as usize];
            penult[second_pos as usize].push((i as u32, last_vertex));
        }
        let full = if r >= 64 { u64::MAX } else { (1u64 << r) - 1 };
        Ok(Self {
            n,
            r,
            order,
            colors: vec![0; n],
            allowed: vec![full; n],
            members,
            penult,
            trail: Vec::new(),
            can_take: vec![n as u64; r as usize],
            nodes: 0,
            prunes: 0,
            budget,
            enumerating,
        })
    }

    fn budget_error(&self) -> Error {
        if self.enumerating {
            Error::EnumerationTooLarge(self.budget)
        } else {
            Error::BudgetExceeded(self.budget)
        }
    }

    /// Depth-first search over assignment positions. The callback fires on
    /// every complete exact rainbow-free coloring and returns true to stop.
    fn dfs(
        &mut self,
        depth: usize,
        max_used: u32,
        on_leaf: &mut dyn FnMut(&[u32]) -> bool,
    ) -> Result<bool> {
        let v = self.order[depth] as usize;
        let cap = (max_used + 1).min(self.r);
        let mut avail = self.allowed[v] & ((1u64 << cap) - 1);
        while avail != 0 {
            let c = avail.trailing_zeros() + 1;
            avail &= avail - 1;
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(self.budget_error());
            }
            let new_max = max_used.max(c);
            // Exactness: the unused colors must still fit on the remaining
            // uncolored vertices.
            if new_max as usize + (self.n - depth - 1) < self.r as usize {
                self.prunes += 1;
                continue;
            }
            self.colors[v] = c;
            let vmask = self.allowed[v];
            let mut bits = vmask;
            while bits != 0 {
                self.can_take[bits.trailing_zeros() as usize] -= 1;
                bits &= bits - 1;
            }
            let trail_start = self.trail.len();
            let mut dead = false;
            for ti in 0..self.penult[depth].len() {
                let (ap, last) = self.penult[depth][ti];
                let last = last as usize;
                let mut mask = 0u64;
                let mut distinct = true;
                for &m in self.members[ap as usize] {
                    if m == last {
                        continue;
                    }
                    let bit = 1u64 << (self.colors[m] - 1);
                    if mask & bit != 0 {
                        distinct = false;
                        break;
                    }
                    mask |= bit;
                }
                if distinct {
                    let old = self.allowed[last];
                    let new = old & mask;
                    if new != old {
                        self.trail.push((last as u32, old));
                        self.allowed[last] = new;
                        let mut lost = old & !new;
                        while lost != 0 {
                            self.can_take[lost.trailing_zeros() as usize] -= 1;
                            lost &= lost - 1;
                        }
                        if new == 0 {
                            dead = true;
                            break;
                        }
                    }
                }
            }
            if !dead {
                // Every color above new_max is still unused; each needs at
                // least one uncolored vertex that may take it.
                for missing in new_max..self.r {
                    if self.can_take[missing as usize] == 0 {
                        dead = true;
                        break;
                    }
                }
            }
            let stop = if dead {
                self.prunes += 1;
                false
            } else if depth + 1 == self.n {
                debug_assert_eq!(new_max, self.r);
                on_leaf(&self.colors)
            } else {
                self.dfs(depth + 1, new_max, on_leaf)?
            };
            while self.trail.len() > trail_start {
                let (u, old) = self.trail.pop().expect("trail nonempty");
                let mut regained = old & !self.allowed[u as usize];
                while regained != 0 {
                    self.can_take[regained.trailing_zeros() as usize] += 1;
                    regained &= regained - 1;
                }
                self.allowed[u as usize] = old;
            }
            let mut bits = vmask;
            while bits != 0 {
                self.can_take[bits.trailing_zeros() as usize] += 1;
                bits &= bits - 1;
            }
            self.colors[v] = 0;
            if stop {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Searches for an exact rainbow-free r-coloring of `g` with respect to the
/// progressions in `idx`. Returns the first witness in canonical search
/// order, or `None` when every exact r-coloring contains a rainbow AP (also
/// when no exact r-coloring exists at all, i.e. r = 0 or r > n).
pub fn exists_rainbow_free_exact(
    g: &Graph,
    idx: &ApIndex,
    r: u32,
    cfg: &SearchConfig,
) -> Result<Option<Coloring>> {
    Ok(exists_with_stats(g, idx, r, cfg)?.0)
}

fn exists_with_stats(
    g: &Graph,
    idx: &ApIndex,
    r: u32,
    cfg: &SearchConfig,
) -> Result<(Option<Coloring>, SearchStats)> {
    let n = g.n();
    if n == 0 {
        let found = if r == 0 {
            Some(Coloring::new(Vec::new(), 0)?)
        } else {
            None
        };
        return Ok((found, SearchStats::default()));
    }
    if r == 0 || r as usize > n {
        return Ok((None, SearchStats::default()));
    }
    let mut searcher = Searcher::new(n, idx, r, cfg.node_budget, false)?;
    let mut witness = None;
    searcher.dfs(0, 0, &mut |colors| {
        witness = Some(colors.to_vec());
        true
    })?;
    let stats = SearchStats {
        nodes: searcher.nodes,
        prunes: searcher.prunes,
        elapsed_ms: 0,
    };
    Ok((
        witness.map(|w| Coloring::new(w, r).expect("search colors valid")),
        stats,
    ))
}

/// Anti-van der Waerden number with a certifying extremal coloring.
///
/// Disconnected graphs are solved per component and recombined with
/// [`aw_disconnected`]; the returned witness colors each component with its
/// own color block plus one shared level, matching that composition.
pub fn aw(g: &Graph, k: usize, cfg: &SearchConfig) -> Result<AwResult> {
    let start = Instant::now();
    if k < 2 {
        return Err(Error::KOutOfRange(k));
    }
    let n = g.n();
    if n == 0 {
        return Ok(AwResult {
            aw: 1,
            extremal: None,
            stats: SearchStats::default(),
        });
    }
    let comps = connected_components(g);
    let mut result = if comps.len() == 1 {
        aw_connected(g, k, cfg)?
    } else {
        let mut stats = SearchStats::default();
        let mut colors = vec![0u32; n];
        let mut offset = 0u32;
        let mut values = Vec::new();
        for comp in &comps {
            let sub = g.induced(comp);
            let sub_res = aw_connected(&sub, k, cfg)?;
            stats.nodes += sub_res.stats.nodes;
            stats.prunes += sub_res.stats.prunes;
            let r_i = sub_res.aw - 1;
            for (j, &v) in comp.iter().enumerate() {
                // Component witness if present, else any exact coloring with
                // r_i <= k-1 colors (vacuously rainbow-free).
                let c = match &sub_res.extremal {
                    Some(w) => w.color(j),
                    None => (j as u32 % r_i) + 1,
                };
                colors[v] = offset + c;
            }
            offset += r_i;
            values.push(sub_res.aw);
        }
        let total = aw_disconnected(&values);
        let extremal = Coloring::new(colors, total - 1)?;
        AwResult {
            aw: total,
            extremal: Some(extremal),
            stats,
        }
    };
    if comps.len() > 1 {
        if let Some(w) = &result.extremal {
            assert!(w.is_exact());
            let dm = distance_matrix(g);
            let idx = crate::ap::enumerate_k_aps(g, &dm, k)?;
            assert!(
                find_rainbow_k_ap(&idx, w).is_none(),
                "recombined witness must be rainbow-free"
            );
        }
    }
    result.stats.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(result)
}

fn aw_connected(g: &Graph, k: usize, cfg: &SearchConfig) -> Result<AwResult> {
    let n = g.n();
    let dm = distance_matrix(g);
    let idx = crate::ap::enumerate_k_aps(g, &dm, k)?;
    if idx.is_empty() {
        // No progressions at all: every coloring is rainbow-free and the
        // identity coloring witnesses the maximum.
        let extremal = Coloring::new((1..=n as u32).collect(), n as u32)?;
        return Ok(AwResult {
            aw: n as u32 + 1,
            extremal: Some(extremal),
            stats: SearchStats::default(),
        });
    }
    let mut stats = SearchStats::default();
    let mut last_witness = None;
    for r in k as u32..=n as u32 {
        let (found, s) = exists_with_stats(g, &idx, r, cfg)?;
        stats.nodes += s.nodes;
        stats.prunes += s.prunes;
        match found {
            Some(w) => {
                debug_assert!(w.is_exact() && find_rainbow_k_ap(&idx, &w).is_none());
                last_witness = Some(w);
            }
            None => {
                return Ok(AwResult {
                    aw: r,
                    extremal: last_witness,
                    stats,
                })
            }
        }
    }
    unreachable!("a graph with a k-AP rejects the exact n-coloring");
}

/// Composition rule for vertex-disjoint unions: one color class can be
/// shared across components, every other class must stay inside one
/// component, so the union threshold is `1 + sum (aw_i - 1)`.
pub fn aw_disconnected(component_aws: &[u32]) -> u32 {
    1 + component_aws.iter().map(|&a| a - 1).sum::<u32>()
}

/// Options for extremal enumeration. With `up_to_symmetry` the result keeps
/// one representative per orbit of the supplied automorphism generators
/// combined with color permutations; otherwise every rainbow-free exact
/// coloring is listed (color permutations expanded).
#[derive(Debug, Clone, Default)]
pub struct EnumOptions {
    pub up_to_symmetry: bool,
    pub automorphisms: Vec<Vec<usize>>,
    pub node_budget: u64,
}

impl EnumOptions {
    pub fn raw(node_budget: u64) -> Self {
        Self {
            up_to_symmetry: false,
            automorphisms: Vec::new(),
            node_budget,
        }
    }

    pub fn quotient(automorphisms: Vec<Vec<usize>>, node_budget: u64) -> Self {
        Self {
            up_to_symmetry: true,
            automorphisms,
            node_budget,
        }
    }
}

/// Enumerates exact rainbow-free r-colorings of `g`.
///
/// Raw mode returns the full list sorted lexicographically. Quotient mode
/// returns the lexicographically least member of each orbit under color
/// permutations and the group generated by `automorphisms`.
pub fn enumerate_extremal(
    g: &Graph,
    idx: &ApIndex,
    r: u32,
    opts: &EnumOptions,
) -> Result<Vec<Coloring>> {
    let n = g.n();
    if n == 0 || r == 0 || r as usize > n {
        return Ok(Vec::new());
    }
    let mut searcher = Searcher::new(n, idx, r, opts.node_budget, true)?;
    let mut reps: Vec<Vec<u32>> = Vec::new();
    searcher.dfs(0, 0, &mut |colors| {
        reps.push(colors.to_vec());
        false
    })?;
    if !opts.up_to_symmetry {
        if r > 8 {
            return Err(Error::Unsupported(
                "raw enumeration expands r! color permutations; r > 8 is not supported".into(),
            ));
        }
        let perms = color_permutations(r);
        let mut out = Vec::with_capacity(reps.len() * perms.len());
        for rep in &reps {
            for perm in &perms {
                let colors: Vec<u32> = rep.iter().map(|&c| perm[c as usize - 1]).collect();
                out.push(Coloring::new(colors, r)?);
            }
        }
        out.sort();
        return Ok(out);
    }
    for p in &opts.automorphisms {
        let ok = g.permuted(p).map(|h| h == *g).unwrap_or(false);
        if !ok {
            return Err(Error::InvalidGraph(
                "supplied permutation is not an automorphism".into(),
            ));
        }
    }
    let group = crate::generators::close_generators(n, &opts.automorphisms, 1_000_000)?;
    let mut orbit_minima = std::collections::BTreeSet::new();
    for rep in &reps {
        let mut best: Option<Vec<u32>> = None;
        for sigma in &group {
            // Transport the coloring along sigma, then canonicalize colors.
            let moved: Vec<u32> = (0..n).map(|v| rep[sigma[v]]).collect();
            let canon = Coloring::new(moved, r)?.canonical();
            let candidate = canon.colors().to_vec();
            if best.as_ref().map(|b| candidate < *b).unwrap_or(true) {
                best = Some(candidate);
            }
        }
        orbit_minima.insert(best.expect("group contains identity"));
    }
    orbit_minima
        .into_iter()
        .map(|colors| Coloring::new(colors, r))
        .collect()
}

fn color_permutations(r: u32) -> Vec<Vec<u32>> {
    let mut base: Vec<u32> = (1..=r).collect();
    let mut out = Vec::new();
    heap_permute(&mut base, r as usize, &mut out);
    out.sort();
    out
}

fn heap_permute(arr: &mut Vec<u32>, k: usize, out: &mut Vec<Vec<u32>>) {
    if k <= 1 {
        out.push(arr.clone());
        return;
    }
    for i in 0..k {
        heap_permute(arr, k - 1, out);
        if k.is_multiple_of(2) {
            arr.swap(i, k - 1);
        } else {
            arr.swap(0, k - 1);
        }
    }
}
