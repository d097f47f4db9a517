//! Structural analysis of trees: diameter data, bijacent vertices, comb
//! subgraph recognition, leaf reductions, and audits of the two local lemmas
//! that drive the rainbow-free coloring bounds on trees.
//!
//! A vertex is *bijacent* when it has degree 2 and both of its neighbors
//! also have degree 2; runs of bijacent vertices are the long bare stretches
//! of a tree, and their length controls how many colors a rainbow-free
//! coloring can afford.

use serde::Serialize;

use crate::ap::{enumerate_k_aps, find_rainbow_k_ap};
use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::{connected_components, distance_matrix, shortest_path, Graph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeFacts {
    pub is_tree: bool,
    pub diameter: u32,
    /// Lexicographically first pair (u, v), u <= v, with d(u, v) equal to the
    /// diameter. `None` when the graph is not a tree.
    pub diametral_pair: Option<(usize, usize)>,
    pub bijacent: Vec<usize>,
    /// Maximum number of bijacent vertices on a single leaf-to-leaf path.
    pub max_path_bijacent: usize,
}

pub fn tree_facts(g: &Graph) -> TreeFacts {
    let n = g.n();
    let is_tree = n >= 1 && g.is_connected() && g.m() == n - 1;
    if !is_tree {
        return TreeFacts {
            is_tree: false,
            diameter: 0,
            diametral_pair: None,
            bijacent: Vec::new(),
            max_path_bijacent: 0,
        };
    }
    let dm = distance_matrix(g);
    let diameter = dm.max_finite();
    let mut diametral_pair = Some((0, 0));
    'outer: for u in 0..n {
        for v in u + 1..n {
            if dm.get(u, v) == Some(diameter) {
                diametral_pair = Some((u, v));
                break 'outer;
            }
        }
    }
    let bijacent: Vec<usize> = (0..n)
        .filter(|&v| g.degree(v) == 2 && g.neighbors(v).iter().all(|&u| g.degree(u) == 2))
        .collect();
    let is_bijacent = {
        let mut flags = vec![false; n];
        for &v in &bijacent {
            flags[v] = true;
        }
        flags
    };
    let leaves: Vec<usize> = (0..n).filter(|&v| g.degree(v) <= 1).collect();
    let mut max_path_bijacent = 0;
    for (i, &a) in leaves.iter().enumerate() {
        for &b in &leaves[i + 1..] {
            let path = shortest_path(g, a, b).expect("tree is connected");
            let count = path.iter().filter(|&&v| is_bijacent[v]).count();
            max_path_bijacent = max_path_bijacent.max(count);
        }
    }
    TreeFacts {
        is_tree: true,
        diameter,
        diametral_pair,
        bijacent,
        max_path_bijacent,
    }
}

/// Recognizes trees obtained from a comb (a path with one pendant leaf per
/// spine vertex) by deleting some pendant leaves, subject to the ends still
/// determining a unique longest leaf pair. Returns that diametral leaf pair.
///
/// Structurally: a tree with maximum degree 3 whose internal vertices induce
/// a path, with exactly one pair of leaves realizing the diameter.
pub fn broken_comb_check(g: &Graph) -> Option<(usize, usize)> {
    let n = g.n();
    if n < 2 || !g.is_connected() || g.m() != n - 1 {
        return None;
    }
    if (0..n).any(|v| g.degree(v) > 3) {
        return None;
    }
    let internal: Vec<usize> = (0..n).filter(|&v| g.degree(v) >= 2).collect();
    let mut internal_edges = 0usize;
    for &v in &internal {
        let inbrs = g.neighbors(v).iter().filter(|&&u| g.degree(u) >= 2).count();
        if inbrs > 2 {
            return None;
        }
        internal_edges += inbrs;
    }
    internal_edges /= 2;
    if !internal.is_empty() && internal_edges != internal.len() - 1 {
        return None;
    }
    let dm = distance_matrix(g);
    let diameter = dm.max_finite();
    let leaves: Vec<usize> = (0..n).filter(|&v| g.degree(v) == 1).collect();
    let mut pair = None;
    for (i, &a) in leaves.iter().enumerate() {
        for &b in &leaves[i + 1..] {
            if dm.get(a, b) == Some(diameter) {
                if pair.is_some() {
                    return None;
                }
                pair = Some((a, b));
            }
        }
    }
    pair
}

/// Deletes all but the smallest-indexed leaf from every group of leaves that
/// share a neighbor, repeating until no two leaves are siblings. In any
/// rainbow-free coloring sibling leaves carry equal colors, so this
/// reduction preserves the anti-van der Waerden number.
///
/// Returns the reduced tree together with the retained original labels in
/// ascending order (position = new label).
pub fn reduce_sibling_leaves(g: &Graph) -> Result<(Graph, Vec<usize>)> {
    let n = g.n();
    if n == 0 || !g.is_connected() || g.m() != n - 1 {
        return Err(Error::NotATree);
    }
    let mut alive = vec![true; n];
    loop {
        let degree =
            |v: usize, alive: &[bool]| g.neighbors(v).iter().filter(|&&u| alive[u]).count();
        let mut removed_any = false;
        for parent in 0..n {
            if !alive[parent] {
                continue;
            }
            let leaf_children: Vec<usize> = g
                .neighbors(parent)
                .iter()
                .copied()
                .filter(|&u| alive[u] && degree(u, &alive) == 1)
                .collect();
            for &extra in leaf_children.iter().skip(1) {
                alive[extra] = false;
                removed_any = true;
            }
        }
        if !removed_any {
            break;
        }
    }
    let kept: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    let reduced = g.induced(&kept);
    Ok((reduced, kept))
}

/// Finds the color-spanning path inside a rainbow-free colored tree by
/// repeatedly deleting the lowest-indexed leaf whose color still occurs on
/// another remaining vertex. For rainbow-free colorings the fixpoint is a
/// path whose vertices cover every color; a non-path fixpoint is reported as
/// an error because it disproves the reduction.
///
/// Returns the path as a vertex sequence from its smaller endpoint.
pub fn color_spanning_path(g: &Graph, c: &Coloring) -> Result<Vec<usize>> {
    let n = g.n();
    if n == 0 || !g.is_connected() || g.m() != n - 1 {
        return Err(Error::NotATree);
    }
    if c.len() != n {
        return Err(Error::InvalidColoring(format!(
            "coloring has {} entries for {} vertices",
            c.len(),
            n
        )));
    }
    let dm = distance_matrix(g);
    let idx = enumerate_k_aps(g, &dm, 3)?;
    if find_rainbow_k_ap(&idx, c).is_some() {
        return Err(Error::RainbowPresent);
    }
    let mut alive = vec![true; n];
    let mut count = n;
    loop {
        let mut removed = None;
        'scan: for v in 0..n {
            if !alive[v] {
                continue;
            }
            let deg = g.neighbors(v).iter().filter(|&&u| alive[u]).count();
            if deg > 1 {
                continue;
            }
            for u in 0..n {
                if u != v && alive[u] && c.color(u) == c.color(v) {
                    removed = Some(v);
                    break 'scan;
                }
            }
        }
        match removed {
            Some(v) => {
                alive[v] = false;
                count -= 1;
            }
            None => break,
        }
    }
    let live: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    debug_assert_eq!(live.len(), count);
    if count == 1 {
        return Ok(live);
    }
    let mut endpoints = Vec::new();
    for &v in &live {
        let deg = g.neighbors(v).iter().filter(|&&u| alive[u]).count();
        if deg > 2 {
            return Err(Error::NotAPath);
        }
        if deg <= 1 {
            endpoints.push(v);
        }
    }
    if endpoints.len() != 2 {
        return Err(Error::NotAPath);
    }
    let mut path = vec![endpoints[0]];
    let mut prev = usize::MAX;
    let mut cur = endpoints[0];
    while cur != endpoints[1] {
        let next = g
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&u| alive[u] && u != prev)
            .ok_or(Error::NotAPath)?;
        prev = cur;
        cur = next;
        path.push(cur);
    }
    if path.len() != count {
        return Err(Error::NotAPath);
    }
    Ok(path)
}

#[derive(Debug, Clone, Serialize)]
pub struct LemmaCheck {
    pub id: String,
    /// Whether the coloring satisfies the lemma's hypothesis; checks outside
    /// it are still evaluated but reported as informational.
    pub within_hypothesis: bool,
    pub pass: bool,
    pub counterexamples: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct LemmaReport {
    pub antipodal: (usize, usize),
    pub checks: Vec<LemmaCheck>,
}

impl LemmaReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| !c.within_hypothesis || c.pass)
    }
}

/// Audits, on a concrete rainbow-free exact coloring of a broken comb, the
/// two local facts used in the tree bounds:
///
/// 1. every degree-3 vertex has a monochromatic closed neighborhood, and
/// 2. on the antipodal path v_0..v_d, any vertex v_j (2 <= j) whose color
///    differs from every earlier path vertex and from c(v_d) is bijacent,
///    and symmetrically from the other end (hypothesis: at least 4 colors).
///
/// Preconditions: the graph passes [`broken_comb_check`], the coloring is
/// rainbow-free with at least 3 colors, and the two diametral leaves carry
/// colors that appear nowhere else.
pub fn lemma_checks(g: &Graph, c: &Coloring) -> Result<LemmaReport> {
    if c.len() != g.n() {
        return Err(Error::InvalidColoring(format!(
            "coloring has {} entries for {} vertices",
            c.len(),
            g.n()
        )));
    }
    if c.r() < 3 {
        return Err(Error::TooFewColors(3));
    }
    let (a, b) = broken_comb_check(g).ok_or(Error::NotBrokenComb)?;
    let dm = distance_matrix(g);
    let idx = enumerate_k_aps(g, &dm, 3)?;
    if find_rainbow_k_ap(&idx, c).is_some() {
        return Err(Error::RainbowPresent);
    }
    for &end in &[a, b] {
        let unique = (0..g.n()).all(|v| v == end || c.color(v) != c.color(end));
        if !unique {
            return Err(Error::AntipodalColorsNotUnique);
        }
    }
    let facts = tree_facts(g);
    let is_bijacent = {
        let mut flags = vec![false; g.n()];
        for &v in &facts.bijacent {
            flags[v] = true;
        }
        flags
    };

    let mut checks = Vec::new();

    let mut mono_bad = Vec::new();
    for v in 0..g.n() {
        if g.degree(v) == 3 {
            for &u in g.neighbors(v) {
                if c.color(u) != c.color(v) {
                    mono_bad.push(format!(
                        "vertex {v} color {} has neighbor {u} color {}",
                        c.color(v),
                        c.color(u)
                    ));
                }
            }
        }
    }
    checks.push(LemmaCheck {
        id: "degree-three-monochromatic-neighborhood".into(),
        within_hypothesis: true,
        pass: mono_bad.is_empty(),
        counterexamples: mono_bad,
    });

    let path = shortest_path(g, a, b).expect("broken comb is connected");
    let d = path.len() - 1;
    let mut bij_bad = Vec::new();
    for j in 2..=d {
        let col = c.color(path[j]);
        if col == c.color(path[d]) {
            continue;
        }
        if (0..j).any(|i| c.color(path[i]) == col) {
            continue;
        }
        if !is_bijacent[path[j]] {
            bij_bad.push(format!(
                "forward: new color {col} at non-bijacent path vertex {}",
                path[j]
            ));
        }
    }
    for j in 0..=d.saturating_sub(2) {
        let col = c.color(path[j]);
        if col == c.color(path[0]) {
            continue;
        }
        if (j + 1..=d).any(|i| c.color(path[i]) == col) {
            continue;
        }
        if !is_bijacent[path[j]] {
            bij_bad.push(format!(
                "backward: new color {col} at non-bijacent path vertex {}",
                path[j]
            ));
        }
    }
    checks.push(LemmaCheck {
        id: "new-color-on-path-is-bijacent".into(),
        within_hypothesis: c.r() >= 4,
        pass: bij_bad.is_empty(),
        counterexamples: bij_bad,
    });

    Ok(LemmaReport {
        antipodal: (a, b),
        checks,
    })
}

/// Isomorphism-invariant key for a tree: the canonical parenthesis encoding
/// rooted at a centroid, minimized over both centroids when there are two.
/// Two trees are isomorphic exactly when their keys are byte-equal, which
/// makes the key suitable for deduplicating labeled tree sweeps.
pub fn tree_canonical_key(g: &Graph) -> Result<Vec<u8>> {
    let n = g.n();
    if n == 0 || g.m() != n - 1 || connected_components(g).len() != 1 {
        return Err(Error::NotATree);
    }
    if n == 1 {
        return Ok(b"()".to_vec());
    }

    // Subtree sizes from an arbitrary root, via an explicit post-order.
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![0usize];
    let mut seen = vec![false; n];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        order.push(v);
        for &u in g.neighbors(v) {
            if !seen[u] {
                seen[u] = true;
                parent[u] = v;
                stack.push(u);
            }
        }
    }
    let mut size = vec![1usize; n];
    for &v in order.iter().rev() {
        if parent[v] != usize::MAX {
            size[parent[v]] += size[v];
        }
    }

    // A centroid minimizes the largest component left by its removal.
    let heaviest = |v: usize| -> usize {
        let mut best = n - size[v];
        for &u in g.neighbors(v) {
            if parent[u] == v {
                best = best.max(size[u]);
            }
        }
        best
    };
    let target = (0..n).map(heaviest).min().unwrap();
    let centroids: Vec<usize> = (0..n).filter(|&v| heaviest(v) == target).collect();

    fn encode(g: &Graph, v: usize, from: usize) -> Vec<u8> {
        let mut parts: Vec<Vec<u8>> = g
            .neighbors(v)
            .iter()
            .filter(|&&u| u != from)
            .map(|&u| encode(g, u, v))
            .collect();
        parts.sort();
        let mut out = Vec::with_capacity(2 + parts.iter().map(Vec::len).sum::<usize>());
        out.push(b'(');
        for p in parts {
            out.extend_from_slice(&p);
        }
        out.push(b')');
        out
    }

    Ok(centroids
        .iter()
        .map(|&c| encode(g, c, usize::MAX))
        .min()
        .unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{generate, labeled_trees, FamilySpec};
    use crate::solver::{aw, SearchConfig};

    fn family(s: &str) -> Graph {
        generate(&FamilySpec::parse(s).unwrap()).unwrap()
    }

    #[test]
    fn facts_on_paths_and_stars() {
        let p6 = family("path:6");
        let f = tree_facts(&p6);
        assert!(f.is_tree);
        assert_eq!(f.diameter, 5);
        assert_eq!(f.diametral_pair, Some((0, 5)));
        assert_eq!(f.bijacent, vec![2, 3]);
        assert_eq!(f.max_path_bijacent, 2);

        let star = family("star:4");
        let f = tree_facts(&star);
        assert!(f.is_tree);
        assert_eq!(f.diameter, 2);
        assert_eq!(f.diametral_pair, Some((1, 2)));
        assert!(f.bijacent.is_empty());
        assert_eq!(f.max_path_bijacent, 0);

        let c4 = family("cycle:4");
        assert!(!tree_facts(&c4).is_tree);

        let k1 = Graph::new(1, &[]).unwrap();
        let f = tree_facts(&k1);
        assert!(f.is_tree);
        assert_eq!(f.diameter, 0);
        assert_eq!(f.diametral_pair, Some((0, 0)));
    }

    #[test]
    fn bijacent_counts_on_combs() {
        // In a comb every spine vertex has a pendant leaf, so no vertex is
        // bijacent; stretching the spine of a path creates them.
        let comb = family("comb:4");
        assert!(tree_facts(&comb).bijacent.is_empty());

        let p9 = family("path:9");
        let f = tree_facts(&p9);
        assert_eq!(f.bijacent, vec![2, 3, 4, 5, 6]);
        assert_eq!(f.max_path_bijacent, 5);
    }

    #[test]
    fn broken_comb_recognition() {
        assert_eq!(broken_comb_check(&family("comb:3")), Some((3, 5)));
        assert_eq!(broken_comb_check(&family("path:6")), Some((0, 5)));
        assert_eq!(broken_comb_check(&family("path:2")), Some((0, 1)));
        // A star has three leaf pairs at the diameter.
        assert_eq!(broken_comb_check(&family("star:3")), None);
        // Degree 4 is impossible in a comb.
        assert_eq!(broken_comb_check(&family("star:4")), None);
        // Not a tree.
        assert_eq!(broken_comb_check(&family("cycle:5")), None);
        // Spider with three legs of length 2: internal vertices form a star.
        let spider = Graph::new(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        assert_eq!(broken_comb_check(&spider), None);
        // Single vertex is too small.
        assert_eq!(broken_comb_check(&Graph::new(1, &[]).unwrap()), None);
    }

    #[test]
    fn sibling_leaf_reduction() {
        // Star: all leaves are siblings, keep the first.
        let (red, kept) = reduce_sibling_leaves(&family("star:4")).unwrap();
        assert_eq!(kept, vec![0, 1]);
        assert_eq!(red.n(), 2);
        assert_eq!(red.m(), 1);

        // Paths have no sibling leaves.
        let (red, kept) = reduce_sibling_leaves(&family("path:5")).unwrap();
        assert_eq!(kept, vec![0, 1, 2, 3, 4]);
        assert_eq!(red.edges(), family("path:5").edges());

        // Double star: center 0 with leaves 1,2; vertex 3 adjacent to 0 with
        // leaves 4,5. One leaf survives on each side.
        let g = Graph::new(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)]).unwrap();
        let (red, kept) = reduce_sibling_leaves(&g).unwrap();
        assert_eq!(kept, vec![0, 1, 3, 4]);
        assert_eq!(red.n(), 4);

        assert!(reduce_sibling_leaves(&family("cycle:4")).is_err());
    }

    #[test]
    fn reduction_cascades_through_new_siblings() {
        // Broom: path 0-1-2 with leaves 3,4 on vertex 2. After deleting leaf
        // 4, no new siblings appear and the result is a path.
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (2, 4)]).unwrap();
        let (red, kept) = reduce_sibling_leaves(&g).unwrap();
        assert_eq!(kept, vec![0, 1, 2, 3]);
        assert_eq!(red.m(), 3);
    }

    #[test]
    fn reduction_preserves_aw_on_small_trees() {
        let cfg = SearchConfig::default();
        for n in 2..=8usize {
            for t in labeled_trees(n).unwrap() {
                let (red, _) = reduce_sibling_leaves(&t).unwrap();
                let a = aw(&t, 3, &cfg).unwrap().aw;
                let b = aw(&red, 3, &cfg).unwrap().aw;
                assert_eq!(a, b, "tree {:?}", t.edges());
            }
        }
    }

    #[test]
    fn sibling_leaves_agree_in_every_rainbow_free_coloring() {
        use crate::ap::enumerate_k_aps;
        use crate::solver::{enumerate_extremal, EnumOptions};
        use std::collections::BTreeSet;

        let mut seen = BTreeSet::new();
        let mut checked = 0u64;
        for n in 2..=8usize {
            for t in labeled_trees(n).unwrap() {
                if !seen.insert(tree_canonical_key(&t).unwrap()) {
                    continue;
                }
                let leaves: Vec<usize> = (0..n).filter(|&v| t.degree(v) == 1).collect();
                let mut pairs = Vec::new();
                for (i, &u) in leaves.iter().enumerate() {
                    for &v in &leaves[i + 1..] {
                        if t.neighbors(u) == t.neighbors(v) {
                            pairs.push((u, v));
                        }
                    }
                }
                if pairs.is_empty() {
                    continue;
                }
                let dm = distance_matrix(&t);
                let idx = enumerate_k_aps(&t, &dm, 3).unwrap();
                for r in 3..=n as u32 {
                    for c in enumerate_extremal(&t, &idx, r, &EnumOptions::raw(1 << 22)).unwrap() {
                        checked += 1;
                        for &(u, v) in &pairs {
                            assert_eq!(
                                c.color(u),
                                c.color(v),
                                "tree {:?} r={r} coloring {}",
                                t.edges(),
                                c.to_line()
                            );
                        }
                    }
                }
            }
        }
        // The sweep is only meaningful if some colorings actually survive.
        assert!(checked > 0);
    }

    #[test]
    fn spanning_path_on_colored_paths() {
        let p5 = family("path:5");
        let c = Coloring::new(vec![3, 1, 1, 2, 1], 3).unwrap();
        let path = color_spanning_path(&p5, &c).unwrap();
        // Only vertex 4 peels: colors 3 and 2 each appear once.
        assert_eq!(path, vec![0, 1, 2, 3]);
        let colors: std::collections::BTreeSet<u32> = path.iter().map(|&v| c.color(v)).collect();
        assert_eq!(colors.len(), 3);

        let mono = Coloring::new(vec![1, 1, 1, 1, 1], 1).unwrap();
        assert_eq!(color_spanning_path(&p5, &mono).unwrap().len(), 1);

        let rainbow = Coloring::new(vec![1, 2, 3, 1, 1], 3).unwrap();
        assert!(matches!(
            color_spanning_path(&p5, &rainbow),
            Err(Error::RainbowPresent)
        ));
    }

    #[test]
    fn spanning_path_on_a_star() {
        // Star with center 0: leaves share the center color except one.
        let g = family("star:3");
        let c = Coloring::new(vec![1, 1, 2, 1], 2).unwrap();
        let path = color_spanning_path(&g, &c).unwrap();
        assert_eq!(path, vec![0, 2]);
    }

    #[test]
    fn spanning_paths_exist_for_all_extremal_colorings_of_small_trees() {
        use crate::ap::enumerate_k_aps;
        use crate::solver::{enumerate_extremal, EnumOptions};
        let cfg = SearchConfig::default();
        for n in 2..=7usize {
            for t in labeled_trees(n).unwrap() {
                let res = aw(&t, 3, &cfg).unwrap();
                let r = res.aw - 1;
                if r < 3 {
                    continue;
                }
                let dm = distance_matrix(&t);
                let idx = enumerate_k_aps(&t, &dm, 3).unwrap();
                let all = enumerate_extremal(&t, &idx, r, &EnumOptions::raw(1 << 22)).unwrap();
                for c in &all {
                    let path = color_spanning_path(&t, c).unwrap();
                    let seen: std::collections::BTreeSet<u32> =
                        path.iter().map(|&v| c.color(v)).collect();
                    assert_eq!(seen.len() as u32, r, "tree {:?}", t.edges());
                }
            }
        }
    }

    #[test]
    fn lemma_audit_with_a_degree_three_vertex() {
        use crate::ap::enumerate_k_aps;
        use crate::solver::{enumerate_extremal, EnumOptions};
        // Spine of six vertices with a single pendant on spine vertex 2: a
        // broken comb with a degree-3 vertex and aw = 4, so rainbow-free
        // exact 3-colorings exist. Audit all of them whose antipodal leaf
        // colors are unique.
        let g = family("brokencomb:6,4");
        assert_eq!(broken_comb_check(&g), Some((0, 5)));
        let cfg = SearchConfig::default();
        let res = aw(&g, 3, &cfg).unwrap();
        assert_eq!(res.aw, 4);
        let dm = distance_matrix(&g);
        let idx = enumerate_k_aps(&g, &dm, 3).unwrap();
        let all = enumerate_extremal(&g, &idx, 3, &EnumOptions::raw(1 << 22)).unwrap();
        assert!(!all.is_empty());
        let mut audited = 0;
        for c in &all {
            match lemma_checks(&g, c) {
                Ok(report) => {
                    audited += 1;
                    assert_eq!(report.antipodal, (0, 5));
                    assert!(report.all_pass(), "coloring {:?}", c.colors());
                    assert!(report.checks[0].pass, "coloring {:?}", c.colors());
                }
                Err(Error::AntipodalColorsNotUnique) => {}
                Err(e) => panic!("unexpected error: {e}"),
            }
        }
        assert!(audited > 0);
    }

    #[test]
    fn lemma_audit_within_four_color_hypothesis() {
        use crate::ap::enumerate_k_aps;
        use crate::solver::{enumerate_extremal, EnumOptions};
        // P_10 has aw = 5, so rainbow-free exact 4-colorings exist and the
        // bijacency lemma applies with full force.
        let g = family("path:10");
        let cfg = SearchConfig::default();
        let res = aw(&g, 3, &cfg).unwrap();
        assert_eq!(res.aw, 5);
        let dm = distance_matrix(&g);
        let idx = enumerate_k_aps(&g, &dm, 3).unwrap();
        let all = enumerate_extremal(&g, &idx, 4, &EnumOptions::raw(1 << 22)).unwrap();
        assert!(!all.is_empty());
        let mut audited = 0;
        for c in &all {
            match lemma_checks(&g, c) {
                Ok(report) => {
                    audited += 1;
                    let bij = &report.checks[1];
                    assert!(bij.within_hypothesis);
                    assert!(bij.pass, "coloring {:?}", c.colors());
                }
                Err(Error::AntipodalColorsNotUnique) => {}
                Err(e) => panic!("unexpected error: {e}"),
            }
        }
        assert!(audited > 0);
    }

    #[test]
    fn lemma_checks_reject_bad_inputs() {
        let g = family("comb:3");
        let mono = Coloring::new(vec![1; 6], 1).unwrap();
        assert!(matches!(
            lemma_checks(&g, &mono),
            Err(Error::TooFewColors(3))
        ));
        let star = family("star:3");
        let c = Coloring::new(vec![1, 2, 3, 3], 3).unwrap();
        assert!(matches!(lemma_checks(&star, &c), Err(Error::NotBrokenComb)));
    }

    #[test]
    fn canonical_keys_count_unlabeled_trees() {
        use std::collections::BTreeSet;
        // Number of unlabeled trees on n vertices for n = 1..=9.
        let expected = [1usize, 1, 1, 2, 3, 6, 11, 23, 47];
        for (i, &want) in expected.iter().enumerate() {
            let n = i + 1;
            let mut keys = BTreeSet::new();
            for t in labeled_trees(n).unwrap() {
                keys.insert(tree_canonical_key(&t).unwrap());
            }
            assert_eq!(keys.len(), want, "n = {n}");
        }
    }

    #[test]
    fn canonical_keys_separate_and_identify() {
        let path = family("path:6");
        let star = family("star:5");
        let comb = family("comb:3");
        assert_ne!(
            tree_canonical_key(&path).unwrap(),
            tree_canonical_key(&star).unwrap()
        );
        assert_ne!(
            tree_canonical_key(&path).unwrap(),
            tree_canonical_key(&comb).unwrap()
        );
        // Relabeling leaves the key unchanged.
        let relabeled = path.permuted(&[3, 5, 0, 2, 4, 1]).unwrap();
        assert_eq!(
            tree_canonical_key(&path).unwrap(),
            tree_canonical_key(&relabeled).unwrap()
        );
        assert!(matches!(
            tree_canonical_key(&family("cycle:5")),
            Err(Error::NotATree)
        ));
    }
}
