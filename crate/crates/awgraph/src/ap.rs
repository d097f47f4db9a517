//! Enumeration of k-term arithmetic progressions in graph distance.
//!
//! A k-AP is a sequence of k distinct vertices whose consecutive graph
//! distances all equal one common finite difference `d >= 1`. Progressions
//! are deduplicated at the vertex-set level: two witnesses over the same set
//! (such as a sequence and its reversal) are one progression. Each stored
//! progression keeps the first witness found in a fixed canonical sweep, for
//! reporting only.

use std::collections::BTreeMap;

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};

/// One k-term progression: the defining vertex set plus a sample witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Kap {
    vertices: Vec<usize>,
    witness: Vec<usize>,
    diff: u32,
}

impl Kap {
    /// Validates a witness sequence: distinct vertices, equal consecutive
    /// finite distances, difference at least 1.
    pub fn from_witness(dm: &DistanceMatrix, witness: Vec<usize>) -> Result<Self> {
        if witness.len() < 2 {
            return Err(Error::InvalidGraph("progression needs k >= 2".into()));
        }
        for (i, &u) in witness.iter().enumerate() {
            if u >= dm.n() {
                return Err(Error::InvalidGraph(format!("vertex {u} out of range")));
            }
            if witness[..i].contains(&u) {
                return Err(Error::InvalidGraph(format!(
                    "degenerate progression: vertex {u} repeats"
                )));
            }
        }
        let diff = dm
            .get(witness[0], witness[1])
            .ok_or_else(|| Error::InvalidGraph("unreachable consecutive pair".into()))?;
        if diff == 0 {
            return Err(Error::InvalidGraph("difference must be at least 1".into()));
        }
        for w in witness.windows(2) {
            if dm.get(w[0], w[1]) != Some(diff) {
                return Err(Error::InvalidGraph(
                    "consecutive distances are not all equal".into(),
                ));
            }
        }
        let mut vertices = witness.clone();
        vertices.sort_unstable();
        Ok(Self {
            vertices,
            witness,
            diff,
        })
    }

    /// Defining vertex set, sorted ascending.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Sample witness in progression order.
    pub fn witness(&self) -> &[usize] {
        &self.witness
    }

    pub fn diff(&self) -> u32 {
        self.diff
    }

    pub fn k(&self) -> usize {
        self.vertices.len()
    }
}

/// All k-APs of a graph in canonical order (lexicographic by vertex set),
/// with a per-vertex incidence index.
#[derive(Debug, Clone)]
pub struct ApIndex {
    k: usize,
    aps: Vec<Kap>,
    incidence: Vec<Vec<u32>>,
}

impl ApIndex {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.aps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.aps.is_empty()
    }

    pub fn aps(&self) -> &[Kap] {
        &self.aps
    }

    pub fn ap(&self, i: usize) -> &Kap {
        &self.aps[i]
    }

    /// Ids of progressions containing vertex `v`, ascending.
    pub fn incidence(&self, v: usize) -> &[u32] {
        &self.incidence[v]
    }

    /// One line per progression: `d=<diff>: v1 v2 ... vk` in witness order.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for ap in &self.aps {
            out.push_str(&format!("d={}:", ap.diff()));
            for &v in ap.witness() {
                out.push_str(&format!(" {v}"));
            }
            out.push('\n');
        }
        out
    }
}

/// Enumerates every k-AP by extending chains separately for each difference
/// `d` in `1..=max finite distance`. Requires `k >= 2`.
pub fn enumerate_k_aps(g: &Graph, dm: &DistanceMatrix, k: usize) -> Result<ApIndex> {
    if k < 2 {
        return Err(Error::KOutOfRange(k));
    }
    let n = g.n();
    let mut found: BTreeMap<Vec<usize>, (Vec<usize>, u32)> = BTreeMap::new();
    if n >= k {
        let mut at_d = vec![Vec::new(); n];
        for d in 1..=dm.max_finite() {
            for (u, list) in at_d.iter_mut().enumerate() {
                list.clear();
                for v in 0..n {
                    if dm.get(u, v) == Some(d) {
                        list.push(v);
                    }
                }
            }
            let mut chain = Vec::with_capacity(k);
            for start in 0..n {
                chain.push(start);
                extend_chain(&at_d, k, d, &mut chain, &mut found);
                chain.pop();
            }
        }
    }
    let aps: Vec<Kap> = found
        .into_iter()
        .map(|(vertices, (witness, diff))| Kap {
            vertices,
            witness,
            diff,
        })
        .collect();
    let mut incidence = vec![Vec::new(); n];
    for (i, ap) in aps.iter().enumerate() {
        for &v in ap.vertices() {
            incidence[v].push(i as u32);
        }
    }
    Ok(ApIndex { k, aps, incidence })
}

fn extend_chain(
    at_d: &[Vec<usize>],
    k: usize,
    d: u32,
    chain: &mut Vec<usize>,
    found: &mut BTreeMap<Vec<usize>, (Vec<usize>, u32)>,
) {
    if chain.len() == k {
        let mut set = chain.clone();
        set.sort_unstable();
        found.entry(set).or_insert_with(|| (chain.clone(), d));
        return;
    }
    let last = *chain.last().expect("chain nonempty");
    for &next in &at_d[last] {
        if !chain.contains(&next) {
            chain.push(next);
            extend_chain(at_d, k, d, chain, found);
            chain.pop();
        }
    }
}

/// True when the progression's vertices receive pairwise distinct colors.
pub fn is_rainbow(c: &Coloring, ap: &Kap) -> bool {
    let mut mask = 0u64;
    for &v in ap.vertices() {
        let bit = 1u64 << (c.color(v) - 1);
        if mask & bit != 0 {
            return false;
        }
        mask |= bit;
    }
    true
}

/// First rainbow progression in the index's canonical order, if any.
pub fn find_rainbow_k_ap<'a>(idx: &'a ApIndex, c: &Coloring) -> Option<&'a Kap> {
    idx.aps().iter().find(|ap| is_rainbow(c, ap))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{all_graphs_on, generate, FamilySpec};
    use crate::graph::distance_matrix;
    use crate::verify::oracle;

    fn index(g: &Graph, k: usize) -> ApIndex {
        enumerate_k_aps(g, &distance_matrix(g), k).unwrap()
    }

    fn sets(idx: &ApIndex) -> Vec<Vec<usize>> {
        idx.aps().iter().map(|ap| ap.vertices().to_vec()).collect()
    }

    #[test]
    fn path3_has_one_3ap() {
        let g = generate(&FamilySpec::Path { n: 3 }).unwrap();
        let idx = index(&g, 3);
        assert_eq!(sets(&idx), vec![vec![0, 1, 2]]);
        assert_eq!(idx.ap(0).diff(), 1);
    }

    #[test]
    fn star_k13_has_four_3ap_sets() {
        // Distances in K_{1,3}: center-leaf 1, leaf-leaf 2. Every triple of
        // vertices supports a progression, one of them with difference 2.
        let g = generate(&FamilySpec::Star { leaves: 3 }).unwrap();
        let idx = index(&g, 3);
        assert_eq!(
            sets(&idx),
            vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]]
        );
        let leaf_only = idx
            .aps()
            .iter()
            .find(|ap| ap.vertices() == [1, 2, 3])
            .unwrap();
        assert_eq!(leaf_only.diff(), 2);
        assert_eq!(sets(&idx), oracle_sets(&g, 3));
    }

    #[test]
    fn cycle4_has_all_triples_at_diff_1() {
        let g = generate(&FamilySpec::Cycle { n: 4 }).unwrap();
        let idx = index(&g, 3);
        assert_eq!(
            sets(&idx),
            vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]]
        );
        assert!(idx.aps().iter().all(|ap| ap.diff() == 1));
    }

    fn oracle_sets(g: &Graph, k: usize) -> Vec<Vec<usize>> {
        oracle::naive_k_ap_sets(g, k).into_iter().collect()
    }

    #[test]
    fn matches_naive_oracle_on_small_corpus() {
        for n in 0..=5 {
            for g in all_graphs_on(n, false).unwrap() {
                for k in 2..=5 {
                    let idx = index(&g, k);
                    assert_eq!(sets(&idx), oracle_sets(&g, k), "n={n} k={k}");
                }
            }
        }
    }

    #[test]
    fn path_aps_are_integer_arithmetic_progressions() {
        for n in 2..=12 {
            let g = generate(&FamilySpec::Path { n }).unwrap();
            for k in 2..=4usize {
                let expected: Vec<Vec<usize>> = {
                    let mut v = Vec::new();
                    for a in 0..n {
                        for d in 1..n {
                            if a + (k - 1) * d < n {
                                v.push((0..k).map(|i| a + i * d).collect());
                            }
                        }
                    }
                    v.sort();
                    v
                };
                assert_eq!(sets(&index(&g, k)), expected, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn middle_vertex_characterization_for_3aps() {
        // {a,b,c} is a 3-AP exactly when some ordering has equal finite
        // consecutive distances; cross-check via explicit middle search.
        for g in all_graphs_on(4, false).unwrap() {
            let dm = distance_matrix(&g);
            let idx = index(&g, 3);
            let mut expected = Vec::new();
            for a in 0..4 {
                for b in a + 1..4 {
                    for c in b + 1..4 {
                        let triple = [a, b, c];
                        let is_ap = (0..3).any(|mid| {
                            let m = triple[mid];
                            let mut others = triple.iter().filter(|&&x| x != m);
                            let x = *others.next().unwrap();
                            let y = *others.next().unwrap();
                            let dx = dm.get(x, m);
                            let dy = dm.get(m, y);
                            dx.is_some() && dx == dy && dx != Some(0)
                        });
                        if is_ap {
                            expected.push(vec![a, b, c]);
                        }
                    }
                }
            }
            assert_eq!(sets(&idx), expected);
        }
    }

    #[test]
    fn witness_reversal_is_also_a_witness() {
        for g in [
            generate(&FamilySpec::Hypercube { dim: 3 }).unwrap(),
            generate(&FamilySpec::CompleteBipartite { m: 3, n: 3 }).unwrap(),
            generate(&FamilySpec::Cycle { n: 7 }).unwrap(),
        ] {
            let dm = distance_matrix(&g);
            for k in 2..=4 {
                let idx = enumerate_k_aps(&g, &dm, k).unwrap();
                for ap in idx.aps() {
                    let mut rev = ap.witness().to_vec();
                    rev.reverse();
                    let same = Kap::from_witness(&dm, rev).unwrap();
                    assert_eq!(same.vertices(), ap.vertices());
                }
            }
        }
    }

    #[test]
    fn rainbow_checks() {
        let g = generate(&FamilySpec::Path { n: 3 }).unwrap();
        let idx = index(&g, 3);
        let c = Coloring::new(vec![1, 2, 3], 3).unwrap();
        assert!(is_rainbow(&c, idx.ap(0)));
        assert_eq!(find_rainbow_k_ap(&idx, &c).unwrap().vertices(), &[0, 1, 2]);

        let g = generate(&FamilySpec::Path { n: 4 }).unwrap();
        let idx = index(&g, 3);
        let c = Coloring::new(vec![1, 2, 2, 1], 2).unwrap();
        assert!(find_rainbow_k_ap(&idx, &c).is_none());
    }

    #[test]
    fn hypercube_antipodal_coloring_has_no_rainbow() {
        let g = generate(&FamilySpec::Hypercube { dim: 3 }).unwrap();
        let idx = index(&g, 3);
        let colors: Vec<u32> = (0..8)
            .map(|v| match v {
                0 => 1,
                7 => 2,
                _ => 3,
            })
            .collect();
        let c = Coloring::new(colors, 3).unwrap();
        assert!(c.is_exact());
        assert!(find_rainbow_k_ap(&idx, &c).is_none());
    }

    #[test]
    fn from_witness_validation() {
        let g = generate(&FamilySpec::Path { n: 5 }).unwrap();
        let dm = distance_matrix(&g);
        let ap = Kap::from_witness(&dm, vec![4, 2, 0]).unwrap();
        assert_eq!(ap.vertices(), &[0, 2, 4]);
        assert_eq!(ap.diff(), 2);
        assert!(Kap::from_witness(&dm, vec![0, 1, 0]).is_err());
        assert!(Kap::from_witness(&dm, vec![0, 1, 3]).is_err());
        assert!(Kap::from_witness(&dm, vec![2]).is_err());

        let disjoint = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        let dm = distance_matrix(&disjoint);
        assert!(Kap::from_witness(&dm, vec![0, 2]).is_err());
    }

    #[test]
    fn k_out_of_range_and_empty_cases() {
        let g = generate(&FamilySpec::Path { n: 3 }).unwrap();
        let dm = distance_matrix(&g);
        assert!(matches!(
            enumerate_k_aps(&g, &dm, 1),
            Err(Error::KOutOfRange(1))
        ));
        assert!(enumerate_k_aps(&g, &dm, 4).unwrap().is_empty());
        let k1 = Graph::new(1, &[]).unwrap();
        let dm = distance_matrix(&k1);
        assert!(enumerate_k_aps(&k1, &dm, 3).unwrap().is_empty());
    }

    #[test]
    fn dump_format() {
        let g = generate(&FamilySpec::Path { n: 3 }).unwrap();
        let idx = index(&g, 3);
        assert_eq!(idx.dump(), "d=1: 0 1 2\n");
    }
}
