//! Independent reference implementations used to cross-check the engine:
//! Floyd-Warshall distances, ordered-tuple progression search, and full
//! coloring sweeps straight from the definitions. Everything here favors
//! obviousness over speed and only suits graphs with a handful of vertices.

use std::collections::BTreeSet;

use crate::graph::Graph;

pub fn floyd_warshall(g: &Graph) -> Vec<Vec<Option<u32>>> {
    let n = g.n();
    let mut dist: Vec<Vec<Option<u32>>> = vec![vec![None; n]; n];
    for v in 0..n {
        dist[v][v] = Some(0);
    }
    for (u, v) in g.edges() {
        dist[u][v] = Some(1);
        dist[v][u] = Some(1);
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (dist[i][k], dist[k][j]) {
                    if dist[i][j].map(|cur| a + b < cur).unwrap_or(true) {
                        dist[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    dist
}

/// Vertex sets of k-APs found by extending ordered tuples one vertex at a
/// time, with the common difference fixed by the first step. Both traversal
/// directions of each progression are visited; the set-level deduplication
/// happens in the returned `BTreeSet`.
pub fn naive_k_ap_sets(g: &Graph, k: usize) -> BTreeSet<Vec<usize>> {
    naive_k_ap_sets_from(&floyd_warshall(g), k)
}

pub fn naive_k_ap_sets_from(dist: &[Vec<Option<u32>>], k: usize) -> BTreeSet<Vec<usize>> {
    assert!(k >= 2, "progressions need at least two terms");
    let n = dist.len();
    let mut out = BTreeSet::new();
    let mut tuple = Vec::with_capacity(k);
    for v0 in 0..n {
        tuple.push(v0);
        extend_tuple(dist, &mut tuple, None, k, &mut out);
        tuple.pop();
    }
    out
}

fn extend_tuple(
    dist: &[Vec<Option<u32>>],
    tuple: &mut Vec<usize>,
    diff: Option<u32>,
    k: usize,
    out: &mut BTreeSet<Vec<usize>>,
) {
    if tuple.len() == k {
        let mut set = tuple.clone();
        set.sort_unstable();
        out.insert(set);
        return;
    }
    let last = *tuple.last().expect("tuple nonempty");
    for v in 0..dist.len() {
        if tuple.contains(&v) {
            continue;
        }
        let step = match dist[last][v] {
            Some(d) if d >= 1 => d,
            _ => continue,
        };
        if let Some(required) = diff {
            if step != required {
                continue;
            }
        }
        tuple.push(v);
        extend_tuple(dist, tuple, Some(step), k, out);
        tuple.pop();
    }
}

/// Anti-van der Waerden number computed directly from the definition: the
/// least r such that all of the r^n colorings that use every color contain a
/// rainbow k-AP, or n+1 when the graph has no k-AP.
pub fn brute_force_aw(g: &Graph, k: usize) -> u32 {
    let n = g.n();
    if n == 0 {
        return 1;
    }
    let sets: Vec<Vec<usize>> = naive_k_ap_sets(g, k).into_iter().collect();
    for r in 1..=n as u32 {
        if count_rainbow_free(n, r, &sets) == 0 {
            return r;
        }
    }
    n as u32 + 1
}

/// Number of exact rainbow-free r-colorings of `g`, by full sweep.
pub fn count_exact_rainbow_free(g: &Graph, k: usize, r: u32) -> u64 {
    let n = g.n();
    if n == 0 || r == 0 || r as usize > n {
        return 0;
    }
    let sets: Vec<Vec<usize>> = naive_k_ap_sets(g, k).into_iter().collect();
    count_rainbow_free(n, r, &sets)
}

fn count_rainbow_free(n: usize, r: u32, sets: &[Vec<usize>]) -> u64 {
    let mut colors = vec![1u32; n];
    let mut count = 0;
    loop {
        let mut used = 0u64;
        for &c in &colors {
            used |= 1 << (c - 1);
        }
        if used.count_ones() == r {
            let rainbow = sets.iter().any(|set| {
                let mut mask = 0u64;
                for &v in set {
                    mask |= 1 << (colors[v] - 1);
                }
                mask.count_ones() as usize == set.len()
            });
            if !rainbow {
                count += 1;
            }
        }
        // Advance the base-r odometer.
        let mut pos = n;
        loop {
            if pos == 0 {
                return count;
            }
            pos -= 1;
            if colors[pos] < r {
                colors[pos] += 1;
                break;
            }
            colors[pos] = 1;
        }
    }
}
