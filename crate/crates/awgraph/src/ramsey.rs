//! The bridge from rainbow progressions to path Ramsey theory.
//!
//! Given an exact r-coloring of a connected graph, pick one representative
//! vertex per color class and form the complete graph on the classes,
//! coloring each edge by the graph distance between the chosen
//! representatives. A monochromatic k-vertex path in that complete graph is
//! a sequence of representatives with equal consecutive distances, i.e. a
//! k-AP, and its vertices lie in distinct classes, so it is rainbow. This
//! is why r at or above the d-color Ramsey number of P_k forces a rainbow
//! progression in any diameter-d graph.

use crate::ap::Kap;
use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};

/// A complete graph on color-class representatives with distance-colored
/// edges.
#[derive(Debug, Clone)]
pub struct EdgeColoredComplete {
    reps: Vec<usize>,
    color: Vec<u32>,
}

impl EdgeColoredComplete {
    pub fn r(&self) -> usize {
        self.reps.len()
    }

    /// The representative vertex behind class index `i`.
    pub fn rep(&self, i: usize) -> usize {
        self.reps[i]
    }

    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    /// Edge color between class indices `i` and `j` (0 on the diagonal).
    pub fn edge_color(&self, i: usize, j: usize) -> u32 {
        self.color[i * self.r() + j]
    }

    /// One `u v d` line per edge, where `u` and `v` are representative
    /// vertices and `d` their distance.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for i in 0..self.r() {
            for j in i + 1..self.r() {
                out.push_str(&format!(
                    "{} {} {}\n",
                    self.reps[i],
                    self.reps[j],
                    self.edge_color(i, j)
                ));
            }
        }
        out
    }

    /// Lexicographically first sequence of `k` distinct class indices whose
    /// consecutive edges all carry one color.
    pub fn find_monochromatic_path(&self, k: usize) -> Option<Vec<usize>> {
        if k < 2 || k > self.r() {
            return None;
        }
        let mut path = Vec::with_capacity(k);
        for start in 0..self.r() {
            path.push(start);
            if self.extend_path(&mut path, 0, k) {
                return Some(path);
            }
            path.pop();
        }
        None
    }

    fn extend_path(&self, path: &mut Vec<usize>, edge: u32, k: usize) -> bool {
        if path.len() == k {
            return true;
        }
        let last = *path.last().expect("path nonempty");
        for next in 0..self.r() {
            if path.contains(&next) {
                continue;
            }
            let ec = self.edge_color(last, next);
            if edge != 0 && ec != edge {
                continue;
            }
            path.push(next);
            if self.extend_path(path, ec, k) {
                return true;
            }
            path.pop();
        }
        false
    }
}

/// Builds the distance-colored complete graph on the given representatives.
/// Representatives must be distinct and pairwise connected.
pub fn build_distance_complete(dm: &DistanceMatrix, reps: &[usize]) -> Result<EdgeColoredComplete> {
    let r = reps.len();
    let mut color = vec![0u32; r * r];
    for i in 0..r {
        for j in i + 1..r {
            if reps[i] == reps[j] {
                return Err(Error::DuplicateRepresentative(reps[i]));
            }
            let d = dm.get(reps[i], reps[j]).ok_or(Error::Disconnected)?;
            color[i * r + j] = d;
            color[j * r + i] = d;
        }
    }
    Ok(EdgeColoredComplete {
        reps: reps.to_vec(),
        color,
    })
}

/// How representatives are chosen in [`rainbow_via_bridge`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RepMode {
    /// The lowest-indexed vertex of each class. One shot: cheap, and enough
    /// to reproduce the Ramsey argument, but it can miss rainbow
    /// progressions that other representatives would reveal.
    LowestIndex,
    /// Every combination of representatives, in odometer order starting
    /// from the lowest-indexed ones. Finds a rainbow progression whenever
    /// one exists; `budget` caps the number of combinations tried.
    Exhaustive { budget: u64 },
}

/// Hunts for a rainbow k-AP by the representative-bridge argument. The
/// coloring must be exact on a connected graph. Returns `Ok(None)` when the
/// bridge finds nothing, which for [`RepMode::LowestIndex`] does not prove
/// absence.
pub fn rainbow_via_bridge(
    g: &Graph,
    dm: &DistanceMatrix,
    c: &Coloring,
    k: usize,
    mode: RepMode,
) -> Result<Option<Kap>> {
    if k < 2 {
        return Err(Error::KOutOfRange(k));
    }
    if c.len() != g.n() {
        return Err(Error::InvalidColoring(format!(
            "coloring covers {} vertices, graph has {}",
            c.len(),
            g.n()
        )));
    }
    if !c.is_exact() {
        return Err(Error::InvalidColoring(
            "the bridge needs an exact coloring".into(),
        ));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let r = c.r() as usize;
    if r < k {
        return Ok(None);
    }
    let classes = c.classes();
    match mode {
        RepMode::LowestIndex => {
            let reps: Vec<usize> = classes.iter().map(|cl| cl[0]).collect();
            try_reps(dm, &reps, k)
        }
        RepMode::Exhaustive { budget } => {
            let mut choice = vec![0usize; r];
            let mut tried = 0u64;
            loop {
                tried += 1;
                if tried > budget {
                    return Err(Error::BudgetExceeded(budget));
                }
                let reps: Vec<usize> = choice.iter().zip(&classes).map(|(&i, cl)| cl[i]).collect();
                if let Some(hit) = try_reps(dm, &reps, k)? {
                    return Ok(Some(hit));
                }
                let mut done = true;
                for (slot, cl) in choice.iter_mut().zip(&classes).rev() {
                    if *slot + 1 < cl.len() {
                        *slot += 1;
                        done = false;
                        break;
                    }
                    *slot = 0;
                }
                if done {
                    return Ok(None);
                }
            }
        }
    }
}

fn try_reps(dm: &DistanceMatrix, reps: &[usize], k: usize) -> Result<Option<Kap>> {
    let kc = build_distance_complete(dm, reps)?;
    match kc.find_monochromatic_path(k) {
        Some(path) => {
            let witness: Vec<usize> = path.iter().map(|&i| reps[i]).collect();
            Ok(Some(Kap::from_witness(dm, witness)?))
        }
        None => Ok(None),
    }
}
