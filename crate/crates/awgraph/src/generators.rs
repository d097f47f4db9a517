//! Graph family constructors with documented vertex labelings, labeled
//! exhaustive corpora, labeled tree enumeration, and known automorphism
//! generator sets for structured families.
//!
//! Labelings:
//! - `path:n` has vertices `0..n` with edges `(i, i+1)`.
//! - `cycle:n` adds the wrap edge `(n-1, 0)`.
//! - `complete:n`, `empty:n` are the obvious graphs on `0..n`.
//! - `star:n` is K_{1,n} with center 0 and leaves `1..=n`.
//! - `kbipartite:m,n` has sides `0..m` and `m..m+n`.
//! - `hypercube:d` labels each vertex by its bit string, so distance is
//!   Hamming distance `popcount(u ^ v)`.
//! - `btree:h` is the complete binary tree of height `h` in heap order:
//!   children of `i` are `2i+1` and `2i+2`.
//! - `comb:s` is a path on `0..s` with a pendant leaf `s+i` on each spine
//!   vertex `i`; `brokencomb:s,mask` keeps only the pendants selected by the
//!   bits of `mask`, appended in spine order after the spine.
//! - `product:(A)x(B)` is the Cartesian product; vertex `(u, i)` of
//!   `A x B` is labeled `u + i * |V(A)|`.

use std::collections::BTreeSet;
use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A parsed family request, as written on the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    Empty { n: usize },
    Star { leaves: usize },
    CompleteBipartite { m: usize, n: usize },
    Hypercube { dim: usize },
    CompleteBinaryTree { height: usize },
    Comb { spine: usize },
    BrokenComb { spine: usize, mask: u64 },
    Product(Box<FamilySpec>, Box<FamilySpec>),
}

impl FamilySpec {
    /// Parses shorthand such as `path:9`, `kbipartite:5,5`, or
    /// `product:(path:3)x(cycle:4)`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("product:") {
            return parse_product(rest);
        }
        let (kind, args) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("family '{s}' needs a ':<params>' part")))?;
        let nums: Vec<&str> = args.split(',').collect();
        let one = |what: &str| -> Result<usize> {
            if nums.len() != 1 {
                return Err(Error::Parse(format!("{kind} takes one parameter ({what})")));
            }
            nums[0]
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad {what} '{}'", nums[0])))
        };
        match kind {
            "path" => Ok(Self::Path { n: one("n")? }),
            "cycle" => Ok(Self::Cycle { n: one("n")? }),
            "complete" => Ok(Self::Complete { n: one("n")? }),
            "empty" => Ok(Self::Empty { n: one("n")? }),
            "star" => Ok(Self::Star {
                leaves: one("leaf count")?,
            }),
            "hypercube" => Ok(Self::Hypercube {
                dim: one("dimension")?,
            }),
            "btree" => Ok(Self::CompleteBinaryTree {
                height: one("height")?,
            }),
            "comb" => Ok(Self::Comb {
                spine: one("spine length")?,
            }),
            "kbipartite" => {
                if nums.len() != 2 {
                    return Err(Error::Parse("kbipartite takes two parameters m,n".into()));
                }
                let m = nums[0]
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad m '{}'", nums[0])))?;
                let n = nums[1]
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad n '{}'", nums[1])))?;
                Ok(Self::CompleteBipartite { m, n })
            }
            "brokencomb" => {
                if nums.len() != 2 {
                    return Err(Error::Parse(
                        "brokencomb takes two parameters spine,leafmask".into(),
                    ));
                }
                let spine = nums[0]
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad spine '{}'", nums[0])))?;
                let mask = nums[1]
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad leaf mask '{}'", nums[1])))?;
                Ok(Self::BrokenComb { spine, mask })
            }
            other => Err(Error::Parse(format!("unknown family '{other}'"))),
        }
    }
}

fn parse_product(rest: &str) -> Result<FamilySpec> {
    // rest = "(A)x(B)" with A, B themselves family shorthands.
    let rest = rest.trim();
    if !rest.starts_with('(') {
        return Err(Error::Parse("product syntax is product:(A)x(B)".into()));
    }
    let close = matching_paren(rest)?;
    let a = &rest[1..close];
    let tail = rest[close + 1..].trim_start();
    let tail = tail
        .strip_prefix('x')
        .ok_or_else(|| Error::Parse("product syntax is product:(A)x(B)".into()))?
        .trim_start();
    if !tail.starts_with('(') || !tail.ends_with(')') {
        return Err(Error::Parse("product syntax is product:(A)x(B)".into()));
    }
    let close_b = matching_paren(tail)?;
    if close_b != tail.len() - 1 {
        return Err(Error::Parse("trailing input after product".into()));
    }
    let b = &tail[1..close_b];
    Ok(FamilySpec::Product(
        Box::new(FamilySpec::parse(a)?),
        Box::new(FamilySpec::parse(b)?),
    ))
}

fn matching_paren(s: &str) -> Result<usize> {
    let mut depth = 0usize;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return Ok(i);
                }
            }
            _ => {}
        }
    }
    Err(Error::Parse("unbalanced parentheses in product".into()))
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Path { n } => write!(f, "path:{n}"),
            Self::Cycle { n } => write!(f, "cycle:{n}"),
            Self::Complete { n } => write!(f, "complete:{n}"),
            Self::Empty { n } => write!(f, "empty:{n}"),
            Self::Star { leaves } => write!(f, "star:{leaves}"),
            Self::CompleteBipartite { m, n } => write!(f, "kbipartite:{m},{n}"),
            Self::Hypercube { dim } => write!(f, "hypercube:{dim}"),
            Self::CompleteBinaryTree { height } => write!(f, "btree:{height}"),
            Self::Comb { spine } => write!(f, "comb:{spine}"),
            Self::BrokenComb { spine, mask } => write!(f, "brokencomb:{spine},{mask}"),
            Self::Product(a, b) => write!(f, "product:({a})x({b})"),
        }
    }
}

/// Builds the requested family member, named by the spec's shorthand.
pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    let g = match spec {
        FamilySpec::Path { n } => {
            require(*n >= 1, "path needs n >= 1")?;
            let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
            Graph::new(*n, &edges)?
        }
        FamilySpec::Cycle { n } => {
            require(*n >= 3, "cycle needs n >= 3")?;
            let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
            edges.push((n - 1, 0));
            Graph::new(*n, &edges)?
        }
        FamilySpec::Complete { n } => {
            require(*n >= 1, "complete graph needs n >= 1")?;
            let mut edges = Vec::new();
            for u in 0..*n {
                for v in u + 1..*n {
                    edges.push((u, v));
                }
            }
            Graph::new(*n, &edges)?
        }
        FamilySpec::Empty { n } => Graph::new(*n, &[])?,
        FamilySpec::Star { leaves } => {
            require(*leaves >= 1, "star needs at least one leaf")?;
            let edges: Vec<_> = (1..=*leaves).map(|i| (0, i)).collect();
            Graph::new(leaves + 1, &edges)?
        }
        FamilySpec::CompleteBipartite { m, n } => {
            require(*m >= 1 && *n >= 1, "complete bipartite needs m, n >= 1")?;
            let mut edges = Vec::new();
            for u in 0..*m {
                for v in 0..*n {
                    edges.push((u, m + v));
                }
            }
            Graph::new(m + n, &edges)?
        }
        FamilySpec::Hypercube { dim } => {
            require(*dim >= 1 && *dim <= 16, "hypercube needs 1 <= dim <= 16")?;
            let n = 1usize << dim;
            let mut edges = Vec::new();
            for u in 0..n {
                for b in 0..*dim {
                    let v = u ^ (1 << b);
                    if u < v {
                        edges.push((u, v));
                    }
                }
            }
            Graph::new(n, &edges)?
        }
        FamilySpec::CompleteBinaryTree { height } => {
            require(*height <= 20, "binary tree needs height <= 20")?;
            let n = (1usize << (height + 1)) - 1;
            let mut edges = Vec::new();
            for i in 0..n {
                for c in [2 * i + 1, 2 * i + 2] {
                    if c < n {
                        edges.push((i, c));
                    }
                }
            }
            Graph::new(n, &edges)?
        }
        FamilySpec::Comb { spine } => {
            let s = *spine;
            require((1..=32).contains(&s), "comb needs 1 <= spine <= 32")?;
            build_broken_comb(s, (1u64 << s) - 1)?
        }
        FamilySpec::BrokenComb { spine, mask } => {
            let s = *spine;
            require((1..=32).contains(&s), "broken comb needs 1 <= spine <= 32")?;
            require(
                *mask < (1u64 << s),
                "broken comb leaf mask has bits beyond the spine",
            )?;
            let g = build_broken_comb(s, *mask)?;
            if crate::tree::broken_comb_check(&g).is_none() {
                return Err(Error::InvalidFamily(
                    "leaf mask does not leave a unique diameter-realizing leaf pair".into(),
                ));
            }
            g
        }
        FamilySpec::Product(a, b) => {
            let ga = generate(a)?;
            let gb = generate(b)?;
            return cartesian_product(&ga, &gb);
        }
    };
    Ok(g.with_name(spec.to_string()))
}

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidFamily(msg.into()))
    }
}

fn build_broken_comb(spine: usize, mask: u64) -> Result<Graph> {
    let mut edges: Vec<_> = (0..spine - 1).map(|i| (i, i + 1)).collect();
    let mut next = spine;
    for i in 0..spine {
        if mask & (1 << i) != 0 {
            edges.push((i, next));
            next += 1;
        }
    }
    Graph::new(next, &edges)
}

/// Cartesian product. Vertex `(u, i)` is labeled `u + i * |V(g)|`; vertices
/// are adjacent when they agree in one coordinate and are adjacent in the
/// other. Both factors must be nonempty.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    if g.n() == 0 || h.n() == 0 {
        return Err(Error::InvalidFamily(
            "product factors must be nonempty".into(),
        ));
    }
    let gn = g.n();
    let n = gn * h.n();
    let mut edges = Vec::new();
    for i in 0..h.n() {
        for (u, v) in g.edges() {
            edges.push((u + i * gn, v + i * gn));
        }
    }
    for u in 0..gn {
        for (i, j) in h.edges() {
            edges.push((u + i * gn, u + j * gn));
        }
    }
    let out = Graph::new(n, &edges)?;
    Ok(match (g.name(), h.name()) {
        (Some(a), Some(b)) => out.with_name(format!("product:({a})x({b})")),
        _ => out,
    })
}

const CORPUS_MAX_N: usize = 7;

/// Streams every labeled simple graph on exactly `n` vertices in edge-mask
/// order, optionally filtered to connected graphs. Labeled means duplicates
/// by isomorphism are deliberately kept. Bounded at `n <= 7`.
pub fn all_graphs_on(n: usize, connected_only: bool) -> Result<GraphStream> {
    if n > CORPUS_MAX_N {
        return Err(Error::CorpusTooLarge(n, CORPUS_MAX_N));
    }
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    let total = 1u64 << pairs.len();
    Ok(GraphStream {
        n,
        pairs,
        next: 0,
        total,
        connected_only,
    })
}

/// Number of edge subsets on `n` labeled vertices, i.e. 2^C(n,2).
pub fn edge_mask_total(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1) / 2)
}

/// The graph whose edge set is selected by `mask` over the vertex pairs
/// (0,1), (0,2), ..., (0,n-1), (1,2), ... in [`all_graphs_on`] order.
pub fn graph_from_edge_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask & (1u64 << bit) != 0 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::new(n, &edges).expect("mask edges are valid")
}

/// Number of labeled trees on `n` vertices: n^(n-2), with 1 for n <= 2.
pub fn labeled_tree_count(n: usize) -> u64 {
    if n <= 2 {
        1
    } else {
        (n as u64).pow(n as u32 - 2)
    }
}

/// The labeled tree whose Pruefer sequence is `index` written in base n,
/// matching [`labeled_trees`] order.
pub fn tree_from_index(n: usize, index: u64) -> Graph {
    if n == 1 {
        return Graph::new(1, &[]).expect("valid");
    }
    let mut seq = vec![0usize; n.saturating_sub(2)];
    let mut rem = index;
    for slot in seq.iter_mut().rev() {
        *slot = (rem % n as u64) as usize;
        rem /= n as u64;
    }
    debug_assert_eq!(rem, 0, "index beyond labeled_tree_count");
    let edges = prufer_decode(n, &seq).expect("sequence is in range");
    Graph::new(n, &edges).expect("decoded trees are simple")
}

pub struct GraphStream {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    total: u64,
    connected_only: bool,
}

impl Iterator for GraphStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next < self.total {
            let mask = self.next;
            self.next += 1;
            let edges: Vec<_> = self
                .pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::new(self.n, &edges).expect("mask edges are valid");
            if !self.connected_only || g.is_connected() {
                return Some(g);
            }
        }
        None
    }
}

/// Decodes a Pruefer sequence over `0..n` into the edge list of the labeled
/// tree it encodes. The sequence length must be `n - 2` (empty for `n = 2`).
pub fn prufer_decode(n: usize, seq: &[usize]) -> Result<Vec<(usize, usize)>> {
    if n < 2 {
        return Err(Error::InvalidFamily("Pruefer decoding needs n >= 2".into()));
    }
    if seq.len() != n - 2 {
        return Err(Error::InvalidFamily(format!(
            "Pruefer sequence for n={n} must have length {}",
            n - 2
        )));
    }
    if seq.iter().any(|&x| x >= n) {
        return Err(Error::InvalidFamily("Pruefer entry out of range".into()));
    }
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    // `ptr` scans for the smallest leaf; `leaf` tracks the current one.
    let mut ptr = 0;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for &x in seq {
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 && x < ptr {
            leaf = x;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    Ok(edges)
}

/// Streams all `n^(n-2)` labeled trees on `n` vertices via Pruefer sequences
/// in odometer order. `n = 1` yields the single-vertex tree.
pub fn labeled_trees(n: usize) -> Result<TreeStream> {
    if n == 0 {
        return Err(Error::InvalidFamily("trees need n >= 1".into()));
    }
    if n > 10 {
        return Err(Error::CorpusTooLarge(n, 10));
    }
    Ok(TreeStream {
        n,
        seq: if n >= 2 { vec![0; n - 2] } else { Vec::new() },
        done: false,
    })
}

pub struct TreeStream {
    n: usize,
    seq: Vec<usize>,
    done: bool,
}

impl Iterator for TreeStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.done {
            return None;
        }
        let g = if self.n == 1 {
            Graph::new(1, &[]).expect("valid")
        } else {
            let edges = prufer_decode(self.n, &self.seq).expect("odometer stays in range");
            Graph::new(self.n, &edges).expect("decoded trees are simple")
        };
        // Advance the odometer.
        self.done = true;
        for slot in self.seq.iter_mut().rev() {
            if *slot + 1 < self.n {
                *slot += 1;
                self.done = false;
                break;
            }
            *slot = 0;
        }
        if self.n == 1 {
            self.done = true;
        }
        Some(g)
    }
}

/// A uniformly random labeled tree on `n` vertices from a random Pruefer
/// sequence.
pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidFamily("trees need n >= 1".into()));
    }
    if n == 1 {
        return Graph::new(1, &[]);
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    Graph::new(n, &prufer_decode(n, &seq)?)
}

/// Known automorphism generator sets for structured families, as vertex maps
/// (`perm[v]` is the image of `v`). Families without a shipped set return an
/// empty list.
pub fn automorphism_generators(spec: &FamilySpec) -> Vec<Vec<usize>> {
    match spec {
        FamilySpec::Path { n } => {
            if *n >= 2 {
                vec![(0..*n).rev().collect()]
            } else {
                Vec::new()
            }
        }
        FamilySpec::Cycle { n } => {
            let rotate: Vec<usize> = (0..*n).map(|v| (v + 1) % n).collect();
            let reflect: Vec<usize> = (0..*n).map(|v| (n - v) % n).collect();
            vec![rotate, reflect]
        }
        FamilySpec::Complete { n } | FamilySpec::Empty { n } => symmetric_group_gens(*n),
        FamilySpec::Star { leaves } => {
            // Fix the center, permute leaves 1..=leaves.
            let l = *leaves;
            if l < 2 {
                return Vec::new();
            }
            let mut swap: Vec<usize> = (0..=l).collect();
            swap.swap(1, 2);
            let mut rotate: Vec<usize> = (0..=l).collect();
            for i in 1..=l {
                rotate[i] = if i == l { 1 } else { i + 1 };
            }
            vec![swap, rotate]
        }
        FamilySpec::CompleteBipartite { m, n } => {
            let total = m + n;
            let mut gens = Vec::new();
            if *m >= 2 {
                let mut swap: Vec<usize> = (0..total).collect();
                swap.swap(0, 1);
                gens.push(swap);
                let mut rot: Vec<usize> = (0..total).collect();
                for i in 0..*m {
                    rot[i] = (i + 1) % m;
                }
                gens.push(rot);
            }
            if *n >= 2 {
                let mut swap: Vec<usize> = (0..total).collect();
                swap.swap(*m, m + 1);
                gens.push(swap);
                let mut rot: Vec<usize> = (0..total).collect();
                for i in 0..*n {
                    rot[m + i] = m + (i + 1) % n;
                }
                gens.push(rot);
            }
            if m == n {
                gens.push((0..total).map(|v| (v + m) % total).collect());
            }
            gens
        }
        FamilySpec::Hypercube { dim } => {
            let d = *dim;
            let size = 1usize << d;
            let mut gens = Vec::new();
            if d >= 2 {
                // Swap coordinate bits 0 and 1.
                gens.push(
                    (0..size)
                        .map(|v| {
                            let b0 = v & 1;
                            let b1 = (v >> 1) & 1;
                            (v & !3) | (b0 << 1) | b1
                        })
                        .collect(),
                );
                // Rotate all coordinate bits.
                gens.push(
                    (0..size)
                        .map(|v| ((v << 1) | (v >> (d - 1))) & (size - 1))
                        .collect(),
                );
            }
            // Flip coordinate bit 0.
            gens.push((0..size).map(|v| v ^ 1).collect());
            gens
        }
        FamilySpec::CompleteBinaryTree { height } => {
            // One generator per internal node: swap its two subtrees.
            let h = *height;
            let n = (1usize << (h + 1)) - 1;
            let internal = (1usize << h) - 1;
            let mut gens = Vec::new();
            for node in 0..internal {
                let mut perm: Vec<usize> = (0..n).collect();
                mirror_subtrees(2 * node + 1, 2 * node + 2, n, &mut perm);
                gens.push(perm);
            }
            gens
        }
        FamilySpec::Comb { spine } => {
            let s = *spine;
            if s < 2 {
                return Vec::new();
            }
            let mut perm = vec![0usize; 2 * s];
            for i in 0..s {
                perm[i] = s - 1 - i;
                perm[s + i] = s + (s - 1 - i);
            }
            vec![perm]
        }
        FamilySpec::BrokenComb { spine, mask } => {
            // Reversal survives only when the leaf mask is palindromic.
            let s = *spine;
            let reversed = (0..s).fold(0u64, |acc, i| acc | (((mask >> i) & 1) << (s - 1 - i)));
            if reversed != *mask || s < 2 {
                return Vec::new();
            }
            let leaves = mask.count_ones() as usize;
            let mut leaf_of_spine = vec![usize::MAX; s];
            let mut next = s;
            for (i, slot) in leaf_of_spine.iter_mut().enumerate() {
                if mask & (1 << i) != 0 {
                    *slot = next;
                    next += 1;
                }
            }
            let mut perm = vec![0usize; s + leaves];
            for i in 0..s {
                perm[i] = s - 1 - i;
                if leaf_of_spine[i] != usize::MAX {
                    perm[leaf_of_spine[i]] = leaf_of_spine[s - 1 - i];
                }
            }
            vec![perm]
        }
        FamilySpec::Product(a, b) => {
            // Lift each factor's generators through the product labeling.
            let (Ok(ga), Ok(gb)) = (generate(a), generate(b)) else {
                return Vec::new();
            };
            let gn = ga.n();
            let hn = gb.n();
            let mut gens = Vec::new();
            for pa in automorphism_generators(a) {
                let mut perm = vec![0usize; gn * hn];
                for i in 0..hn {
                    for u in 0..gn {
                        perm[u + i * gn] = pa[u] + i * gn;
                    }
                }
                gens.push(perm);
            }
            for pb in automorphism_generators(b) {
                let mut perm = vec![0usize; gn * hn];
                for i in 0..hn {
                    for u in 0..gn {
                        perm[u + i * gn] = u + pb[i] * gn;
                    }
                }
                gens.push(perm);
            }
            gens
        }
    }
}

fn symmetric_group_gens(n: usize) -> Vec<Vec<usize>> {
    if n < 2 {
        return Vec::new();
    }
    let mut swap: Vec<usize> = (0..n).collect();
    swap.swap(0, 1);
    let rotate: Vec<usize> = (0..n).map(|v| (v + 1) % n).collect();
    vec![swap, rotate]
}

fn mirror_subtrees(a: usize, b: usize, n: usize, perm: &mut [usize]) {
    if a >= n || b >= n {
        return;
    }
    perm[a] = b;
    perm[b] = a;
    mirror_subtrees(2 * a + 1, 2 * b + 1, n, perm);
    mirror_subtrees(2 * a + 2, 2 * b + 2, n, perm);
}

/// Closes a generator set into the full permutation group by breadth-first
/// multiplication. `cap` bounds the group size to protect against runaway
/// inputs.
pub fn close_generators(n: usize, gens: &[Vec<usize>], cap: usize) -> Result<Vec<Vec<usize>>> {
    let identity: Vec<usize> = (0..n).collect();
    let mut group: BTreeSet<Vec<usize>> = BTreeSet::new();
    group.insert(identity.clone());
    let mut frontier = vec![identity];
    while let Some(p) = frontier.pop() {
        for g in gens {
            if g.len() != n {
                return Err(Error::InvalidGraph("generator length mismatch".into()));
            }
            let q: Vec<usize> = (0..n).map(|v| g[p[v]]).collect();
            if group.insert(q.clone()) {
                if group.len() > cap {
                    return Err(Error::EnumerationTooLarge(cap as u64));
                }
                frontier.push(q);
            }
        }
    }
    Ok(group.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{distance_matrix, distance_profile};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn parse_and_display_round_trip() {
        for s in [
            "path:9",
            "cycle:24",
            "complete:5",
            "empty:3",
            "star:6",
            "kbipartite:5,5",
            "hypercube:4",
            "btree:3",
            "comb:4",
            "brokencomb:4,9",
            "product:(path:3)x(cycle:4)",
            "product:(product:(path:2)x(path:2))x(path:2)",
        ] {
            let spec = FamilySpec::parse(s).unwrap();
            assert_eq!(spec.to_string(), s);
            generate(&spec).unwrap();
        }
        assert!(FamilySpec::parse("path").is_err());
        assert!(FamilySpec::parse("path:x").is_err());
        assert!(FamilySpec::parse("blob:3").is_err());
        assert!(FamilySpec::parse("kbipartite:5").is_err());
        assert!(FamilySpec::parse("product:(path:3)(cycle:4)").is_err());
        assert!(FamilySpec::parse("product:(path:3").is_err());
    }

    #[test]
    fn family_shapes() {
        let q3 = generate(&FamilySpec::Hypercube { dim: 3 }).unwrap();
        assert_eq!((q3.n(), q3.m()), (8, 12));
        let p = distance_profile(&q3, &distance_matrix(&q3)).unwrap();
        assert_eq!(p.diameter, 3);

        let b2 = generate(&FamilySpec::CompleteBinaryTree { height: 2 }).unwrap();
        assert_eq!((b2.n(), b2.m()), (7, 6));
        assert_eq!(b2.neighbors(0), &[1, 2]);

        let comb = generate(&FamilySpec::Comb { spine: 4 }).unwrap();
        assert_eq!((comb.n(), comb.m()), (8, 7));
        for i in 0..4 {
            assert!(comb.has_edge(i, 4 + i));
        }

        let star = generate(&FamilySpec::Star { leaves: 6 }).unwrap();
        assert_eq!(star.degree(0), 6);
        assert_eq!(star.name(), Some("star:6"));

        assert!(generate(&FamilySpec::Cycle { n: 2 }).is_err());
        assert!(generate(&FamilySpec::Path { n: 0 }).is_err());
    }

    #[test]
    fn broken_comb_masks() {
        // Spine 4 with pendants on both ends: unique diametral leaf pair.
        let g = generate(&FamilySpec::BrokenComb {
            spine: 4,
            mask: 0b1001,
        })
        .unwrap();
        assert_eq!(g.n(), 6);
        // Pendants on spine vertices 1 and 2 of a 3-spine tie two leaf pairs
        // at the diameter, so the request is rejected.
        assert!(matches!(
            generate(&FamilySpec::BrokenComb {
                spine: 3,
                mask: 0b110
            }),
            Err(Error::InvalidFamily(_))
        ));
        assert!(generate(&FamilySpec::BrokenComb {
            spine: 3,
            mask: 0b1000
        })
        .is_err());
    }

    #[test]
    fn products_match_known_graphs() {
        let k2 = generate(&FamilySpec::Complete { n: 2 }).unwrap();
        let c4 = cartesian_product(&k2, &k2).unwrap();
        assert_eq!((c4.n(), c4.m()), (4, 4));
        assert!((0..4).all(|v| c4.degree(v) == 2));

        let p2 = generate(&FamilySpec::Path { n: 2 }).unwrap();
        let p3 = generate(&FamilySpec::Path { n: 3 }).unwrap();
        let grid = cartesian_product(&p2, &p3).unwrap();
        assert_eq!((grid.n(), grid.m()), (6, 7));

        // Q_1 x K_2 is Q_2; check an antipodal distance.
        let q1 = generate(&FamilySpec::Hypercube { dim: 1 }).unwrap();
        let q2 = cartesian_product(&q1, &k2).unwrap();
        let dm = distance_matrix(&q2);
        assert_eq!(dm.get(0, 3), Some(2));

        let empty = Graph::new(0, &[]).unwrap();
        assert!(cartesian_product(&empty, &k2).is_err());
    }

    #[test]
    fn product_distances_add() {
        let specs = [
            FamilySpec::Path { n: 4 },
            FamilySpec::Cycle { n: 5 },
            FamilySpec::Star { leaves: 3 },
        ];
        for a in &specs {
            for b in &specs {
                let ga = generate(a).unwrap();
                let gb = generate(b).unwrap();
                let prod = cartesian_product(&ga, &gb).unwrap();
                let (da, db, dp) = (
                    distance_matrix(&ga),
                    distance_matrix(&gb),
                    distance_matrix(&prod),
                );
                let gn = ga.n();
                for u in 0..ga.n() {
                    for i in 0..gb.n() {
                        for v in 0..ga.n() {
                            for j in 0..gb.n() {
                                let expect = match (da.get(u, v), db.get(i, j)) {
                                    (Some(x), Some(y)) => Some(x + y),
                                    _ => None,
                                };
                                assert_eq!(dp.get(u + i * gn, v + j * gn), expect);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn hypercube_distance_is_popcount() {
        for dim in 1..=6usize {
            let g = generate(&FamilySpec::Hypercube { dim }).unwrap();
            let dm = distance_matrix(&g);
            for u in 0..g.n() {
                for v in 0..g.n() {
                    assert_eq!(dm.get(u, v), Some((u ^ v).count_ones()));
                }
            }
        }
    }

    #[test]
    fn corpus_counts() {
        assert_eq!(all_graphs_on(1, false).unwrap().count(), 1);
        assert_eq!(all_graphs_on(3, false).unwrap().count(), 8);
        assert_eq!(all_graphs_on(3, true).unwrap().count(), 4);
        assert_eq!(all_graphs_on(4, true).unwrap().count(), 38);
        assert!(all_graphs_on(8, false).is_err());
    }

    #[test]
    fn labeled_tree_counts_match_cayley() {
        for (n, expect) in [(1usize, 1usize), (2, 1), (3, 3), (4, 16), (5, 125)] {
            let trees: Vec<Graph> = labeled_trees(n).unwrap().collect();
            assert_eq!(trees.len(), expect, "n={n}");
            let distinct: BTreeSet<Vec<(usize, usize)>> = trees.iter().map(|t| t.edges()).collect();
            assert_eq!(distinct.len(), expect, "decoded trees must be distinct");
            for t in &trees {
                assert_eq!(t.m(), n - 1);
                assert!(t.is_connected());
            }
        }
    }

    #[test]
    fn random_trees_are_trees() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..=12 {
            let t = random_tree(n, &mut rng).unwrap();
            assert_eq!(t.n(), n);
            assert_eq!(t.m(), n.saturating_sub(1));
            assert!(t.is_connected());
        }
    }

    fn is_automorphism(g: &Graph, perm: &[usize]) -> bool {
        g.permuted(perm).map(|h| h == *g).unwrap_or(false)
    }

    #[test]
    fn shipped_generators_are_automorphisms() {
        let specs = [
            FamilySpec::Path { n: 6 },
            FamilySpec::Cycle { n: 7 },
            FamilySpec::Complete { n: 4 },
            FamilySpec::Star { leaves: 4 },
            FamilySpec::CompleteBipartite { m: 3, n: 3 },
            FamilySpec::Hypercube { dim: 3 },
            FamilySpec::CompleteBinaryTree { height: 2 },
            FamilySpec::Comb { spine: 4 },
            FamilySpec::BrokenComb {
                spine: 3,
                mask: 0b101,
            },
            FamilySpec::Product(
                Box::new(FamilySpec::Path { n: 3 }),
                Box::new(FamilySpec::Path { n: 2 }),
            ),
        ];
        for spec in &specs {
            let g = generate(spec).unwrap();
            let gens = automorphism_generators(spec);
            assert!(!gens.is_empty(), "{spec}");
            for p in &gens {
                assert!(is_automorphism(&g, p), "{spec}");
            }
        }
    }

    #[test]
    fn closure_sizes() {
        let gens = automorphism_generators(&FamilySpec::Hypercube { dim: 3 });
        let group = close_generators(8, &gens, 1_000_000).unwrap();
        assert_eq!(group.len(), 48); // 2^3 * 3!

        let gens = automorphism_generators(&FamilySpec::Cycle { n: 5 });
        let group = close_generators(5, &gens, 1_000_000).unwrap();
        assert_eq!(group.len(), 10); // dihedral

        let gens = automorphism_generators(&FamilySpec::Complete { n: 4 });
        assert!(close_generators(4, &gens, 10).is_err());
    }

    #[test]
    fn prufer_rejects_bad_input() {
        assert!(prufer_decode(1, &[]).is_err());
        assert!(prufer_decode(4, &[0]).is_err());
        assert!(prufer_decode(4, &[0, 9]).is_err());
        assert_eq!(prufer_decode(2, &[]).unwrap(), vec![(0, 1)]);
    }
}
