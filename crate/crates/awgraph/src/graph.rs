//! Immutable simple graphs, BFS distances, and the text/JSON interchange formats.
//!
//! Vertices are `0..n`. Unreachable pairs have no finite distance; the
//! [`DistanceMatrix`] stores `Option<u32>` so infinity is a dedicated marker
//! rather than a sentinel value.

use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Immutable simple undirected graph on vertices `0..n`.
///
/// Adjacency lists are kept sorted, so iteration order is deterministic.
/// The optional name records how the graph was generated (for example
/// `path:9`) and is carried through the interchange formats.
#[derive(Debug, Clone, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    name: Option<String>,
}

/// Equality is structural: same vertex count, same adjacency. The name is
/// bookkeeping and two copies of a graph are the same graph however they
/// were produced.
impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops, duplicate edges,
    /// and out-of-range endpoints.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u},{v}) out of range for n={n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            if adj[u].contains(&v) {
                return Err(Error::InvalidGraph(format!("duplicate edge ({u},{v})")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Self { n, adj, name: None })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edge list sorted lexicographically with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// A vertex adjacent to every other vertex, if one exists (smallest index).
    pub fn dominating_vertex(&self) -> Option<usize> {
        (0..self.n).find(|&v| self.degree(v) + 1 == self.n && self.n >= 2)
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::new();
        seen[0] = true;
        queue.push_back(0);
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == self.n
    }

    /// Induced subgraph on `verts` (relabeled `0..verts.len()` in the given order).
    pub fn induced(&self, verts: &[usize]) -> Graph {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            pos[v] = i;
        }
        let mut adj = vec![Vec::new(); verts.len()];
        for (i, &v) in verts.iter().enumerate() {
            for &w in &self.adj[v] {
                if pos[w] != usize::MAX {
                    adj[i].push(pos[w]);
                }
            }
            adj[i].sort_unstable();
        }
        Graph {
            n: verts.len(),
            adj,
            name: None,
        }
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidGraph("permutation length mismatch".into()));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || seen[p] {
                return Err(Error::InvalidGraph("not a permutation".into()));
            }
            seen[p] = true;
        }
        let edges: Vec<(usize, usize)> = self
            .edges()
            .iter()
            .map(|&(u, v)| (perm[u], perm[v]))
            .collect();
        Graph::new(self.n, &edges)
    }

    /// Parses the plain-text format: a `n m` header line followed by one
    /// `u v` line per edge. Blank lines and `#` comments are ignored; a
    /// `# name: ...` comment is preserved as the graph name.
    pub fn parse_text(input: &str) -> Result<Self> {
        let mut name = None;
        let mut data = Vec::new();
        for line in input.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix('#') {
                if let Some(n) = rest.trim().strip_prefix("name:") {
                    name = Some(n.trim().to_string());
                }
                continue;
            }
            data.push(line);
        }
        let header = data
            .first()
            .ok_or_else(|| Error::Parse("missing header line".into()))?;
        let mut it = header.split_whitespace();
        let n: usize = it
            .next()
            .ok_or_else(|| Error::Parse("missing vertex count".into()))?
            .parse()
            .map_err(|_| Error::Parse(format!("bad vertex count in header '{header}'")))?;
        let m: usize = it
            .next()
            .ok_or_else(|| Error::Parse("missing edge count".into()))?
            .parse()
            .map_err(|_| Error::Parse(format!("bad edge count in header '{header}'")))?;
        if it.next().is_some() {
            return Err(Error::Parse(format!(
                "trailing tokens in header '{header}'"
            )));
        }
        if data.len() - 1 != m {
            return Err(Error::Parse(format!(
                "expected {m} edge lines, found {}",
                data.len() - 1
            )));
        }
        let mut edges = Vec::with_capacity(m);
        for line in &data[1..] {
            let mut it = line.split_whitespace();
            let u: usize = it
                .next()
                .ok_or_else(|| Error::Parse(format!("bad edge line '{line}'")))?
                .parse()
                .map_err(|_| Error::Parse(format!("bad edge line '{line}'")))?;
            let v: usize = it
                .next()
                .ok_or_else(|| Error::Parse(format!("bad edge line '{line}'")))?
                .parse()
                .map_err(|_| Error::Parse(format!("bad edge line '{line}'")))?;
            if it.next().is_some() {
                return Err(Error::Parse(format!(
                    "trailing tokens in edge line '{line}'"
                )));
            }
            edges.push((u, v));
        }
        let g = Graph::new(n, &edges).map_err(|e| Error::Parse(e.to_string()))?;
        Ok(match name {
            Some(name) => g.with_name(name),
            None => g,
        })
    }

    /// Writes the plain-text format accepted by [`Graph::parse_text`].
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(name) = &self.name {
            let _ = writeln!(out, "# name: {name}");
        }
        let _ = writeln!(out, "{} {}", self.n, self.m());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    /// Parses the JSON format `{"n":..,"edges":[[u,v],..],"name":..}`.
    pub fn from_json_str(input: &str) -> Result<Self> {
        let raw: GraphJson =
            serde_json::from_str(input).map_err(|e| Error::Parse(e.to_string()))?;
        let g = Graph::new(raw.n, &raw.edges).map_err(|e| Error::Parse(e.to_string()))?;
        Ok(match raw.name {
            Some(name) => g.with_name(name),
            None => g,
        })
    }

    pub fn to_json_string(&self) -> String {
        let raw = GraphJson {
            n: self.n,
            edges: self.edges(),
            name: self.name.clone(),
        };
        serde_json::to_string(&raw).expect("graph serializes")
    }
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
}

/// All-pairs shortest-path distances; `None` marks unreachable pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<Option<u32>>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        self.dist[u * self.n + v]
    }

    /// Largest finite distance in the matrix (0 for `n <= 1`).
    pub fn max_finite(&self) -> u32 {
        self.dist.iter().flatten().copied().max().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        self.dist.iter().all(Option::is_some)
    }
}

/// BFS from every vertex.
pub fn distance_matrix(g: &Graph) -> DistanceMatrix {
    let n = g.n();
    let mut dist = vec![None; n * n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        let row = &mut dist[s * n..(s + 1) * n];
        row[s] = Some(0);
        queue.clear();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let du = row[u].expect("queued vertices have distances");
            for &v in g.neighbors(u) {
                if row[v].is_none() {
                    row[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
    }
    DistanceMatrix { n, dist }
}

/// Eccentricities, radius, diameter, and the set of central vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceProfile {
    pub eccentricity: Vec<u32>,
    pub radius: u32,
    pub diameter: u32,
    /// Vertices whose eccentricity equals the radius, ascending.
    pub central: Vec<usize>,
}

/// Fails with [`Error::Disconnected`] when some pair is unreachable.
pub fn distance_profile(g: &Graph, dm: &DistanceMatrix) -> Result<DistanceProfile> {
    if g.n() == 0 {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let mut ecc = vec![0u32; n];
    for u in 0..n {
        for v in 0..n {
            match dm.get(u, v) {
                Some(d) => ecc[u] = ecc[u].max(d),
                None => return Err(Error::Disconnected),
            }
        }
    }
    let radius = *ecc.iter().min().expect("n >= 1");
    let diameter = *ecc.iter().max().expect("n >= 1");
    let central = (0..n).filter(|&v| ecc[v] == radius).collect();
    Ok(DistanceProfile {
        eccentricity: ecc,
        radius,
        diameter,
        central,
    })
}

/// Connected components as sorted vertex lists, ordered by smallest member.
pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut comp = vec![usize::MAX; n];
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut queue = VecDeque::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        comp[s] = id;
        out.push(vec![s]);
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for &v in g.neighbors(u) {
                if comp[v] == usize::MAX {
                    comp[v] = id;
                    out[id].push(v);
                    queue.push_back(v);
                }
            }
        }
        out[id].sort_unstable();
    }
    out
}

/// One shortest path from `u` to `v`, inclusive. Among equal-length paths the
/// lexicographically smallest vertex sequence is returned.
pub fn shortest_path(g: &Graph, u: usize, v: usize) -> Result<Vec<usize>> {
    let n = g.n();
    if u >= n || v >= n {
        return Err(Error::InvalidGraph(format!(
            "vertex out of range for n={n}"
        )));
    }
    // Distances to v; then walk from u always taking the smallest neighbor
    // that decreases the distance.
    let mut dist = vec![None; n];
    dist[v] = Some(0u32);
    let mut queue = VecDeque::new();
    queue.push_back(v);
    while let Some(x) = queue.pop_front() {
        let dx = dist[x].expect("queued");
        for &y in g.neighbors(x) {
            if dist[y].is_none() {
                dist[y] = Some(dx + 1);
                queue.push_back(y);
            }
        }
    }
    let mut here = u;
    let mut d = dist[u].ok_or(Error::Disconnected)?;
    let mut path = vec![u];
    while here != v {
        let next = g
            .neighbors(here)
            .iter()
            .copied()
            .find(|&y| dist[y] == Some(d - 1))
            .expect("a shortest path step always exists");
        path.push(next);
        here = next;
        d -= 1;
    }
    Ok(path)
}
