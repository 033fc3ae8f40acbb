//! Finite simple undirected graphs with stable string vertex ids, and
//! per-vertex capacity maps.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

/// Vertices are dense indices `0..n`. The deterministic vertex order used
/// throughout the crate is index order; labels are only carried along for
/// I/O.
pub type Vertex = usize;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(String),
    #[error("parallel edge {0}-{1}")]
    ParallelEdge(String, String),
    #[error("duplicate vertex id {0}")]
    DuplicateVertex(String),
    #[error("unknown vertex id {0}")]
    UnknownVertex(String),
    #[error("vertex index {0} out of range")]
    OutOfRange(usize),
    #[error("malformed graph6: {0}")]
    Graph6(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    index: BTreeMap<String, Vertex>,
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

impl Graph {
    /// Edgeless graph on `0..n` labelled `"0"`, `"1"`, ...
    pub fn empty(n: usize) -> Self {
        let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        Graph::with_labels(labels).expect("numeric labels are distinct")
    }

    /// Edgeless graph with the given labels (in vertex order).
    pub fn with_labels(labels: Vec<String>) -> Result<Self, GraphError> {
        let mut index = BTreeMap::new();
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(GraphError::DuplicateVertex(l.clone()));
            }
        }
        let n = labels.len();
        Ok(Graph {
            labels,
            index,
            adj: vec![Vec::new(); n],
            m: 0,
        })
    }

    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Build from labelled vertices and edges; every edge endpoint must be
    /// listed among the vertices.
    pub fn from_labelled<S: AsRef<str>>(
        vertices: &[S],
        edges: &[(S, S)],
    ) -> Result<Self, GraphError> {
        let labels = vertices.iter().map(|s| s.as_ref().to_string()).collect();
        let mut g = Graph::with_labels(labels)?;
        for (a, b) in edges {
            let u = g.lookup(a.as_ref())?;
            let v = g.lookup(b.as_ref())?;
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, label: &str) -> Result<Vertex, GraphError> {
        if self.index.contains_key(label) {
            return Err(GraphError::DuplicateVertex(label.to_string()));
        }
        let v = self.labels.len();
        self.labels.push(label.to_string());
        self.index.insert(label.to_string(), v);
        self.adj.push(Vec::new());
        Ok(v)
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<(), GraphError> {
        let n = self.n();
        if u >= n {
            return Err(GraphError::OutOfRange(u));
        }
        if v >= n {
            return Err(GraphError::OutOfRange(v));
        }
        if u == v {
            return Err(GraphError::SelfLoop(self.labels[u].clone()));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Err(GraphError::ParallelEdge(
                self.labels[u].clone(),
                self.labels[v].clone(),
            )),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                self.m += 1;
                Ok(())
            }
        }
    }

    pub fn remove_edge(&mut self, u: Vertex, v: Vertex) -> bool {
        if u >= self.n() || v >= self.n() {
            return false;
        }
        if let Ok(p) = self.adj[u].binary_search(&v) {
            self.adj[u].remove(p);
            let q = self.adj[v].binary_search(&u).unwrap();
            self.adj[v].remove(q);
            self.m -= 1;
            true
        } else {
            false
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.labels.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    /// Sorted neighbour list.
    #[inline]
    pub fn neighbours(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> core::ops::Range<Vertex> {
        0..self.n()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn label(&self, v: Vertex) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn lookup(&self, label: &str) -> Result<Vertex, GraphError> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| GraphError::UnknownVertex(label.to_string()))
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.m == n * n.saturating_sub(1) / 2
    }

    /// Subgraph induced by `keep` (in the given order). Returns the subgraph
    /// and the map from new indices to old ones. Labels are preserved.
    pub fn induced(&self, keep: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut pos = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        let labels = keep.iter().map(|&v| self.labels[v].clone()).collect();
        let mut g = Graph::with_labels(labels).expect("labels of a graph are distinct");
        for (i, &v) in keep.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = pos[w];
                if j != usize::MAX && i < j {
                    g.add_edge(i, j).expect("induced subgraph is simple");
                }
            }
        }
        (g, keep.to_vec())
    }

    /// Connected components as sorted vertex lists, ordered by their
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        self.components_within(&vec![true; self.n()])
    }

    /// Components of the subgraph induced by `alive`.
    pub fn components_within(&self, alive: &[bool]) -> Vec<Vec<Vertex>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] || !alive[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &w in &self.adj[v] {
                    if alive[w] && !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// Neighbour bitmasks for graphs with at most 64 vertices.
    pub fn adjacency_masks(&self) -> Option<Vec<u64>> {
        if self.n() > 64 {
            return None;
        }
        Some(
            self.adj
                .iter()
                .map(|ns| ns.iter().fold(0u64, |m, &w| m | (1u64 << w)))
                .collect(),
        )
    }

    /// Degree sequence in vertex order.
    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    /// Edge set as a sorted set, handy for comparisons in tests.
    pub fn edge_set(&self) -> BTreeSet<(Vertex, Vertex)> {
        self.edges().collect()
    }
}

/// Per-vertex integer capacities (the map `f`).
///
/// Values handed in from outside are nonnegative; intermediate maps produced
/// by vertex deletion may go negative, which simply means the vertex can no
/// longer be deleted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CapMap(Vec<i64>);

impl CapMap {
    pub fn new(values: Vec<i64>) -> Self {
        CapMap(values)
    }

    /// Validating constructor for external input.
    pub fn nonnegative(values: Vec<i64>) -> Result<Self, String> {
        if let Some((i, v)) = values.iter().enumerate().find(|(_, &v)| v < 0) {
            return Err(format!("negative capacity {v} at vertex index {i}"));
        }
        Ok(CapMap(values))
    }

    pub fn constant(n: usize, k: i64) -> Self {
        CapMap(vec![k; n])
    }

    /// `f(v) = d_G(v)`.
    pub fn degree(g: &Graph) -> Self {
        CapMap(g.vertices().map(|v| g.degree(v) as i64).collect())
    }

    /// `f(v) = min{k, d_G(v)}`.
    pub fn truncated(g: &Graph, k: i64) -> Self {
        CapMap(g.vertices().map(|v| (g.degree(v) as i64).min(k)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[i64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<i64> {
        self.0
    }

    /// Pointwise `self <= other`.
    pub fn le(&self, other: &CapMap) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn sub(&self, other: &CapMap) -> CapMap {
        CapMap(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn restrict(&self, keep: &[Vertex]) -> CapMap {
        CapMap(keep.iter().map(|&v| self.0[v]).collect())
    }

    pub fn max(&self) -> i64 {
        self.0.iter().copied().max().unwrap_or(0)
    }
}

impl Index<Vertex> for CapMap {
    type Output = i64;
    fn index(&self, v: Vertex) -> &i64 {
        &self.0[v]
    }
}

impl IndexMut<Vertex> for CapMap {
    fn index_mut(&mut self, v: Vertex) -> &mut i64 {
        &mut self.0[v]
    }
}

/// Small named families used across tests, fixtures and the CLI.
pub mod families {
    use super::*;

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for i in 0..n {
            g.add_edge(i, (i + 1) % n).unwrap();
        }
        g
    }

    pub fn path(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for i in 1..n {
            g.add_edge(i - 1, i).unwrap();
        }
        g
    }

    pub fn star(leaves: usize) -> Graph {
        let mut g = Graph::empty(leaves + 1);
        for i in 1..=leaves {
            g.add_edge(0, i).unwrap();
        }
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut g = Graph::empty(a + b);
        for i in 0..a {
            for j in 0..b {
                g.add_edge(i, a + j).unwrap();
            }
        }
        g
    }

    /// Wheel with `rim` rim vertices; the hub is vertex 0.
    pub fn wheel(rim: usize) -> Graph {
        let mut g = Graph::empty(rim + 1);
        for i in 0..rim {
            g.add_edge(0, i + 1).unwrap();
            g.add_edge(i + 1, (i + 1) % rim + 1).unwrap();
        }
        g
    }
}
