//! Simple undirected graphs on at most 64 vertices.
//!
//! Every vertex set is a single `u64` bitmask and every adjacency row is one
//! machine word, so the set algebra used by the exact solvers downstream
//! (unions, intersections, subset tests) compiles to plain bitwise ops.
//! Graphs are immutable after construction and cheap to clone.

mod format;
pub mod generators;

pub use format::{
    parse_edge_list, parse_graph6, parse_graph6_collection, write_edge_list, write_graph6,
    ParseError,
};

use std::fmt;

use thiserror::Error;

/// Hard cap on the vertex count: one adjacency row per machine word.
pub const MAX_VERTICES: usize = 64;

/// Errors from graph construction and edits.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex count {0} out of range [1, {MAX_VERTICES}]")]
    InvalidVertexCount(usize),
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("edge ({0}, {1}) not present")]
    EdgeNotFound(usize, usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("graph too large: {given} vertices exceeds limit {limit}")]
    TooLarge { given: usize, limit: usize },
}

/// A subset of the vertices `0..n` of some graph, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1 << v)
    }

    /// All vertices of a graph on `n` vertices.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n >= 1 && n <= MAX_VERTICES);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 & (1 << v) != 0
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 |= 1 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 &= !(1 << v);
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Complement within the first `n` vertices.
    #[inline]
    pub fn complement_in(self, n: usize) -> VertexSet {
        VertexSet(!self.0 & Self::full(n).0)
    }

    /// Smallest vertex in the set, if any.
    #[inline]
    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Iterates vertices in increasing order.
    #[inline]
    pub fn iter(self) -> VertexSetIter {
        VertexSetIter(self.0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Iterator over the vertices of a [`VertexSet`], ascending.
pub struct VertexSetIter(u64);

impl Iterator for VertexSetIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

/// An undirected edge, normalized so `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Result<Edge, GraphError> {
        if a == b {
            return Err(GraphError::LoopEdge(a));
        }
        Ok(Edge {
            u: a.min(b),
            v: a.max(b),
        })
    }

    #[inline]
    pub fn u(self) -> usize {
        self.u
    }

    #[inline]
    pub fn v(self) -> usize {
        self.v
    }
}

/// Degree and codegree summary of a graph.
///
/// `max_codegree` is the maximum of `|N(u) ∩ N(v)|` over unordered pairs
/// `u ≠ v`. On a single-vertex graph there are no pairs; the codegree is
/// reported as 0 with `codegree_defined == false` so corpus sweeps never
/// abort on degenerate inputs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeStats {
    pub min_degree: usize,
    pub max_degree: usize,
    pub max_codegree: usize,
    pub codegree_defined: bool,
}

/// An immutable simple undirected graph on `1..=64` vertices.
///
/// Invariants (enforced at construction):
/// - symmetry: `u ∈ adj[v]` iff `v ∈ adj[u]`
/// - no loops: `v ∉ adj[v]`
/// - every adjacency row is confined to bits `0..n`
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph from an edge list. Edge order is irrelevant.
    pub fn new(n: usize, edges: &[Edge]) -> Result<Graph, GraphError> {
        if n < 1 || n > MAX_VERTICES {
            return Err(GraphError::InvalidVertexCount(n));
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        for &e in edges {
            if e.v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: e.v, n });
            }
            if adj[e.u].contains(e.v) {
                return Err(GraphError::DuplicateEdge(e.u, e.v));
            }
            adj[e.u].insert(e.v);
            adj[e.v].insert(e.u);
        }
        Ok(Graph { n, adj })
    }

    /// Convenience wrapper over [`Graph::new`] for `(u, v)` pairs.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let edges = pairs
            .iter()
            .map(|&(a, b)| Edge::new(a, b))
            .collect::<Result<Vec<_>, _>>()?;
        Graph::new(n, &edges)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.len()).sum::<usize>() / 2
    }

    /// Edges in lexicographic `(u, v)` order with `u < v`.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push(Edge { u, v });
                }
            }
        }
        out
    }

    /// The neighborhood `N(A) = ∪_{a ∈ A} N(a)`. `N(∅) = ∅`.
    pub fn neighborhood_set(&self, a: VertexSet) -> VertexSet {
        debug_assert!(a.is_subset(self.vertices()));
        let mut out = VertexSet::EMPTY;
        for v in a.iter() {
            out = out.union(self.adj[v]);
        }
        out
    }

    /// Returns a copy with edge `e` removed; the edge must be present.
    pub fn delete_edge(&self, e: Edge) -> Result<Graph, GraphError> {
        if e.v >= self.n || !self.adj[e.u].contains(e.v) {
            return Err(GraphError::EdgeNotFound(e.u, e.v));
        }
        let mut adj = self.adj.clone();
        adj[e.u].remove(e.v);
        adj[e.v].remove(e.u);
        Ok(Graph { n: self.n, adj })
    }

    pub fn degree_stats(&self) -> DegreeStats {
        let min_degree = (0..self.n).map(|v| self.degree(v)).min().unwrap();
        let max_degree = (0..self.n).map(|v| self.degree(v)).max().unwrap();
        let mut max_codegree = 0;
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                let c = self.adj[u].intersection(self.adj[v]).len();
                max_codegree = max_codegree.max(c);
            }
        }
        DegreeStats {
            min_degree,
            max_degree,
            max_codegree,
            codegree_defined: self.n >= 2,
        }
    }

    pub fn is_regular(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) == self.degree(0))
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = VertexSet::singleton(0);
        loop {
            let grown = seen.union(self.neighborhood_set(seen));
            if grown == seen {
                break;
            }
            seen = grown;
        }
        seen == self.vertices()
    }

    /// Two-coloring check by BFS layering over every component.
    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![u8::MAX; self.n];
        for start in 0..self.n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut queue = vec![start];
            while let Some(u) = queue.pop() {
                for v in self.adj[u].iter() {
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        queue.push(v);
                    } else if color[v] == color[u] {
                        return false;
                    }
                }
            }
        }
        true
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, g6={:?})", self.n, self.edge_count(), write_graph6(self))
    }
}
