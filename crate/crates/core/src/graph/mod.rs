//! Dense simple undirected graphs.

mod family;
mod io;
pub mod named;
mod ops;

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bitset::{self, words_for, Ones, VertexSet};
use crate::error::{Error, Result};

pub use family::{FamilyKind, FamilySpec, OuterLabels};
pub use io::{parse_graph6, write_dot, write_graph6};

/// Simple undirected graph on `0..n` stored as one adjacency bitset per vertex.
///
/// Equality and hashing compare the labelled edge set only; the name is ignored.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    stride: usize,
    adj: Vec<u64>,
    name: Option<String>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let stride = words_for(n);
        Graph {
            n,
            stride,
            adj: vec![0; n * stride],
            name: None,
        }
    }

    /// Builds a graph from an edge list. Duplicate and reversed pairs collapse.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange(u, v, n));
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph whose edges are the pairs `u < v` with `f(u, v)`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if f(u, v) {
                    g.set_edge(u, v);
                }
            }
        }
        g
    }

    /// Parses a 0/1 adjacency matrix given as whitespace-separated rows.
    pub fn from_matrix_text(text: &str) -> Result<Self> {
        let rows: Vec<&str> = text.split_whitespace().collect();
        let n = rows.len();
        let mut g = Graph::empty(n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Matrix(format!("row {i} has length {}, expected {n}", row.len())));
            }
            for (j, c) in row.bytes().enumerate() {
                match c {
                    b'0' => {}
                    b'1' if i == j => return Err(Error::SelfLoop(i)),
                    b'1' => g.set_edge(i, j),
                    _ => return Err(Error::Matrix(format!("bad entry {:?} at ({i}, {j})", c as char))),
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if (rows[i].as_bytes()[j] == b'1') != (rows[j].as_bytes()[i] == b'1') {
                    return Err(Error::Matrix(format!("not symmetric at ({i}, {j})")));
                }
            }
        }
        Ok(g)
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        bitset::set(&mut self.adj[u * self.stride..(u + 1) * self.stride], v);
        bitset::set(&mut self.adj[v * self.stride..(v + 1) * self.stride], u);
    }

    pub(crate) fn clear_edge(&mut self, u: usize, v: usize) {
        bitset::clear(&mut self.adj[u * self.stride..(u + 1) * self.stride], v);
        bitset::clear(&mut self.adj[v * self.stride..(v + 1) * self.stride], u);
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of `u64` words per adjacency row.
    #[inline]
    pub fn stride(&self) -> usize {
        self.stride
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        bitset::test(self.row(u), v)
    }

    /// Adjacency bitset of `v`.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.stride..(v + 1) * self.stride]
    }

    pub fn neighbors(&self, v: usize) -> Ones<'_> {
        Ones::new(self.row(v))
    }

    pub fn neighbor_set(&self, v: usize) -> VertexSet {
        VertexSet::from_words(self.n, self.row(v))
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        bitset::count(self.row(v))
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.degrees().iter().sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in row-major order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// The common degree if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let k = if self.n == 0 { 0 } else { self.degree(0) };
        (0..self.n).all(|v| self.degree(v) == k).then_some(k)
    }

    /// Symmetric and loop-free.
    pub fn is_valid(&self) -> bool {
        (0..self.n).all(|u| {
            !self.adjacent(u, u) && self.neighbors(u).all(|v| v < self.n && self.adjacent(v, u))
        })
    }

    /// Subgraph induced by `vertices`, relabelled `0..vertices.len()` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let k = vertices.len();
        Graph::from_fn(k, |i, j| self.adjacent(vertices[i], vertices[j]))
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.set_edge(perm[u], perm[v]);
        }
        g.name = self.name.clone();
        g
    }

    /// BFS distances from `s`; `None` for unreachable vertices.
    pub fn distances_from(&self, s: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        dist[s] = Some(0);
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for v in self.neighbors(u) {
                if dist[v].is_none() {
                    dist[v] = Some(d + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Whether `vertices` induces a connected subgraph (vacuously true when empty).
    pub fn is_connected_within(&self, vertices: &VertexSet) -> bool {
        let Some(s) = vertices.first() else { return true };
        let mut seen = VertexSet::new(self.n);
        seen.insert(s);
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for v in self.neighbors(u) {
                if vertices.contains(v) && !seen.contains(v) {
                    seen.insert(v);
                    stack.push(v);
                }
            }
        }
        seen.len() == vertices.len()
    }

    /// Diameter, or `None` when disconnected or empty.
    pub fn diameter(&self) -> Option<usize> {
        if self.n == 0 {
            return None;
        }
        let mut best = 0;
        for s in 0..self.n {
            for d in self.distances_from(s) {
                best = best.max(d?);
            }
        }
        Some(best)
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) + 1 == self.n)
    }

    /// Whether `vertices` is pairwise adjacent.
    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| self.adjacent(u, v)))
    }

    /// Whether `vertices` is pairwise non-adjacent.
    pub fn is_independent(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| u != v && !self.adjacent(u, v)))
    }

    /// Upper-triangle adjacency bits `(i, j)` for `i < j`, column by column.
    pub fn upper_triangle_bits(&self) -> Vec<bool> {
        let mut bits = Vec::with_capacity(self.n * self.n.saturating_sub(1) / 2);
        for j in 1..self.n {
            for i in 0..j {
                bits.push(self.adjacent(i, j));
            }
        }
        bits
    }

    /// Adjacency matrix as `f64` rows.
    pub fn adjacency_f64(&self) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|u| (0..self.n).map(|v| if self.adjacent(u, v) { 1.0 } else { 0.0 }).collect())
            .collect()
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl std::hash::Hash for Graph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.adj.hash(state);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("name", &self.name)
            .field("n", &self.n)
            .field("g6", &write_graph6(self))
            .finish()
    }
}

/// Side of a complementary prism: `One` carries the graph, `Two` its complement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    One,
    Two,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::One => Side::Two,
            Side::Two => Side::One,
        }
    }
}

/// A vertex `(base, side)` of the complementary prism of a graph on `n` vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PrismVertex {
    pub base: usize,
    pub side: Side,
}

impl PrismVertex {
    pub fn new(base: usize, side: Side) -> Self {
        PrismVertex { base, side }
    }

    /// Index in the prism: `base` on side one, `n + base` on side two.
    pub fn index(self, n: usize) -> usize {
        match self.side {
            Side::One => self.base,
            Side::Two => n + self.base,
        }
    }

    pub fn from_index(index: usize, n: usize) -> Self {
        if index < n {
            PrismVertex::new(index, Side::One)
        } else {
            PrismVertex::new(index - n, Side::Two)
        }
    }
}
