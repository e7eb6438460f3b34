//! Graph, digraph and 0/1-matrix data model.
//!
//! Adjacency is stored as one `u64` bit-row per vertex, so every structure
//! here is limited to [`MAX_VERTICES`] vertices (or columns).

mod digraph;
mod matrix;

pub use digraph::{bipartite_transform, Digraph};
pub use matrix::{BipartiteGraph, ZeroOneMatrix};

use crate::error::{Error, Result};

/// Width of a bit-row; the largest vertex count any structure can hold.
pub const MAX_VERTICES: usize = 64;

/// Iterates the set bits of a mask in increasing order.
#[inline]
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}

#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Undirected simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self> {
        Error::check_size("graph vertex count", n, MAX_VERTICES)?;
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::precondition(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::precondition(format!("self-loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from adjacency bit-rows, checking symmetry and the
    /// absence of loops.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        Error::check_size("graph vertex count", n, MAX_VERTICES)?;
        let mask = low_mask(n);
        for (u, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::precondition(format!(
                    "row {u} has bits beyond vertex {n}"
                )));
            }
            if row >> u & 1 == 1 {
                return Err(Error::precondition(format!("self-loop at vertex {u}")));
            }
            for v in bits(row) {
                if rows[v] >> u & 1 == 0 {
                    return Err(Error::precondition(format!(
                        "adjacency is not symmetric at ({u}, {v})"
                    )));
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    /// Unchecked constructor for rows already known to be valid.
    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Self {
        Graph {
            n: rows.len(),
            adj: rows,
        }
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::new(n)?;
        let all = low_mask(n);
        for (u, row) in g.adj.iter_mut().enumerate() {
            *row = all & !(1 << u);
        }
        Ok(g)
    }

    /// Cycle `C_n` (`n >= 3`).
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::precondition("a cycle needs at least 3 vertices"));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Complete bipartite graph `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        let mut g = Graph::new(a + b)?;
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v);
            }
        }
        Ok(g)
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    /// Neighbourhood of `v` as a bit mask.
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::new(self.degrees())
    }

    /// Edges `(u, v)` with `u < v`, in row-major order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.num_edges());
        for u in 0..self.n {
            for v in bits(self.adj[u] >> u >> 1) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    /// Returns the graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            for v in bits(self.adj[u]) {
                adj[perm[u]] |= 1 << perm[v];
            }
        }
        Graph { n: self.n, adj }
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        Error::check_size("graph vertex count", n, MAX_VERTICES)?;
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&r| r << self.n));
        Ok(Graph { n, adj })
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.contains(&0)
    }

    /// Two-colouring if the graph is bipartite: `Some(side)` with `side[v]` in {0,1}.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut side = vec![u8::MAX; self.n];
        let mut stack = Vec::new();
        for s in 0..self.n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            stack.push(s);
            while let Some(u) = stack.pop() {
                for v in bits(self.adj[u]) {
                    if side[v] == u8::MAX {
                        side[v] = 1 - side[u];
                        stack.push(v);
                    } else if side[v] == side[u] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// True iff every two degrees differ by at most one.
    pub fn is_almost_regular(&self) -> bool {
        is_almost_regular(self)
    }

    pub fn is_balanced(&self) -> bool {
        is_balanced(self)
    }
}

/// Degrees sorted in non-increasing order.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    pub fn new(mut degrees: Vec<usize>) -> Self {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence(degrees)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn max(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn min(&self) -> Option<usize> {
        self.0.last().copied()
    }

    /// True iff `self` majorizes `other` (same length and sum, every prefix sum at least as large).
    pub fn majorizes(&self, other: &DegreeSequence) -> bool {
        if self.0.len() != other.0.len() || self.sum() != other.sum() {
            return false;
        }
        let (mut a, mut b) = (0usize, 0usize);
        self.0.iter().zip(&other.0).all(|(x, y)| {
            a += x;
            b += y;
            a >= b
        })
    }
}

/// True iff `max deg - min deg <= 1`. The empty graph counts as almost regular.
pub fn is_almost_regular(g: &Graph) -> bool {
    let mut lo = usize::MAX;
    let mut hi = 0;
    for v in 0..g.num_vertices() {
        let d = g.degree(v);
        lo = lo.min(d);
        hi = hi.max(d);
    }
    g.num_vertices() == 0 || hi - lo <= 1
}

/// An ordered pair `(high, low)` witnessing that a graph is unbalanced:
/// `deg(high) >= deg(low) + 2` and `N(low) ⊆ N(high) ∪ {high}`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct UnbalancedPair {
    pub high: usize,
    pub low: usize,
}

/// Every unbalanced pair, ordered by decreasing degree gap, then by `(high, low)`.
pub fn unbalanced_pairs(g: &Graph) -> Vec<UnbalancedPair> {
    let n = g.num_vertices();
    let deg = g.degrees();
    let mut pairs = Vec::new();
    for high in 0..n {
        for low in 0..n {
            if deg[high] >= deg[low] + 2 {
                let rest = g.neighbors(low) & !(1u64 << high);
                if rest & !g.neighbors(high) == 0 {
                    pairs.push(UnbalancedPair { high, low });
                }
            }
        }
    }
    pairs.sort_by_key(|p| (std::cmp::Reverse(deg[p.high] - deg[p.low]), p.high, p.low));
    pairs
}

/// True iff no unbalanced pair exists.
pub fn is_balanced(g: &Graph) -> bool {
    let n = g.num_vertices();
    let deg = g.degrees();
    for high in 0..n {
        for low in 0..n {
            if deg[high] >= deg[low] + 2
                && (g.neighbors(low) & !(1u64 << high)) & !g.neighbors(high) == 0
            {
                return false;
            }
        }
    }
    true
}
