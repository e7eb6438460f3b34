//! Isomorph-free generation of simple graphs by canonical edge augmentation.
//!
//! A graph's parent is obtained by deleting its canonical edge: the edge with
//! the largest invariant key, ties broken by the largest canonical image. A
//! child `P + e` is accepted iff `e` lies in the automorphism orbit of that
//! canonical edge, and `P` is extended by one non-edge per orbit of `Aut(P)`.

use super::augment::Augment;
use crate::canon::label_graph_rows;
use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

/// Largest vertex count accepted by the graph generator.
pub const GRAPH_ENUM_LIMIT: usize = 12;

pub(crate) struct GraphNode {
    pub(crate) graph: Graph,
    /// Automorphism group generators when already known.
    gens: Option<Vec<Vec<u8>>>,
}

impl GraphNode {
    pub(crate) fn graph(&self) -> &Graph {
        &self.graph
    }
}

pub(crate) struct GraphTree {
    n: usize,
    max_edges: usize,
}

impl GraphTree {
    pub(crate) fn new(n: usize, max_edges: usize) -> Result<Self> {
        Error::check_size("graph enumeration vertex count", n, GRAPH_ENUM_LIMIT)?;
        let max_edges = max_edges.min(n * n.saturating_sub(1) / 2);
        Ok(GraphTree { n, max_edges })
    }
}

#[inline]
fn pair_index(u: usize, v: usize) -> usize {
    let (a, b) = if u < v { (u, v) } else { (v, u) };
    b * (b - 1) / 2 + a
}

fn find(p: &mut [u8], mut x: usize) -> usize {
    while p[x] as usize != x {
        p[x] = p[p[x] as usize];
        x = p[x] as usize;
    }
    x
}

/// Isomorphism-invariant key of edge `uv` in a graph with the given degrees
/// and neighbour-degree sums.
#[inline]
fn edge_key(adj: &[u64], deg: &[u32], nsum: &[u32], u: usize, v: usize) -> u64 {
    let (hi, lo) = if deg[u] >= deg[v] {
        (deg[u], deg[v])
    } else {
        (deg[v], deg[u])
    };
    let common = (adj[u] & adj[v]).count_ones();
    (hi as u64) << 48 | (lo as u64) << 40 | (common as u64) << 32 | (nsum[u] + nsum[v]) as u64
}

/// Decides whether `child` (just augmented by edge `uv`) is a canonical
/// child. Returns `None` to reject, otherwise the automorphism generators
/// if they were computed along the way.
fn accept(child: &Graph, u: usize, v: usize) -> Option<Option<Vec<Vec<u8>>>> {
    let adj = child.rows();
    let n = adj.len();
    let mut deg = [0u32; 64];
    for x in 0..n {
        deg[x] = adj[x].count_ones();
    }
    let mut nsum = [0u32; 64];
    for x in 0..n {
        nsum[x] = bits(adj[x]).map(|y| deg[y]).sum();
    }
    let mine = edge_key(adj, &deg, &nsum, u, v);
    let mut ties = 0u128;
    for x in 0..n {
        for y in bits(adj[x] & !((2u64 << x) - 1)) {
            let k = edge_key(adj, &deg, &nsum, x, y);
            if k > mine {
                return None;
            }
            if k == mine {
                ties |= 1 << pair_index(x, y);
            }
        }
    }
    if ties.count_ones() == 1 {
        return Some(None);
    }
    let lab = label_graph_rows(adj);
    let pos = lab.positions();
    let image = |p: usize| {
        let (b, a) = unpair(p);
        let (pa, pb) = (pos[a], pos[b]);
        if pa > pb {
            (pa, pb)
        } else {
            (pb, pa)
        }
    };
    let best = bits128(ties)
        .max_by_key(|&p| image(p))
        .expect("tie set is non-empty");
    let me = pair_index(u, v);
    if best == me || same_edge_orbit(&lab.generators, me, best) {
        Some(Some(lab.generators))
    } else {
        None
    }
}

fn unpair(p: usize) -> (usize, usize) {
    let mut b = 1;
    while (b + 1) * b / 2 <= p {
        b += 1;
    }
    (b, p - b * (b - 1) / 2)
}

fn bits128(mut m: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

fn same_edge_orbit(gens: &[Vec<u8>], a: usize, b: usize) -> bool {
    let mut seen = 1u128 << a;
    let mut todo = vec![a];
    while let Some(p) = todo.pop() {
        let (y, x) = unpair(p);
        for g in gens {
            let q = pair_index(g[x] as usize, g[y] as usize);
            if q == b {
                return true;
            }
            if seen >> q & 1 == 0 {
                seen |= 1 << q;
                todo.push(q);
            }
        }
    }
    false
}

impl Augment for GraphTree {
    type Node = GraphNode;

    fn root(&self) -> GraphNode {
        GraphNode {
            graph: Graph::new(self.n).expect("size checked"),
            gens: None,
        }
    }

    fn children(&self, node: &GraphNode) -> Vec<GraphNode> {
        let g = &node.graph;
        if g.num_edges() >= self.max_edges {
            return Vec::new();
        }
        let n = self.n;
        let computed;
        let gens = match &node.gens {
            Some(gens) => gens,
            None => {
                computed = label_graph_rows(g.rows()).generators;
                &computed
            }
        };
        let pairs = n * (n - 1) / 2;
        let mut parent: Vec<u8> = (0..pairs as u8).collect();
        for gen in gens {
            for v in 1..n {
                for u in 0..v {
                    if g.has_edge(u, v) {
                        continue;
                    }
                    let a = find(&mut parent, pair_index(u, v));
                    let b = find(&mut parent, pair_index(gen[u] as usize, gen[v] as usize));
                    if a != b {
                        parent[a.max(b)] = a.min(b) as u8;
                    }
                }
            }
        }
        let mut kids = Vec::new();
        for v in 1..n {
            for u in 0..v {
                if g.has_edge(u, v) || find(&mut parent, pair_index(u, v)) != pair_index(u, v) {
                    continue;
                }
                let mut child = g.clone();
                child.add_edge(u, v);
                if let Some(gens) = accept(&child, u, v) {
                    kids.push(GraphNode { graph: child, gens });
                }
            }
        }
        kids
    }
}

/// One graph per isomorphism class on `n` vertices with `m` edges, in a
/// deterministic order. Edge counts above half the maximum are generated as
/// complements.
pub fn enumerate_graphs(n: usize, m: usize) -> Result<impl Iterator<Item = Graph>> {
    Error::check_size("graph enumeration vertex count", n, GRAPH_ENUM_LIMIT)?;
    let total = n * n.saturating_sub(1) / 2;
    if m > total {
        return Err(Error::precondition(format!(
            "a graph on {n} vertices has at most {total} edges, got {m}"
        )));
    }
    let flip = m > total / 2;
    let target = if flip { total - m } else { m };
    Ok(graph_stream(n, target)?
        .filter(move |g| g.num_edges() == target)
        .map(move |g| if flip { complement(&g) } else { g }))
}

/// Lazily streams every isomorphism class on `n` vertices with at most `max_edges` edges.
pub fn graph_stream(n: usize, max_edges: usize) -> Result<GraphStream> {
    Ok(GraphStream {
        tree: GraphTree::new(n, max_edges)?,
        stack: Vec::new(),
        started: false,
    })
}

/// Iterator returned by [`graph_stream`].
pub struct GraphStream {
    tree: GraphTree,
    stack: Vec<GraphNode>,
    started: bool,
}

impl Iterator for GraphStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if !self.started {
            self.started = true;
            self.stack.push(self.tree.root());
        }
        let node = self.stack.pop()?;
        let mut kids = self.tree.children(&node);
        kids.reverse();
        self.stack.extend(kids);
        Some(node.graph)
    }
}

pub(crate) fn complement(g: &Graph) -> Graph {
    let n = g.num_vertices();
    let all = crate::graph::low_mask(n);
    Graph::from_rows_unchecked((0..n).map(|v| all & !g.rows()[v] & !(1 << v)).collect())
}
