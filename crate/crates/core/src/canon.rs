//! Canonical labelling of graphs and digraphs.
//!
//! Equitable partition refinement followed by a depth-first search over
//! individualised vertices. Leaves are compared by their relabelled
//! adjacency rows; the largest one is canonical. Leaves equivalent to the
//! first or the best leaf yield automorphisms, which prune the remaining
//! search both by jumping back to the common ancestor and by skipping
//! children that lie in an already explored orbit of the pointwise
//! stabiliser of the current path. The automorphisms found this way
//! generate the full automorphism group.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::format::{emit_digraph6, emit_graph6};
use crate::graph::{bits, low_mask, Digraph, Graph};

/// Default vertex limit for the public canonical-form entry points.
pub const DEFAULT_CANON_LIMIT: usize = 16;

/// Result of a canonical labelling run.
#[derive(Clone, Debug)]
pub struct Labeling {
    /// `lab[i]` is the vertex placed at canonical position `i`.
    pub lab: Vec<u8>,
    /// Relabelled out-rows of the canonical leaf.
    pub cert: Vec<u64>,
    /// Automorphisms as vertex maps; together they generate the group.
    pub generators: Vec<Vec<u8>>,
}

impl Labeling {
    /// Inverse of `lab`: canonical position of each vertex.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.lab.len()];
        for (i, &v) in self.lab.iter().enumerate() {
            pos[v as usize] = i;
        }
        pos
    }

    /// Orbit representative (smallest member) of every vertex under the
    /// automorphism group.
    pub fn orbits(&self) -> Vec<usize> {
        orbits_of(self.lab.len(), self.generators.iter().map(Vec::as_slice))
    }

    pub fn is_rigid(&self) -> bool {
        self.generators.is_empty()
    }
}

pub(crate) fn orbits_of<'a>(n: usize, gens: impl Iterator<Item = &'a [u8]>) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for g in gens {
        for (x, &gx) in g.iter().enumerate().take(n) {
            let a = find(&mut parent, x);
            let b = find(&mut parent, gx as usize);
            if a != b {
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                parent[hi] = lo;
            }
        }
    }
    (0..n).map(|x| find(&mut parent, x)).collect()
}

struct Leaf {
    lab: Vec<u8>,
    cert: Vec<u64>,
    path: Vec<u8>,
}

struct Searcher<'a> {
    n: usize,
    out: &'a [u64],
    inn: Option<&'a [u64]>,
    first: Option<Leaf>,
    best: Option<Leaf>,
    gens: Vec<Vec<u8>>,
    path: Vec<u8>,
    queue: VecDeque<u64>,
}

impl Searcher<'_> {
    #[inline]
    fn key(&self, v: usize, w: u64) -> u16 {
        let o = (self.out[v] & w).count_ones() as u16;
        match self.inn {
            Some(inn) => (o << 7) | (inn[v] & w).count_ones() as u16,
            None => o,
        }
    }

    /// Refines `cells` to the coarsest equitable partition finer than it,
    /// starting from the splitters already in the queue.
    fn refine(&mut self, cells: &mut Vec<u64>) {
        let mut scratch = [(0u16, 0u8); 64];
        while let Some(w) = self.queue.pop_front() {
            let mut idx = 0;
            while idx < cells.len() {
                let x = cells[idx];
                if x & (x - 1) == 0 {
                    idx += 1;
                    continue;
                }
                let mut len = 0;
                let mut uniform = true;
                for v in bits(x) {
                    let k = self.key(v, w);
                    scratch[len] = (k, v as u8);
                    if k != scratch[0].0 {
                        uniform = false;
                    }
                    len += 1;
                }
                if uniform {
                    idx += 1;
                    continue;
                }
                let members = &mut scratch[..len];
                members.sort_unstable();
                let mut frags: Vec<u64> = Vec::with_capacity(4);
                let mut cur_key = members[0].0;
                let mut cur = 0u64;
                for &(k, v) in members.iter() {
                    if k != cur_key {
                        frags.push(cur);
                        cur = 0;
                        cur_key = k;
                    }
                    cur |= 1 << v;
                }
                frags.push(cur);
                let count = frags.len();
                for &f in &frags {
                    self.queue.push_back(f);
                }
                cells.splice(idx..idx + 1, frags);
                idx += count;
            }
        }
    }

    fn dfs(&mut self, cells: Vec<u64>) -> Option<usize> {
        if cells.len() == self.n {
            return self.leaf(&cells);
        }
        let level = self.path.len();
        let t = cells
            .iter()
            .position(|c| c & (c - 1) != 0)
            .expect("non-discrete partition has a non-singleton cell");
        let target = cells[t];
        let mut explored = 0u64;
        let mut orbit_gens = usize::MAX;
        let mut orbit = Vec::new();
        for v in bits(target) {
            if explored != 0 && !self.gens.is_empty() {
                if orbit_gens != self.gens.len() {
                    let path = &self.path;
                    orbit = orbits_of(
                        self.n,
                        self.gens
                            .iter()
                            .filter(|g| path.iter().all(|&p| g[p as usize] == p))
                            .map(Vec::as_slice),
                    );
                    orbit_gens = self.gens.len();
                }
                if bits(explored).any(|u| orbit[u] == orbit[v]) {
                    continue;
                }
            }
            explored |= 1 << v;
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..t]);
            child.push(1 << v);
            child.push(target & !(1 << v));
            child.extend_from_slice(&cells[t + 1..]);
            self.queue.clear();
            self.queue.push_back(1 << v);
            self.refine(&mut child);
            self.path.push(v as u8);
            let jump = self.dfs(child);
            self.path.pop();
            if let Some(l) = jump {
                if l < level {
                    return Some(l);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: &[u64]) -> Option<usize> {
        let n = self.n;
        let lab: Vec<u8> = cells.iter().map(|c| c.trailing_zeros() as u8).collect();
        let mut pos = [0u8; 64];
        for (i, &v) in lab.iter().enumerate() {
            pos[v as usize] = i as u8;
        }
        let cert: Vec<u64> = lab
            .iter()
            .map(|&v| {
                let mut r = 0u64;
                for u in bits(self.out[v as usize]) {
                    r |= 1 << pos[u];
                }
                r
            })
            .collect();
        let common = |a: &[u8], b: &[u8]| a.iter().zip(b).take_while(|(x, y)| x == y).count();
        let automorphism = |from: &[u8], to: &[u8]| {
            let mut g = vec![0u8; n];
            for (i, &v) in from.iter().enumerate() {
                g[v as usize] = to[i];
            }
            g
        };
        let Some(first) = &self.first else {
            let leaf = Leaf {
                lab,
                cert,
                path: self.path.clone(),
            };
            self.best = Some(Leaf {
                lab: leaf.lab.clone(),
                cert: leaf.cert.clone(),
                path: leaf.path.clone(),
            });
            self.first = Some(leaf);
            return None;
        };
        if cert == first.cert {
            self.gens.push(automorphism(&first.lab, &lab));
            return Some(common(&self.path, &first.path));
        }
        let best = self.best.as_ref().expect("best is set with first");
        match cert.cmp(&best.cert) {
            std::cmp::Ordering::Equal => {
                self.gens.push(automorphism(&best.lab, &lab));
                Some(common(&self.path, &best.path))
            }
            std::cmp::Ordering::Greater => {
                self.best = Some(Leaf {
                    lab,
                    cert,
                    path: self.path.clone(),
                });
                None
            }
            std::cmp::Ordering::Less => None,
        }
    }
}

/// Canonical labelling of the structure with out-rows `out`.
///
/// `inn` must be the in-rows for directed input and `None` for symmetric
/// (undirected) input. `initial` is an ordered partition of the vertices
/// into colour classes; only colour-preserving relabellings are considered.
pub(crate) fn label(out: &[u64], inn: Option<&[u64]>, initial: &[u64]) -> Labeling {
    let n = out.len();
    assert!(n <= 64);
    if n == 0 {
        return Labeling {
            lab: Vec::new(),
            cert: Vec::new(),
            generators: Vec::new(),
        };
    }
    let mut s = Searcher {
        n,
        out,
        inn,
        first: None,
        best: None,
        gens: Vec::new(),
        path: Vec::with_capacity(n),
        queue: VecDeque::with_capacity(2 * n),
    };
    let mut cells: Vec<u64> = initial.iter().copied().filter(|&c| c != 0).collect();
    debug_assert_eq!(cells.iter().fold(0, |a, c| a | c), low_mask(n));
    s.queue.extend(cells.iter().copied());
    s.refine(&mut cells);
    s.dfs(cells);
    let best = s.best.expect("search reaches at least one leaf");
    Labeling {
        lab: best.lab,
        cert: best.cert,
        generators: s.gens,
    }
}

pub(crate) fn label_graph_rows(rows: &[u64]) -> Labeling {
    label(rows, None, &[low_mask(rows.len())])
}

pub(crate) fn label_digraph_rows(out: &[u64], inn: &[u64]) -> Labeling {
    let n = out.len();
    let loops = (0..n)
        .filter(|&v| out[v] >> v & 1 == 1)
        .fold(0u64, |a, v| a | 1 << v);
    label(out, Some(inn), &[low_mask(n) & !loops, loops])
}

/// Canonical labelling of an undirected graph.
pub fn canonical_labeling(g: &Graph) -> Labeling {
    label_graph_rows(g.rows())
}

/// Canonical labelling of a digraph (loops are treated as a vertex colour).
pub fn canonical_labeling_digraph(d: &Digraph) -> Labeling {
    label_digraph_rows(d.out_rows(), &d.in_rows())
}

/// Canonical relabelling of `g`: isomorphic graphs map to identical graphs.
pub fn canonical_graph(g: &Graph) -> Graph {
    Graph::from_rows_unchecked(canonical_labeling(g).cert)
}

pub fn canonical_digraph(d: &Digraph) -> Digraph {
    Digraph::from_rows_unchecked(canonical_labeling_digraph(d).cert)
}

/// Canonical bytes (graph6 of the canonical relabelling) using the default vertex limit.
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>> {
    canonical_form_with_limit(g, DEFAULT_CANON_LIMIT)
}

pub fn canonical_form_with_limit(g: &Graph, limit: usize) -> Result<Vec<u8>> {
    Error::check_size("canonical form vertex count", g.num_vertices(), limit)?;
    Ok(emit_graph6(&canonical_graph(g)))
}

/// Canonical bytes (digraph6 of the canonical relabelling) using the default vertex limit.
pub fn canonical_form_digraph(d: &Digraph) -> Result<Vec<u8>> {
    canonical_form_digraph_with_limit(d, DEFAULT_CANON_LIMIT)
}

pub fn canonical_form_digraph_with_limit(d: &Digraph, limit: usize) -> Result<Vec<u8>> {
    Error::check_size("canonical form vertex count", d.num_vertices(), limit)?;
    Ok(emit_digraph6(&canonical_digraph(d)))
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.num_vertices() == h.num_vertices()
        && g.num_edges() == h.num_edges()
        && canonical_labeling(g).cert == canonical_labeling(h).cert
}

pub fn are_isomorphic_digraphs(a: &Digraph, b: &Digraph) -> bool {
    a.num_vertices() == b.num_vertices()
        && a.num_arcs() == b.num_arcs()
        && canonical_labeling_digraph(a).cert == canonical_labeling_digraph(b).cert
}
