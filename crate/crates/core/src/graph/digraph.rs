use super::{bits, low_mask, BipartiteGraph, ZeroOneMatrix, MAX_VERTICES};
use crate::error::{Error, Result};

/// Directed graph on `0..n`; at most one arc per ordered pair, loops allowed.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Digraph {
    n: usize,
    out: Vec<u64>,
}

impl Digraph {
    pub fn new(n: usize) -> Result<Self> {
        Error::check_size("digraph vertex count", n, MAX_VERTICES)?;
        Ok(Digraph { n, out: vec![0; n] })
    }

    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut d = Digraph::new(n)?;
        for &(u, v) in arcs {
            if u >= n || v >= n {
                return Err(Error::precondition(format!(
                    "arc ({u}, {v}) out of range for {n} vertices"
                )));
            }
            d.add_arc(u, v);
        }
        Ok(d)
    }

    /// Digraph whose adjacency matrix is `a`.
    pub fn from_matrix(a: &ZeroOneMatrix) -> Result<Self> {
        if !a.is_square() {
            return Err(Error::NotSquare {
                rows: a.num_rows(),
                cols: a.num_cols(),
            });
        }
        Ok(Digraph {
            n: a.num_rows(),
            out: a.rows().to_vec(),
        })
    }

    pub(crate) fn from_rows_unchecked(out: Vec<u64>) -> Self {
        Digraph { n: out.len(), out }
    }

    /// Directed cycle `0 -> 1 -> ... -> n-1 -> 0`.
    pub fn cycle(n: usize) -> Result<Self> {
        let arcs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Digraph::from_arcs(n, &arcs)
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn num_arcs(&self) -> usize {
        self.out.iter().map(|r| r.count_ones() as usize).sum()
    }

    pub fn out_rows(&self) -> &[u64] {
        &self.out
    }

    pub fn in_rows(&self) -> Vec<u64> {
        let mut inn = vec![0u64; self.n];
        for (u, &r) in self.out.iter().enumerate() {
            for v in bits(r) {
                inn[v] |= 1 << u;
            }
        }
        inn
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u] >> v & 1 == 1
    }

    pub fn add_arc(&mut self, u: usize, v: usize) {
        self.out[u] |= 1 << v;
    }

    pub fn remove_arc(&mut self, u: usize, v: usize) {
        self.out[u] &= !(1 << v);
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].count_ones() as usize
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.out.iter().filter(|r| *r >> v & 1 == 1).count()
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.out_degree(v)).collect()
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        self.in_rows()
            .iter()
            .map(|r| r.count_ones() as usize)
            .collect()
    }

    pub fn num_loops(&self) -> usize {
        (0..self.n).filter(|&v| self.has_arc(v, v)).count()
    }

    pub fn adjacency_matrix(&self) -> ZeroOneMatrix {
        ZeroOneMatrix::from_rows(self.n, self.out.clone()).expect("rows fit by construction")
    }

    /// True iff the digraph is a tournament: no loops and exactly one arc
    /// between every two distinct vertices.
    pub fn is_tournament(&self) -> bool {
        let all = low_mask(self.n);
        let inn = self.in_rows();
        (0..self.n).all(|v| {
            self.out[v] >> v & 1 == 0
                && self.out[v] & inn[v] == 0
                && (self.out[v] | inn[v]) == all & !(1 << v)
        })
    }

    pub fn relabel(&self, perm: &[usize]) -> Digraph {
        assert_eq!(perm.len(), self.n);
        let mut out = vec![0u64; self.n];
        for u in 0..self.n {
            for v in bits(self.out[u]) {
                out[perm[u]] |= 1 << perm[v];
            }
        }
        Digraph { n: self.n, out }
    }

    /// Reverses every arc.
    pub fn reverse(&self) -> Digraph {
        Digraph {
            n: self.n,
            out: self.in_rows(),
        }
    }
}

/// `B(D)`: left vertex `i` is joined to right vertex `j` iff `(v_i, v_j)` is an arc.
pub fn bipartite_transform(d: &Digraph) -> BipartiteGraph {
    BipartiteGraph::new(d.adjacency_matrix())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_cycle_transform_is_cyclic_permutation() {
        let d = Digraph::cycle(3).unwrap();
        let b = bipartite_transform(&d);
        let expected =
            ZeroOneMatrix::from_entries(&[vec![0, 1, 0], vec![0, 0, 1], vec![1, 0, 0]]).unwrap();
        assert_eq!(b.biadjacency(), &expected);
    }

    #[test]
    fn empty_digraph_transform_is_zero() {
        let d = Digraph::new(4).unwrap();
        let b = bipartite_transform(&d);
        assert_eq!(b.biadjacency().count_ones(), 0);
        assert_eq!((b.left_size(), b.right_size()), (4, 4));
    }

    #[test]
    fn transitive_triple_transform() {
        let d = Digraph::from_arcs(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let b = bipartite_transform(&d);
        let m = b.biadjacency();
        let ones: Vec<_> = (0..3)
            .flat_map(|i| (0..3).map(move |j| (i, j)))
            .filter(|&(i, j)| m.get(i, j))
            .collect();
        assert_eq!(ones, vec![(0, 1), (0, 2), (1, 2)]);
        assert_eq!(b.left_degrees(), d.out_degrees());
        assert_eq!(b.right_degrees(), d.in_degrees());
    }

    #[test]
    fn tournament_detection() {
        assert!(Digraph::cycle(3).unwrap().is_tournament());
        assert!(!Digraph::cycle(4).unwrap().is_tournament());
    }
}
