//! Explicit extremal graphs and bipartite tournaments, plus the balancing
//! transformation.

mod balance;
mod registry;

pub use balance::{almost_regular_bipartite, balance, balance_step};
pub use registry::{construction_registry, Constructed, Construction, ConstructionArgs};

use crate::count::Count;
use crate::error::{Error, Result};
use crate::graph::{low_mask, Digraph, Graph, ZeroOneMatrix, MAX_VERTICES};

/// `ell1` copies of `K_{n1,n1}` plus `ell2` copies of `K_{n1+1,n1+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExtremalDecomposition {
    pub ell1: u64,
    pub ell2: u64,
    pub n1: u64,
}

impl ExtremalDecomposition {
    /// Half the vertex count.
    pub fn half_order(&self) -> u64 {
        self.ell1 * self.n1 + self.ell2 * (self.n1 + 1)
    }

    pub fn num_edges(&self) -> u64 {
        self.ell1 * self.n1 * self.n1 + self.ell2 * (self.n1 + 1) * (self.n1 + 1)
    }

    /// `(n1!)^ell1 ((n1+1)!)^ell2`.
    pub fn matching_count(&self) -> Count {
        Count::factorial(self.n1).pow(self.ell1 as u32)
            * Count::factorial(self.n1 + 1).pow(self.ell2 as u32)
    }
}

/// Every decomposition with `ell1 >= 1` for half-order `n` and `m` edges.
pub fn extremal_decompositions(n: u64, m: u64) -> Result<Vec<ExtremalDecomposition>> {
    if n == 0 || m < n || m > n * n {
        return Err(Error::precondition(format!(
            "need 1 <= n <= m <= n^2, got n={n}, m={m}"
        )));
    }
    let mut found = Vec::new();
    for n1 in 1..=n {
        if m < n * n1 || !(m - n * n1).is_multiple_of(n1 + 1) {
            continue;
        }
        let ell2 = (m - n * n1) / (n1 + 1);
        let used = ell2 * (n1 + 1);
        if used >= n || !(n - used).is_multiple_of(n1) {
            continue;
        }
        found.push(ExtremalDecomposition {
            ell1: (n - used) / n1,
            ell2,
            n1,
        });
    }
    Ok(found)
}

/// The decomposition of the unique maximizer on `2n` vertices and `m` edges,
/// if the pair `(n, m)` admits one.
pub fn extremal_decomposition(n: u64, m: u64) -> Result<Option<ExtremalDecomposition>> {
    Ok(extremal_decompositions(n, m)?.into_iter().next())
}

pub fn build_extremal_graph(d: &ExtremalDecomposition) -> Result<Graph> {
    if d.ell1 == 0 || d.n1 == 0 {
        return Err(Error::precondition(
            "decomposition needs ell1 >= 1 and n1 >= 1",
        ));
    }
    Error::check_size(
        "graph vertex count",
        2 * d.half_order() as usize,
        MAX_VERTICES,
    )?;
    let mut g = Graph::new(0)?;
    for (copies, side) in [(d.ell1, d.n1), (d.ell2, d.n1 + 1)] {
        for _ in 0..copies {
            g = g.disjoint_union(&Graph::complete_bipartite(side as usize, side as usize)?)?;
        }
    }
    Ok(g)
}

/// Orientation of `K_{n,n}` with sides `0..n` and `n..2n`: `x -> n+y` when
/// `b[x][y] = 1`, otherwise `n+y -> x`.
pub fn bipartite_tournament(b: &ZeroOneMatrix) -> Result<Digraph> {
    if !b.is_square() {
        return Err(Error::NotSquare {
            rows: b.num_rows(),
            cols: b.num_cols(),
        });
    }
    let n = b.num_rows();
    Error::check_size("bipartite tournament side", n, MAX_VERTICES / 2)?;
    let mut out = vec![0u64; 2 * n];
    for x in 0..n {
        out[x] = b.row(x) << n;
        for y in 0..n {
            if !b.get(x, y) {
                out[n + y] |= 1 << x;
            }
        }
    }
    Ok(Digraph::from_rows_unchecked(out))
}

/// Recovers `B` from an orientation of `K_{n,n}` laid out as in [`bipartite_tournament`].
pub fn bipartite_tournament_matrix(d: &Digraph) -> Result<ZeroOneMatrix> {
    let v = d.num_vertices();
    let n = v / 2;
    let ok = v.is_multiple_of(2)
        && (0..v).all(|u| {
            let other = if u < n {
                low_mask(v) & !low_mask(n)
            } else {
                low_mask(n)
            };
            d.out_rows()[u] & !other == 0
        })
        && (0..n).all(|x| (n..v).all(|y| d.has_arc(x, y) != d.has_arc(y, x)));
    if !ok {
        return Err(Error::precondition(
            "not an orientation of K_{n,n} in side-block layout",
        ));
    }
    ZeroOneMatrix::from_rows(n, (0..n).map(|x| d.out_rows()[x] >> n).collect())
}

fn blocks(sizes: &[(usize, bool)]) -> Result<ZeroOneMatrix> {
    let mut b = ZeroOneMatrix::zeros(0, 0)?;
    for &(s, derange) in sizes {
        let mut block = ZeroOneMatrix::ones(s, s)?;
        if derange {
            block = ZeroOneMatrix::identity(s)?.complement();
        }
        b = b.direct_sum(&block)?;
    }
    Ok(b)
}

fn odd_half(n: u64) -> Result<usize> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::precondition(format!(
            "n must be odd and at least 3, got {n}"
        )));
    }
    Ok(((n - 1) / 2) as usize)
}

/// `B = J_{n/2} + J_{n/2}` (direct sum); `((n/2)!)^4` 2-factors.
pub fn build_bt0(n: u64) -> Result<Digraph> {
    if n < 2 || n % 2 == 1 {
        return Err(Error::precondition(format!(
            "n must be even and at least 2, got {n}"
        )));
    }
    let h = (n / 2) as usize;
    bipartite_tournament(&blocks(&[(h, false), (h, false)])?)
}

/// `B = J_p + J_p + J_1` with `p = (n-1)/2`; `2p (p!)^4` 2-factors.
pub fn build_bt1(n: u64) -> Result<Digraph> {
    let p = odd_half(n)?;
    bipartite_tournament(&blocks(&[(p, false), (p, false), (1, false)])?)
}

/// `B = J_p + (J_{p+1} - I_{p+1})`; `(p+1) D_{p+1} (p!)^3` 2-factors.
pub fn build_bt2(n: u64) -> Result<Digraph> {
    let p = odd_half(n)?;
    bipartite_tournament(&blocks(&[(p, false), (p + 1, true)])?)
}

/// Rotational tournament: for odd `n` every vertex beats the next `(n-1)/2`;
/// for even `n` vertices `0..n/2` beat the next `n/2` and the rest the next `n/2 - 1`.
pub fn build_near_regular_tournament(n: u64) -> Result<Digraph> {
    if n < 3 {
        return Err(Error::precondition(format!(
            "n must be at least 3, got {n}"
        )));
    }
    Error::check_size("tournament order", n as usize, MAX_VERTICES)?;
    let n = n as usize;
    let mut out = vec![0u64; n];
    for (i, row) in out.iter_mut().enumerate() {
        let wins = if n % 2 == 1 {
            (n - 1) / 2
        } else if i < n / 2 {
            n / 2
        } else {
            n / 2 - 1
        };
        for d in 1..=wins {
            *row |= 1 << ((i + d) % n);
        }
    }
    Ok(Digraph::from_rows_unchecked(out))
}
