//! Exact counting kernels: permanents, perfect matchings, directed
//! 2-factors and derangement numbers.

use std::collections::HashMap;
use std::ops::AddAssign;

use num_bigint::BigUint;
use num_traits::{One, WrappingAdd, WrappingMul, WrappingSub, Zero};

use crate::count::Count;
use crate::error::{Error, Result};
use crate::graph::{bits, Digraph, Graph, ZeroOneMatrix};

/// Default size limit for the permanent kernel.
pub const PERMANENT_LIMIT: usize = 24;

trait Ring: Copy + Zero + One + WrappingAdd + WrappingSub + WrappingMul + From<u8> {}
impl Ring for u64 {}
impl Ring for u128 {}

fn columns(rows: &[u64]) -> Vec<u64> {
    let n = rows.len();
    let mut cols = vec![0u64; n];
    for (i, &r) in rows.iter().enumerate() {
        for j in bits(r) {
            cols[j] |= 1 << i;
        }
    }
    cols
}

/// Ryser inclusion-exclusion over the column subsets `gray(k)` for `k` in
/// `lo..hi`, visited in Gray-code order so each step toggles one column.
///
/// All arithmetic wraps; the caller picks a word wide enough to hold the
/// true permanent, so the wrapped sum is exact.
fn ryser_range<T: Ring>(rows: &[u64], cols: &[u64], lo: u64, hi: u64) -> T {
    let n = rows.len();
    let mut sums = [0u8; 64];
    let mut subset = lo ^ (lo >> 1);
    for i in 0..n {
        sums[i] = (rows[i] & subset).count_ones() as u8;
    }
    let mut zeros = sums[..n].iter().filter(|&&s| s == 0).count();
    let mut total = T::zero();
    let mut k = lo;
    loop {
        if zeros == 0 {
            let mut prod = T::one();
            for &s in &sums[..n] {
                prod = prod.wrapping_mul(&T::from(s));
            }
            // (-1)^(n - |S|)
            if (n as u32 - subset.count_ones()).is_multiple_of(2) {
                total = total.wrapping_add(&prod);
            } else {
                total = total.wrapping_sub(&prod);
            }
        }
        k += 1;
        if k >= hi {
            break;
        }
        let j = k.trailing_zeros() as usize;
        let bit = 1u64 << j;
        subset ^= bit;
        if subset & bit != 0 {
            for i in bits(cols[j]) {
                if sums[i] == 0 {
                    zeros -= 1;
                }
                sums[i] += 1;
            }
        } else {
            for i in bits(cols[j]) {
                sums[i] -= 1;
                if sums[i] == 0 {
                    zeros += 1;
                }
            }
        }
    }
    total
}

/// Permanent of a square 0/1 matrix given by bit-rows, `n <= 20`.
///
/// `per(A) <= 20! < 2^64`, so wrapping `u64` arithmetic is exact.
pub(crate) fn permanent_rows_u64(rows: &[u64]) -> u64 {
    let n = rows.len();
    debug_assert!(n <= 20);
    if n == 0 {
        return 1;
    }
    if rows.contains(&0) {
        return 0;
    }
    ryser_range::<u64>(rows, &columns(rows), 0, 1 << n)
}

fn permanent_rows_u128(rows: &[u64], workers: usize) -> u128 {
    let n = rows.len();
    debug_assert!(n <= 34);
    if n == 0 {
        return 1;
    }
    if rows.contains(&0) {
        return 0;
    }
    let cols = columns(rows);
    let total = 1u64 << n;
    let workers = workers.max(1) as u64;
    if workers == 1 || n < 12 {
        return ryser_range::<u128>(rows, &cols, 0, total);
    }
    let chunk = total.div_ceil(workers);
    let parts: Vec<u128> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let (lo, hi) = (w * chunk, ((w + 1) * chunk).min(total));
                let (rows, cols) = (rows, &cols);
                s.spawn(move || {
                    if lo >= hi {
                        0
                    } else {
                        ryser_range::<u128>(rows, cols, lo, hi)
                    }
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    });
    parts.into_iter().fold(0u128, |a, b| a.wrapping_add(b))
}

/// Exact permanent `sum_sigma prod_i a[i][sigma(i)]` (size limit [`PERMANENT_LIMIT`]).
pub fn permanent(a: &ZeroOneMatrix) -> Result<Count> {
    permanent_with(a, PERMANENT_LIMIT, 1)
}

/// Permanent with an explicit size limit and worker count. The subset range
/// is split into contiguous chunks; the result does not depend on `workers`.
pub fn permanent_with(a: &ZeroOneMatrix, limit: usize, workers: usize) -> Result<Count> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.num_rows(),
            cols: a.num_cols(),
        });
    }
    let n = a.num_rows();
    // Beyond 34 rows per(A) may exceed 2^128.
    Error::check_size("permanent matrix", n, limit.min(34))?;
    if n <= 20 && workers <= 1 {
        Ok(Count::from(permanent_rows_u64(a.rows())))
    } else {
        Ok(Count::from(permanent_rows_u128(a.rows(), workers)))
    }
}

/// Perfect matchings of a graph with at most 64 vertices, by branching on
/// the lowest unmatched vertex (small inputs) or a memoised version of the
/// same recursion (larger inputs).
pub fn count_perfect_matchings(g: &Graph) -> Count {
    let n = g.num_vertices();
    if n % 2 == 1 {
        return Count::zero();
    }
    if n <= 14 {
        return Count::from(perfmat_rows(g.rows()));
    }
    if n <= 56 {
        Count::from(perfmat_memo::<u128>(g.rows()))
    } else {
        Count::from(perfmat_memo::<BigUint>(g.rows()))
    }
}

/// Plain branching count; callers keep the result within `u64`.
pub(crate) fn perfmat_rows(adj: &[u64]) -> u64 {
    fn rec(adj: &[u64], remaining: u64) -> u64 {
        if remaining == 0 {
            return 1;
        }
        let v = remaining.trailing_zeros() as usize;
        let rest = remaining & !(1 << v);
        let mut total = 0;
        for u in bits(adj[v] & rest) {
            total += rec(adj, rest & !(1 << u));
        }
        total
    }
    let n = adj.len();
    if n % 2 == 1 {
        return 0;
    }
    rec(adj, crate::graph::low_mask(n))
}

fn perfmat_memo<T>(adj: &[u64]) -> T
where
    T: Clone + Zero + One + for<'a> AddAssign<&'a T>,
{
    fn rec<T>(adj: &[u64], remaining: u64, memo: &mut HashMap<u64, T>) -> T
    where
        T: Clone + Zero + One + for<'a> AddAssign<&'a T>,
    {
        if remaining == 0 {
            return T::one();
        }
        if let Some(v) = memo.get(&remaining) {
            return v.clone();
        }
        let mut total = T::zero();
        // A remaining vertex with no remaining neighbour kills the branch.
        if bits(remaining).all(|v| adj[v] & remaining != 0) {
            let v = remaining.trailing_zeros() as usize;
            let rest = remaining & !(1 << v);
            for u in bits(adj[v] & rest) {
                let sub = rec(adj, rest & !(1 << u), memo);
                total += &sub;
            }
        }
        memo.insert(remaining, total.clone());
        total
    }
    let mut memo = HashMap::new();
    rec(adj, crate::graph::low_mask(adj.len()), &mut memo)
}

/// Number of directed 2-factors, `per(A_D)`.
pub fn count_2factors(d: &Digraph) -> Result<Count> {
    permanent(&d.adjacency_matrix())
}

/// `D_p` via `D_p = (p-1)(D_{p-1} + D_{p-2})`, `D_0 = 1`, `D_1 = 0`.
pub fn derangements(p: u64) -> Count {
    let (mut prev, mut cur) = (BigUint::one(), BigUint::zero());
    if p == 0 {
        return Count::one();
    }
    for k in 2..=p {
        let next = BigUint::from(k - 1) * (&cur + &prev);
        prev = cur;
        cur = next;
    }
    Count::from(cur)
}

/// Checks `per(S) = per(A_D)^2` where `S = [[0, A_D], [A_D^T, 0]]` is the
/// adjacency matrix of `B(D)`.
pub fn perfmat_squared_identity_check(d: &Digraph) -> Result<bool> {
    let n = d.num_vertices();
    Error::check_size("identity check digraph", n, PERMANENT_LIMIT / 2)?;
    let c = d.adjacency_matrix();
    let ct = c.transpose();
    let mut rows = Vec::with_capacity(2 * n);
    rows.extend(c.rows().iter().map(|&r| r << n));
    rows.extend(ct.rows().iter().copied());
    let s = ZeroOneMatrix::from_rows(2 * n, rows)?;
    let per_s = permanent(&s)?;
    let f = count_2factors(d)?;
    Ok(per_s == f.pow(2))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_permanents() {
        assert_eq!(
            permanent(&ZeroOneMatrix::ones(3, 3).unwrap()).unwrap(),
            6u64
        );
        let d4 = ZeroOneMatrix::identity(4).unwrap().complement();
        assert_eq!(permanent(&d4).unwrap(), 9u64);
        assert_eq!(
            permanent(&ZeroOneMatrix::zeros(0, 0).unwrap()).unwrap(),
            1u64
        );
    }

    #[test]
    fn errors() {
        let r = ZeroOneMatrix::ones(2, 3).unwrap();
        assert!(matches!(permanent(&r), Err(Error::NotSquare { .. })));
        let big = ZeroOneMatrix::ones(25, 25).unwrap();
        assert!(matches!(permanent(&big), Err(Error::SizeLimit { .. })));
    }

    #[test]
    fn factorial_near_limit() {
        let j = ZeroOneMatrix::ones(22, 22).unwrap();
        assert_eq!(permanent(&j).unwrap(), Count::factorial(22));
    }

    #[test]
    fn workers_do_not_change_result() {
        let mut m = ZeroOneMatrix::ones(14, 14).unwrap();
        for i in 0..14 {
            m.set(i, (i * 5 + 3) % 14, false);
            m.set(i, (i * 3 + 1) % 14, false);
        }
        let one = permanent_with(&m, 24, 1).unwrap();
        for w in [2, 3, 7] {
            assert_eq!(permanent_with(&m, 24, w).unwrap(), one);
        }
    }

    #[test]
    fn matching_examples() {
        assert_eq!(count_perfect_matchings(&Graph::complete(4).unwrap()), 3u64);
        assert_eq!(
            count_perfect_matchings(&Graph::complete(10).unwrap()),
            945u64
        );
        assert_eq!(count_perfect_matchings(&Graph::new(0).unwrap()), 1u64);
        assert_eq!(count_perfect_matchings(&Graph::complete(5).unwrap()), 0u64);
        // K_16 = 15!! goes through the memoised path.
        assert_eq!(
            count_perfect_matchings(&Graph::complete(16).unwrap()),
            2_027_025u64
        );
    }

    #[test]
    fn petersen_has_six() {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        let p = Graph::from_edges(10, &edges).unwrap();
        assert_eq!(count_perfect_matchings(&p), 6u64);
    }

    #[test]
    fn two_factor_examples() {
        assert_eq!(count_2factors(&Digraph::cycle(7).unwrap()).unwrap(), 1u64);
        let loops = Digraph::from_arcs(4, &[(0, 0), (1, 1), (2, 2), (3, 3)]).unwrap();
        assert_eq!(count_2factors(&loops).unwrap(), 1u64);
        let k3 = Digraph::from_arcs(3, &[(0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1)]).unwrap();
        assert_eq!(count_2factors(&k3).unwrap(), 2u64);
    }

    #[test]
    fn derangement_values() {
        let expected = [1u64, 0, 1, 2, 9, 44, 265, 1854, 14833, 133_496, 1_334_961];
        for (p, &d) in expected.iter().enumerate() {
            assert_eq!(derangements(p as u64), d);
        }
    }

    #[test]
    fn identity_check_examples() {
        assert!(perfmat_squared_identity_check(&Digraph::cycle(3).unwrap()).unwrap());
        assert!(perfmat_squared_identity_check(&Digraph::new(3).unwrap()).unwrap());
        assert!(perfmat_squared_identity_check(&Digraph::new(13).unwrap()).is_err());
    }
}
