//! Orientations of `K_{n,n}` for small `n`.
//!
//! An orientation is described by its `n x n` matrix `B` (`B[x][y] = 1` iff
//! `x -> y`). Permuting the rows of `B` gives an isomorphic orientation, so
//! only matrices with non-decreasing rows are visited.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::canon::canonical_form_digraph;
use crate::constructions::bipartite_tournament;
use crate::error::{Error, Result};
use crate::graph::{low_mask, Digraph, ZeroOneMatrix};
use crate::permanent::permanent_rows_u64;

/// Largest side size accepted by the orientation enumerator.
pub const BIPARTITE_ENUM_LIMIT: usize = 5;

fn check(n: usize) -> Result<()> {
    Error::check_size("bipartite tournament side", n, BIPARTITE_ENUM_LIMIT)
}

/// Calls `f` on every row-sorted matrix whose first row is `first`.
fn for_each_sorted(n: usize, first: u64, mut f: impl FnMut(&[u64])) {
    fn rec(n: usize, rows: &mut Vec<u64>, f: &mut impl FnMut(&[u64])) {
        if rows.len() == n {
            f(rows);
            return;
        }
        let lo = *rows.last().expect("first row is fixed");
        for r in lo..1u64 << n {
            rows.push(r);
            rec(n, rows, f);
            rows.pop();
        }
    }
    let mut rows = vec![first];
    rec(n, &mut rows, &mut f);
}

pub(crate) fn orientation(n: usize, rows: &[u64]) -> Digraph {
    let b = ZeroOneMatrix::from_rows(n, rows.to_vec()).expect("rows fit in n columns");
    bipartite_tournament(&b).expect("side size is small")
}

/// `per(B) per(J - B)`, the 2-factor count of the orientation.
pub(crate) fn two_factor_count(n: usize, rows: &[u64]) -> u64 {
    let a = permanent_rows_u64(rows);
    if a == 0 {
        return 0;
    }
    let full = low_mask(n);
    let comp: Vec<u64> = rows.iter().map(|r| full & !r).collect();
    a * permanent_rows_u64(&comp)
}

/// One orientation of `K_{n,n}` per isomorphism class (side swaps included),
/// in a deterministic order.
pub fn enumerate_bipartite_tournaments(n: usize) -> Result<impl Iterator<Item = Digraph>> {
    check(n)?;
    if n == 0 {
        return Ok(vec![Digraph::new(0)?].into_iter());
    }
    let mut seen = HashSet::new();
    let mut reps = Vec::new();
    for first in 0..1u64 << n {
        for_each_sorted(n, first, |rows| {
            let d = orientation(n, rows);
            let key = canonical_form_digraph(&d).expect("at most 10 vertices");
            if seen.insert(key) {
                reps.push(d);
            }
        });
    }
    Ok(reps.into_iter())
}

/// Maximum 2-factor count over orientations of `K_{n,n}` and the row-sorted
/// matrices attaining it, scanned in parallel by first row.
pub(crate) fn max_orientations(n: usize, workers: usize) -> Result<(u64, Vec<Vec<u64>>)> {
    check(n)?;
    if n == 0 {
        return Ok((1, vec![Vec::new()]));
    }
    let scan = |first: u64| {
        let mut best = 0u64;
        let mut arg: Vec<Vec<u64>> = Vec::new();
        for_each_sorted(n, first, |rows| {
            let c = two_factor_count(n, rows);
            if c > best {
                best = c;
                arg.clear();
            }
            if c == best {
                arg.push(rows.to_vec());
            }
        });
        (best, arg)
    };
    let firsts: Vec<u64> = (0..1u64 << n).collect();
    let parts: Vec<(u64, Vec<Vec<u64>>)> = if workers <= 1 {
        firsts.into_iter().map(scan).collect()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| Error::precondition(format!("cannot start worker pool: {e}")))?
            .install(|| firsts.into_par_iter().map(scan).collect())
    };
    let best = parts.iter().map(|p| p.0).max().unwrap_or(0);
    let arg = parts
        .into_iter()
        .filter(|p| p.0 == best)
        .flat_map(|p| p.1)
        .collect();
    Ok((best, arg))
}
