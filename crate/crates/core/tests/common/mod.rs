//! Brute-force oracles and random generators shared by the integration tests.
#![allow(dead_code)]

use num_integer::Integer;
use perfmax::{Count, Graph, ZeroOneMatrix};
use rand::rngs::StdRng;
use rand::Rng;

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, left: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left.is_empty() {
            out.push(prefix.clone());
        }
        for i in 0..left.len() {
            let x = left.remove(i);
            prefix.push(x);
            go(prefix, left, out);
            prefix.pop();
            left.insert(i, x);
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut (0..n).collect(), &mut out);
    out
}

/// Number of permutations supported by the ones of `a`.
pub fn permutation_sum(a: &ZeroOneMatrix, perms: &[Vec<usize>]) -> u64 {
    perms
        .iter()
        .filter(|p| p.iter().enumerate().all(|(i, &j)| a.get(i, j)))
        .count() as u64
}

/// Perfect matchings of the subgraph induced by `free`, pairing off the lowest vertex first.
pub fn pairings(free: u64, g: &Graph) -> u64 {
    if free == 0 {
        return 1;
    }
    let v = free.trailing_zeros() as usize;
    let rest = free & !(1 << v);
    (0..g.num_vertices())
        .filter(|&u| rest >> u & 1 == 1 && g.has_edge(u, v))
        .map(|u| pairings(rest & !(1 << u), g))
        .sum()
}

pub fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

pub fn random_bipartite(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let side: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    let mut g = Graph::new(n).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            if side[u] != side[v] && rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

pub fn random_matrix(rng: &mut StdRng, n: usize, p: f64) -> ZeroOneMatrix {
    let entries: Vec<Vec<u8>> = (0..n)
        .map(|_| (0..n).map(|_| rng.gen_bool(p) as u8).collect())
        .collect();
    ZeroOneMatrix::from_entries(&entries).unwrap()
}

/// Whether `prod (p_i!)^(1/p_i)` equals `x`, decided on integers by raising
/// both sides to the lcm of the parts.
pub fn root_product_equals(parts: &[u64], x: &Count) -> bool {
    let l = parts.iter().fold(1u64, |acc, &p| acc.lcm(&p));
    let lhs: Count = parts
        .iter()
        .map(|&p| Count::factorial(p).pow((l / p) as u32))
        .product();
    lhs == x.pow(l as u32)
}
