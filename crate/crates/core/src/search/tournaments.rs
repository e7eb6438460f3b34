//! Isomorph-free generation of tournaments by canonical vertex augmentation.

use super::augment::Augment;
use crate::canon::label_digraph_rows;
use crate::error::{Error, Result};
use crate::graph::{bits, Digraph};

/// Largest order accepted by the tournament generator.
pub const TOURNAMENT_ENUM_LIMIT: usize = 10;

pub(crate) struct TournamentNode {
    pub(crate) out: Vec<u64>,
    gens: Option<Vec<Vec<u8>>>,
}

impl TournamentNode {
    pub(crate) fn digraph(&self) -> Digraph {
        Digraph::from_rows_unchecked(self.out.clone())
    }
}

pub(crate) struct TournamentTree {
    n: usize,
}

impl TournamentTree {
    pub(crate) fn new(n: usize) -> Result<Self> {
        Error::check_size("tournament enumeration order", n, TOURNAMENT_ENUM_LIMIT)?;
        Ok(TournamentTree { n })
    }
}

fn in_rows(out: &[u64]) -> Vec<u64> {
    let mut inn = vec![0u64; out.len()];
    for (u, &row) in out.iter().enumerate() {
        for v in bits(row) {
            inn[v] |= 1 << u;
        }
    }
    inn
}

/// Accepts the child whose new vertex is the last one iff that vertex is in
/// the orbit of the canonical deletion vertex.
fn accept(out: &[u64]) -> Option<Option<Vec<Vec<u8>>>> {
    let n = out.len();
    let new = n - 1;
    let mut score = [0u32; 64];
    for v in 0..n {
        score[v] = out[v].count_ones();
    }
    let key =
        |v: usize| (score[v] as u64) << 32 | bits(out[v]).map(|w| score[w] as u64).sum::<u64>();
    let mine = key(new);
    let mut ties = 0u64;
    for v in 0..n {
        let k = key(v);
        if k > mine {
            return None;
        }
        if k == mine {
            ties |= 1 << v;
        }
    }
    if ties.count_ones() == 1 {
        return Some(None);
    }
    let lab = label_digraph_rows(out, &in_rows(out));
    let pos = lab.positions();
    let best = bits(ties)
        .max_by_key(|&v| pos[v])
        .expect("tie set is non-empty");
    let orbits = lab.orbits();
    if orbits[best] == orbits[new] {
        Some(Some(lab.generators))
    } else {
        None
    }
}

impl Augment for TournamentTree {
    type Node = TournamentNode;

    fn root(&self) -> TournamentNode {
        TournamentNode {
            out: vec![0; self.n.min(1)],
            gens: None,
        }
    }

    fn children(&self, node: &TournamentNode) -> Vec<TournamentNode> {
        let k = node.out.len();
        if k >= self.n {
            return Vec::new();
        }
        let computed;
        let gens = match &node.gens {
            Some(g) => g,
            None => {
                computed = label_digraph_rows(&node.out, &in_rows(&node.out)).generators;
                &computed
            }
        };
        let subsets = 1usize << k;
        let mut rep: Vec<u32> = (0..subsets as u32).collect();
        fn find(p: &mut [u32], mut x: usize) -> usize {
            while p[x] as usize != x {
                p[x] = p[p[x] as usize];
                x = p[x] as usize;
            }
            x
        }
        for g in gens {
            for s in 0..subsets {
                let mut img = 0usize;
                for v in bits(s as u64) {
                    img |= 1 << g[v];
                }
                let (a, b) = (find(&mut rep, s), find(&mut rep, img));
                if a != b {
                    rep[a.max(b)] = a.min(b) as u32;
                }
            }
        }
        let mut kids = Vec::new();
        for s in 0..subsets {
            if find(&mut rep, s) != s {
                continue;
            }
            let s = s as u64;
            let mut out = Vec::with_capacity(k + 1);
            for v in 0..k {
                out.push(if s >> v & 1 == 1 {
                    node.out[v]
                } else {
                    node.out[v] | 1 << k
                });
            }
            out.push(s);
            if let Some(gens) = accept(&out) {
                kids.push(TournamentNode { out, gens });
            }
        }
        kids
    }
}

/// One tournament per isomorphism class of order `n`, in a deterministic order.
pub fn enumerate_tournaments(n: usize) -> Result<impl Iterator<Item = Digraph>> {
    let tree = TournamentTree::new(n)?;
    let mut stack = vec![tree.root()];
    Ok(std::iter::from_fn(move || loop {
        let node = stack.pop()?;
        let mut kids = tree.children(&node);
        kids.reverse();
        stack.extend(kids);
        if node.out.len() == n {
            return Some(node.digraph());
        }
    }))
}
