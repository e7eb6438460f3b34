//! Generic depth-first traversal of a generation tree, sequential or split
//! across a worker pool.

use rayon::prelude::*;

use crate::error::{Error, Result};

/// A generation tree in which every isomorphism class appears at exactly one node.
pub(crate) trait Augment: Sync {
    type Node: Send + Sync;

    fn root(&self) -> Self::Node;

    /// Children of `node` in a fixed order; empty at the bottom level.
    fn children(&self, node: &Self::Node) -> Vec<Self::Node>;
}

/// Lazy pre-order iterator over all nodes.
pub(crate) struct Dfs<'a, A: Augment> {
    aug: &'a A,
    stack: Vec<A::Node>,
}

impl<'a, A: Augment> Dfs<'a, A> {
    pub(crate) fn from_node(aug: &'a A, node: A::Node) -> Self {
        Dfs {
            aug,
            stack: vec![node],
        }
    }
}

impl<A: Augment> Iterator for Dfs<'_, A> {
    type Item = A::Node;

    fn next(&mut self) -> Option<A::Node> {
        let node = self.stack.pop()?;
        let mut kids = self.aug.children(&node);
        kids.reverse();
        self.stack.extend(kids);
        Some(node)
    }
}

/// Subtrees handed to workers once the frontier reaches this many nodes.
const FRONTIER_TARGET: usize = 512;

/// Visits every node once. Nodes are expanded breadth-first until the frontier
/// holds [`FRONTIER_TARGET`] nodes, then the frontier's subtrees run on a pool
/// of `workers` threads. The frontier does not depend on `workers` and partial
/// results are merged in frontier order, so the outcome is identical for every
/// worker count.
pub(crate) fn visit_all<A, R>(
    aug: &A,
    workers: usize,
    init: impl Fn() -> R + Sync,
    visit: impl Fn(&mut R, &A::Node) + Sync,
    mut merge: impl FnMut(&mut R, R),
) -> Result<R>
where
    A: Augment,
    R: Send,
{
    let mut acc = init();
    let mut frontier = vec![aug.root()];
    while !frontier.is_empty() && frontier.len() < FRONTIER_TARGET {
        let mut next = Vec::new();
        for node in &frontier {
            visit(&mut acc, node);
            next.extend(aug.children(node));
        }
        frontier = next;
    }
    let run = |node: A::Node| {
        let mut r = init();
        for n in Dfs::from_node(aug, node) {
            visit(&mut r, &n);
        }
        r
    };
    let parts: Vec<R> = if workers <= 1 {
        frontier.into_iter().map(run).collect()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| Error::precondition(format!("cannot start worker pool: {e}")))?
            .install(|| frontier.into_par_iter().map(run).collect())
    };
    for p in parts {
        merge(&mut acc, p);
    }
    Ok(acc)
}
