use crate::graph::{bits, unbalanced_pairs, Graph};
use crate::permanent::count_perfect_matchings;

/// One balancing move, or `None` if `g` is balanced or no move applies.
///
/// Takes the first unbalanced pair `(i, j)` (largest degree gap, then lowest
/// indices) and the lowest `k` adjacent to `i` but not to `j`, then replaces
/// edge `ik` by `jk`. For a bipartite graph, pairs with `i ~ j` are skipped,
/// since there `j` is a pendant vertex of `i` and `jk` would close an odd
/// cycle. If only such pairs remain, see [`pendant_move`].
pub fn balance_step(g: &Graph) -> Option<Graph> {
    step(g, g.is_bipartite())
}

fn step(g: &Graph, bipartite: bool) -> Option<Graph> {
    let pairs = unbalanced_pairs(g);
    let Some(pair) = pairs
        .iter()
        .find(|p| !(bipartite && g.has_edge(p.high, p.low)))
    else {
        if pairs.is_empty() {
            return None;
        }
        if count_perfect_matchings(g).is_zero() {
            if let Some(h) = almost_regular_bipartite(g.num_vertices(), g.num_edges()) {
                return Some(h);
            }
        }
        return pendant_move(g);
    };
    let (i, j) = (pair.high, pair.low);
    let k = bits(g.neighbors(i) & !g.neighbors(j) & !(1u64 << j)).next()?;
    let mut next = g.clone();
    next.remove_edge(i, k);
    next.add_edge(j, k);
    Some(next)
}

/// Move for a bipartite graph whose unbalanced pairs are all pendant vertices
/// adjacent to their partner: replace an edge lying in no perfect matching by
/// a non-edge, keeping the graph bipartite, so that the sum of squared degrees
/// drops as far as possible. `None` if no such move lowers it.
fn pendant_move(g: &Graph) -> Option<Graph> {
    let n = g.num_vertices();
    let deg = g.degrees();
    let base: usize = deg.iter().map(|d| d * d).sum();
    let mut best: Option<(usize, Graph)> = None;
    for (u, v) in g.edges() {
        if in_some_perfect_matching(g, u, v) {
            continue;
        }
        let mut cut = g.clone();
        cut.remove_edge(u, v);
        let cut_deg = cut.degrees();
        let cut_sum = base + 2 - 2 * (deg[u] + deg[v]);
        for x in 0..n {
            for y in x + 1..n {
                if (x, y) == (u, v) || cut.has_edge(x, y) {
                    continue;
                }
                let score = cut_sum + 2 * (cut_deg[x] + cut_deg[y]) + 2;
                if score >= base || best.as_ref().is_some_and(|(s, _)| score >= *s) {
                    continue;
                }
                let mut next = cut.clone();
                next.add_edge(x, y);
                if next.is_bipartite() {
                    best = Some((score, next));
                }
            }
        }
    }
    best.map(|(_, h)| h)
}

/// An almost regular bipartite graph with `n` vertices and `m` edges, trying
/// the most even side split first. Left vertices take the lowest indices.
pub fn almost_regular_bipartite(n: usize, m: usize) -> Option<Graph> {
    let even_split = |parts: usize| {
        let q = m / parts;
        let r = m % parts;
        (0..parts).map(move |x| q + usize::from(x < r))
    };
    for left in (1..=n / 2).rev() {
        let right = n - left;
        if m > left * right {
            break;
        }
        let lo = (m / left).min(m / right);
        let hi = m.div_ceil(left).max(m.div_ceil(right));
        if hi > lo + 1 {
            continue;
        }
        let mut need: Vec<usize> = even_split(right).collect();
        let mut g = Graph::new(n).ok()?;
        for (x, d) in even_split(left).enumerate() {
            let mut order: Vec<usize> = (0..right).collect();
            order.sort_by_key(|&y| std::cmp::Reverse(need[y]));
            for &y in order.iter().take(d) {
                if need[y] == 0 {
                    return None;
                }
                need[y] -= 1;
                g.add_edge(x, left + y);
            }
        }
        return Some(g);
    }
    None
}

fn in_some_perfect_matching(g: &Graph, u: usize, v: usize) -> bool {
    let keep: Vec<usize> = (0..g.num_vertices())
        .filter(|&w| w != u && w != v)
        .collect();
    let mut index = vec![usize::MAX; g.num_vertices()];
    for (i, &w) in keep.iter().enumerate() {
        index[w] = i;
    }
    let edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .filter(|&(a, b)| index[a] != usize::MAX && index[b] != usize::MAX)
        .map(|(a, b)| (index[a], index[b]))
        .collect();
    let rest = Graph::from_edges(keep.len(), &edges).expect("subgraph of a valid graph");
    !count_perfect_matchings(&rest).is_zero()
}

/// Applies [`balance_step`] until it returns `None`. Vertex and edge counts
/// are preserved, the perfect matching count never decreases, and bipartite
/// inputs stay bipartite. Exchange moves strictly lower the degree sequence in
/// majorization order, the almost regular replacement is balanced, and pendant
/// moves lower the sum of squared degrees, so the loop terminates. The result
/// is balanced except possibly for bipartite inputs on an odd number of
/// vertices, where a balanced bipartite graph need not exist.
pub fn balance(g: &Graph) -> Graph {
    let bipartite = g.is_bipartite();
    let mut cur = g.clone();
    while let Some(next) = step(&cur, bipartite) {
        cur = next;
    }
    cur
}
