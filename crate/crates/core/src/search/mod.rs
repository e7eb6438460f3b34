//! Exhaustive isomorph-free sweeps for the maximal number of perfect
//! matchings (graphs), 2-factors (tournaments) and 2-factors of orientations
//! of `K_{n,n}`.

mod augment;
mod bipartite;
mod graphs;
mod record;
mod registry;
mod tournaments;

pub use bipartite::{enumerate_bipartite_tournaments, BIPARTITE_ENUM_LIMIT};
pub use graphs::{enumerate_graphs, graph_stream, GraphStream, GRAPH_ENUM_LIMIT};
pub use record::{ExtremalRecord, ResultsCache, CACHE_VERSION, WITNESS_CAP};
pub use registry::{sweep_registry, Sweep, SweepArgs};
pub use tournaments::{enumerate_tournaments, TOURNAMENT_ENUM_LIMIT};

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::io::BufRead;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use augment::visit_all;
use graphs::{complement, GraphTree};
use tournaments::TournamentTree;

use crate::canon::{canonical_form_digraph_with_limit, canonical_form_with_limit};
use crate::count::Count;
use crate::error::{Error, Result};
use crate::format::parse_graph6;
use crate::graph::{Digraph, Graph, MAX_VERTICES};
use crate::permanent::{perfmat_rows, permanent_rows_u64};

/// Sweep parameters shared by all sweep kinds.
#[derive(Clone, Debug)]
pub struct SweepConfig {
    /// Largest order a sweep may be asked for.
    pub max_vertices: usize,
    /// Edge counts to report; `None` means every count from `n/2` up.
    pub edge_range: Option<RangeInclusive<u64>>,
    pub worker_count: usize,
    /// Results cache read before and written after a sweep.
    pub cache_path: Option<PathBuf>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_vertices: GRAPH_ENUM_LIMIT,
            edge_range: None,
            worker_count: 1,
            cache_path: None,
        }
    }
}

impl SweepConfig {
    fn check_order(&self, n: usize) -> Result<()> {
        Error::check_size("sweep order", n, self.max_vertices)
    }

    fn cache(&self) -> Result<Option<ResultsCache>> {
        self.cache_path.as_ref().map(ResultsCache::load).transpose()
    }
}

/// Running maximum with its witnesses.
struct Cell<T> {
    max: u64,
    witnesses: Vec<T>,
    count: u64,
    almost_regular: u64,
}

impl<T> Cell<T> {
    fn new() -> Self {
        Cell {
            max: 0,
            witnesses: Vec::new(),
            count: 0,
            almost_regular: 0,
        }
    }

    fn offer(
        &mut self,
        value: u64,
        almost_regular: impl FnOnce() -> bool,
        item: impl FnOnce() -> T,
    ) {
        if value > self.max {
            self.max = value;
            self.witnesses.clear();
            self.count = 0;
            self.almost_regular = 0;
        }
        if value == self.max {
            self.count += 1;
            self.almost_regular += almost_regular() as u64;
            if self.witnesses.len() < WITNESS_CAP {
                self.witnesses.push(item());
            }
        }
    }

    fn merge(&mut self, other: Cell<T>) {
        if other.count == 0 || other.max < self.max {
            return;
        }
        if other.max > self.max || self.count == 0 {
            *self = other;
            return;
        }
        self.count += other.count;
        self.almost_regular += other.almost_regular;
        let room = WITNESS_CAP - self.witnesses.len();
        self.witnesses
            .extend(other.witnesses.into_iter().take(room));
    }

    fn finish(self, n: u64, m: u64, encode: impl Fn(&T) -> String) -> ExtremalRecord {
        let mut witnesses: Vec<String> = self.witnesses.iter().map(encode).collect();
        witnesses.sort();
        ExtremalRecord {
            n_vertices: n,
            m_edges: m,
            max_count: Count::from(self.max),
            witnesses,
            witness_count: self.count,
            almost_regular_count: self.almost_regular,
        }
    }
}

fn graph_key(g: &Graph) -> String {
    String::from_utf8(canonical_form_with_limit(g, MAX_VERTICES).expect("within limit"))
        .expect("graph6 is ASCII")
}

fn digraph_key(d: &Digraph) -> String {
    String::from_utf8(canonical_form_digraph_with_limit(d, MAX_VERTICES).expect("within limit"))
        .expect("digraph6 is ASCII")
}

/// Degrees of the bipartite representation (out-degrees and in-degrees) lie within one.
fn digraph_almost_regular(d: &Digraph) -> bool {
    let degs = d.out_degrees().into_iter().chain(d.in_degrees());
    let (lo, hi) = degs.fold((usize::MAX, 0), |(lo, hi), x| (lo.min(x), hi.max(x)));
    d.num_vertices() == 0 || hi - lo <= 1
}

fn total_edges(n: usize) -> u64 {
    (n * n.saturating_sub(1) / 2) as u64
}

/// Maximal perfect-matching counts for every edge count in `ms` from a
/// single traversal; edge counts above half the maximum are read off complements.
fn mu_cells(n: usize, ms: &BTreeSet<u64>, workers: usize) -> Result<Vec<ExtremalRecord>> {
    let total = total_edges(n);
    if let Some(&m) = ms.iter().next_back() {
        if m > total {
            return Err(Error::precondition(format!(
                "a graph on {n} vertices has at most {total} edges, got {m}"
            )));
        }
    }
    if ms.is_empty() {
        return Ok(Vec::new());
    }
    let half = total / 2;
    let depth = ms
        .iter()
        .map(|&m| if m > half { total - m } else { m })
        .max()
        .unwrap_or(0);
    let slots = total as usize + 1;
    let want: Vec<bool> = (0..slots as u64).map(|m| ms.contains(&m)).collect();
    let tree = GraphTree::new(n, depth as usize)?;
    let cells = visit_all(
        &tree,
        workers,
        || (0..slots).map(|_| Cell::<Graph>::new()).collect::<Vec<_>>(),
        |cells, node| {
            let g = node.graph();
            let e = g.num_edges() as u64;
            if e <= half && want[e as usize] {
                cells[e as usize].offer(
                    perfmat_rows(g.rows()),
                    || g.is_almost_regular(),
                    || g.clone(),
                );
            }
            let f = total - e;
            if f > half && want[f as usize] {
                let c = complement(g);
                cells[f as usize].offer(
                    perfmat_rows(c.rows()),
                    || c.is_almost_regular(),
                    || c.clone(),
                );
            }
        },
        |acc, part| {
            for (a, p) in acc.iter_mut().zip(part) {
                a.merge(p);
            }
        },
    )?;
    Ok(cells
        .into_iter()
        .enumerate()
        .filter(|(m, _)| want[*m])
        .map(|(m, c)| c.finish(n as u64, m as u64, graph_key))
        .collect())
}

/// Maximal number of perfect matchings over graphs with `n` vertices and `m` edges.
pub fn sweep_mu(n: usize, m: u64) -> Result<ExtremalRecord> {
    sweep_mu_with(n, m, &SweepConfig::default())
}

pub fn sweep_mu_with(n: usize, m: u64, cfg: &SweepConfig) -> Result<ExtremalRecord> {
    let cfg = SweepConfig {
        edge_range: Some(m..=m),
        ..cfg.clone()
    };
    Ok(sweep_mu_table(n, &cfg)?.remove(0))
}

/// One record per edge count in `cfg.edge_range` (default `n/2 ..= n(n-1)/2`),
/// reusing and extending the cache when one is configured.
pub fn sweep_mu_table(n: usize, cfg: &SweepConfig) -> Result<Vec<ExtremalRecord>> {
    cfg.check_order(n)?;
    let total = total_edges(n);
    let range = cfg.edge_range.clone().unwrap_or((n as u64 / 2)..=total);
    let mut cache = cfg.cache()?;
    let missing: BTreeSet<u64> = range
        .clone()
        .filter(|&m| {
            cache
                .as_ref()
                .and_then(|c| c.get("mu", n as u64, m))
                .is_none()
        })
        .collect();
    let mut fresh: BTreeMap<u64, ExtremalRecord> = mu_cells(n, &missing, cfg.worker_count)?
        .into_iter()
        .map(|r| (r.m_edges, r))
        .collect();
    if let Some(c) = cache.as_mut() {
        if !fresh.is_empty() {
            for r in fresh.values() {
                c.insert("mu", r.clone());
            }
            c.save()?;
        }
    }
    Ok(range
        .map(|m| {
            fresh.remove(&m).unwrap_or_else(|| {
                cache
                    .as_ref()
                    .and_then(|c| c.get("mu", n as u64, m))
                    .cloned()
                    .expect("every edge count is fresh or cached")
            })
        })
        .collect())
}

/// Maximal permanent of the matrix of a tournament of order `n`.
pub fn sweep_tau(n: usize, cfg: &SweepConfig) -> Result<ExtremalRecord> {
    cfg.check_order(n)?;
    let key = total_edges(n);
    if let Some(r) = cfg
        .cache()?
        .as_ref()
        .and_then(|c| c.get("tau", n as u64, key))
    {
        return Ok(r.clone());
    }
    let tree = TournamentTree::new(n)?;
    let cell = visit_all(
        &tree,
        cfg.worker_count,
        Cell::<Digraph>::new,
        |cell, node| {
            if node.out.len() == n {
                let d = node.digraph();
                cell.offer(
                    permanent_rows_u64(&node.out),
                    || digraph_almost_regular(&d),
                    || d.clone(),
                );
            }
        },
        |a, b| a.merge(b),
    )?;
    let rec = cell.finish(n as u64, key, digraph_key);
    store(cfg, "tau", &rec)?;
    Ok(rec)
}

/// Maximal number of 2-factors over orientations of `K_{n,n}`.
pub fn sweep_rho(n: usize, cfg: &SweepConfig) -> Result<ExtremalRecord> {
    cfg.check_order(2 * n)?;
    let key = (n * n) as u64;
    if let Some(r) = cfg
        .cache()?
        .as_ref()
        .and_then(|c| c.get("rho", n as u64, key))
    {
        return Ok(r.clone());
    }
    let (best, arg) = bipartite::max_orientations(n, cfg.worker_count)?;
    let mut seen = HashSet::new();
    let mut cell = Cell::<Digraph>::new();
    for rows in arg {
        let d = bipartite::orientation(n, &rows);
        if seen.insert(digraph_key(&d)) {
            cell.offer(best, || digraph_almost_regular(&d), || d.clone());
        }
    }
    let rec = cell.finish(n as u64, key, digraph_key);
    store(cfg, "rho", &rec)?;
    Ok(rec)
}

fn store(cfg: &SweepConfig, kind: &str, rec: &ExtremalRecord) -> Result<()> {
    if let Some(mut c) = cfg.cache()? {
        c.insert(kind, rec.clone());
        c.save()?;
    }
    Ok(())
}

/// Outcome of checking the sparse family on `6 + 2k` vertices and `6 + k` edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseFamilyReport {
    pub k: usize,
    /// Canonical graph6 of `H + kK_2` for each extremal `H` on 6 vertices and 6 edges.
    pub family: Vec<String>,
    /// Every family member has exactly 2 perfect matchings.
    pub family_has_two_matchings: bool,
    /// Some family member is not almost regular.
    pub family_not_all_almost_regular: bool,
    /// Exhaustive record for the cell, when `6 + 2k` is within the sweep limit.
    pub exhaustive: Option<ExtremalRecord>,
}

impl SparseFamilyReport {
    /// The extremal graphs are not all almost regular: the family attains the
    /// maximum 2 and contains a graph that is not almost regular (checked
    /// against the exhaustive record when one exists).
    pub fn holds(&self) -> bool {
        self.family_has_two_matchings
            && self.family_not_all_almost_regular
            && self
                .exhaustive
                .as_ref()
                .is_none_or(|r| r.max_count == 2u64 && r.some_not_almost_regular())
    }

    /// Every extremal graph is a family member (exhaustive cells only).
    pub fn family_is_complete(&self) -> Option<bool> {
        self.exhaustive
            .as_ref()
            .map(|r| r.witness_count as usize == self.family.len() && r.witnesses == self.family)
    }
}

/// Builds `H + kK_2` for the extremal graphs `H` on 6 vertices and 6 edges and,
/// while `6 + 2k <= cfg.max_vertices`, sweeps the cell exhaustively.
pub fn verify_sparse_family(k: usize, cfg: &SweepConfig) -> Result<SparseFamilyReport> {
    let base = sweep_mu_with(6, 6, cfg)?;
    let matching = Graph::from_edges(
        2 * k,
        &(0..k).map(|i| (2 * i, 2 * i + 1)).collect::<Vec<_>>(),
    )?;
    let mut members = Vec::new();
    for w in &base.witnesses {
        members.push(parse_graph6(w.as_bytes())?.disjoint_union(&matching)?);
    }
    let mut family: Vec<String> = members.iter().map(graph_key).collect();
    family.sort();
    let n = 6 + 2 * k;
    let exhaustive = if n <= cfg.max_vertices {
        Some(sweep_mu_with(n, (6 + k) as u64, cfg)?)
    } else {
        None
    };
    Ok(SparseFamilyReport {
        k,
        family,
        family_has_two_matchings: members
            .iter()
            .all(|g| crate::permanent::count_perfect_matchings(g) == 2u64),
        family_not_all_almost_regular: members.iter().any(|g| !g.is_almost_regular()),
        exhaustive,
    })
}

/// Sweeps graphs read as graph6 lines instead of generating them.
/// Isomorphic duplicates are counted once; records are ordered by `(n, m)`.
pub fn sweep_mu_from_graph6(input: impl BufRead) -> Result<Vec<ExtremalRecord>> {
    let mut cells: BTreeMap<(u64, u64), (Cell<String>, HashSet<String>)> = BTreeMap::new();
    let mut offset = 0;
    for line in input.lines() {
        let line = line?;
        let text = line.trim_end();
        if !text.is_empty() && !text.starts_with(">>") {
            let g = parse_graph6(text.as_bytes()).map_err(|e| match e {
                Error::Parse { offset: o, message } => Error::Parse {
                    offset: offset + o,
                    message,
                },
                other => other,
            })?;
            let key = graph_key(&g);
            let slot = cells
                .entry((g.num_vertices() as u64, g.num_edges() as u64))
                .or_insert_with(|| (Cell::new(), HashSet::new()));
            if slot.1.insert(key.clone()) {
                let c = crate::permanent::count_perfect_matchings(&g);
                let c = c
                    .to_u64()
                    .ok_or_else(|| Error::precondition("matching count exceeds u64"))?;
                slot.0.offer(c, || g.is_almost_regular(), || key);
            }
        }
        offset += line.len() + 1;
    }
    Ok(cells
        .into_iter()
        .map(|((n, m), (cell, _))| cell.finish(n, m, String::clone))
        .collect())
}
