//! Table and figure reports.

use std::io::Write;

use anyhow::Result;

use perfmax::bounds::{omega, tau_bounds, LogValue};
use perfmax::search::{sweep_mu_table, sweep_tau, ExtremalRecord, ResultsCache, SweepConfig};
use perfmax::Error;

/// Wide table: one column per order, rows for tau and the two closed-form bounds.
pub fn table1(out: impl Write, max_n: usize, cfg: &SweepConfig) -> Result<()> {
    if max_n < 3 {
        return Err(Error::Precondition(format!("--max-n must be at least 3, got {max_n}")).into());
    }
    let orders: Vec<usize> = (3..=max_n).collect();
    let mut tau = vec!["tau".to_string()];
    let mut lower = vec!["l.b.".to_string()];
    let mut upper = vec!["u.b.".to_string()];
    for &n in &orders {
        let (lo, hi) = tau_bounds(n as u64)?;
        tau.push(sweep_tau(n, cfg)?.max_count.to_string());
        lower.push(lo.to_decimal(3));
        upper.push(hi.to_decimal(3));
    }
    let mut w = csv::Writer::from_writer(out);
    let mut header = vec!["n".to_string()];
    header.extend(orders.iter().map(|n| n.to_string()));
    w.write_record(&header)?;
    w.write_record(&tau)?;
    w.write_record(&lower)?;
    w.write_record(&upper)?;
    w.flush()?;
    Ok(())
}

/// One row per edge count, one column per vertex count; cells carry the marker.
pub fn table2(out: impl Write, orders: &[usize], cfg: &SweepConfig) -> Result<()> {
    let mut columns = Vec::with_capacity(orders.len());
    for &n in orders {
        if n % 2 == 1 {
            return Err(Error::Precondition(format!("vertex counts must be even, got {n}")).into());
        }
        let cfg = SweepConfig {
            edge_range: None,
            ..cfg.clone()
        };
        columns.push(sweep_mu_table(n, &cfg)?);
    }
    let lo = orders.iter().map(|&n| n as u64 / 2).min().unwrap_or(0);
    let hi = orders.iter().map(|&n| total_edges(n)).max().unwrap_or(0);
    let mut w = csv::Writer::from_writer(out);
    let mut header = vec!["m".to_string()];
    header.extend(orders.iter().map(|n| format!("n={n}")));
    w.write_record(&header)?;
    for m in lo..=hi {
        let mut row = vec![m.to_string()];
        row.extend(columns.iter().map(|col| {
            col.iter()
                .find(|r| r.m_edges == m)
                .map(ExtremalRecord::cell)
                .unwrap_or_default()
        }));
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}

/// `(m, mu)` or, with `ratio`, `(m, omega / mu)` for every edge count of order `n`.
pub fn figure_data(
    out: impl Write,
    ratio: bool,
    n: usize,
    compute: bool,
    cfg: &SweepConfig,
) -> Result<()> {
    if n == 0 || n % 2 == 1 {
        return Err(Error::Precondition(format!(
            "vertex count must be even and positive, got {n}"
        ))
        .into());
    }
    let records = if compute {
        sweep_mu_table(
            n,
            &SweepConfig {
                edge_range: None,
                ..cfg.clone()
            },
        )?
    } else {
        cached_column(n, cfg)?
    };
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["m", if ratio { "omega_over_mu" } else { "mu" }])?;
    for r in records {
        let value = if ratio {
            let mu = LogValue::from_count(r.max_count.clone());
            omega(n as u64, r.m_edges)?.div(&mu).to_decimal(6)
        } else {
            r.max_count.to_string()
        };
        w.write_record([r.m_edges.to_string(), value])?;
    }
    w.flush()?;
    Ok(())
}

fn cached_column(n: usize, cfg: &SweepConfig) -> Result<Vec<ExtremalRecord>> {
    let hint = || {
        Error::Precondition(format!(
            "no cached sweep for n={n}; run `perfmax --cache FILE sweep mu --n {n}` first or pass --compute"
        ))
    };
    let path = cfg.cache_path.as_ref().ok_or_else(hint)?;
    let cache = ResultsCache::load(path)?;
    (n as u64 / 2..=total_edges(n))
        .map(|m| cache.get("mu", n as u64, m).cloned().ok_or_else(hint))
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(Into::into)
}

fn total_edges(n: usize) -> u64 {
    (n * n.saturating_sub(1) / 2) as u64
}
