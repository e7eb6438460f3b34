use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use perfmax::bounds::{bound_registry, BoundArgs};
use perfmax::canon::{canonical_form_digraph_with_limit, canonical_form_with_limit};
use perfmax::constructions::{construction_registry, ConstructionArgs};
use perfmax::counters::{counter_registry, parse_matrix};
use perfmax::format::{emit_digraph6_string, emit_graph6_string, parse_digraph6, parse_graph6};
use perfmax::graph::MAX_VERTICES;
use perfmax::search::{
    enumerate_bipartite_tournaments, enumerate_graphs, enumerate_tournaments, graph_stream,
    sweep_mu_from_graph6, sweep_registry, ExtremalRecord, SweepArgs, SweepConfig,
};
use perfmax::Error;

mod report;

#[derive(Parser)]
#[command(
    name = "perfmax",
    version,
    about = "Perfect matchings, permanents and 2-factors: counts, bounds, extremal constructions and sweeps"
)]
struct Cli {
    /// Worker threads for sweeps and large permanents.
    #[arg(long, global = true, default_value_t = 1, env = "PERFMAX_WORKERS")]
    workers: usize,

    /// Results cache file (defaults to perfmax-cache.csv inside $PERFMAX_CACHE_DIR when that is set).
    #[arg(long, global = true, env = "PERFMAX_CACHE")]
    cache: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a closed-form bound (`bounds list` shows all).
    Bounds {
        name: String,
        #[arg(long)]
        vertices: Option<u64>,
        #[arg(long)]
        edges: Option<u64>,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        k: Option<u64>,
        /// Graph in graph6 (alon-friedland).
        #[arg(long)]
        graph: Option<String>,
        /// Matrix rows such as 011;101;110 (minc-bregman).
        #[arg(long)]
        matrix: Option<String>,
        /// Require exact integer values.
        #[arg(long)]
        exact: bool,
        /// Decimal places for non-integer values.
        #[arg(long, default_value_t = 6)]
        digits: usize,
    },
    /// Count perfect matchings (perfmat), permanents (permanent) or 2-factors (2factors).
    Count {
        kind: String,
        /// Encoded input; reads --file or stdin (one object per line) when omitted.
        input: Option<String>,
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Build an extremal object (`construct list` shows all families).
    Construct {
        family: String,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        vertices: Option<u64>,
        #[arg(long)]
        edges: Option<u64>,
    },
    /// Run an exhaustive sweep: mu (graphs), tau (tournaments) or rho (orientations of K_{n,n}).
    Sweep {
        kind: String,
        #[arg(long)]
        n: Option<usize>,
        /// Edge count or inclusive range `lo..hi` (mu only).
        #[arg(long)]
        edges: Option<String>,
        /// Read graph6 lines from this file (`-` for stdin) instead of generating (mu only).
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Maximal 2-factor counts of tournaments with the closed-form bounds.
    Table1 {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
    },
    /// Maximal perfect matching counts per vertex and edge count, with markers.
    Table2 {
        /// Vertex counts (columns).
        #[arg(long, value_delimiter = ',', default_values_t = [4usize, 6, 8])]
        n: Vec<usize>,
    },
    /// Plot data: figure 4 is (m, mu), figure 5 is (m, omega / mu).
    FigureData {
        #[arg(long, value_parser = ["4", "5"])]
        figure: String,
        #[arg(long, default_value_t = 10)]
        n: usize,
        /// Run the sweep when the cache lacks cells.
        #[arg(long)]
        compute: bool,
    },
    /// Canonical graph6/digraph6 form of each input line.
    Canon {
        input: Option<String>,
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// List isomorphism class representatives.
    Enumerate {
        what: Family,
        #[arg(long)]
        n: usize,
        /// Edge count (graphs only; all counts when omitted).
        #[arg(long)]
        edges: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Graphs,
    Tournaments,
    Bipartite,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &anyhow::Error) -> u8 {
    match e.chain().find_map(|c| c.downcast_ref::<Error>()) {
        Some(Error::Parse { .. }) => 2,
        Some(Error::SizeLimit { .. }) => 3,
        _ => 1,
    }
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.chain().any(|c| {
        c.downcast_ref::<io::Error>().map(io::Error::kind) == Some(io::ErrorKind::BrokenPipe)
            || c.downcast_ref::<csv::Error>()
                .is_some_and(|c| match c.kind() {
                    csv::ErrorKind::Io(io) => io.kind() == io::ErrorKind::BrokenPipe,
                    _ => false,
                })
    })
}

fn cache_path(cli: &Cli) -> Option<PathBuf> {
    cli.cache.clone().or_else(|| {
        std::env::var_os("PERFMAX_CACHE_DIR").map(|d| PathBuf::from(d).join("perfmax-cache.csv"))
    })
}

fn sweep_config(cli: &Cli) -> SweepConfig {
    SweepConfig {
        worker_count: cli.workers.max(1),
        cache_path: cache_path(cli),
        ..SweepConfig::default()
    }
}

/// Input objects: the positional argument, else the lines of `file`, else stdin lines.
fn inputs(arg: &Option<String>, file: &Option<PathBuf>) -> Result<Vec<String>> {
    if let Some(a) = arg {
        return Ok(vec![a.clone()]);
    }
    let mut text = String::new();
    match file {
        Some(p) => {
            text = std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?
        }
        None => {
            io::stdin().read_to_string(&mut text)?;
        }
    }
    Ok(text
        .lines()
        .map(str::trim_end)
        .filter(|l| !l.is_empty() && !l.starts_with(">>"))
        .map(String::from)
        .collect())
}

fn run(cli: Cli) -> Result<()> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match &cli.command {
        Command::Bounds {
            name,
            vertices,
            edges,
            n,
            k,
            graph,
            matrix,
            exact,
            digits,
        } => {
            let reg = bound_registry();
            if name == "list" {
                for (name, b) in reg.iter() {
                    writeln!(out, "{name}\t{}", b.describe())?;
                }
                return Ok(());
            }
            let args = BoundArgs {
                n: vertices.or(*n),
                m: *edges,
                k: *k,
                graph: graph
                    .as_deref()
                    .map(|g| parse_graph6(g.as_bytes()))
                    .transpose()?,
                matrix: matrix
                    .as_deref()
                    .map(|m| parse_matrix(m.as_bytes()))
                    .transpose()?,
            };
            let values = reg.get(name)?.evaluate(&args)?;
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["quantity", "value", "ln"])?;
            for (label, v) in values {
                if *exact && v.exact().is_none() {
                    return Err(
                        Error::Precondition(format!("{label} is not an integer: {v}")).into(),
                    );
                }
                w.write_record([
                    label.to_string(),
                    v.to_decimal(*digits),
                    format!("{:.12}", v.ln()),
                ])?;
            }
            w.flush()?;
        }
        Command::Count { kind, input, file } => {
            let reg = counter_registry();
            let counter = reg.get(kind)?;
            for item in inputs(input, file)? {
                writeln!(
                    out,
                    "{}",
                    counter.count(item.as_bytes(), cli.workers.max(1))?
                )?;
            }
        }
        Command::Construct {
            family,
            n,
            vertices,
            edges,
        } => {
            let reg = construction_registry();
            if family == "list" {
                for (name, c) in reg.iter() {
                    writeln!(out, "{name}\t{}", c.describe())?;
                }
                return Ok(());
            }
            let built = reg.get(family)?.build(&ConstructionArgs {
                n: vertices.or(*n),
                m: *edges,
            })?;
            writeln!(out, "{}", built.encode())?;
            writeln!(out, "count {}", built.count()?)?;
        }
        Command::Sweep {
            kind,
            n,
            edges,
            input,
        } => {
            let records = if let Some(path) = input {
                if kind != "mu" {
                    bail!(Error::Precondition(
                        "--input is only supported for mu sweeps".into()
                    ));
                }
                if path.as_os_str() == "-" {
                    sweep_mu_from_graph6(io::stdin().lock())?
                } else {
                    let f = std::fs::File::open(path)
                        .with_context(|| format!("opening {}", path.display()))?;
                    sweep_mu_from_graph6(io::BufReader::new(f))?
                }
            } else {
                let n = n.ok_or_else(|| Error::Precondition("--n is required".into()))?;
                let mut cfg = sweep_config(&cli);
                cfg.edge_range = edges.as_deref().map(parse_range).transpose()?;
                sweep_registry().get(kind)?.run(&SweepArgs { n }, &cfg)?
            };
            write_records(out, kind, &records)?;
        }
        Command::Table1 { max_n } => report::table1(out, *max_n, &sweep_config(&cli))?,
        Command::Table2 { n } => report::table2(out, n, &sweep_config(&cli))?,
        Command::FigureData { figure, n, compute } => {
            report::figure_data(out, figure == "5", *n, *compute, &sweep_config(&cli))?
        }
        Command::Canon { input, file } => {
            for line in inputs(input, file)? {
                let bytes = line.as_bytes();
                let canon = if bytes.first() == Some(&b'&') {
                    canonical_form_digraph_with_limit(&parse_digraph6(bytes)?, MAX_VERTICES)?
                } else {
                    canonical_form_with_limit(&parse_graph6(bytes)?, MAX_VERTICES)?
                };
                out.write_all(&canon)?;
                writeln!(out)?;
            }
        }
        Command::Enumerate { what, n, edges } => match what {
            Family::Graphs => match edges {
                Some(m) => {
                    for g in enumerate_graphs(*n, *m)? {
                        writeln!(out, "{}", emit_graph6_string(&g))?;
                    }
                }
                None => {
                    for g in graph_stream(*n, usize::MAX)? {
                        writeln!(out, "{}", emit_graph6_string(&g))?;
                    }
                }
            },
            Family::Tournaments => {
                for t in enumerate_tournaments(*n)? {
                    writeln!(out, "{}", emit_digraph6_string(&t))?;
                }
            }
            Family::Bipartite => {
                for t in enumerate_bipartite_tournaments(*n)? {
                    writeln!(out, "{}", emit_digraph6_string(&t))?;
                }
            }
        },
    }
    Ok(())
}

fn parse_range(s: &str) -> Result<std::ops::RangeInclusive<u64>> {
    let bad = || Error::Precondition(format!("bad edge range `{s}`, expected M or LO..HI"));
    match s.split_once("..") {
        Some((lo, hi)) => {
            let lo: u64 = lo.trim().parse().map_err(|_| bad())?;
            let hi: u64 = hi
                .trim()
                .trim_start_matches('=')
                .parse()
                .map_err(|_| bad())?;
            if lo > hi {
                bail!(bad());
            }
            Ok(lo..=hi)
        }
        None => {
            let m: u64 = s.trim().parse().map_err(|_| bad())?;
            Ok(m..=m)
        }
    }
}

fn write_records(out: impl Write, kind: &str, records: &[ExtremalRecord]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "kind",
        "n",
        "m",
        "max",
        "marker",
        "witness_count",
        "almost_regular",
        "witnesses",
    ])?;
    for r in records {
        w.write_record([
            kind.to_string(),
            r.n_vertices.to_string(),
            r.m_edges.to_string(),
            r.max_count.to_string(),
            r.marker().to_string(),
            r.witness_count.to_string(),
            r.almost_regular_count.to_string(),
            r.witnesses.join(" "),
        ])?;
    }
    w.flush()?;
    Ok(())
}
