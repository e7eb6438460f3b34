use super::*;
use crate::registry::Registry;

#[derive(Clone, Debug, Default)]
pub struct SweepArgs {
    /// Vertex count (mu), order (tau) or side size (rho).
    pub n: usize,
}

pub trait Sweep: Send + Sync {
    fn describe(&self) -> &'static str;
    fn run(&self, args: &SweepArgs, cfg: &SweepConfig) -> Result<Vec<ExtremalRecord>>;
}

struct Mu;
struct Tau;
struct Rho;

impl Sweep for Mu {
    fn describe(&self) -> &'static str {
        "maximal perfect matchings over graphs with n vertices, one record per edge count"
    }

    fn run(&self, args: &SweepArgs, cfg: &SweepConfig) -> Result<Vec<ExtremalRecord>> {
        sweep_mu_table(args.n, cfg)
    }
}

impl Sweep for Tau {
    fn describe(&self) -> &'static str {
        "maximal 2-factors over tournaments of order n"
    }

    fn run(&self, args: &SweepArgs, cfg: &SweepConfig) -> Result<Vec<ExtremalRecord>> {
        Ok(vec![sweep_tau(args.n, cfg)?])
    }
}

impl Sweep for Rho {
    fn describe(&self) -> &'static str {
        "maximal 2-factors over orientations of K_{n,n}"
    }

    fn run(&self, args: &SweepArgs, cfg: &SweepConfig) -> Result<Vec<ExtremalRecord>> {
        Ok(vec![sweep_rho(args.n, cfg)?])
    }
}

pub fn sweep_registry() -> Registry<dyn Sweep> {
    let mut r: Registry<dyn Sweep> = Registry::new("sweep");
    r.register("mu", Box::new(Mu))
        .register("tau", Box::new(Tau))
        .register("rho", Box::new(Rho));
    r
}
