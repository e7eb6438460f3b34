use super::*;
use crate::registry::Registry;

/// Inputs a bound may draw on; each bound reads only the fields it needs.
#[derive(Clone, Debug, Default)]
pub struct BoundArgs {
    /// Vertex count, order, or side size depending on the bound.
    pub n: Option<u64>,
    /// Edge count or total to be split.
    pub m: Option<u64>,
    pub k: Option<u64>,
    pub graph: Option<Graph>,
    pub matrix: Option<ZeroOneMatrix>,
}

impl BoundArgs {
    fn need(v: Option<u64>, name: &str) -> Result<u64> {
        v.ok_or_else(|| Error::precondition(format!("missing argument {name}")))
    }
}

/// Labelled values produced by one bound, e.g. `[("lower", ..), ("upper", ..)]`.
pub type BoundValues = Vec<(&'static str, LogValue)>;

pub trait Bound: Send + Sync {
    fn describe(&self) -> &'static str;
    fn evaluate(&self, args: &BoundArgs) -> Result<BoundValues>;
}

macro_rules! bound {
    ($ty:ident, $doc:expr, |$a:ident| $body:expr) => {
        struct $ty;
        impl Bound for $ty {
            fn describe(&self) -> &'static str {
                $doc
            }
            fn evaluate(&self, $a: &BoundArgs) -> Result<BoundValues> {
                $body
            }
        }
    };
}

bound!(
    Omega,
    "omega(n vertices, m edges): max Alon-Friedland value",
    |a| {
        Ok(vec![(
            "value",
            omega(BoundArgs::need(a.n, "n")?, BoundArgs::need(a.m, "m")?)?,
        )])
    }
);
bound!(
    Theta,
    "theta(k, m): max of prod (p_i!)^(1/p_i) over k-part compositions of m",
    |a| {
        Ok(vec![(
            "value",
            theta(BoundArgs::need(a.k, "k")?, BoundArgs::need(a.m, "m")?)?,
        )])
    }
);
bound!(AlonFriedland, "Alon-Friedland bound of a graph", |a| {
    let g = a
        .graph
        .as_ref()
        .ok_or_else(|| Error::precondition("missing graph"))?;
    Ok(vec![("value", alon_friedland_bound(g))])
});
bound!(
    MincBregman,
    "Minc-Bregman bound of a square 0-1 matrix",
    |a| {
        let m = a
            .matrix
            .as_ref()
            .ok_or_else(|| Error::precondition("missing matrix"))?;
        Ok(vec![("value", minc_bregman_bound(m)?)])
    }
);
bound!(
    Ratio,
    "a_p = (p!)^(1/p) / ((p+1)!)^(1/(p+1)) with p = n",
    |a| {
        Ok(vec![(
            "value",
            fundamental_ratio(BoundArgs::need(a.n, "n")?)?,
        )])
    }
);
bound!(
    Vdw,
    "(k/e)^n lower bound for k-regular bipartite graphs",
    |a| {
        Ok(vec![(
            "value",
            vdw_lower_bounds(BoundArgs::need(a.n, "n")?, BoundArgs::need(a.k, "k")?)?,
        )])
    }
);
bound!(
    Tau,
    "bounds on the maximal 2-factor count of n-vertex tournaments",
    |a| {
        let (lo, hi) = tau_bounds(BoundArgs::need(a.n, "n")?)?;
        Ok(vec![("lower", lo), ("upper", hi)])
    }
);
bound!(
    Rho,
    "bounds on the maximal 2-factor count of K_{n,n} orientations, n odd",
    |a| {
        let (lo, hi) = rho_bounds(BoundArgs::need(a.n, "n")?)?;
        Ok(vec![("lower", lo), ("upper", hi)])
    }
);
bound!(Stirling, "Stirling interval around n!", |a| {
    let (lo, hi) = stirling_interval(BoundArgs::need(a.n, "n")?)?;
    Ok(vec![("lower", lo), ("upper", hi)])
});

/// All bounds, keyed by their command-line names.
pub fn bound_registry() -> Registry<dyn Bound> {
    let mut r: Registry<dyn Bound> = Registry::new("bound");
    r.register("omega", Box::new(Omega))
        .register("theta", Box::new(Theta))
        .register("alon-friedland", Box::new(AlonFriedland))
        .register("minc-bregman", Box::new(MincBregman))
        .register("ratio", Box::new(Ratio))
        .register("vdw", Box::new(Vdw))
        .register("tau", Box::new(Tau))
        .register("rho", Box::new(Rho))
        .register("stirling", Box::new(Stirling));
    r
}
