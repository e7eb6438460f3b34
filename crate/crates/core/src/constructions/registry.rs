use super::*;
use crate::format::{emit_digraph6_string, emit_graph6_string};
use crate::permanent::{count_2factors, count_perfect_matchings};
use crate::registry::Registry;

#[derive(Clone, Copy, Debug, Default)]
pub struct ConstructionArgs {
    /// Order (tournaments, side size of `K_{n,n}`) or vertex count (extremal graphs).
    pub n: Option<u64>,
    /// Edge count (extremal graphs).
    pub m: Option<u64>,
}

/// A built object together with the quantity it is extremal for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Constructed {
    Graph(Graph),
    Digraph(Digraph),
}

impl Constructed {
    /// Perfect matchings of a graph, 2-factors of a digraph.
    pub fn count(&self) -> Result<Count> {
        match self {
            Constructed::Graph(g) => Ok(count_perfect_matchings(g)),
            Constructed::Digraph(d) => count_2factors(d),
        }
    }

    /// graph6 or digraph6 text.
    pub fn encode(&self) -> String {
        match self {
            Constructed::Graph(g) => emit_graph6_string(g),
            Constructed::Digraph(d) => emit_digraph6_string(d),
        }
    }
}

pub trait Construction: Send + Sync {
    fn describe(&self) -> &'static str;
    fn build(&self, args: &ConstructionArgs) -> Result<Constructed>;
}

fn need(v: Option<u64>, name: &str) -> Result<u64> {
    v.ok_or_else(|| Error::precondition(format!("missing argument {name}")))
}

struct Extremal;
struct Bt0;
struct Bt1;
struct Bt2;
struct NearRegular;

impl Construction for Extremal {
    fn describe(&self) -> &'static str {
        "disjoint union of K_{n1,n1} and K_{n1+1,n1+1} maximizing matchings for (vertices, edges)"
    }

    fn build(&self, args: &ConstructionArgs) -> Result<Constructed> {
        let vertices = need(args.n, "vertices")?;
        let m = need(args.m, "edges")?;
        if vertices % 2 == 1 {
            return Err(Error::precondition(format!(
                "vertex count must be even, got {vertices}"
            )));
        }
        let d = extremal_decomposition(vertices / 2, m)?.ok_or_else(|| {
            Error::precondition(format!(
                "no union of complete bipartite graphs has {vertices} vertices and {m} edges"
            ))
        })?;
        Ok(Constructed::Graph(build_extremal_graph(&d)?))
    }
}

impl Construction for Bt0 {
    fn describe(&self) -> &'static str {
        "orientation of K_{n,n} with B = J + J, n even"
    }

    fn build(&self, args: &ConstructionArgs) -> Result<Constructed> {
        build_bt0(need(args.n, "n")?).map(Constructed::Digraph)
    }
}

impl Construction for Bt1 {
    fn describe(&self) -> &'static str {
        "orientation of K_{n,n} with B = J_p + J_p + J_1, n odd"
    }

    fn build(&self, args: &ConstructionArgs) -> Result<Constructed> {
        build_bt1(need(args.n, "n")?).map(Constructed::Digraph)
    }
}

impl Construction for Bt2 {
    fn describe(&self) -> &'static str {
        "orientation of K_{n,n} with B = J_p + (J_{p+1} - I), n odd"
    }

    fn build(&self, args: &ConstructionArgs) -> Result<Constructed> {
        build_bt2(need(args.n, "n")?).map(Constructed::Digraph)
    }
}

impl Construction for NearRegular {
    fn describe(&self) -> &'static str {
        "rotational tournament with out-degrees within one of each other"
    }

    fn build(&self, args: &ConstructionArgs) -> Result<Constructed> {
        build_near_regular_tournament(need(args.n, "n")?).map(Constructed::Digraph)
    }
}

pub fn construction_registry() -> Registry<dyn Construction> {
    let mut r: Registry<dyn Construction> = Registry::new("construction");
    r.register("extremal", Box::new(Extremal))
        .register("bt0", Box::new(Bt0))
        .register("bt1", Box::new(Bt1))
        .register("bt2", Box::new(Bt2))
        .register("near-regular", Box::new(NearRegular));
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_builds() {
        let r = construction_registry();
        let bt1 = r
            .get("bt1")
            .unwrap()
            .build(&ConstructionArgs {
                n: Some(5),
                m: None,
            })
            .unwrap();
        assert_eq!(bt1.count().unwrap(), 64u64);
        let ex = r
            .get("extremal")
            .unwrap()
            .build(&ConstructionArgs {
                n: Some(10),
                m: Some(13),
            })
            .unwrap();
        assert_eq!(ex.count().unwrap(), 12u64);
        assert!(r
            .get("bt0")
            .unwrap()
            .build(&ConstructionArgs {
                n: Some(5),
                m: None
            })
            .is_err());
        assert!(r
            .get("extremal")
            .unwrap()
            .build(&ConstructionArgs {
                n: Some(6),
                m: Some(7)
            })
            .is_err());
    }
}
