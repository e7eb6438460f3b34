//! Closed-form upper and lower bounds on matching and permanent counts.

mod factorial;
mod logvalue;
mod registry;

pub use factorial::ln_factorial;
pub use logvalue::LogValue;
pub use registry::{bound_registry, Bound, BoundArgs, BoundValues};

pub(crate) use factorial::FactorialPowers;

use crate::count::Count;
use crate::error::{Error, Result};
use crate::graph::{Graph, ZeroOneMatrix};
use crate::permanent::derangements;

/// Split of `total` into `parts` integers differing by at most one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreePartition {
    pub floor_deg: u64,
    pub ceil_deg: u64,
    /// Number of parts taking the ceiling value.
    pub alpha: u64,
}

impl DegreePartition {
    pub fn new(total: u64, parts: u64) -> Result<Self> {
        if parts == 0 {
            return Err(Error::precondition("cannot split into zero parts"));
        }
        let floor_deg = total / parts;
        let alpha = total - parts * floor_deg;
        let ceil_deg = if alpha == 0 { floor_deg } else { floor_deg + 1 };
        Ok(DegreePartition {
            floor_deg,
            ceil_deg,
            alpha,
        })
    }

    /// `prod (d!)^(1/d)` over all parts.
    fn factorial_product(&self, parts: u64) -> LogValue {
        let mut f = FactorialPowers::new();
        f.push(self.floor_deg, parts - self.alpha, self.floor_deg.max(1));
        if self.alpha > 0 {
            f.push(self.ceil_deg, self.alpha, self.ceil_deg);
        }
        f.finish()
    }
}

/// `prod_v (deg v!)^(1/(2 deg v))`; zero if some vertex is isolated.
pub fn alon_friedland_bound(g: &Graph) -> LogValue {
    let mut f = FactorialPowers::new();
    for d in g.degrees() {
        let d = d as u64;
        f.push(d, 1, 2 * d.max(1));
    }
    f.finish()
}

/// Maximum of the Alon-Friedland bound over graphs with `vertices` vertices
/// and `m` edges, attained by the almost regular ones.
pub fn omega(vertices: u64, m: u64) -> Result<LogValue> {
    if vertices < 2 || vertices % 2 == 1 {
        return Err(Error::precondition(format!(
            "vertex count must be even and positive, got {vertices}"
        )));
    }
    let n = vertices / 2;
    if m < n {
        return Err(Error::precondition(format!(
            "need at least {n} edges on {vertices} vertices, got {m}"
        )));
    }
    Ok(DegreePartition::new(m, n)?.factorial_product(n))
}

/// Maximum of `prod (p_i!)^(1/p_i)` over compositions of `big_m` into `k` positive parts.
pub fn theta(k: u64, big_m: u64) -> Result<LogValue> {
    if k < 2 {
        return Err(Error::precondition(format!(
            "k must be at least 2, got {k}"
        )));
    }
    if big_m < k {
        return Err(Error::precondition(format!(
            "cannot split {big_m} into {k} positive parts"
        )));
    }
    Ok(DegreePartition::new(big_m, k)?.factorial_product(k))
}

/// `a_p = (p!)^(1/p) / ((p+1)!)^(1/(p+1))`.
pub fn fundamental_ratio(p: u64) -> Result<LogValue> {
    if p == 0 {
        return Err(Error::precondition("p must be positive"));
    }
    let pf = p as f64;
    let ln = ln_factorial(p) / (pf * (pf + 1.0)) - (pf + 1.0).ln() / (pf + 1.0);
    Ok(LogValue::from_ln(ln))
}

/// `prod_i (r_i!)^(1/r_i)` over the row sums of a square 0-1 matrix.
pub fn minc_bregman_bound(a: &ZeroOneMatrix) -> Result<LogValue> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.num_rows(),
            cols: a.num_cols(),
        });
    }
    let mut f = FactorialPowers::new();
    for r in a.row_sums() {
        let r = r as u64;
        f.push(r, 1, r.max(1));
    }
    Ok(f.finish())
}

/// `(k/e)^n`, the lower bound on perfect matchings of a `k`-regular
/// bipartite graph with `n` vertices per side.
pub fn vdw_lower_bounds(n: u64, k: u64) -> Result<LogValue> {
    if k == 0 || k > n {
        return Err(Error::precondition(format!(
            "need 1 <= k <= n, got k={k}, n={n}"
        )));
    }
    Ok(LogValue::from_ln(n as f64 * ((k as f64).ln() - 1.0)))
}

/// Lower and upper bounds on the maximal number of 2-factors of a tournament on `n` vertices.
pub fn tau_bounds(n: u64) -> Result<(LogValue, LogValue)> {
    if n < 3 {
        return Err(Error::precondition(format!(
            "n must be at least 3, got {n}"
        )));
    }
    let nf = n as f64;
    let base = if n % 2 == 1 { n - 1 } else { n - 2 };
    let lower = LogValue::from_ln(0.5 + nf * ((base as f64).ln() - 2f64.ln() - 1.0));
    let mut f = FactorialPowers::new();
    if n % 2 == 1 {
        f.push((n - 1) / 2, 2 * n, n - 1);
    } else {
        f.push((n - 2) / 2, 2 * n - 2, n - 2).times(n / 2);
    }
    Ok((lower, f.finish()))
}

/// Lower and upper bounds on the maximal number of 2-factors of an
/// orientation of `K_{n,n}`, `n` odd. The lower bound is exact.
pub fn rho_bounds(n: u64) -> Result<(LogValue, LogValue)> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::precondition(format!(
            "n must be odd and at least 3, got {n}"
        )));
    }
    let p = (n - 1) / 2;
    let pf = Count::factorial(p);
    let bt1 = Count::from(n - 1) * pf.pow(4);
    let bt2 = Count::from(p + 1) * derangements(p + 1) * pf.pow(3);
    let lower = LogValue::from_count(bt1.max(bt2));
    let mut f = FactorialPowers::new();
    f.push(p, 2 * n, n - 1).push(p + 1, 2 * n, n + 1);
    Ok((lower, f.finish()))
}

/// Stirling interval `sqrt(2 pi p)(p/e)^p e^(1/(12p+1)) < p! < sqrt(2 pi p)(p/e)^p e^(1/(12p))`.
pub fn stirling_interval(p: u64) -> Result<(LogValue, LogValue)> {
    if p == 0 {
        return Err(Error::precondition("p must be positive"));
    }
    let pf = p as f64;
    let base = 0.5 * (2.0 * std::f64::consts::PI * pf).ln() + pf * (pf.ln() - 1.0);
    Ok((
        LogValue::from_ln(base + 1.0 / (12.0 * pf + 1.0)),
        LogValue::from_ln(base + 1.0 / (12.0 * pf)),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(v: &LogValue, x: f64) -> bool {
        (v.value() - x).abs() <= 1e-9 * x.abs().max(1.0)
    }

    #[test]
    fn alon_friedland_examples() {
        let k22 = Graph::complete_bipartite(2, 2).unwrap();
        assert_eq!(alon_friedland_bound(&k22).exact(), Some(&Count::from(2u64)));
        assert!(close(
            &alon_friedland_bound(&Graph::cycle(6).unwrap()),
            2f64.powf(1.5)
        ));
        assert!(alon_friedland_bound(&Graph::new(3).unwrap()).is_zero());
    }

    #[test]
    fn omega_examples() {
        assert_eq!(omega(10, 25).unwrap().exact(), Some(&Count::from(120u64)));
        assert_eq!(omega(10, 13).unwrap().exact(), Some(&Count::from(12u64)));
        for n in 1..10 {
            assert_eq!(omega(2 * n, n).unwrap().exact(), Some(&Count::one()));
        }
        assert!(omega(9, 20).is_err());
        assert!(omega(10, 4).is_err());
    }

    #[test]
    fn theta_examples() {
        assert!(close(&theta(4, 10).unwrap(), 2.0 * 6f64.powf(2.0 / 3.0)));
        assert_eq!(theta(3, 3).unwrap().exact(), Some(&Count::one()));
        assert!(close(&theta(2, 8).unwrap(), 24f64.powf(0.5)));
        assert!(theta(1, 5).is_err());
    }

    #[test]
    fn ratio_examples() {
        assert!(close(&fundamental_ratio(1).unwrap(), 0.5f64.sqrt()));
        assert!(close(
            &fundamental_ratio(2).unwrap(),
            2f64.sqrt() / 6f64.cbrt()
        ));
        assert!(fundamental_ratio(0).is_err());
    }

    #[test]
    fn minc_bregman_examples() {
        let j3 = ZeroOneMatrix::ones(3, 3).unwrap();
        assert_eq!(
            minc_bregman_bound(&j3).unwrap().exact(),
            Some(&Count::from(6u64))
        );
        let d4 = ZeroOneMatrix::identity(4).unwrap().complement();
        assert!(close(
            &minc_bregman_bound(&d4).unwrap(),
            6f64.powf(4.0 / 3.0)
        ));
        let i5 = ZeroOneMatrix::identity(5).unwrap();
        assert_eq!(
            minc_bregman_bound(&i5).unwrap().exact(),
            Some(&Count::one())
        );
        assert!(minc_bregman_bound(&ZeroOneMatrix::ones(2, 3).unwrap()).is_err());
    }

    #[test]
    fn vdw_examples() {
        assert!(close(&vdw_lower_bounds(1, 1).unwrap(), (-1f64).exp()));
        assert!(close(
            &vdw_lower_bounds(5, 3).unwrap(),
            (3.0 / std::f64::consts::E).powi(5)
        ));
        assert!(vdw_lower_bounds(3, 4).is_err());
    }

    #[test]
    fn tau_examples() {
        let (lo, hi) = tau_bounds(5).unwrap();
        let e = std::f64::consts::E;
        assert!(close(&lo, e.sqrt() * (4.0 / (2.0 * e)).powi(5)));
        assert!(close(&hi, 2f64.powf(2.5)));
        assert_eq!(tau_bounds(3).unwrap().1.exact(), Some(&Count::one()));
        assert_eq!(tau_bounds(4).unwrap().1.exact(), Some(&Count::from(2u64)));
        assert!(tau_bounds(2).is_err());
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho_bounds(3).unwrap().0.exact(), Some(&Count::from(2u64)));
        assert_eq!(rho_bounds(5).unwrap().0.exact(), Some(&Count::from(64u64)));
        assert_eq!(
            rho_bounds(7).unwrap().0.exact(),
            Some(&Count::from(7776u64))
        );
        assert_eq!(
            rho_bounds(9).unwrap().0.exact(),
            Some(&Count::from(3_041_280u64))
        );
        assert!(rho_bounds(6).is_err());
        for n in [3u64, 5, 7, 9, 11] {
            let (lo, hi) = rho_bounds(n).unwrap();
            assert!(lo.cmp_value(&hi).is_le());
        }
    }

    #[test]
    fn stirling_examples() {
        let (lo, hi) = stirling_interval(1).unwrap();
        assert!(lo.value() < 1.0 && 1.0 < hi.value());
        assert!((lo.value() - 0.9959).abs() < 1e-4 && (hi.value() - 1.0023).abs() < 1e-4);
        let (lo, hi) = stirling_interval(10).unwrap();
        assert!(lo.value() < 3_628_800.0 && 3_628_800.0 < hi.value());
        assert!(stirling_interval(0).is_err());
    }
}
