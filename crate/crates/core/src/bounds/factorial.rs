//! Log-factorials and products of fractional factorial powers.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_integer::Integer;

use super::LogValue;
use crate::count::Count;

const TABLE_SIZE: usize = 20_001;

/// Neumaier-compensated running sum.
#[derive(Default, Clone, Copy)]
pub(crate) struct CompensatedSum {
    sum: f64,
    comp: f64,
}

impl CompensatedSum {
    pub(crate) fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub(crate) fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

fn table() -> &'static [f64] {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = Vec::with_capacity(TABLE_SIZE);
        let mut acc = CompensatedSum::default();
        t.push(0.0);
        for i in 1..TABLE_SIZE {
            acc.add((i as f64).ln());
            t.push(acc.value());
        }
        t
    })
}

/// `ln(p!)` as a compensated sum of `ln i`.
pub fn ln_factorial(p: u64) -> f64 {
    let t = table();
    if (p as usize) < t.len() {
        return t[p as usize];
    }
    let mut acc = CompensatedSum::default();
    acc.add(t[t.len() - 1]);
    for i in t.len() as u64..=p {
        acc.add((i as f64).ln());
    }
    acc.value()
}

/// Accumulates `prod (p!)^(num/den)` with exponents grouped per `p`, so the
/// exact integer value is available whenever every grouped exponent is integral.
/// `0!` counts as 0: any positive power of it makes the product zero.
#[derive(Default)]
pub(crate) struct FactorialPowers {
    exponents: BTreeMap<u64, (u64, u64)>,
    zero: bool,
    extra: Vec<u64>,
}

impl FactorialPowers {
    pub(crate) fn new() -> Self {
        Self::default()
    }

    /// Multiplies by `(p!)^(num/den)`.
    pub(crate) fn push(&mut self, p: u64, num: u64, den: u64) -> &mut Self {
        if num == 0 {
            return self;
        }
        if p == 0 {
            self.zero = true;
            return self;
        }
        if p == 1 {
            return self;
        }
        assert!(den > 0);
        let e = self.exponents.entry(p).or_insert((0, 1));
        let (a, b) = *e;
        let l = b.lcm(&den);
        let top = a * (l / b) + num * (l / den);
        let g = top.gcd(&l);
        *e = (top / g, l / g);
        self
    }

    /// Multiplies by a plain integer.
    pub(crate) fn times(&mut self, k: u64) -> &mut Self {
        if k == 0 {
            self.zero = true;
        } else {
            self.extra.push(k);
        }
        self
    }

    pub(crate) fn finish(&self) -> LogValue {
        if self.zero {
            return LogValue::zero();
        }
        let mut ln = CompensatedSum::default();
        let mut exact = Some(Count::one());
        for (&p, &(num, den)) in &self.exponents {
            ln.add(num as f64 / den as f64 * ln_factorial(p));
            if den == 1 {
                exact = exact.map(|c| c * Count::factorial(p).pow(num as u32));
            } else {
                exact = None;
            }
        }
        for &k in &self.extra {
            ln.add((k as f64).ln());
            exact = exact.map(|c| c * Count::from(k));
        }
        LogValue::with_exact(ln.value(), exact)
    }
}
