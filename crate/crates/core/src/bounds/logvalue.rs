use std::cmp::Ordering;
use std::fmt;

use crate::count::Count;

/// Nonnegative real carried as its natural logarithm, optionally with the
/// exact integer it represents when that is known.
#[derive(Clone, Debug)]
pub struct LogValue {
    ln: f64,
    zero: bool,
    exact: Option<Count>,
}

impl LogValue {
    pub fn zero() -> Self {
        LogValue {
            ln: f64::NEG_INFINITY,
            zero: true,
            exact: Some(Count::zero()),
        }
    }

    pub fn one() -> Self {
        LogValue::from_count(Count::one())
    }

    pub fn from_ln(ln: f64) -> Self {
        if ln == f64::NEG_INFINITY {
            return LogValue::zero();
        }
        LogValue {
            ln,
            zero: false,
            exact: None,
        }
    }

    pub fn from_f64(x: f64) -> Self {
        assert!(x >= 0.0, "LogValue holds nonnegative reals");
        LogValue::from_ln(x.ln())
    }

    /// Exact integer value; comparisons against counts then become exact.
    pub fn from_count(c: Count) -> Self {
        if c.is_zero() {
            return LogValue::zero();
        }
        LogValue {
            ln: c.ln(),
            zero: false,
            exact: Some(c),
        }
    }

    pub(crate) fn with_exact(ln: f64, exact: Option<Count>) -> Self {
        match exact {
            Some(c) => LogValue::from_count(c),
            None => LogValue::from_ln(ln),
        }
    }

    pub fn ln(&self) -> f64 {
        self.ln
    }

    pub fn is_zero(&self) -> bool {
        self.zero
    }

    pub fn exact(&self) -> Option<&Count> {
        self.exact.as_ref()
    }

    /// The value as `f64` (may be `inf` for huge values).
    pub fn value(&self) -> f64 {
        if self.zero {
            0.0
        } else {
            self.ln.exp()
        }
    }

    pub fn mul(&self, other: &LogValue) -> LogValue {
        if self.zero || other.zero {
            return LogValue::zero();
        }
        match (&self.exact, &other.exact) {
            (Some(a), Some(b)) => LogValue::from_count(a * b),
            _ => LogValue::from_ln(self.ln + other.ln),
        }
    }

    pub fn div(&self, other: &LogValue) -> LogValue {
        assert!(!other.zero, "division by zero");
        if self.zero {
            return LogValue::zero();
        }
        LogValue::from_ln(self.ln - other.ln)
    }

    /// Ordering by value; exact when both sides are exact, otherwise by logarithm.
    pub fn cmp_value(&self, other: &LogValue) -> Ordering {
        match (&self.exact, &other.exact) {
            (Some(a), Some(b)) => a.cmp(b),
            _ => match (self.zero, other.zero) {
                (true, true) => Ordering::Equal,
                (true, false) => Ordering::Less,
                (false, true) => Ordering::Greater,
                _ => self.ln.total_cmp(&other.ln),
            },
        }
    }

    /// Equality within relative tolerance `rel_tol` (exact when both sides are exact).
    pub fn approx_eq(&self, other: &LogValue, rel_tol: f64) -> bool {
        self.cmp_with_tolerance(other, rel_tol) == Ordering::Equal
    }

    pub fn cmp_with_tolerance(&self, other: &LogValue, rel_tol: f64) -> Ordering {
        if let (Some(a), Some(b)) = (&self.exact, &other.exact) {
            return a.cmp(b);
        }
        match (self.zero, other.zero) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Less,
            (false, true) => Ordering::Greater,
            _ => {
                let d = self.ln - other.ln;
                if d.abs() <= rel_tol {
                    Ordering::Equal
                } else if d > 0.0 {
                    Ordering::Greater
                } else {
                    Ordering::Less
                }
            }
        }
    }

    /// Compares against an exact count: exactly when this value is exact,
    /// otherwise in log domain with relative tolerance `rel_tol`.
    pub fn cmp_count(&self, c: &Count, rel_tol: f64) -> Ordering {
        self.cmp_with_tolerance(&LogValue::from_count(c.clone()), rel_tol)
    }

    /// Decimal rendering with `digits` places (integers print exactly).
    pub fn to_decimal(&self, digits: usize) -> String {
        if let Some(c) = &self.exact {
            return c.to_string();
        }
        if self.ln < 700.0 {
            format!("{:.*}", digits, self.value())
        } else {
            let log10 = self.ln / std::f64::consts::LN_10;
            let e = log10.floor();
            format!("{:.*}e{}", digits, 10f64.powf(log10 - e), e as i64)
        }
    }
}

impl fmt::Display for LogValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal(6))
    }
}
