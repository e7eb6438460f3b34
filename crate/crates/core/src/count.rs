use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

/// Exact nonnegative integer count (matchings, permanents, derangements).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Count(BigUint);

impl Count {
    pub fn zero() -> Self {
        Count(BigUint::zero())
    }

    pub fn one() -> Self {
        Count(BigUint::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn into_biguint(self) -> BigUint {
        self.0
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    pub fn to_u128(&self) -> Option<u128> {
        self.0.to_u128()
    }

    /// Natural logarithm (`-inf` for zero), accurate for arbitrarily large values.
    pub fn ln(&self) -> f64 {
        if self.0.is_zero() {
            return f64::NEG_INFINITY;
        }
        let bits = self.0.bits();
        if bits <= 1000 {
            self.0.to_f64().expect("finite below 2^1000").ln()
        } else {
            let shift = bits - 64;
            let top = (&self.0 >> shift).to_f64().expect("64-bit value");
            top.ln() + shift as f64 * std::f64::consts::LN_2
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::INFINITY)
    }

    pub fn pow(&self, e: u32) -> Count {
        Count(self.0.pow(e))
    }

    /// `p!`
    pub fn factorial(p: u64) -> Count {
        Count((1..=p).fold(BigUint::one(), |acc, i| acc * i))
    }
}

impl From<u64> for Count {
    fn from(v: u64) -> Self {
        Count(BigUint::from(v))
    }
}

impl From<u128> for Count {
    fn from(v: u128) -> Self {
        Count(BigUint::from(v))
    }
}

impl From<usize> for Count {
    fn from(v: usize) -> Self {
        Count(BigUint::from(v))
    }
}

impl From<u32> for Count {
    fn from(v: u32) -> Self {
        Count(BigUint::from(v))
    }
}

impl From<BigUint> for Count {
    fn from(v: BigUint) -> Self {
        Count(v)
    }
}

impl PartialEq<u64> for Count {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigUint::from(*other)
    }
}

impl Add for Count {
    type Output = Count;
    fn add(self, rhs: Count) -> Count {
        Count(self.0 + rhs.0)
    }
}

impl Mul for Count {
    type Output = Count;
    fn mul(self, rhs: Count) -> Count {
        Count(self.0 * rhs.0)
    }
}

impl<'a> Mul<&'a Count> for &'a Count {
    type Output = Count;
    fn mul(self, rhs: &Count) -> Count {
        Count(&self.0 * &rhs.0)
    }
}

impl std::iter::Product for Count {
    fn product<I: Iterator<Item = Count>>(iter: I) -> Count {
        iter.fold(Count::one(), |a, b| a * b)
    }
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl std::str::FromStr for Count {
    type Err = num_bigint::ParseBigIntError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.parse().map(Count)
    }
}
