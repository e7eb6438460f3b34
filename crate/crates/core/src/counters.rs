//! Exact counters selectable by name, reading their input as text.

use crate::count::Count;
use crate::error::{Error, Result};
use crate::format::{parse_digraph6, parse_graph6};
use crate::graph::ZeroOneMatrix;
use crate::permanent::{count_2factors, count_perfect_matchings, permanent_with, PERMANENT_LIMIT};
use crate::registry::Registry;

pub trait Counter: Send + Sync {
    fn describe(&self) -> &'static str;
    /// Counts the object encoded in `input`, splitting work over `workers` threads where supported.
    fn count(&self, input: &[u8], workers: usize) -> Result<Count>;
}

struct PerfectMatchings;
struct Permanent;
struct TwoFactors;

impl Counter for PerfectMatchings {
    fn describe(&self) -> &'static str {
        "perfect matchings of a graph (graph6)"
    }

    fn count(&self, input: &[u8], _workers: usize) -> Result<Count> {
        Ok(count_perfect_matchings(&parse_graph6(input)?))
    }
}

impl Counter for Permanent {
    fn describe(&self) -> &'static str {
        "permanent of a square 0-1 matrix (rows of 0/1 separated by ';' or newlines, or digraph6)"
    }

    fn count(&self, input: &[u8], workers: usize) -> Result<Count> {
        let a = if input.first() == Some(&b'&') {
            parse_digraph6(input)?.adjacency_matrix()
        } else {
            parse_matrix(input)?
        };
        permanent_with(&a, PERMANENT_LIMIT, workers)
    }
}

impl Counter for TwoFactors {
    fn describe(&self) -> &'static str {
        "2-factors of a digraph (digraph6)"
    }

    fn count(&self, input: &[u8], _workers: usize) -> Result<Count> {
        count_2factors(&parse_digraph6(input)?)
    }
}

/// Parses rows such as `011;101;110` (newlines also separate rows).
pub fn parse_matrix(input: &[u8]) -> Result<ZeroOneMatrix> {
    let mut rows: Vec<Vec<u8>> = vec![Vec::new()];
    for (i, &b) in input.iter().enumerate() {
        match b {
            b'0' | b'1' => rows.last_mut().expect("non-empty").push(b - b'0'),
            b';' | b'\n' => rows.push(Vec::new()),
            b' ' | b'\t' | b'\r' | b',' => {}
            _ => {
                return Err(Error::parse(
                    i,
                    format!("unexpected byte {:?} in matrix", b as char),
                ))
            }
        }
    }
    rows.retain(|r| !r.is_empty());
    ZeroOneMatrix::from_entries(&rows)
}

pub fn counter_registry() -> Registry<dyn Counter> {
    let mut r: Registry<dyn Counter> = Registry::new("counter");
    r.register("perfmat", Box::new(PerfectMatchings))
        .register("permanent", Box::new(Permanent))
        .register("2factors", Box::new(TwoFactors));
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counters_by_name() {
        let r = counter_registry();
        assert_eq!(r.get("perfmat").unwrap().count(b"C~", 1).unwrap(), 3u64);
        assert_eq!(
            r.get("permanent")
                .unwrap()
                .count(b"111;111;111", 1)
                .unwrap(),
            6u64
        );
        assert_eq!(
            r.get("permanent")
                .unwrap()
                .count(b"011\n101\n110\n", 1)
                .unwrap(),
            2u64
        );
        assert!(matches!(
            r.get("permanent").unwrap().count(b"01;2", 1),
            Err(Error::Parse { offset: 3, .. })
        ));
        assert!(r.get("permanent").unwrap().count(b"01;1", 1).is_err());
    }
}
