//! graph6 and digraph6 codecs.
//!
//! Both formats encode the vertex count `N(n)` followed by a bit stream
//! packed into 6-bit groups, each stored as the printable byte `63 + x`.
//! graph6 carries the upper triangle column by column
//! (`x(0,1) x(0,2) x(1,2) x(0,3) ...`); digraph6 starts with `&` and carries
//! the full `n x n` matrix row by row.

use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph, MAX_VERTICES};

const GRAPH6_HEADER: &[u8] = b">>graph6<<";
const DIGRAPH6_HEADER: &[u8] = b">>digraph6<<";

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

struct BitWriter {
    out: Vec<u8>,
    acc: u8,
    used: u8,
}

impl BitWriter {
    fn new(out: Vec<u8>) -> Self {
        BitWriter {
            out,
            acc: 0,
            used: 0,
        }
    }

    fn push(&mut self, bit: bool) {
        self.acc = (self.acc << 1) | bit as u8;
        self.used += 1;
        if self.used == 6 {
            self.out.push(self.acc + 63);
            self.acc = 0;
            self.used = 0;
        }
    }

    fn finish(mut self) -> Vec<u8> {
        if self.used > 0 {
            self.out.push((self.acc << (6 - self.used)) + 63);
        }
        self.out
    }
}

fn check_char(byte: u8, offset: usize) -> Result<u8> {
    if (63..=126).contains(&byte) {
        Ok(byte - 63)
    } else {
        Err(Error::parse(
            offset,
            format!("byte 0x{byte:02x} is outside the printable range 63..=126"),
        ))
    }
}

/// Parses `N(n)` starting at `offset`; returns `(n, next_offset)`.
fn parse_size(text: &[u8], offset: usize) -> Result<(usize, usize)> {
    let first = *text
        .get(offset)
        .ok_or_else(|| Error::parse(offset, "missing vertex-count header"))?;
    let first = check_char(first, offset)?;
    if first < 63 {
        return Ok((first as usize, offset + 1));
    }
    let (start, len) = if text.get(offset + 1) == Some(&126) {
        (offset + 2, 6)
    } else {
        (offset + 1, 3)
    };
    if text.len() < start + len {
        return Err(Error::parse(text.len(), "truncated vertex-count header"));
    }
    let mut n = 0usize;
    for (i, &c) in text.iter().enumerate().take(start + len).skip(start) {
        n = (n << 6) | check_char(c, i)? as usize;
    }
    Ok((n, start + len))
}

fn strip(text: &[u8], header: &[u8]) -> (usize, usize) {
    let mut end = text.len();
    while end > 0 && matches!(text[end - 1], b'\n' | b'\r') {
        end -= 1;
    }
    let start = if text.starts_with(header) {
        header.len()
    } else {
        0
    };
    (start, end)
}

/// Reads `nbits` bits starting at byte `offset`; rejects short input,
/// trailing bytes and non-zero padding.
fn read_bits(text: &[u8], offset: usize, end: usize, nbits: usize) -> Result<Vec<bool>> {
    let nbytes = nbits.div_ceil(6);
    if end - offset < nbytes {
        return Err(Error::parse(
            end,
            format!(
                "truncated bit stream: expected {nbytes} data bytes, found {}",
                end - offset
            ),
        ));
    }
    if end - offset > nbytes {
        return Err(Error::parse(offset + nbytes, "unexpected trailing bytes"));
    }
    let mut out = Vec::with_capacity(nbytes * 6);
    for (i, &c) in text.iter().enumerate().take(end).skip(offset) {
        let x = check_char(c, i)?;
        for b in (0..6).rev() {
            out.push(x >> b & 1 == 1);
        }
    }
    if out[nbits..].iter().any(|&b| b) {
        return Err(Error::parse(end - 1, "non-zero padding bits"));
    }
    out.truncate(nbits);
    Ok(out)
}

/// Encodes `g` as graph6 (no header, no trailing newline).
pub fn emit_graph6(g: &Graph) -> Vec<u8> {
    let n = g.num_vertices();
    let mut head = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    push_size(&mut head, n);
    let mut w = BitWriter::new(head);
    for j in 1..n {
        for i in 0..j {
            w.push(g.has_edge(i, j));
        }
    }
    w.finish()
}

pub fn emit_graph6_string(g: &Graph) -> String {
    String::from_utf8(emit_graph6(g)).expect("graph6 is ASCII")
}

/// Decodes a graph6 string; a `>>graph6<<` header and trailing newline are accepted.
pub fn parse_graph6(text: &[u8]) -> Result<Graph> {
    let (start, end) = strip(text, GRAPH6_HEADER);
    let text = &text[..end];
    if text.get(start) == Some(&b'&') {
        return Err(Error::parse(
            start,
            "digraph6 input where graph6 was expected",
        ));
    }
    if text.get(start) == Some(&b':') || text.get(start) == Some(&b';') {
        return Err(Error::parse(start, "sparse6 input is not supported"));
    }
    let (n, offset) = parse_size(text, start)?;
    Error::check_size("graph6 vertex count", n, MAX_VERTICES)?;
    let bitsv = read_bits(text, offset, end, n * n.saturating_sub(1) / 2)?;
    let mut g = Graph::new(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bitsv[k] {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Encodes `d` as digraph6 (leading `&`, no trailing newline).
pub fn emit_digraph6(d: &Digraph) -> Vec<u8> {
    let n = d.num_vertices();
    let mut head = Vec::with_capacity(5 + (n * n).div_ceil(6));
    head.push(b'&');
    push_size(&mut head, n);
    let mut w = BitWriter::new(head);
    for i in 0..n {
        for j in 0..n {
            w.push(d.has_arc(i, j));
        }
    }
    w.finish()
}

pub fn emit_digraph6_string(d: &Digraph) -> String {
    String::from_utf8(emit_digraph6(d)).expect("digraph6 is ASCII")
}

/// Decodes a digraph6 string; a `>>digraph6<<` header and trailing newline are accepted.
pub fn parse_digraph6(text: &[u8]) -> Result<Digraph> {
    let (start, end) = strip(text, DIGRAPH6_HEADER);
    let text = &text[..end];
    match text.get(start) {
        Some(b'&') => {}
        Some(_) => return Err(Error::parse(start, "digraph6 must start with '&'")),
        None => return Err(Error::parse(start, "empty input")),
    }
    let (n, offset) = parse_size(text, start + 1)?;
    Error::check_size("digraph6 vertex count", n, MAX_VERTICES)?;
    let bitsv = read_bits(text, offset, end, n * n)?;
    let mut d = Digraph::new(n)?;
    for i in 0..n {
        for j in 0..n {
            if bitsv[i * n + j] {
                d.add_arc(i, j);
            }
        }
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_five_vertex_string() {
        // Edges 0-2, 0-4, 1-3, 3-4.
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(emit_graph6(&g), b"DQc");
        assert_eq!(parse_graph6(b"DQc").unwrap(), g);
    }

    #[test]
    fn small_sizes() {
        assert_eq!(emit_graph6(&Graph::new(0).unwrap()), b"?");
        assert_eq!(emit_graph6(&Graph::new(1).unwrap()), b"@");
        assert_eq!(emit_graph6(&Graph::complete(2).unwrap()), b"A_");
        assert_eq!(emit_graph6(&Graph::complete(4).unwrap()), b"C~");
    }

    #[test]
    fn large_header() {
        let g = Graph::new(63).unwrap();
        let s = emit_graph6(&g);
        assert_eq!(&s[..4], &[126, 63, 63, 63 + 63]);
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn header_and_newline_accepted() {
        assert_eq!(
            parse_graph6(b">>graph6<<C~\n").unwrap(),
            Graph::complete(4).unwrap()
        );
    }

    #[test]
    fn malformed_graph6() {
        let err = parse_graph6(b"C~~").unwrap_err();
        assert_eq!(err, Error::parse(2, "unexpected trailing bytes"));
        assert!(matches!(
            parse_graph6(b"D"),
            Err(Error::Parse { offset: 1, .. })
        ));
        assert!(matches!(
            parse_graph6(b"D Q"),
            Err(Error::Parse { offset: 1, .. })
        ));
        assert!(matches!(
            parse_graph6(b""),
            Err(Error::Parse { offset: 0, .. })
        ));
        // 'A' + 0b100000 is fine, 0b010000 sets a padding bit.
        assert!(parse_graph6(b"A_").is_ok());
        assert!(matches!(parse_graph6(b"AO"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_graph6(b"~?@@"),
            Err(Error::SizeLimit { got: 65, .. })
        ));
    }

    #[test]
    fn digraph6_examples() {
        let d = Digraph::new(2).unwrap();
        assert_eq!(emit_digraph6(&d), b"&A?");
        let loops = Digraph::from_arcs(3, &[(0, 0), (1, 1), (2, 2), (0, 1)]).unwrap();
        let s = emit_digraph6(&loops);
        assert_eq!(parse_digraph6(&s).unwrap(), loops);
        // 3-cycle: bits 010 001 100 -> 010001 100000
        let c3 = Digraph::cycle(3).unwrap();
        assert_eq!(
            emit_digraph6(&c3),
            &[b'&', 66, 63 + 0b010001, 63 + 0b100000]
        );
        assert!(matches!(
            parse_digraph6(b"B?"),
            Err(Error::Parse { offset: 0, .. })
        ));
        assert!(matches!(parse_digraph6(b"&B"), Err(Error::Parse { .. })));
    }
}
