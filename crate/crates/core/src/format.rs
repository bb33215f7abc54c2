//! Text formats: graph6 and a plain edge list.
//!
//! graph6 follows the format shipped with nauty: a size header `N(n)` (one
//! byte `n + 63` for `n <= 62`, else `126` plus three 6-bit groups), then the
//! upper triangle of the adjacency matrix in column order
//! `x(0,1) x(0,2) x(1,2) x(0,3) ...`, packed big-endian six bits at a time
//! with each group offset by 63.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

pub fn to_graph6(g: &Graph) -> String {
    String::from_utf8(to_graph6_bytes(g)).expect("graph6 is printable ASCII")
}

pub(crate) fn to_graph6_bytes(g: &Graph) -> Vec<u8> {
    let n = g.n();
    let adj = g.adjacency();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | (adj[i] >> j & 1) as u8;
            k += 1;
            if k == 6 {
                out.push(acc + 63);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push((acc << (6 - k)) + 63);
    }
    out
}

/// Decodes one graph6 line. A leading `>>graph6<<` header and trailing
/// newline are accepted.
pub fn from_graph6(s: &str) -> Result<Graph> {
    let bytes = s.as_bytes();
    let mut pos = 0;
    if s.starts_with(HEADER) {
        pos = HEADER.len();
    }
    let mut end = bytes.len();
    while end > pos && (bytes[end - 1] == b'\n' || bytes[end - 1] == b'\r') {
        end -= 1;
    }
    let data = &bytes[..end];

    let sextet = |at: usize| -> Result<u64> {
        match data.get(at) {
            None => Err(Error::parse(at, "unexpected end of graph6 data")),
            Some(&b) if (63..=126).contains(&b) => Ok((b - 63) as u64),
            Some(&b) => Err(Error::parse(at, format!("byte 0x{b:02x} is not a graph6 character"))),
        }
    };

    let first = sextet(pos)?;
    let n = if first < 63 {
        pos += 1;
        first as usize
    } else {
        if data.get(pos + 1) == Some(&126) {
            return Err(Error::parse(
                pos,
                format!("graphs with more than {MAX_VERTICES} vertices are not supported"),
            ));
        }
        let mut n = 0usize;
        for i in 1..=3 {
            n = n << 6 | sextet(pos + i)? as usize;
        }
        pos += 4;
        n
    };
    if n > MAX_VERTICES {
        return Err(Error::parse(
            pos,
            format!("graph has {n} vertices, more than the supported {MAX_VERTICES}"),
        ));
    }

    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if data.len() - pos != need {
        return Err(Error::parse(
            pos + need.min(data.len() - pos),
            format!(
                "expected {need} data bytes for n = {n}, found {}",
                data.len() - pos
            ),
        ));
    }
    let mut adj = vec![0u64; n];
    let mut bit = 0;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = sextet(pos + bit / 6)?;
            if byte >> (5 - bit % 6) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            bit += 1;
            if bit == bits {
                break 'outer;
            }
        }
    }
    if bits % 6 != 0 {
        let last = sextet(pos + need - 1)?;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::parse(pos + need - 1, "nonzero padding bits"));
        }
    }
    Ok(Graph::from_adjacency_unchecked(adj))
}

/// `n m` on the first line, then one `u v` pair per line.
pub fn to_edge_list(g: &Graph) -> String {
    let mut s = String::new();
    let edges = g.edges();
    let _ = writeln!(s, "{} {}", g.n(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

pub fn from_edge_list_text(text: &str) -> Result<Graph> {
    let mut offset = 0;
    let mut lines = Vec::new();
    for line in text.split_inclusive('\n') {
        let trimmed = line.trim();
        if !trimmed.is_empty() && !trimmed.starts_with('#') {
            lines.push((offset, trimmed));
        }
        offset += line.len();
    }
    let mut it = lines.into_iter();
    let (off, header) = it
        .next()
        .ok_or_else(|| Error::parse(0, "empty edge list"))?;
    let (n, m) = parse_pair(off, header)?;
    let mut edges = Vec::with_capacity(m);
    for (off, line) in it.by_ref() {
        edges.push(parse_pair(off, line)?);
    }
    if edges.len() != m {
        return Err(Error::parse(
            text.len(),
            format!("header announces {m} edges, found {}", edges.len()),
        ));
    }
    Graph::from_edge_list(n, &edges)
}

fn parse_pair(offset: usize, line: &str) -> Result<(usize, usize)> {
    let mut parts = line.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = parts
            .next()
            .ok_or_else(|| Error::parse(offset, format!("expected two integers in `{line}`")))?;
        tok.parse()
            .map_err(|_| Error::parse(offset, format!("`{tok}` is not a nonnegative integer")))
    };
    let a = next()?;
    let b = next()?;
    if parts.next().is_some() {
        return Err(Error::parse(offset, format!("trailing tokens in `{line}`")));
    }
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_encodings() {
        // From the nauty format description and petgraph's fixtures.
        let g = Graph::from_edge_list(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g), "DQc");
        assert_eq!(to_graph6(&Graph::empty(0).unwrap()), "?");
        assert_eq!(to_graph6(&Graph::empty(1).unwrap()), "@");
        let k2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        assert_eq!(to_graph6(&k2), "A_");
    }

    #[test]
    fn decode_known() {
        let g = from_graph6("DQc").unwrap();
        assert_eq!(g.edges(), vec![(0, 2), (0, 4), (1, 3), (3, 4)]);
        assert_eq!(from_graph6(">>graph6<<DQc\n").unwrap(), g);
    }

    #[test]
    fn large_header_round_trip() {
        let n = 64;
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        let g = Graph::from_edge_list(n, &e).unwrap();
        let s = to_graph6(&g);
        assert_eq!(s.as_bytes()[0], 126);
        assert_eq!(from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn decode_errors_carry_offsets() {
        assert!(matches!(from_graph6(""), Err(Error::Parse { offset: 0, .. })));
        assert!(matches!(from_graph6("D Q"), Err(Error::Parse { .. })));
        // n = 5 needs two data bytes
        assert!(matches!(from_graph6("DQ"), Err(Error::Parse { offset: 2, .. })));
        assert!(matches!(from_graph6("DQcc"), Err(Error::Parse { .. })));
        // A_ is K2; A` sets a padding bit
        assert!(matches!(from_graph6("A`"), Err(Error::Parse { offset: 1, .. })));
    }

    #[test]
    fn edge_list_round_trip_and_errors() {
        let g = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let text = to_edge_list(&g);
        assert_eq!(text, "4 3\n0 1\n1 2\n2 3\n");
        assert_eq!(from_edge_list_text(&text).unwrap(), g);
        assert!(matches!(
            from_edge_list_text("3 1\n0 x\n"),
            Err(Error::Parse { offset: 4, .. })
        ));
        assert!(from_edge_list_text("3 2\n0 1\n").is_err());
        assert_eq!(
            from_edge_list_text("3 1\n0 3\n"),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
    }
}
