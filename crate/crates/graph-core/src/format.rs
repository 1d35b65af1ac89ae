//! Text formats: graph6 (McKay's 6-bit encoding) and a plain edge list.
//!
//! graph6 layout: header byte(s) encoding `n`, then `ceil(n(n-1)/2 / 6)`
//! body bytes. Body bits are the upper triangle of the adjacency matrix in
//! the order x(0,1), x(0,2), x(1,2), x(0,3), ..., packed 6 per byte, high
//! bit first, zero-padded; every byte stores `63 + bits`. Vertex counts
//! `n <= 62` use a one-byte header, larger counts the 4-byte `~` form.
//!
//! Edge list layout: first line `n m`, then `m` lines `u v`.

use crate::{Graph, GraphError, MAX_VERTICES};

use thiserror::Error;

/// Errors from the text parsers; offsets are byte positions in the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("unexpected end of input at byte {offset}")]
    UnexpectedEnd { offset: usize },
    #[error("invalid graph6 byte {byte:#04x} at byte {offset}")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("vertex count {n} unsupported (must be 1..={MAX_VERTICES})")]
    UnsupportedCount { n: usize },
    #[error("trailing data at byte {offset}")]
    TrailingData { offset: usize },
    #[error("nonzero padding bits at byte {offset}")]
    BadPadding { offset: usize },
    #[error("line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Pairs `(i, j)` with `i < j` in graph6 bit order: sorted by `j`, then `i`.
fn triangle_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(move |j| (0..j).map(move |i| (i, j)))
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut bytes = Vec::new();
    if n <= 62 {
        bytes.push(63 + n as u8);
    } else {
        bytes.push(126);
        bytes.push(63 + ((n >> 12) & 0x3f) as u8);
        bytes.push(63 + ((n >> 6) & 0x3f) as u8);
        bytes.push(63 + (n & 0x3f) as u8);
    }
    let mut acc: u8 = 0;
    let mut filled = 0;
    for (i, j) in triangle_pairs(n) {
        acc = (acc << 1) | u8::from(g.adjacent(i, j));
        filled += 1;
        if filled == 6 {
            bytes.push(63 + acc);
            acc = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        bytes.push(63 + (acc << (6 - filled)));
    }
    String::from_utf8(bytes).expect("graph6 bytes are printable ASCII")
}

pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(ParseError::Empty);
    }
    for (offset, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(ParseError::InvalidByte { offset, byte: b });
        }
    }
    let (n, header_len) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            // 8-byte header encodes n up to 2^36; always beyond our cap.
            return Err(ParseError::UnsupportedCount { n: usize::MAX });
        }
        if bytes.len() < 4 {
            return Err(ParseError::UnexpectedEnd {
                offset: bytes.len(),
            });
        }
        let n = (((bytes[1] - 63) as usize) << 12)
            | (((bytes[2] - 63) as usize) << 6)
            | ((bytes[3] - 63) as usize);
        (n, 4)
    } else {
        ((bytes[0] - 63) as usize, 1)
    };
    if n < 1 || n > MAX_VERTICES {
        return Err(ParseError::UnsupportedCount { n });
    }
    let bit_count = n * (n - 1) / 2;
    let body_len = bit_count.div_ceil(6);
    if bytes.len() < header_len + body_len {
        return Err(ParseError::UnexpectedEnd {
            offset: bytes.len(),
        });
    }
    if bytes.len() > header_len + body_len {
        return Err(ParseError::TrailingData {
            offset: header_len + body_len,
        });
    }
    let body = &bytes[header_len..];
    let bit = |pos: usize| -> bool {
        let b = body[pos / 6] - 63;
        b >> (5 - pos % 6) & 1 != 0
    };
    let mut pairs = Vec::new();
    for (pos, (i, j)) in triangle_pairs(n).enumerate() {
        if bit(pos) {
            pairs.push((i, j));
        }
    }
    // padding bits must be zero
    for pos in bit_count..body_len * 6 {
        if bit(pos) {
            return Err(ParseError::BadPadding {
                offset: header_len + pos / 6,
            });
        }
    }
    Graph::from_pairs(n, &pairs).map_err(ParseError::Graph)
}

/// Parses one graph per non-empty line; `>>graph6<<` prefixes are stripped.
pub fn parse_graph6_collection(text: &str) -> Result<Vec<Graph>, ParseError> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(parse_graph6)
        .collect()
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.u(), e.v()));
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (line, header) = lines.next().ok_or(ParseError::Empty)?;
    let mut it = header.split_whitespace();
    let parse_num = |tok: Option<&str>, line: usize| -> Result<usize, ParseError> {
        tok.ok_or(ParseError::EdgeList {
            line: line + 1,
            message: "expected two integers".into(),
        })?
        .parse()
        .map_err(|_| ParseError::EdgeList {
            line: line + 1,
            message: "malformed integer".into(),
        })
    };
    let n = parse_num(it.next(), line)?;
    let m = parse_num(it.next(), line)?;
    let mut pairs = Vec::with_capacity(m);
    for _ in 0..m {
        let (line, body) = lines.next().ok_or(ParseError::UnexpectedEnd { offset: text.len() })?;
        let mut it = body.split_whitespace();
        let u = parse_num(it.next(), line)?;
        let v = parse_num(it.next(), line)?;
        pairs.push((u, v));
    }
    if let Some((line, _)) = lines.next() {
        return Err(ParseError::EdgeList {
            line: line + 1,
            message: "trailing lines after declared edge count".into(),
        });
    }
    Graph::from_pairs(n, &pairs).map_err(ParseError::Graph)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn k2_roundtrip() {
        let k2 = generators::complete(2).unwrap();
        let s = write_graph6(&k2);
        assert_eq!(parse_graph6(&s).unwrap(), k2);
    }

    #[test]
    fn known_encodings() {
        // K_4 = 'C~' and the 4-cycle 0-1-2-3-0 = 'Cl' in McKay's tables.
        assert_eq!(write_graph6(&generators::complete(4).unwrap()), "C~");
        let c4 = Graph::from_pairs(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert_eq!(write_graph6(&c4), "Cl");
        assert_eq!(parse_graph6("Cl").unwrap(), c4);
    }

    #[test]
    fn header_prefix_stripped() {
        let k3 = generators::complete(3).unwrap();
        let s = format!(">>graph6<<{}", write_graph6(&k3));
        assert_eq!(parse_graph6(&s).unwrap(), k3);
    }

    #[test]
    fn large_n_uses_extended_header() {
        for n in [63, 64] {
            let g = generators::cycle(n).unwrap();
            let s = write_graph6(&g);
            assert_eq!(s.as_bytes()[0], 126);
            assert_eq!(parse_graph6(&s).unwrap(), g);
        }
    }

    #[test]
    fn parse_errors() {
        assert_eq!(parse_graph6(""), Err(ParseError::Empty));
        assert!(matches!(
            parse_graph6("C"),
            Err(ParseError::UnexpectedEnd { .. })
        ));
        assert!(matches!(
            parse_graph6("C~~"),
            Err(ParseError::TrailingData { offset: 2 })
        ));
        assert!(matches!(
            parse_graph6("B\x20"),
            Err(ParseError::InvalidByte { offset: 1, .. })
        ));
        // n = 0 ('?') is valid graph6 but below our vertex floor
        assert_eq!(parse_graph6("?"), Err(ParseError::UnsupportedCount { n: 0 }));
    }

    #[test]
    fn edge_list_roundtrip() {
        let g = generators::petersen();
        let s = write_edge_list(&g);
        assert_eq!(parse_edge_list(&s).unwrap(), g);
        assert!(parse_edge_list("3 2\n0 1\n").is_err());
    }
}
