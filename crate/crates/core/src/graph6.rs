//! The graph6 record format (single-byte vertex-count header).
//!
//! After the header byte `63 + n`, the upper triangle of the adjacency matrix
//! is written column by column (`x01, x02, x12, x03, ...`), six bits per byte,
//! most significant bit first, each byte offset by 63 and the tail padded
//! with zero bits.

use crate::error::Graph6Error;
use crate::graph::{Graph, MAX_VERTICES};

const OFFSET: u8 = 63;

fn data_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn parse_graph6(record: &[u8]) -> Result<Graph, Graph6Error> {
    let (&header, body) = record.split_first().ok_or(Graph6Error::Empty)?;
    for (offset, &byte) in record.iter().enumerate() {
        if !(OFFSET..=126).contains(&byte) {
            return Err(Graph6Error::ByteOutOfRange { offset, byte });
        }
    }
    if header == 126 {
        // Multi-byte header: n >= 63, which is over the vertex cap anyway.
        let n = body.get(..3).map(|b| b.iter().fold(0usize, |acc, &x| acc << 6 | (x - OFFSET) as usize)).unwrap_or(63);
        return Err(Graph6Error::TooManyVertices(n));
    }
    let n = (header - OFFSET) as usize;
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooManyVertices(n));
    }
    let expected = data_len(n);
    if body.len() != expected {
        return Err(Graph6Error::WrongLength { n, expected, found: body.len() });
    }

    let mut g = Graph::new(n).expect("n checked against the cap");
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - OFFSET;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j).expect("indices in range and distinct");
            }
            k += 1;
        }
    }
    if k % 6 != 0 {
        let tail = body[k / 6] - OFFSET;
        if tail & ((1 << (6 - k % 6)) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding);
        }
    }
    Ok(g)
}

pub fn parse_graph6_str(record: &str) -> Result<Graph, Graph6Error> {
    parse_graph6(record.as_bytes())
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(1 + data_len(n));
    out.push(OFFSET + n as u8);
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(OFFSET + acc);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push(OFFSET + (acc << (6 - k % 6)));
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_records() {
        let g = parse_graph6_str("@").unwrap();
        assert_eq!((g.n(), g.edge_count()), (1, 0));
        assert_eq!(parse_graph6_str("A_").unwrap().edges(), vec![(0, 1)]);
        assert_eq!(parse_graph6_str("Bw").unwrap().edges(), vec![(0, 1), (0, 2), (1, 2)]);
        assert_eq!(parse_graph6_str("?").unwrap().n(), 0);
    }

    #[test]
    fn matches_reference_encodings() {
        // Encodings produced by networkx.to_graph6_bytes.
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        assert_eq!(to_graph6(&c5), "Dhc");
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(to_graph6(&p4), "Ch");
    }

    #[test]
    fn malformed_records() {
        assert_eq!(parse_graph6(b""), Err(Graph6Error::Empty));
        assert!(matches!(parse_graph6(b"A "), Err(Graph6Error::ByteOutOfRange { offset: 1, .. })));
        assert!(matches!(parse_graph6(b"B"), Err(Graph6Error::WrongLength { .. })));
        assert!(matches!(parse_graph6(b"Bww"), Err(Graph6Error::WrongLength { .. })));
        // K2 uses one bit; any of the five padding bits set is an error.
        assert_eq!(parse_graph6(b"A`"), Err(Graph6Error::NonzeroPadding));
        assert_eq!(parse_graph6(b"a"), Err(Graph6Error::TooManyVertices(34)));
        assert!(matches!(parse_graph6(b"~??~"), Err(Graph6Error::TooManyVertices(_))));
    }
}
