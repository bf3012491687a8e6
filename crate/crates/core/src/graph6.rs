//! graph6 encoding.
//!
//! The upper triangle of the adjacency matrix is read column by column,
//! `(0,1), (0,2), (1,2), (0,3), ...`, packed big-endian into 6-bit groups
//! (zero padded) and offset by 63. The vertex count comes first: one byte
//! for `n <= 62`, `~` plus three bytes up to 258047, `~~` plus six bytes
//! beyond that.

use crate::graph::Graph;
use thiserror::Error;

const BIAS: u8 = 63;
const SMALL_MAX: usize = 62;
const MEDIUM_MAX: usize = 258_047;
const LARGE_MAX: usize = (1 << 36) - 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("byte {offset}: character {byte:#04x} outside the graph6 range 63..=126")]
    BadByte { offset: usize, byte: u8 },
    #[error("byte {offset}: input ends inside the vertex-count header")]
    TruncatedHeader { offset: usize },
    #[error("byte {offset}: expected {expected} adjacency bytes for n = {n}, found {found}")]
    BadLength {
        offset: usize,
        n: usize,
        expected: usize,
        found: usize,
    },
    #[error("byte {offset}: nonzero padding bits")]
    NonzeroPadding { offset: usize },
    #[error("empty input")]
    Empty,
}

fn encode_count(n: usize, out: &mut Vec<u8>) {
    if n <= SMALL_MAX {
        out.push(n as u8 + BIAS);
    } else if n <= MEDIUM_MAX {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    } else {
        assert!(n <= LARGE_MAX, "graph too large for graph6");
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
}

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    encode_count(n, &mut out);
    let mut acc = 0u8;
    let mut bits = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            bits += 1;
            if bits == 6 {
                out.push(acc + BIAS);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

fn sextet(bytes: &[u8], offset: usize) -> Result<usize, Graph6Error> {
    match bytes.get(offset) {
        Some(&b) if (BIAS..=126).contains(&b) => Ok((b - BIAS) as usize),
        Some(&b) => Err(Graph6Error::BadByte { offset, byte: b }),
        None => Err(Graph6Error::TruncatedHeader { offset }),
    }
}

fn decode_count(bytes: &[u8]) -> Result<(usize, usize), Graph6Error> {
    let first = sextet(bytes, 0)?;
    if first < 63 {
        return Ok((first, 1));
    }
    if bytes.get(1) == Some(&126) {
        let mut n = 0;
        for i in 2..8 {
            n = (n << 6) | sextet(bytes, i)?;
        }
        Ok((n, 8))
    } else {
        let mut n = 0;
        for i in 1..4 {
            n = (n << 6) | sextet(bytes, i)?;
        }
        Ok((n, 4))
    }
}

/// Parses one graph6 string. Surrounding whitespace is ignored.
pub fn decode(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim().as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let (n, header) = decode_count(bytes)?;
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    let body = &bytes[header..];
    if body.len() != expected {
        return Err(Graph6Error::BadLength {
            offset: header,
            n,
            expected,
            found: body.len(),
        });
    }
    let mut groups = Vec::with_capacity(expected);
    for i in 0..expected {
        groups.push(sextet(bytes, header + i)? as u8);
    }
    if nbits % 6 != 0 {
        let pad = 6 - nbits % 6;
        if groups[expected - 1] & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding {
                offset: header + expected - 1,
            });
        }
    }
    let mut k = 0;
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if groups[k / 6] >> (5 - k % 6) & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Ok(Graph::from_edges(n, edges).expect("decoded edges are in range"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, path};

    #[test]
    fn two_vertex_examples() {
        assert_eq!(decode("A_").unwrap(), complete(2).unwrap());
        assert_eq!(decode("A?").unwrap(), Graph::empty(2));
        assert_eq!(encode(&complete(2).unwrap()), "A_");
        assert_eq!(encode(&Graph::empty(2)), "A?");
        assert_eq!(encode(&Graph::empty(0)), "?");
        assert_eq!(decode("?").unwrap(), Graph::empty(0));
    }

    #[test]
    fn known_strings() {
        // bits for P4: (0,1)=1 (0,2)=0 (1,2)=1 (0,3)=0 (1,3)=0 (2,3)=1 -> 101001
        assert_eq!(encode(&path(4).unwrap()), "Ch");
        // same five-vertex example as petgraph's graph6 tests
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g), "DQc");
        assert_eq!(encode(&complete(5).unwrap()), "D~{");
    }

    #[test]
    fn medium_header() {
        let g = path(70).unwrap();
        let s = encode(&g);
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 64, 69]);
        assert_eq!(decode(&s).unwrap(), g);
    }

    #[test]
    fn errors_carry_offsets() {
        assert_eq!(
            decode("A "),
            Err(Graph6Error::BadLength {
                offset: 1,
                n: 2,
                expected: 1,
                found: 0
            })
        );
        assert_eq!(
            decode("B\x10"),
            Err(Graph6Error::BadByte {
                offset: 1,
                byte: 0x10
            })
        );
        assert_eq!(
            decode("A_?"),
            Err(Graph6Error::BadLength {
                offset: 1,
                n: 2,
                expected: 1,
                found: 2
            })
        );
        assert_eq!(decode("A`"), Err(Graph6Error::NonzeroPadding { offset: 1 }));
        assert_eq!(
            decode("~?"),
            Err(Graph6Error::TruncatedHeader { offset: 2 })
        );
        assert_eq!(decode("  "), Err(Graph6Error::Empty));
    }
}
