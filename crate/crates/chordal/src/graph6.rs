//! graph6 interchange format.
//!
//! One printable ASCII line per graph: an order header (`n + 63` for
//! `n < 63`, otherwise `~` followed by three bytes carrying 18 bits), then
//! the upper triangle of the adjacency matrix in column-major order
//! (`x_{0,1}, x_{0,2}, x_{1,2}, x_{0,3}, ...`), zero-padded to a multiple
//! of 6 bits, each 6-bit group emitted as `value + 63`.

use thiserror::Error;

use crate::graph::Graph;

const BIAS: u8 = 63;
const LONG_HEADER: u8 = 126; // '~'
const MAX_LONG_ORDER: usize = 258_047; // largest order for the 4-byte header
const OPTIONAL_PREFIX: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 line")]
    Empty,
    #[error("byte {0:#04x} outside the printable graph6 range")]
    InvalidByte(u8),
    #[error("malformed graph6 order header")]
    MalformedHeader,
    #[error("graph6 order 0 is not a valid graph")]
    ZeroOrder,
    #[error("graph6 order above {MAX_LONG_ORDER} is not supported")]
    OrderTooLarge,
    #[error("graph6 body has {found} bytes, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("nonzero padding bits after the adjacency bitstream")]
    TrailingBits,
}

fn body_len(n: usize) -> usize {
    (n * (n - 1) / 2).div_ceil(6)
}

/// Decodes one graph6 line. An optional `>>graph6<<` prefix is accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.strip_prefix(OPTIONAL_PREFIX).unwrap_or(text);
    let bytes = text.trim_end_matches(['\r', '\n']).as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(BIAS..=126).contains(&b)) {
        return Err(Graph6Error::InvalidByte(b));
    }

    let (n, header_len) = if bytes[0] != LONG_HEADER {
        ((bytes[0] - BIAS) as usize, 1)
    } else {
        if bytes.len() < 4 {
            return Err(Graph6Error::MalformedHeader);
        }
        if bytes[1] == LONG_HEADER {
            // The 8-byte header encodes orders beyond any practical use here.
            return Err(Graph6Error::OrderTooLarge);
        }
        let n = ((bytes[1] - BIAS) as usize) << 12
            | ((bytes[2] - BIAS) as usize) << 6
            | (bytes[3] - BIAS) as usize;
        if n < 63 {
            // Non-canonical: small orders must use the single-byte header.
            return Err(Graph6Error::MalformedHeader);
        }
        (n, 4)
    };
    if n == 0 {
        return Err(Graph6Error::ZeroOrder);
    }

    let body = &bytes[header_len..];
    let expected = body_len(n);
    if body.len() != expected {
        return Err(Graph6Error::LengthMismatch {
            expected,
            found: body.len(),
        });
    }

    let bit = |pos: usize| -> bool { (body[pos / 6] - BIAS) >> (5 - pos % 6) & 1 != 0 };

    let mut edges = Vec::new();
    let mut pos = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(pos) {
                edges.push((u, v));
            }
            pos += 1;
        }
    }
    for pad in pos..expected * 6 {
        if bit(pad) {
            return Err(Graph6Error::TrailingBits);
        }
    }

    Ok(Graph::from_edges(n, edges).expect("decoded edges are in range and deduplicated"))
}

/// Encodes a graph as one graph6 line (no trailing newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    assert!(n <= MAX_LONG_ORDER, "order exceeds the supported graph6 range");
    let mut out = Vec::with_capacity(4 + body_len(n));
    if n < 63 {
        out.push(BIAS + n as u8);
    } else {
        out.push(LONG_HEADER);
        out.push(BIAS + ((n >> 12) & 0x3f) as u8);
        out.push(BIAS + ((n >> 6) & 0x3f) as u8);
        out.push(BIAS + (n & 0x3f) as u8);
    }

    let mut group = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            group = group << 1 | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(BIAS + group);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(BIAS + (group << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Edge;

    #[test]
    fn k1_encodes_to_at_sign() {
        assert_eq!(to_graph6(&Graph::edgeless(1)), "@");
        assert_eq!(parse_graph6("@").unwrap(), Graph::edgeless(1));
    }

    #[test]
    fn star_on_five_vertices_round_trips() {
        // Worked by hand from the format definition: header 'D' is n = 5,
        // '?' carries bits x01..x23 = 000000, '{' = 60 = 111100 carries
        // x04 x14 x24 x34 = 1111 plus two padding zeros.
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(
            g.edges(),
            vec![
                Edge::new(0, 4).unwrap(),
                Edge::new(1, 4).unwrap(),
                Edge::new(2, 4).unwrap(),
                Edge::new(3, 4).unwrap(),
            ]
        );
        assert_eq!(to_graph6(&g), "D?{");
    }

    #[test]
    fn k4_is_tilde() {
        assert_eq!(to_graph6(&Graph::complete(4)), "C~");
    }

    #[test]
    fn optional_prefix_and_newline_are_tolerated() {
        assert_eq!(parse_graph6(">>graph6<<D?{\n").unwrap().order(), 5);
    }

    #[test]
    fn long_form_header_round_trips() {
        let g = Graph::path(63);
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn rejects_malformed_input() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(parse_graph6("D?"), {
            Err(Graph6Error::LengthMismatch {
                expected: 2,
                found: 1,
            })
        });
        assert_eq!(parse_graph6("D?{{"), {
            Err(Graph6Error::LengthMismatch {
                expected: 2,
                found: 3,
            })
        });
        assert_eq!(parse_graph6("?"), Err(Graph6Error::ZeroOrder));
        assert_eq!(parse_graph6("D?\x07"), Err(Graph6Error::InvalidByte(0x07)));
        assert_eq!(parse_graph6("~?"), Err(Graph6Error::MalformedHeader));
        // n = 5 written in the 4-byte form is non-canonical.
        assert_eq!(parse_graph6("~??D??"), Err(Graph6Error::MalformedHeader));
        assert_eq!(parse_graph6("~~??????"), Err(Graph6Error::OrderTooLarge));
    }

    #[test]
    fn rejects_nonzero_padding() {
        // K_1,4 body with the last padding bit flipped: '{' -> '|'.
        assert_eq!(parse_graph6("D?|"), Err(Graph6Error::TrailingBits));
    }
}
