//! graph6 codec: 6-bit printable encoding of the upper adjacency triangle
//! in column-major order, one graph per line, no header.

use crate::error::{Error, Graph6ErrorKind, Result};
use crate::graph::{Graph, MAX_ORDER};

fn err(offset: usize, kind: Graph6ErrorKind) -> Error {
    Error::Graph6 { offset, kind }
}

/// Number of payload bytes for the `n(n-1)/2` triangle bits.
fn body_len(n: usize) -> usize {
    (n * (n - 1) / 2).div_ceil(6)
}

/// Decode one graph6 string (no header, no trailing newline).
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(err(0, Graph6ErrorKind::Empty));
    }

    // Length prefix: one byte for n <= 62, '~' plus three 6-bit bytes for larger n.
    let (n, prefix_len) = match bytes[0] {
        126 => {
            if bytes.len() < 4 {
                return Err(err(bytes.len(), Graph6ErrorKind::BadLengthPrefix));
            }
            if bytes[1] == 126 {
                // 8-byte prefix encodes n >= 258048, far beyond our cap.
                return Err(err(1, Graph6ErrorKind::BadLengthPrefix));
            }
            let mut n = 0usize;
            for (i, &b) in bytes[1..4].iter().enumerate() {
                if !(63..=126).contains(&b) {
                    return Err(err(1 + i, Graph6ErrorKind::NonPrintable(b)));
                }
                n = (n << 6) | (b - 63) as usize;
            }
            (n, 4)
        }
        b @ 63..=125 => ((b - 63) as usize, 1),
        b => return Err(err(0, Graph6ErrorKind::NonPrintable(b))),
    };

    if n == 0 {
        return Err(err(0, Graph6ErrorKind::ZeroOrder));
    }
    if n > MAX_ORDER {
        return Err(err(0, Graph6ErrorKind::OrderTooLarge(n)));
    }

    let want = prefix_len + body_len(n);
    if bytes.len() != want {
        let offset = bytes.len().min(want);
        return Err(err(
            offset,
            Graph6ErrorKind::WrongLength {
                got: bytes.len(),
                want,
            },
        ));
    }

    let nbits = n * (n - 1) / 2;
    let mut g = Graph::empty(n);
    let mut idx = 0usize; // bit index over the column-major triangle
    let mut col = 1usize;
    let mut row = 0usize;
    for (pos, &b) in bytes[prefix_len..].iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(prefix_len + pos, Graph6ErrorKind::NonPrintable(b)));
        }
        let group = b - 63;
        for shift in (0..6).rev() {
            let bit = (group >> shift) & 1;
            if idx >= nbits {
                if bit != 0 {
                    return Err(err(prefix_len + pos, Graph6ErrorKind::TrailingBits));
                }
            } else {
                if bit != 0 {
                    g.insert_edge(row, col);
                }
                row += 1;
                if row == col {
                    row = 0;
                    col += 1;
                }
            }
            idx += 1;
        }
    }
    Ok(g)
}

/// Encode a graph as a graph6 string.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }

    let mut group = 0u8;
    let mut filled = 0u8;
    for col in 1..n {
        for row in 0..col {
            group = (group << 1) | g.has_edge(row, col) as u8;
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}
