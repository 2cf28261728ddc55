//! graph6 text encoding, short form only (n ≤ 62), for interchange with
//! standard graph tools. One graph per line; the encoder emits no newline,
//! the decoder tolerates one trailing newline and an optional ">>graph6<<"
//! header prefix.

use thiserror::Error;

use crate::graph::{Graph, GraphBuilder};

/// Largest order the single-byte graph6 prefix can carry.
pub const MAX_G6_ORDER: usize = 62;

const HEADER: &[u8] = b">>graph6<<";

/// Errors for graph6 encoding and decoding. Offsets index into the input
/// string as given, header included.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum G6Error {
    #[error("order {n} exceeds the graph6 short-form maximum of {max}", max = MAX_G6_ORDER)]
    OrderTooLarge { n: usize },
    #[error("empty graph6 record")]
    Empty,
    #[error("multi-byte graph6 order prefix at offset {offset} is not supported")]
    LongFormUnsupported { offset: usize },
    #[error("invalid graph6 byte {byte:#04x} at offset {offset}")]
    InvalidByte { byte: u8, offset: usize },
    #[error("truncated graph6 record: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing data after graph6 record at offset {offset}")]
    TrailingData { offset: usize },
    #[error("nonzero padding bits at offset {offset}")]
    NonzeroPadding { offset: usize },
}

/// Encodes a graph as a short-form graph6 record, without a newline.
///
/// Layout: one byte `n + 63`, then the upper-triangle bits x(i,j) for
/// j = 1..n−1, i = 0..j−1, packed big-endian into 6-bit groups, zero-padded,
/// each group emitted as value + 63.
pub fn encode_g6(g: &Graph) -> Result<String, G6Error> {
    let n = g.order();
    if n > MAX_G6_ORDER {
        return Err(G6Error::OrderTooLarge { n });
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(1 + bits.div_ceil(6));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 output is printable ASCII"))
}

/// Decodes one short-form graph6 record, the inverse of [`encode_g6`].
pub fn decode_g6(line: &str) -> Result<Graph, G6Error> {
    let bytes = line.as_bytes();
    let base = if bytes.starts_with(HEADER) { HEADER.len() } else { 0 };
    let mut end = bytes.len();
    if end > base && bytes[end - 1] == b'\n' {
        end -= 1;
        if end > base && bytes[end - 1] == b'\r' {
            end -= 1;
        }
    }
    let body = &bytes[base..end];
    if body.is_empty() {
        return Err(G6Error::Empty);
    }
    if let Some(idx) = body.iter().position(|b| !(63..=126).contains(b)) {
        return Err(G6Error::InvalidByte { byte: body[idx], offset: base + idx });
    }

    let first = body[0];
    if first == 126 {
        return Err(G6Error::LongFormUnsupported { offset: base });
    }
    let n = (first - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = 1 + bits.div_ceil(6);
    if body.len() < expected {
        return Err(G6Error::Truncated { expected, found: body.len() });
    }
    if body.len() > expected {
        return Err(G6Error::TrailingData { offset: base + expected });
    }

    let mut builder = GraphBuilder::new(n).expect("graph6 order fits the graph type");
    let mut consumed = 0;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = body[1 + consumed / 6];
            let bit = (byte - 63) >> (5 - consumed % 6) & 1;
            if bit == 1 {
                builder.add_edge(i, j).expect("indices are in range by construction");
            }
            consumed += 1;
            if consumed == bits {
                break 'outer;
            }
        }
    }
    // The remainder of the last payload byte is padding and must be zero.
    if bits % 6 != 0 {
        let pad = (body[expected - 1] - 63) & ((1 << (6 - bits % 6)) - 1);
        if pad != 0 {
            return Err(G6Error::NonzeroPadding { offset: base + expected - 1 });
        }
    }
    Ok(builder.build())
}
