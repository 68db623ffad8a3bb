//! graph6 codec: the printable one-line encoding of small simple graphs.
//!
//! Layout: one header byte `63 + n` (so n <= 62 here; the multi-byte header
//! for larger graphs is out of scope), then the upper triangle as a bit
//! stream x(0,1), x(0,2), x(1,2), x(0,3), ... packed six bits per byte,
//! most significant bit first, each byte offset by 63, zero-padded to a
//! multiple of six.

use crate::graph::{Graph, VertexId};

/// Largest order encodable with a single-byte header.
pub const MAX_GRAPH6_VERTICES: usize = 62;

/// Optional first line of a graph6 file, accepted and skipped.
pub const GRAPH6_FILE_HEADER: &str = ">>graph6<<";

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("header byte 126 announces a multi-byte size, which is unsupported")]
    MultiByteHeader,
    #[error("graph on {0} vertices exceeds the graph6 single-byte limit of {MAX_GRAPH6_VERTICES}")]
    UnsupportedSize(usize),
    #[error("byte {byte} at offset {offset} is outside the graph6 range 63..=126")]
    ByteOutOfRange { offset: usize, byte: u8 },
    #[error("expected {expected} bytes for a graph on {n} vertices, got {got}")]
    WrongLength { n: usize, expected: usize, got: usize },
    #[error("nonzero padding bit in byte at offset {offset}")]
    NonzeroPadding { offset: usize },
}

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn payload_len(n: usize) -> usize {
    pair_count(n).div_ceil(6)
}

/// Decode one graph6 string.
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let bytes = line.as_bytes();
    let header = *bytes.first().ok_or(Graph6Error::Empty)?;
    if header == 126 {
        return Err(Graph6Error::MultiByteHeader);
    }
    if !(63..=125).contains(&header) {
        return Err(Graph6Error::ByteOutOfRange {
            offset: 0,
            byte: header,
        });
    }
    let n = (header - 63) as usize;
    let expected = 1 + payload_len(n);
    if bytes.len() != expected {
        return Err(Graph6Error::WrongLength {
            n,
            expected,
            got: bytes.len(),
        });
    }

    let nbits = pair_count(n);
    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    let mut k = 0;
    'outer: for j in 1..n {
        for i in 0..j {
            if read_bit(bytes, k)? == 1 {
                edges.push((i, j));
            }
            k += 1;
            if k == nbits {
                break 'outer;
            }
        }
    }
    for k in nbits..payload_len(n) * 6 {
        if read_bit(bytes, k)? != 0 {
            return Err(Graph6Error::NonzeroPadding { offset: 1 + k / 6 });
        }
    }
    Ok(Graph::new(n, &edges).expect("decoded ids are within range"))
}

fn read_bit(bytes: &[u8], k: usize) -> Result<u8, Graph6Error> {
    let offset = 1 + k / 6;
    let byte = bytes[offset];
    if !(63..=126).contains(&byte) {
        return Err(Graph6Error::ByteOutOfRange { offset, byte });
    }
    Ok((byte - 63) >> (5 - k % 6) & 1)
}

/// Encode a graph as its canonical graph6 string.
pub fn emit_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.vertex_count();
    if n > MAX_GRAPH6_VERTICES {
        return Err(Graph6Error::UnsupportedSize(n));
    }
    let mut out = Vec::with_capacity(1 + payload_len(n));
    out.push(63 + n as u8);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j).expect("in range") as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

/// Strip the optional `>>graph6<<` file header from a line. Returns what is
/// left, which may be empty when the header stood alone.
pub fn strip_file_header(line: &str) -> &str {
    line.strip_prefix(GRAPH6_FILE_HEADER).unwrap_or(line)
}
