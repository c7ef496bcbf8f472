//! Header-less graph6 records.
//!
//! A record is `N(n)` followed by the upper triangle of the adjacency matrix
//! in column-major order (`x(0,1), x(0,2), x(1,2), x(0,3), …`), packed six
//! bits per byte with the most significant bit first, zero-padded, and every
//! byte offset by 63. `N(n)` is a single byte `n + 63` for `n ≤ 62`, or `~`
//! followed by three 6-bit groups for `63 ≤ n ≤ 258047`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::Graph;

const OFFSET: u8 = 63;
const LONG_SIZE_MARKER: u8 = 126;
/// Largest order representable by the four-byte size form.
pub const MAX_ORDER: usize = 258_047;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Graph6ErrorKind {
    Empty,
    /// Byte outside the printable range `63..=126`.
    InvalidByte(u8),
    /// Order 0 or the eight-byte size form.
    UnsupportedOrder,
    /// Record ended before all edge bits were read.
    Truncated {
        expected: usize,
        found: usize,
    },
    /// Bytes left over after the last edge byte.
    TrailingBytes,
    /// Padding bits in the last edge byte are not zero.
    NonzeroPadding,
}

/// A graph6 parse error located at a byte offset of the record.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph6Error {
    pub offset: usize,
    pub kind: Graph6ErrorKind,
}

impl fmt::Display for Graph6Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "graph6 error at byte {}: ", self.offset)?;
        match &self.kind {
            Graph6ErrorKind::Empty => write!(f, "empty record"),
            Graph6ErrorKind::InvalidByte(b) => write!(f, "byte 0x{b:02x} outside [63,126]"),
            Graph6ErrorKind::UnsupportedOrder => {
                write!(f, "unsupported order (must be 1..={MAX_ORDER})")
            }
            Graph6ErrorKind::Truncated { expected, found } => {
                write!(f, "expected {expected} edge bytes, found {found}")
            }
            Graph6ErrorKind::TrailingBytes => write!(f, "trailing bytes after edge data"),
            Graph6ErrorKind::NonzeroPadding => write!(f, "nonzero padding bits"),
        }
    }
}

impl core::error::Error for Graph6Error {}

fn err(offset: usize, kind: Graph6ErrorKind) -> Graph6Error {
    Graph6Error { offset, kind }
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u8, Graph6Error> {
    match bytes.get(offset) {
        Some(&b) if (OFFSET..=LONG_SIZE_MARKER).contains(&b) => Ok(b - OFFSET),
        Some(&b) => Err(err(offset, Graph6ErrorKind::InvalidByte(b))),
        None => Err(err(offset, Graph6ErrorKind::Empty)),
    }
}

/// Parses one header-less graph6 record. Surrounding ASCII whitespace is
/// not accepted; strip line endings first.
pub fn from_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.as_bytes();
    let first = sextet(bytes, 0)?;
    let (n, header_len) = if first + OFFSET == LONG_SIZE_MARKER {
        if bytes.get(1) == Some(&LONG_SIZE_MARKER) {
            return Err(err(1, Graph6ErrorKind::UnsupportedOrder));
        }
        let mut n = 0usize;
        for offset in 1..4 {
            let s = sextet(bytes, offset).map_err(|e| match e.kind {
                Graph6ErrorKind::Empty => err(offset, Graph6ErrorKind::Truncated { expected: 3, found: offset - 1 }),
                _ => e,
            })?;
            n = (n << 6) | s as usize;
        }
        (n, 4)
    } else {
        (first as usize, 1)
    };
    if n == 0 {
        return Err(err(0, Graph6ErrorKind::UnsupportedOrder));
    }

    let pairs = n * (n - 1) / 2;
    let payload_len = pairs.div_ceil(6);
    let payload = &bytes[header_len..];
    if payload.len() < payload_len {
        return Err(err(bytes.len(), Graph6ErrorKind::Truncated { expected: payload_len, found: payload.len() }));
    }
    if payload.len() > payload_len {
        return Err(err(header_len + payload_len, Graph6ErrorKind::TrailingBytes));
    }
    let mut sextets = Vec::with_capacity(payload_len);
    for offset in header_len..bytes.len() {
        sextets.push(sextet(bytes, offset)?);
    }
    let pad = payload_len * 6 - pairs;
    if pad > 0 {
        let last = sextets[payload_len - 1];
        if last & ((1u8 << pad) - 1) != 0 {
            return Err(err(bytes.len() - 1, Graph6ErrorKind::NonzeroPadding));
        }
    }
    let graph = Graph::from_upper_bits(n, |idx| (sextets[idx / 6] >> (5 - idx % 6)) & 1 == 1)
        .map_err(|_| err(0, Graph6ErrorKind::UnsupportedOrder))?;
    Ok(graph)
}

/// Canonical graph6 encoding of `g`.
///
/// # Panics
///
/// If the order exceeds [`MAX_ORDER`].
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    assert!(n <= MAX_ORDER, "graph6 size form supports n <= {MAX_ORDER}");
    let mut out = Vec::with_capacity(4 + g.pair_count().div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else {
        out.push(LONG_SIZE_MARKER);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    // every byte is in 63..=126
    String::from_utf8(out).expect("graph6 output is ASCII")
}
