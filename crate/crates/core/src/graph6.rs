//! graph6 encoding: single size byte (n <= 62) plus the upper triangle
//! packed column-major, six bits per byte, each byte offset by 63.

use std::io::BufRead;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const GRAPH6_HEADER: &str = ">>graph6<<";

/// One decoded line of a graph6 stream.
#[derive(Debug, Clone)]
pub struct Graph6Record {
    pub line: String,
    pub graph: Graph,
    /// 1-based position in the stream.
    pub ordinal: usize,
}

/// Decodes a graph6 token into a connected graph.
///
/// The optional `>>graph6<<` header is stripped. Pair bits follow the
/// standard column-major upper-triangle order (0,1),(0,2),(1,2),(0,3),...
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let token = line.trim().strip_prefix(GRAPH6_HEADER).unwrap_or(line.trim());
    let bytes = token.as_bytes();
    if bytes.is_empty() {
        return Err(Error::MalformedGraph6("empty line".into()));
    }
    let size_byte = bytes[0];
    if size_byte == 126 {
        return Err(Error::Unsupported(
            "multi-byte graph6 sizes (n > 62) are not supported".into(),
        ));
    }
    if !(63..=125).contains(&size_byte) {
        return Err(Error::MalformedGraph6(format!(
            "size byte {size_byte} outside 63..=125"
        )));
    }
    let n = (size_byte - 63) as usize;
    if n == 0 {
        return Err(Error::MalformedGraph6("graph of order 0".into()));
    }
    let pair_bits = n * (n - 1) / 2;
    let expected = pair_bits.div_ceil(6);
    if bytes.len() - 1 != expected {
        return Err(Error::MalformedGraph6(format!(
            "expected {expected} payload bytes for order {n}, got {}",
            bytes.len() - 1
        )));
    }
    let mut adj = vec![0u64; n];
    let mut bit = 0usize;
    for &b in &bytes[1..] {
        if !(63..=126).contains(&b) {
            return Err(Error::MalformedGraph6(format!(
                "payload byte {b} outside 63..=126"
            )));
        }
        let chunk = b - 63;
        for k in 0..6 {
            if bit >= pair_bits {
                break;
            }
            if chunk >> (5 - k) & 1 != 0 {
                let (i, j) = pair_from_index(bit);
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            bit += 1;
        }
    }
    Graph::from_adj(adj)
}

/// Pair (i, j), i < j, at position `idx` of the column-major order.
fn pair_from_index(idx: usize) -> (usize, usize) {
    // Column j holds j bits; find the column then the row.
    let mut j = 1;
    let mut start = 0;
    while start + j <= idx {
        start += j;
        j += 1;
    }
    (idx - start, j)
}

/// Encodes a graph under its current labeling (no canonization).
pub fn emit_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > 62 {
        return Err(Error::Unsupported(format!(
            "graph6 single-byte size covers n <= 62, got {n}"
        )));
    }
    let mut out = String::new();
    out.push((n as u8 + 63) as char);
    let mut chunk = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            chunk <<= 1;
            if g.has_edge(i, j) {
                chunk |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push((chunk + 63) as char);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        chunk <<= 6 - filled;
        out.push((chunk + 63) as char);
    }
    Ok(out)
}

/// Reads graph6 records from a line stream, skipping blank lines.
/// Parse or connectivity failures carry the 1-based line number.
pub fn read_stream<R: BufRead>(reader: R) -> Result<Vec<Graph6Record>> {
    let mut records = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let ordinal = idx + 1;
        let line = line.map_err(|e| {
            Error::MalformedGraph6(format!("read failure: {e}")).at_line(ordinal)
        })?;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let graph = parse_graph6(trimmed).map_err(|e| e.at_line(ordinal))?;
        records.push(Graph6Record {
            line: trimmed
                .strip_prefix(GRAPH6_HEADER)
                .unwrap_or(trimmed)
                .to_string(),
            graph,
            ordinal,
        });
    }
    Ok(records)
}
