//! graph6 encoding: an `N(n)` size header followed by the upper triangle of
//! the adjacency matrix, column by column, six bits per printable byte
//! (value + 63).

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, MAX_VERTICES};

const BIAS: u8 = 63;

/// Parses one graph6 line. Surrounding whitespace is ignored; padding bits in
/// the final byte are not checked.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let lead = line.len() - line.trim_start().len();
    let bytes = line.trim().as_bytes();
    if let Some(pos) = bytes.iter().position(|&b| !(BIAS..=126).contains(&b)) {
        return Err(Error::parse(
            lead + pos,
            format!("byte {:#04x} outside the graph6 range 63..=126", bytes[pos]),
        ));
    }
    let (n, header_len) = decode_size(bytes).map_err(|(pos, msg)| Error::parse(lead + pos, msg))?;
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let bit_count = n * n.saturating_sub(1) / 2;
    let needed = bit_count.div_ceil(6);
    let body = &bytes[header_len..];
    if body.len() < needed {
        return Err(Error::parse(
            lead + bytes.len(),
            format!("truncated: expected {needed} data bytes for n = {n}, found {}", body.len()),
        ));
    }
    if body.len() > needed {
        return Err(Error::parse(
            lead + header_len + needed,
            format!("{} trailing bytes after the adjacency data", body.len() - needed),
        ));
    }

    let mut builder = GraphBuilder::new(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - BIAS;
            if byte >> (5 - k % 6) & 1 == 1 {
                builder.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(builder.build())
}

fn decode_size(bytes: &[u8]) -> std::result::Result<(usize, usize), (usize, String)> {
    let value = |range: std::ops::Range<usize>| {
        range.fold(0usize, |acc, i| acc << 6 | usize::from(bytes[i] - BIAS))
    };
    match bytes {
        [] => Err((0, "empty graph6 line".into())),
        [126, 126, ..] => {
            if bytes.len() < 8 {
                return Err((bytes.len(), "truncated 8-byte size header".into()));
            }
            Ok((value(2..8), 8))
        }
        [126, ..] => {
            if bytes.len() < 4 {
                return Err((bytes.len(), "truncated 4-byte size header".into()));
            }
            Ok((value(1..4), 4))
        }
        [b, ..] => Ok((usize::from(b - BIAS), 1)),
    }
}

/// Encodes `g` in graph6 (no header line, no trailing newline).
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + n * n / 12);
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 0x3f) as u8 + BIAS);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
