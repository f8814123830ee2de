//! graph6 encoding and decoding.
//!
//! The format stores `n` followed by the upper triangle of the adjacency
//! matrix, column by column, six bits per printable byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

const PREFIX: &str = ">>graph6<<";
const MAX_N: usize = 68_719_476_735;

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

/// Decodes one graph6 line. A trailing newline and the optional
/// `>>graph6<<` header are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim_end_matches(['\n', '\r']);
    let (body, base) = match line.strip_prefix(PREFIX) {
        Some(rest) => (rest.as_bytes(), PREFIX.len()),
        None => (line.as_bytes(), 0),
    };
    if let Some(pos) = body.iter().position(|&c| !(63..=126).contains(&c)) {
        return Err(err(
            base + pos,
            format!("byte {:#04x} outside 63..=126", body[pos]),
        ));
    }
    let (n, header_len) = decode_n(body).map_err(|(o, r)| err(base + o, r))?;
    let payload = &body[header_len..];
    let bits = n * n.saturating_sub(1) / 2;
    let needed = bits.div_ceil(6);
    if payload.len() < needed {
        return Err(err(
            base + body.len(),
            format!("truncated payload: {} of {needed} bytes", payload.len()),
        ));
    }
    if payload.len() > needed {
        return Err(err(
            base + header_len + needed,
            format!("{} unexpected trailing bytes", payload.len() - needed),
        ));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = payload[k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

fn decode_n(body: &[u8]) -> std::result::Result<(usize, usize), (usize, String)> {
    let take = |from: usize, count: usize| -> std::result::Result<usize, (usize, String)> {
        if body.len() < from + count {
            return Err((body.len(), "truncated header".into()));
        }
        Ok(body[from..from + count]
            .iter()
            .fold(0usize, |acc, &c| (acc << 6) | (c - 63) as usize))
    };
    match body.first() {
        None => Err((0, "empty input".into())),
        Some(&126) if body.get(1) == Some(&126) => Ok((take(2, 6)?, 8)),
        Some(&126) => Ok((take(1, 3)?, 4)),
        Some(&c) => Ok(((c - 63) as usize, 1)),
    }
}

/// Encodes a graph as a graph6 line (without trailing newline).
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= MAX_N, "graph too large for graph6");
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|i| 63 + ((n >> (6 * i)) & 63) as u8));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|i| 63 + ((n >> (6 * i)) & 63) as u8));
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc <<= 1;
            if g.has_edge(i, j) {
                acc |= 1;
            }
            k += 1;
            if k == 6 {
                out.push(63 + acc);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push(63 + (acc << (6 - k)));
    }
    String::from_utf8(out).expect("graph6 is ascii")
}

/// Parses newline-delimited graph6, one result per non-empty line.
pub fn parse_graph6_lines(text: &str) -> Vec<Result<Graph>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(parse_graph6)
        .collect()
}
