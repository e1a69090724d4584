//! graph6 reader/writer, short form only (1 ≤ n ≤ 62).

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";
pub const MAX_VERTICES: usize = 62;

fn parse_err<T>(offset: usize, reason: impl Into<String>) -> Result<T> {
    Err(Error::Graph6 {
        offset,
        reason: reason.into(),
    })
}

/// Parses one graph6 line. A trailing newline and the optional header are
/// accepted; anything else after the adjacency bytes is an error.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.strip_suffix('\n').unwrap_or(text);
    let line = line.strip_suffix('\r').unwrap_or(line);
    let (skip, body) = match line.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, line.as_bytes()),
    };
    let Some(&first) = body.first() else {
        return parse_err(skip, "empty input");
    };
    if !(63..=126).contains(&first) {
        return parse_err(skip, format!("invalid length byte {first:#04x}"));
    }
    if first == 126 {
        return parse_err(skip, "long form (n > 62) is not supported");
    }
    let n = (first - 63) as usize;
    if n == 0 {
        return parse_err(skip, "graph on zero vertices");
    }
    let bits = n * (n - 1) / 2;
    let need = bits.div_ceil(6);
    let data = &body[1..];
    if data.len() < need {
        return parse_err(
            skip + body.len(),
            format!("expected {need} adjacency bytes, found {}", data.len()),
        );
    }
    for (i, &b) in data.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return parse_err(skip + 1 + i, format!("byte {b:#04x} outside 63..=126"));
        }
    }
    if data.len() > need {
        return parse_err(skip + 1 + need, "trailing characters");
    }

    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if !bits.is_multiple_of(6) {
        let pad = 6 - bits % 6;
        if (data[need - 1] - 63) & ((1 << pad) - 1) != 0 {
            return parse_err(skip + need, "nonzero padding bits");
        }
    }
    Graph::from_edges(n, edges)
}

pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::TooLarge { n });
    }
    let mut out = String::with_capacity(1 + (n * (n - 1) / 2).div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    Ok(out)
}
