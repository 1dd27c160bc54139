//! graph6 encoding (McKay's format) restricted to n ≤ 64.
//!
//! The body lists the upper triangle column by column, `x(0,1), x(0,2),
//! x(1,2), x(0,3), ...`, six bits per printable byte offset by 63, padded
//! with zero bits.

use super::{Graph, GraphError, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::with_capacity(4 + body_len(n));
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + 63) as char);
        }
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push(((acc << (6 - nbits)) + 63) as char);
    }
    out
}

/// Parses one graph6 record. An optional `>>graph6<<` header and trailing
/// whitespace are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let text = text.trim_end();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(GraphError::Graph6Header("empty record".into()));
    }
    if bytes[0] == b'>' || bytes[0] == b':' || bytes[0] == b'&' {
        return Err(GraphError::Graph6Header(format!(
            "record starts with `{}`; not a graph6 record",
            bytes[0] as char
        )));
    }
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(GraphError::Graph6Char { offset, byte });
        }
    }
    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else {
        if bytes.len() >= 2 && bytes[1] == 126 {
            // 8-byte form: n >= 258048, far beyond our cap
            return Err(GraphError::TooManyVertices(258_048));
        }
        if bytes.len() < 4 {
            return Err(GraphError::Graph6Header("truncated size field".into()));
        }
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        if n <= 62 {
            return Err(GraphError::Graph6Header(format!("non-canonical size field for n={n}")));
        }
        (n, &bytes[4..])
    };
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n));
    }
    if n == 0 {
        return Err(GraphError::NoVertices);
    }
    let expected = body_len(n);
    if body.len() != expected {
        return Err(GraphError::Graph6Length { expected, found: body.len() });
    }
    let mut g = Graph::empty(n)?;
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[bit / 6] - 63;
            if byte >> (5 - bit % 6) & 1 == 1 {
                g.insert_edge(i, j)?;
            }
            bit += 1;
        }
    }
    Ok(g)
}
