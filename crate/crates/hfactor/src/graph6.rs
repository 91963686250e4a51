//! graph6 encoding: an `N(n)` size header followed by the upper triangle of
//! the adjacency matrix in column order `(0,1), (0,2), (1,2), (0,3), …`,
//! packed six bits per byte and offset by 63.

use hfactor_core::Graph;

/// Optional header some tools put in front of a graph6 file.
pub const FILE_HEADER: &str = ">>graph6<<";

const MAX_ORDER: usize = (1 << 36) - 1;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("malformed size header")]
    MalformedHeader,
    #[error("truncated payload: expected {expected} bytes after the header, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("payload too long: expected {expected} bytes after the header, found {found}")]
    TooLong { expected: usize, found: usize },
    #[error("character {ch:?} at byte {pos} is outside the graph6 range '?'..='~'")]
    InvalidChar { pos: usize, ch: char },
    #[error("order {0} is too large to encode")]
    OrderTooLarge(usize),
}

fn sextet(pos: usize, b: u8) -> Result<u64, Graph6Error> {
    if (63..=126).contains(&b) {
        Ok(u64::from(b - 63))
    } else {
        Err(Graph6Error::InvalidChar { pos, ch: b as char })
    }
}

/// Decode `N(n)`; returns the order and the header length in bytes.
fn parse_header(bytes: &[u8]) -> Result<(usize, usize), Graph6Error> {
    let read = |from: usize, count: usize| -> Result<usize, Graph6Error> {
        if bytes.len() < from + count {
            return Err(Graph6Error::MalformedHeader);
        }
        let mut n = 0u64;
        for (i, &b) in bytes[from..from + count].iter().enumerate() {
            n = (n << 6) | sextet(from + i, b)?;
        }
        Ok(n as usize)
    };
    match bytes {
        [] => Err(Graph6Error::Empty),
        [b'~', b'~', ..] => {
            let n = read(2, 6)?;
            if n <= 258_047 {
                return Err(Graph6Error::MalformedHeader);
            }
            Ok((n, 8))
        }
        [b'~', ..] => {
            let n = read(1, 3)?;
            if n <= 62 {
                return Err(Graph6Error::MalformedHeader);
            }
            Ok((n, 4))
        }
        [b, ..] => Ok((sextet(0, *b)? as usize, 1)),
    }
}

/// Parse one graph6 line. Surrounding whitespace and a leading
/// `>>graph6<<` are ignored.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim();
    let text = text.strip_prefix(FILE_HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    let (n, header) = parse_header(bytes)?;
    let payload = &bytes[header..];
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if payload.len() < expected {
        return Err(Graph6Error::Truncated { expected, found: payload.len() });
    }
    if payload.len() > expected {
        return Err(Graph6Error::TooLong { expected, found: payload.len() });
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = sextet(header + k / 6, payload[k / 6])?;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    for (i, &b) in payload.iter().enumerate() {
        sextet(header + i, b)?;
    }
    Ok(Graph::from_edges(n, edges).expect("edges are in range and loop-free"))
}

fn push_sextets(out: &mut String, value: usize, count: usize) {
    for i in (0..count).rev() {
        out.push(char::from(((value >> (6 * i)) & 63) as u8 + 63));
    }
}

fn push_header(out: &mut String, n: usize) -> Result<(), Graph6Error> {
    match n {
        0..=62 => push_sextets(out, n, 1),
        63..=258_047 => {
            out.push('~');
            push_sextets(out, n, 3);
        }
        _ if n <= MAX_ORDER => {
            out.push_str("~~");
            push_sextets(out, n, 6);
        }
        _ => return Err(Graph6Error::OrderTooLarge(n)),
    }
    Ok(())
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::new();
    push_header(&mut out, n).expect("in-memory graphs are far below the graph6 limit");
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(char::from(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(char::from((acc << (6 - filled)) + 63));
    }
    out
}

/// Parse a multi-line graph6 document, skipping blank lines. Errors carry
/// the 1-based line number.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>, (usize, Graph6Error)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && l.trim() != FILE_HEADER)
        .map(|(i, l)| parse_graph6(l).map_err(|e| (i + 1, e)))
        .collect()
}
