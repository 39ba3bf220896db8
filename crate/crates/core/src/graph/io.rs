//! graph6 and edge-list text formats.
//!
//! graph6 is the usual ASCII encoding: a size header `N(n)` followed by the
//! upper triangle of the adjacency matrix, column by column, packed six bits
//! per byte and offset by 63. The edge-list format is one `u v` pair per line
//! with 0-indexed vertices; `#` starts a comment.

use super::Graph;
use crate::error::{Error, Result};

const GRAPH6_HEADER: &str = ">>graph6<<";

fn parse_err<T>(offset: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        offset,
        message: message.into(),
    })
}

fn encode_size(n: usize, out: &mut String) {
    let push6 = |out: &mut String, x: usize| out.push((63 + (x & 63) as u8) as char);
    if n <= 62 {
        push6(out, n);
    } else if n <= 258_047 {
        out.push('~');
        for shift in [12, 6, 0] {
            push6(out, n >> shift);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            push6(out, n >> shift);
        }
    }
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::new();
    encode_size(n, &mut out);
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

fn sextet(bytes: &[u8], at: usize, base: usize) -> Result<usize> {
    match bytes.get(at) {
        Some(&c) if (63..=126).contains(&c) => Ok((c - 63) as usize),
        Some(&c) => parse_err(
            base + at,
            format!("byte {c:#04x} is outside the graph6 range 63..=126"),
        ),
        None => parse_err(base + at, "truncated size header"),
    }
}

/// Parses one graph6 string. `base` is added to reported byte offsets.
fn parse_graph6_at(text: &str, base: usize) -> Result<Graph> {
    let (body, base) = match text.strip_prefix(GRAPH6_HEADER) {
        Some(rest) => (rest, base + GRAPH6_HEADER.len()),
        None => (text, base),
    };
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return parse_err(base, "empty graph6 string");
    }
    let (n, mut pos) = if bytes[0] != 126 {
        (sextet(bytes, 0, base)?, 1)
    } else if bytes.get(1) != Some(&126) {
        let mut n = 0;
        for i in 1..4 {
            n = (n << 6) | sextet(bytes, i, base)?;
        }
        (n, 4)
    } else {
        let mut n = 0;
        for i in 2..8 {
            n = (n << 6) | sextet(bytes, i, base)?;
        }
        (n, 8)
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    let got = bytes.len() - pos;
    if got != expected {
        return parse_err(
            base + pos,
            format!("bad length: n = {n} needs {expected} data bytes, found {got}"),
        );
    }
    let mut g = Graph::empty(n);
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            let byte_at = pos + bit / 6;
            let x = sextet(bytes, byte_at, base)?;
            if (x >> (5 - bit % 6)) & 1 == 1 {
                g.set(i, j, true);
            }
            bit += 1;
        }
    }
    pos += expected;
    debug_assert_eq!(pos, bytes.len());
    Ok(g)
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let trimmed = text.trim_end_matches(['\n', '\r']);
    parse_graph6_at(trimmed, 0)
}

/// One graph6 string per non-empty line; lines starting with `#` are skipped.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let content = line.trim_end_matches(['\n', '\r']);
        if !content.trim().is_empty() && !content.starts_with('#') {
            out.push(parse_graph6_at(content, offset)?);
        }
        offset += line.len();
    }
    Ok(out)
}

/// Whitespace-separated 0-indexed pairs, one per line. The order is one more
/// than the largest index mentioned.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let content = line.split('#').next().unwrap_or("");
        let fields: Vec<&str> = content.split_whitespace().collect();
        match fields.as_slice() {
            [] => {}
            [u, v] => {
                let parse = |s: &str| {
                    s.parse::<usize>().map_err(|_| Error::Parse {
                        offset,
                        message: format!("{s:?} is not a vertex index"),
                    })
                };
                let (u, v) = (parse(u)?, parse(v)?);
                if u == v {
                    return parse_err(offset, format!("self-loop at vertex {u}"));
                }
                edges.push((u, v));
            }
            _ => return parse_err(offset, "expected exactly two vertex indices"),
        }
        offset += line.len();
    }
    let n = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    Graph::from_edges(n, edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    g.edges().map(|(u, v)| format!("{u} {v}\n")).collect()
}

/// Picks the format from the first non-blank byte: digits and `#` mean an
/// edge list, anything else is read as graph6.
pub fn parse_graph(text: &str) -> Result<Graph> {
    match text.trim_start().bytes().next() {
        None => Ok(Graph::empty(0)),
        Some(c) if c.is_ascii_digit() || c == b'#' => parse_edge_list(text),
        Some(_) => parse_graph6(text.trim()),
    }
}

/// A corpus: graph6 lines, or a single edge list.
pub fn parse_corpus(text: &str) -> Result<Vec<Graph>> {
    match text.trim_start().bytes().next() {
        None => Ok(Vec::new()),
        Some(c) if c.is_ascii_digit() || c == b'#' => {
            // a graph6 corpus may open with comment lines
            let first_data = text
                .lines()
                .map(str::trim)
                .find(|l| !l.is_empty() && !l.starts_with('#'));
            match first_data.and_then(|l| l.bytes().next()) {
                Some(c) if !c.is_ascii_digit() => parse_graph6_lines(text),
                _ => Ok(vec![parse_edge_list(text)?]),
            }
        }
        Some(_) => parse_graph6_lines(text),
    }
}
