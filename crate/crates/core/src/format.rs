//! Text formats: graph6 (bit-exact) and a plain 0-indexed edge list.
//!
//! graph6 layout: a size header `N(n)` followed by the upper triangle of the
//! adjacency matrix, column by column (`(0,1), (0,2), (1,2), (0,3), …`), packed
//! six bits per byte, each byte offset by 63. Sizes up to 62 take one byte;
//! larger sizes use `~` plus three bytes.

use crate::error::ParseError;
use crate::graph::{Graph, VertexSet, MAX_VERTICES};

const OFFSET: u8 = 63;
const HEADER: &str = ">>graph6<<";

fn encode_size(n: usize, out: &mut String) {
    if n <= 62 {
        out.push((n as u8 + OFFSET) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + OFFSET) as char);
        }
    }
}

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    encode_size(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + OFFSET) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + OFFSET) as char);
    }
    out
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u8, ParseError> {
    let byte = bytes[offset];
    if !(OFFSET..=126).contains(&byte) {
        return Err(ParseError::InvalidByte { byte, offset });
    }
    Ok(byte - OFFSET)
}

/// Parses one graph6 string. An optional `>>graph6<<` prefix and surrounding
/// whitespace are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let s = text.trim();
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(ParseError::MalformedHeader("empty input".into()));
    }

    let (n, data_start) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            // 8-byte form: n >= 258048, always oversize for us
            if bytes.len() < 8 {
                return Err(ParseError::MalformedHeader("incomplete 8-byte size".into()));
            }
            let mut n = 0usize;
            for off in 2..8 {
                n = (n << 6) | sextet(bytes, off)? as usize;
            }
            (n, 8)
        } else {
            if bytes.len() < 4 {
                return Err(ParseError::MalformedHeader("incomplete 4-byte size".into()));
            }
            let mut n = 0usize;
            for off in 1..4 {
                n = (n << 6) | sextet(bytes, off)? as usize;
            }
            if n <= 62 {
                return Err(ParseError::MalformedHeader(format!(
                    "size {n} must use the one-byte form"
                )));
            }
            (n, 4)
        }
    } else {
        (
            sextet(bytes, 0).map_err(|_| {
                ParseError::MalformedHeader(format!("invalid size byte {:#04x}", bytes[0]))
            })? as usize,
            1,
        )
    };
    if n > MAX_VERTICES {
        return Err(ParseError::Oversize { n });
    }

    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pairs.div_ceil(6);
    let found = bytes.len() - data_start;
    if found < expected {
        return Err(ParseError::Truncated { expected, found });
    }
    if found > expected {
        return Err(ParseError::TrailingData {
            extra: found - expected,
        });
    }

    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let chunk = sextet(bytes, data_start + k / 6)?;
            if (chunk >> (5 - k % 6)) & 1 == 1 {
                g.add_edge_unchecked(i, j);
            }
            k += 1;
        }
    }
    if pairs % 6 != 0 {
        let last = sextet(bytes, bytes.len() - 1)?;
        let pad = 6 - pairs % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(ParseError::NonzeroPadding);
        }
    }
    Ok(g)
}

/// Parses a graph6 corpus: one graph per non-empty line.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>, ParseError> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(parse_graph6)
        .collect()
}

/// Parses the edge-list format: one `u v` pair per line, 0-indexed.
///
/// A line holding a single integer fixes the vertex count (needed for
/// isolated trailing vertices); otherwise `n` is one more than the largest
/// endpoint. `#` starts a comment.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut declared: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| ParseError::EdgeList {
            line: idx + 1,
            message,
        };
        let nums = line
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|e| err(format!("{t:?}: {e}"))))
            .collect::<Result<Vec<_>, _>>()?;
        match nums[..] {
            [n] => {
                if declared.replace(n).is_some() {
                    return Err(err("vertex count declared twice".into()));
                }
            }
            [u, v] => edges.push((u, v)),
            _ => return Err(err("expected `u v` or a single vertex count".into())),
        }
    }
    let implied = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    let n = declared.unwrap_or(implied);
    if n > MAX_VERTICES || implied > MAX_VERTICES {
        return Err(ParseError::Oversize { n: n.max(implied) });
    }
    Ok(Graph::from_edges(n, &edges)?)
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses either format. graph6 never uses ASCII digits, so any digit in the
/// first meaningful line selects the edge-list reader.
pub fn parse_graph_input(text: &str) -> Result<Graph, ParseError> {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .unwrap_or("");
    if first.bytes().next().is_some_and(|b| b.is_ascii_digit()) {
        parse_edge_list(text)
    } else {
        parse_graph6(first)
    }
}

/// Parses a comma-separated vertex list such as `0,2,5`. The empty string is
/// the empty set.
pub fn parse_vertex_list(text: &str) -> Result<VertexSet, ParseError> {
    let t = text.trim();
    if t.is_empty() || t == "-" {
        return Ok(VertexSet::EMPTY);
    }
    let mut set = VertexSet::EMPTY;
    for tok in t.split(',') {
        let v: usize = tok
            .trim()
            .parse()
            .map_err(|_| ParseError::VertexList(text.to_string()))?;
        if v >= MAX_VERTICES {
            return Err(ParseError::VertexList(text.to_string()));
        }
        set.insert(v);
    }
    Ok(set)
}

pub fn format_vertex_list(set: VertexSet) -> String {
    set.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}
