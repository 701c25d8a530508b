//! graph6 and plain edge-list formats.
//!
//! graph6: a size prefix followed by the upper triangle of the adjacency
//! matrix in column order (`j` in `1..n`, `i` in `0..j`), six bits per byte,
//! each byte offset by 63. Sizes up to 62 take one byte (`n + 63`); larger
//! sizes up to 258047 use `126` followed by three 6-bit bytes.
//!
//! Edge list: a `p <n>` header, then one `<u> <v>` pair per line with
//! 0-based endpoints. Blank lines and `#` comments are ignored.

use crate::error::{Error, Result};
use crate::graph::Graph;

const BIAS: u8 = 63;
const MAX_SHORT: usize = 62;
const MAX_MEDIUM: usize = 258_047;

fn g6_error(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        message: message.into(),
    }
}

/// Decodes a single graph6 record. Surrounding whitespace and the optional
/// `>>graph6<<` header are ignored.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let mut bytes = line.trim().as_bytes();
    let mut base = 0;
    if let Some(rest) = bytes.strip_prefix(b">>graph6<<") {
        bytes = rest;
        base = 10;
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(BIAS..=126).contains(&b) {
            return Err(g6_error(base + i, format!("byte {b} outside 63..=126")));
        }
    }
    let (n, header_len) = match bytes {
        [] => return Err(g6_error(base, "empty record")),
        [126, 126, ..] => {
            return Err(g6_error(
                base,
                "graphs above 258047 vertices are not supported",
            ))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(g6_error(base + bytes.len(), "truncated size field"));
            }
            let n = rest[..3]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - BIAS));
            (n, 4)
        }
        [b, ..] => (usize::from(b - BIAS), 1),
    };
    let pairs = n * n.saturating_sub(1) / 2;
    let body_len = pairs.div_ceil(6);
    let body = &bytes[header_len..];
    if body.len() < body_len {
        return Err(g6_error(
            base + bytes.len(),
            format!(
                "truncated record: expected {body_len} adjacency bytes, found {}",
                body.len()
            ),
        ));
    }
    if body.len() > body_len {
        return Err(g6_error(
            base + header_len + body_len,
            "unexpected trailing bytes",
        ));
    }
    let bit = |k: usize| (body[k / 6] - BIAS) >> (5 - k % 6) & 1 == 1;
    if pairs % 6 != 0 {
        let last = body_len - 1;
        let padding_mask = (1u8 << (6 - pairs % 6)) - 1;
        if (body[last] - BIAS) & padding_mask != 0 {
            return Err(g6_error(base + header_len + last, "nonzero padding bits"));
        }
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, edges)
}

/// Encodes `graph` as a graph6 record without a trailing newline.
///
/// Panics for graphs above 258047 vertices.
pub fn write_graph6(graph: &Graph) -> String {
    let n = graph.vertex_count();
    assert!(
        n <= MAX_MEDIUM,
        "graph6 writer supports at most {MAX_MEDIUM} vertices"
    );
    let mut out: Vec<u8> = Vec::new();
    if n <= MAX_SHORT {
        out.push(n as u8 + BIAS);
    } else {
        out.push(126);
        out.extend([12, 6, 0].map(|shift| ((n >> shift) & 0x3f) as u8 + BIAS));
    }
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = (chunk << 1) | u8::from(graph.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(chunk + BIAS);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

/// Parses the `p <n>` edge-list format.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let err = |line: usize, message: String| Error::EdgeList { line, message };
    let mut vertex_count = None;
    let mut edges = Vec::new();
    for (index, raw) in text.lines().enumerate() {
        let line_no = index + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match (vertex_count, fields.as_slice()) {
            (None, ["p", n]) => {
                let n = n
                    .parse::<usize>()
                    .map_err(|e| err(line_no, format!("bad vertex count `{n}`: {e}")))?;
                vertex_count = Some(n);
            }
            (None, _) => return Err(err(line_no, "expected header `p <n>`".into())),
            (Some(n), [u, v]) => {
                let parse = |s: &str| {
                    s.parse::<usize>()
                        .map_err(|e| err(line_no, format!("bad endpoint `{s}`: {e}")))
                };
                let (u, v) = (parse(u)?, parse(v)?);
                Graph::new(n, [(u, v)]).map_err(|e| err(line_no, e.to_string()))?;
                edges.push((u, v));
            }
            (Some(_), _) => return Err(err(line_no, format!("expected `<u> <v>`, got `{line}`"))),
        }
    }
    let n = vertex_count.ok_or_else(|| err(1, "missing header `p <n>`".into()))?;
    Graph::new(n, edges).map_err(|e| err(0, e.to_string()))
}

pub fn write_edge_list(graph: &Graph) -> String {
    let mut out = format!("p {}\n", graph.vertex_count());
    for (u, v) in graph.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Reads one or more graphs from text in either format. Text whose first
/// meaningful line is a `p` header is one edge list; anything else is one
/// graph6 record per non-empty line.
pub fn parse_graphs(text: &str) -> Result<Vec<Graph>> {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty());
    match first {
        Some(l) if l.starts_with("p ") || l == "p" => Ok(vec![parse_edge_list(text)?]),
        _ => text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(parse_graph6)
            .collect(),
    }
}
