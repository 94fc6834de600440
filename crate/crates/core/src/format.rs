//! graph6 and edge-list encodings.
//!
//! graph6 follows the public nauty definition: the vertex count `N(n)`, then
//! the upper triangle `x(0,1) x(0,2) x(1,2) x(0,3) ..` packed six bits per
//! byte, high bit first, each byte offset by 63 and the last one zero-padded.
//! An optional `>>graph6<<` prefix is accepted on input and never written.
//!
//! The edge list is ASCII: a line `n <count>`, then one `u v` line per edge.
//! Blank lines are ignored. Output lists each edge once as `u v` with `u < v`,
//! in ascending order, every line ending in LF.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Graph6,
    EdgeList,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("byte {offset}: {msg}")]
    Byte { offset: usize, msg: &'static str },
    #[error("line {line}: {msg}")]
    Line { line: usize, msg: String },
}

const HEADER: &[u8] = b">>graph6<<";
/// Largest vertex count graph6 can express.
pub const GRAPH6_MAX_N: usize = (1 << 36) - 1;

pub fn parse_graph(text: &[u8], format: Format) -> Result<Graph, ParseError> {
    match format {
        Format::Graph6 => parse_graph6(text),
        Format::EdgeList => parse_edge_list(text),
    }
}

pub fn serialize_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::Graph6 => {
            let mut s = to_graph6(g);
            s.push('\n');
            s
        }
        Format::EdgeList => to_edge_list(g),
    }
}

/// The graph6 string of `g`, without a trailing newline.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= GRAPH6_MAX_N, "too many vertices for graph6");
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        push_sextets(&mut out, n as u64, 3);
    } else {
        out.extend([126, 126]);
        push_sextets(&mut out, n as u64, 6);
    }
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            bits += 1;
            if bits == 6 {
                out.push(acc + 63);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

fn push_sextets(out: &mut Vec<u8>, x: u64, count: u32) {
    for k in (0..count).rev() {
        out.push(((x >> (6 * k)) & 63) as u8 + 63);
    }
}

pub fn parse_graph6(text: &[u8]) -> Result<Graph, ParseError> {
    let err = |offset, msg| ParseError::Byte { offset, msg };
    let mut start = 0;
    if text.starts_with(HEADER) {
        start = HEADER.len();
    }
    let mut end = text.len();
    while end > start && matches!(text[end - 1], b'\n' | b'\r') {
        end -= 1;
    }
    let body = &text[start..end];
    if let Some(p) = body.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(err(start + p, "byte outside the graph6 range 63..=126"));
    }
    if body.is_empty() {
        return Err(err(start, "missing vertex count"));
    }
    let sextets = |from: usize, count: usize| -> Result<usize, ParseError> {
        if body.len() < from + count {
            return Err(err(start + body.len(), "truncated vertex count"));
        }
        Ok(body[from..from + count].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize))
    };
    let (n, mut pos) = if body[0] != 126 {
        ((body[0] - 63) as usize, 1)
    } else if body.get(1) != Some(&126) {
        (sextets(1, 3)?, 4)
    } else {
        (sextets(2, 6)?, 8)
    };
    let pairs = n.checked_mul(n.saturating_sub(1)).map(|x| x / 2).ok_or(err(start, "vertex count too large"))?;
    let need = pairs.div_ceil(6);
    let have = body.len() - pos;
    if have < need {
        return Err(err(start + body.len(), "truncated adjacency data"));
    }
    if have > need {
        return Err(err(start + pos + need, "trailing bytes after adjacency data"));
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[pos + bit / 6] - 63;
            if byte >> (5 - bit % 6) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    if !bit.is_multiple_of(6) {
        pos += bit / 6;
        let pad = (body[pos] - 63) & ((1 << (6 - bit % 6)) - 1);
        if pad != 0 {
            return Err(err(start + pos, "nonzero padding bits"));
        }
    }
    Ok(Graph::from_edges(n, edges).expect("graph6 encodes a simple graph"))
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "n {}", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

pub fn parse_edge_list(text: &[u8]) -> Result<Graph, ParseError> {
    let line_err = |line: usize, msg: String| ParseError::Line { line, msg };
    let text = core::str::from_utf8(text).map_err(|e| {
        let line = 1 + text[..e.valid_up_to()].iter().filter(|&&b| b == b'\n').count();
        line_err(line, String::from("invalid UTF-8"))
    })?;
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or_else(|| line_err(1, String::from("missing header `n <count>`")))?;
    let n = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["n", count] => {
            count.parse::<usize>().map_err(|_| line_err(hline, alloc::format!("bad vertex count `{count}`")))?
        }
        _ => return Err(line_err(hline, String::from("malformed header, expected `n <count>`"))),
    };
    let mut g_edges: Vec<(usize, usize)> = Vec::new();
    let mut seen = alloc::collections::BTreeSet::new();
    for (line, l) in lines {
        let [a, b] = l.split_whitespace().collect::<Vec<_>>()[..] else {
            return Err(line_err(line, String::from("expected `u v`")));
        };
        let parse = |t: &str| t.parse::<usize>().map_err(|_| line_err(line, alloc::format!("bad vertex `{t}`")));
        let (u, v) = (parse(a)?, parse(b)?);
        for x in [u, v] {
            if x >= n {
                return Err(line_err(line, alloc::format!("{}", GraphError::VertexOutOfRange { vertex: x, n })));
            }
        }
        if u == v {
            return Err(line_err(line, alloc::format!("{}", GraphError::SelfLoop(u))));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(line_err(line, alloc::format!("{}", GraphError::DuplicateEdge(u.min(v), u.max(v)))));
        }
        g_edges.push((u, v));
    }
    Ok(Graph::from_edges(n, g_edges).expect("edges checked"))
}
