//! Text formats for graphs: graph6 and a plain edge list.
//!
//! The edge list starts with a header line `n <count>` followed by one
//! `u v` pair per line (0-based). Blank lines and `#` comments are skipped.

use std::fmt::Write as _;

use thiserror::Error;
use tropigraph_core::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("empty input")]
    Empty,
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("edge list line {line}: {msg}")]
    EdgeList { line: usize, msg: String },
}

const HEADER: &str = ">>graph6<<";

fn g6_err(msg: impl Into<String>) -> FormatError {
    FormatError::Graph6(msg.into())
}

/// Encodes `g` as a single graph6 line without the optional header.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else if n <= 258_047 {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift & 63) as u8 + 63) as char);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift & 63) as u8 + 63) as char);
        }
    }
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            bits += 1;
            if bits == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push(((acc << (6 - bits)) + 63) as char);
    }
    out
}

/// Decodes one graph6 line; a leading `>>graph6<<` header is accepted.
pub fn from_graph6(line: &str) -> Result<Graph, FormatError> {
    let line = line.trim();
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(FormatError::Empty);
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(g6_err(format!("byte {b:#04x} outside the printable range")));
    }
    let six = |s: &[u8]| s.iter().fold(0usize, |acc, &b| acc << 6 | usize::from(b - 63));
    let (n, body) = match bytes {
        [126, 126, rest @ ..] if rest.len() >= 6 => (six(&rest[..6]), &rest[6..]),
        [126, 126, ..] => return Err(g6_err("truncated vertex count")),
        [126, rest @ ..] if rest.len() >= 3 => (six(&rest[..3]), &rest[3..]),
        [126, ..] => return Err(g6_err("truncated vertex count")),
        [first, rest @ ..] => (usize::from(first - 63), rest),
        [] => unreachable!(),
    };
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pairs.div_ceil(6);
    if body.len() != expected {
        return Err(g6_err(format!(
            "expected {expected} data bytes for {n} vertices, found {}",
            body.len()
        )));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (pairs..expected * 6).any(bit) {
        return Err(g6_err("padding bits must be zero"));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.add_edge(i, j).expect("in range");
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Edge list text: a `n <count>` header and one `u v` line per edge.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").expect("writing to a String");
    }
    out
}

pub fn from_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or(FormatError::Empty)?;
    let err = |line: usize, msg: String| FormatError::EdgeList { line, msg };
    let n = header
        .strip_prefix('n')
        .and_then(|rest| rest.trim().parse::<usize>().ok())
        .ok_or_else(|| err(hline, format!("expected header `n <count>`, found {header:?}")))?;
    let mut g = Graph::empty(n);
    for (line, text) in lines {
        let fields: Vec<&str> = text.split_whitespace().collect();
        let [u, v] = fields[..] else {
            return Err(err(line, format!("expected `u v`, found {text:?}")));
        };
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| err(line, format!("not a vertex index: {s:?}")))
        };
        let (u, v) = (parse(u)?, parse(v)?);
        g.add_edge(u, v).map_err(|e| err(line, e.to_string()))?;
    }
    Ok(g)
}

/// Reads a graph in either format: an edge list if the first meaningful line
/// starts with `n`, otherwise graph6.
pub fn read_graph(text: &str) -> Result<Graph, FormatError> {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .ok_or(FormatError::Empty)?;
    if first.starts_with("n ") || first == "n" {
        from_edge_list(text)
    } else {
        from_graph6(first)
    }
}
