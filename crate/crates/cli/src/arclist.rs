//! Arc-list documents: an optional `vertices N` header, one `u v` arc
//! per line, `#` comment lines. Without a header the vertex count is the
//! largest label that appears.

use khazamula::graph::{Digraph, GraphError};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    BadHeader { line: usize, text: String },
    BadArcLine { line: usize, text: String },
    HeaderAfterArcs { line: usize },
    NoVertices,
    Graph(GraphError),
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::BadHeader { line, text } => {
                write!(f, "line {line}: malformed vertices header `{text}`")
            }
            ParseError::BadArcLine { line, text } => {
                write!(f, "line {line}: expected `tail head`, got `{text}`")
            }
            ParseError::HeaderAfterArcs { line } => {
                write!(f, "line {line}: vertices header must precede arcs")
            }
            ParseError::NoVertices => {
                write!(f, "empty document needs a `vertices N` header")
            }
            ParseError::Graph(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for ParseError {}

pub fn parse(text: &str) -> Result<Digraph, ParseError> {
    let mut declared: Option<u32> = None;
    let mut arcs: Vec<(u32, u32)> = Vec::new();
    let mut max_label = 0u32;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("vertices") {
            if !arcs.is_empty() || declared.is_some() {
                return Err(ParseError::HeaderAfterArcs { line: line_no });
            }
            let n: u32 = rest
                .trim()
                .parse()
                .map_err(|_| ParseError::BadHeader { line: line_no, text: line.to_string() })?;
            declared = Some(n);
            continue;
        }
        let mut parts = line.split_whitespace();
        let (tail, head) = match (parts.next(), parts.next(), parts.next()) {
            (Some(t), Some(h), None) => {
                let tail: u32 = t.parse().map_err(|_| ParseError::BadArcLine {
                    line: line_no,
                    text: line.to_string(),
                })?;
                let head: u32 = h.parse().map_err(|_| ParseError::BadArcLine {
                    line: line_no,
                    text: line.to_string(),
                })?;
                (tail, head)
            }
            _ => {
                return Err(ParseError::BadArcLine { line: line_no, text: line.to_string() })
            }
        };
        max_label = max_label.max(tail).max(head);
        arcs.push((tail, head));
    }
    let n = declared.unwrap_or(max_label);
    if n == 0 {
        return Err(ParseError::NoVertices);
    }
    Digraph::new(n, arcs).map_err(ParseError::Graph)
}

/// Arc-list text that [`parse`] maps back to an identical digraph.
pub fn emit(g: &Digraph) -> String {
    let mut out = format!("vertices {}\n", g.vertex_count());
    for &(tail, head) in g.arcs() {
        out.push_str(&format!("{tail} {head}\n"));
    }
    out
}
