//! Plain-text edge lists.
//!
//! One `u v` pair per line (0-based decimal ids, whitespace separated).
//! Blank lines and `#` comments are skipped; an optional `p n m` header fixes
//! the vertex count, otherwise it is one past the largest id seen.

use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::graph::{build_compact, CompactGraph};
use crate::VertexId;

/// Parsed pairs plus the vertex count they live on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeListText {
    pub n: usize,
    /// `(u, v, line)` in file order.
    pub pairs: Vec<(VertexId, VertexId, usize)>,
}

pub fn parse_edge_list<R: BufRead>(reader: R) -> Result<EdgeListText> {
    let mut header_n = None;
    let mut max_id: Option<VertexId> = None;
    let mut pairs = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let line = line?;
        let text = line.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if tokens[0] == "p" {
            if header_n.is_some() || !pairs.is_empty() {
                return Err(parse_err(lineno, "header must come before any edge"));
            }
            if tokens.len() != 3 {
                return Err(parse_err(lineno, "header must be `p n m`"));
            }
            let n = tokens[1]
                .parse::<usize>()
                .map_err(|_| parse_err(lineno, format!("bad vertex count {:?}", tokens[1])))?;
            tokens[2]
                .parse::<usize>()
                .map_err(|_| parse_err(lineno, format!("bad edge count {:?}", tokens[2])))?;
            header_n = Some(n);
            continue;
        }
        if tokens.len() != 2 {
            return Err(parse_err(lineno, "expected two vertex ids"));
        }
        let id = |t: &str| {
            t.parse::<VertexId>()
                .map_err(|_| parse_err(lineno, format!("bad vertex id {t:?}")))
        };
        let (u, v) = (id(tokens[0])?, id(tokens[1])?);
        if let Some(n) = header_n {
            for w in [u, v] {
                if w as usize >= n {
                    return Err(parse_err(
                        lineno,
                        format!("vertex {w} out of range for header n={n}"),
                    ));
                }
            }
        }
        max_id = Some(max_id.map_or(u.max(v), |m| m.max(u).max(v)));
        pairs.push((u, v, lineno));
    }
    let n = header_n.unwrap_or_else(|| max_id.map_or(0, |m| m as usize + 1));
    Ok(EdgeListText { n, pairs })
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Reads an undirected edge list into a compact graph.
pub fn load_edge_list<R: BufRead>(reader: R) -> Result<CompactGraph> {
    let text = parse_edge_list(reader)?;
    if let Some(&(u, _, line)) = text.pairs.iter().find(|(u, v, _)| u == v) {
        return Err(Error::SelfLoopRejected {
            vertex: u,
            line: Some(line),
        });
    }
    build_compact(text.n, text.pairs.into_iter().map(|(u, v, _)| (u, v)))
}

pub fn write_edge_list<W: Write>(
    mut out: W,
    edges: impl IntoIterator<Item = (VertexId, VertexId)>,
) -> std::io::Result<()> {
    for (u, v) in edges {
        writeln!(out, "{u} {v}")?;
    }
    Ok(())
}
