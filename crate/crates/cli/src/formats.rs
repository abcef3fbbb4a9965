//! Input formats: plain edge lists and caterpillar spec strings.
//!
//! Edge list:
//!
//! ```text
//! # comments run to end of line
//! n 4
//! 0 1
//! 1 2
//! 2 3
//! ```

use randic_core::{CaterpillarSpec, Error as CoreError, Graph};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("edge list is empty")]
    Empty,
    #[error("line {line}: expected header `n <order>`, found `{found}`")]
    MissingHeader { line: usize, found: String },
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("line {line}: duplicate edge {u}-{v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { line: usize, vertex: usize, order: usize },
    #[error("invalid caterpillar spec `{input}`: {reason}")]
    Spec { input: String, reason: String },
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_index(line: usize, token: &str) -> Result<usize, ParseError> {
    token
        .parse()
        .map_err(|_| ParseError::Malformed { line, reason: format!("`{token}` is not a vertex index") })
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or(ParseError::Empty)?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    let order = match tokens.as_slice() {
        ["n", count] => count
            .parse::<usize>()
            .map_err(|_| ParseError::Malformed { line, reason: format!("`{count}` is not a vertex count") })?,
        _ => return Err(ParseError::MissingHeader { line, found: header.to_string() }),
    };

    let mut g = Graph::empty(order);
    for (line, text) in lines {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        let [u, v] = tokens.as_slice() else {
            return Err(ParseError::Malformed { line, reason: format!("expected `u v`, found `{text}`") });
        };
        let (u, v) = (parse_index(line, u)?, parse_index(line, v)?);
        g.add_edge(u, v).map_err(|e| match e {
            CoreError::SelfLoop { vertex } => ParseError::SelfLoop { line, vertex },
            CoreError::DuplicateEdge { u, v } => ParseError::DuplicateEdge { line, u, v },
            CoreError::VertexOutOfRange { vertex, order } => ParseError::VertexOutOfRange { line, vertex, order },
            other => ParseError::Malformed { line, reason: other.to_string() },
        })?;
    }
    Ok(g)
}

/// Parses `T(p1,...,pr)`; whitespace anywhere is ignored.
pub fn parse_caterpillar(input: &str) -> Result<CaterpillarSpec, ParseError> {
    let err = |reason: String| ParseError::Spec { input: input.to_string(), reason };
    let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    let body = compact
        .strip_prefix("T(")
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| err("expected the form T(p1,...,pr)".into()))?;
    let leaves = body
        .split(',')
        .map(|t| t.parse::<usize>().map_err(|_| err(format!("`{t}` is not a leaf count"))))
        .collect::<Result<Vec<_>, _>>()?;
    CaterpillarSpec::new(leaves).map_err(|e| err(e.to_string()))
}

/// Whether a command-line argument looks like a spec string rather than a path.
pub fn looks_like_spec(arg: &str) -> bool {
    arg.trim_start().starts_with("T(")
}
