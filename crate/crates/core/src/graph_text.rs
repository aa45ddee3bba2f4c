//! Line-oriented text format for signed graphs.
//!
//! ```text
//! # comments and blank lines are ignored
//! vertices=3
//! edge 0 1 1
//! edge 1 2 -1/2
//! edge 2 0 2
//! ```
//!
//! Vertex ids are zero-based. Weights are integers or dyadic fractions.

use std::fmt::Write as _;

use thiserror::Error;

use crate::dyadic::{Dyadic, ParseDyadicError};
use crate::graph::{GraphError, SignedGraph};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphParseError {
    #[error("line {line}: expected `vertices=<n>` before any edge")]
    MissingHeader { line: usize },
    #[error("line {line}: duplicate `vertices=` header")]
    DuplicateHeader { line: usize },
    #[error("line {line}: vertex count must be a positive integer, got `{got}`")]
    BadVertexCount { line: usize, got: String },
    #[error("line {line}: malformed edge line `{text}`, expected `edge u v w`")]
    MalformedEdge { line: usize, text: String },
    #[error("line {line}: bad weight: {source}")]
    BadWeight {
        line: usize,
        #[source]
        source: ParseDyadicError,
    },
    #[error("line {line}: {source}")]
    Graph {
        line: usize,
        #[source]
        source: GraphError,
    },
    #[error("line {line}: unknown directive `{text}`")]
    UnknownDirective { line: usize, text: String },
    #[error("no `vertices=<n>` header")]
    Empty,
}

/// Upper bound on the vertex count a text file may declare.
pub const MAX_TEXT_VERTICES: usize = 1 << 16;

pub fn parse_graph(text: &str) -> Result<SignedGraph, GraphParseError> {
    let mut graph: Option<SignedGraph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if let Some(rest) = content.strip_prefix("vertices") {
            let value = rest.trim_start().strip_prefix('=').map(str::trim);
            let n = value
                .and_then(|v| v.parse::<usize>().ok())
                .filter(|&n| n > 0 && n <= MAX_TEXT_VERTICES)
                .ok_or_else(|| GraphParseError::BadVertexCount {
                    line,
                    got: rest.trim().to_string(),
                })?;
            if graph.is_some() {
                return Err(GraphParseError::DuplicateHeader { line });
            }
            graph = Some(SignedGraph::new(n));
            continue;
        }
        let mut tokens = content.split_whitespace();
        match tokens.next() {
            Some("edge") => {
                let g = graph
                    .as_mut()
                    .ok_or(GraphParseError::MissingHeader { line })?;
                let parts: Vec<&str> = tokens.collect();
                let malformed = || GraphParseError::MalformedEdge {
                    line,
                    text: content.to_string(),
                };
                if parts.len() != 3 {
                    return Err(malformed());
                }
                let u = parts[0].parse::<usize>().map_err(|_| malformed())?;
                let v = parts[1].parse::<usize>().map_err(|_| malformed())?;
                let w: Dyadic = parts[2]
                    .parse()
                    .map_err(|source| GraphParseError::BadWeight { line, source })?;
                g.add_edge(u, v, w)
                    .map_err(|source| GraphParseError::Graph { line, source })?;
            }
            _ => {
                return Err(GraphParseError::UnknownDirective {
                    line,
                    text: content.to_string(),
                })
            }
        }
    }
    graph.ok_or(GraphParseError::Empty)
}

pub fn write_graph(g: &SignedGraph) -> String {
    let mut out = format!("vertices={}\n", g.vertex_count());
    for e in g.edges() {
        let _ = writeln!(out, "edge {} {} {}", e.u, e.v, e.weight);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_triangle() {
        let g = parse_graph(
            "# unit triangle\nvertices=3\nedge 0 1 1\nedge 1 2 1\n\nedge 2 0 1 # last\n",
        )
        .unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edges().len(), 3);
        assert_eq!(g.tree_weight().0, Dyadic::from(3));
    }

    #[test]
    fn parses_fraction_and_unicode_minus() {
        let g = parse_graph("vertices = 2\nedge 0 1 \u{2212}1/2\nedge 0 1 -2").unwrap();
        assert_eq!(g.edges()[0].weight, "-1/2".parse().unwrap());
        assert_eq!(g.edges()[1].weight, Dyadic::from(-2));
    }

    #[test]
    fn errors() {
        assert_eq!(parse_graph(""), Err(GraphParseError::Empty));
        assert_eq!(
            parse_graph("edge 0 1 1"),
            Err(GraphParseError::MissingHeader { line: 1 })
        );
        assert!(matches!(
            parse_graph("vertices=0"),
            Err(GraphParseError::BadVertexCount { line: 1, .. })
        ));
        assert!(matches!(
            parse_graph("vertices=2\nedge 0 1"),
            Err(GraphParseError::MalformedEdge { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("vertices=2\nedge 0 1 1/3"),
            Err(GraphParseError::BadWeight { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("vertices=2\nedge 0 2 1"),
            Err(GraphParseError::Graph { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("vertices=2\nvertices=3"),
            Err(GraphParseError::DuplicateHeader { line: 2 })
        ));
        assert!(matches!(
            parse_graph("vertices=2\nnode 1"),
            Err(GraphParseError::UnknownDirective { line: 2, .. })
        ));
    }

    proptest! {
        #[test]
        fn write_then_parse(
            n in 1usize..6,
            raw in prop::collection::vec((0usize..6, 0usize..6, -4i64..=4, 0u32..2), 0..10)
        ) {
            let mut g = SignedGraph::new(n);
            for (u, v, num, e) in raw {
                let _ = g.add_edge(u % n, v % n, Dyadic::new(num, e));
            }
            prop_assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
        }
    }
}
